class WreathvarError(Exception):
    """Raised for invalid input, resource limits or failed preconditions.

    ``code`` is the library error name (``OversizeGroup``, ``NotPGroup``, ...),
    ``field`` names the offending input when known and ``exit_code`` is the
    status the command-line tool would return.
    """

    def __init__(self, code, field, exit_code, message):
        super().__init__(message)
        self.code = code
        self.field = field
        self.exit_code = exit_code
