"""Decide and probe varieties generated by wreath products A wr B with A
nilpotent and B abelian.

Groups are given as JSON-style dicts (``{"cyclic": 4}``,
``{"wreath": {"bottom": {"cyclic": 2}, "top": {"cyclic": 2}}}``), JSON strings, or the names
``"D4"`` and ``"Q8"``. Abelian shapes use the text form ``"C2^3 x C4^inf"``.
Every function returns the same result dict as ``wreathvar <command> --format json``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ._errors import WreathvarError
from . import _wreathvar as _core

__all__ = [
    "WreathvarError",
    "bound1",
    "bound2",
    "check",
    "command_names",
    "compare",
    "crossover",
    "is_law",
    "kp_series",
    "laws",
    "lcs",
    "normalize_shape",
    "reduced_word_count",
    "run",
    "run_report",
    "shield",
    "shield_vs_brute",
]

DEFAULT_CAP = _core.DEFAULT_CAP
DEFAULT_BUDGET = _core.DEFAULT_BUDGET


def command_names() -> list[str]:
    return list(_core.command_names())


def run(command: str, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET, **inputs: Any) -> dict:
    """Run any command by name with keyword inputs."""
    payload = {k: v for k, v in inputs.items() if v is not None}
    return json.loads(_core.run_command(command, json.dumps(payload), cap, budget))


def check(profile: str | None = None, shape: str | dict = "1", criterion: str = "main", **extra: Any) -> dict:
    """Does var(A wr B) equal var(A) var(B)? ``result["value"]`` answers it and
    ``result["verdict"]`` explains which demands were checked.

    ``profile`` is ``"c=2,m=4"`` style; pass ``group=`` instead to derive it
    from a finite group. ``criterion`` is one of main, circle, finite,
    abelian or pgroup.
    """
    return run("check", profile=profile, shape=shape, criterion=criterion, **extra)


def shield(bottom: Any, top: Any, p: int, brute: bool = False, **limits: Any) -> dict:
    """Predicted nilpotency class of ``bottom wr top`` for a p-group top."""
    return run("shield", bottom=bottom, top=top, p=p, brute=brute, **limits)


def kp_series(group: Any, p: int, **limits: Any) -> list[int]:
    return run("kpseries", group=group, p=p, **limits)["orders"]


def lcs(group: Any, **limits: Any) -> dict:
    """Lower central series orders; ``value`` is the class or ``"NotNilpotent"``."""
    return run("lcs", group=group, **limits)


def is_law(word: str, group: Any, **limits: Any) -> bool:
    return run("oracle law", word=word, group=group, **limits)["value"]


def laws(group: Any, arity: int, maxlen: int, **limits: Any) -> dict:
    return run("oracle laws", group=group, arity=arity, maxlen=maxlen, **limits)


def compare(group1: Any, group2: Any, arity: int = 2, maxlen: int = 6, **limits: Any) -> dict:
    """Bounded comparison of the laws of two finite groups."""
    return run("oracle compare", group1=group1, group2=group2, arity=arity, maxlen=maxlen, **limits)


def shield_vs_brute(bottom: Any, top: Any, p: int, **limits: Any) -> dict:
    return run("oracle shield", bottom=bottom, top=top, p=p, **limits)


def crossover(c: int, z: int, l: int, p: int, v: int, alpha: int) -> int:
    """Least t where the Y-witness bound overtakes the Z-witness bound."""
    return run("crossover", c=c, z=z, l=l, p=p, v=v, alpha=alpha)["t"]


def bound1(c: int, t: int, l: int, p: int, v: int, alpha: int) -> Fraction:
    return Fraction(*_core.bound1(c, t, l, p, v, alpha))


def bound2(c: int, t: int, z: int, p: int, v: int, alpha: int) -> int:
    return _core.bound2(c, t, z, p, v, alpha)


def reduced_word_count(arity: int, maxlen: int) -> int:
    return _core.reduced_word_count(arity, maxlen)


def normalize_shape(text: str) -> dict:
    return json.loads(_core.normalize_shape(text))


def run_report(path: str, jobs: int = 0, cap: int = DEFAULT_CAP, budget: int = DEFAULT_BUDGET) -> dict:
    """Run a TOML fixture file; returns rows plus the would-be exit code."""
    return json.loads(_core.run_report(str(path), cap, budget, jobs))
