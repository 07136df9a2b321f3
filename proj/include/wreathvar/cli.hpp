#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace wreathvar {

/// Limits shared by every command. Defaults come from WREATHVAR_CAP and
/// WREATHVAR_BUDGET when set.
struct Settings {
  std::uint64_t cap = 20000;
  std::uint64_t budget = 100'000'000;

  static Settings from_environment();
};

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitReportFailure = 1,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
  kExitInternal = 4,
};

/// Commands: check, shield, kpseries, lcs, "oracle law", "oracle laws",
/// "oracle compare", "oracle shield", crossover.
const std::vector<std::string>& command_names();

/// Runs one command on named inputs (strings, numbers, booleans, or JSON
/// objects for groups and shapes). The result always carries a "value"
/// entry, the headline answer compared by fixture reports.
///
/// Input errors are rethrown as InputError naming the field.
nlohmann::ordered_json run_command(std::string_view command, const nlohmann::json& inputs,
                                   const Settings& settings);

class InputError : public std::runtime_error {
 public:
  InputError(std::string field, std::string code, int exit_code, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)), code_(std::move(code)), exit_code_(exit_code) {}

  const std::string& field() const { return field_; }
  /// Library error code name, or "ParseError" for problems found here.
  const std::string& code() const { return code_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string field_;
  std::string code_;
  int exit_code_;
};

struct ReportRow {
  std::string name;
  std::string command;
  nlohmann::json inputs;
  nlohmann::json expected;
  nlohmann::json observed;
  std::string status;  // PASS, FAIL, EXPECTED-DISCREPANT, ERROR
  std::string note;
};

struct Report {
  std::vector<ReportRow> rows;
  int exit_code = kExitOk;

  nlohmann::ordered_json to_json() const;
};

/// Runs every [[case]] of a TOML fixture file. Rows run on `jobs` threads and
/// come back in file order. Throws InputError for malformed files.
Report run_report(const std::filesystem::path& fixture, const Settings& settings, unsigned jobs = 0);
Report run_report_text(std::string_view toml_text, const Settings& settings, unsigned jobs = 0);

/// Human-readable rendering of a command result or a report.
std::string render_text(const nlohmann::ordered_json& result);
std::string render_text(const Report& report);

/// The whole tool: argv without the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreathvar
