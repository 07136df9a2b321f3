#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wreathvar/abelian_shape.hpp"
#include "wreathvar/cli.hpp"
#include "wreathvar/error.hpp"
#include "wreathvar/oracle.hpp"
#include "wreathvar/shield.hpp"

namespace py = pybind11;
using namespace wreathvar;

namespace {

Settings settings_for(std::uint64_t cap, std::uint64_t budget) {
  Settings s;
  s.cap = cap;
  s.budget = budget;
  return s;
}

// Library errors surface as WreathvarError(code, field, message); the GIL is
// released around anything that may enumerate a group.
py::object error_type;

[[noreturn]] void raise(const std::string& code, const std::string& field, int exit_code, const std::string& what) {
  PyErr_SetObject(error_type.ptr(), py::make_tuple(code, field, exit_code, what).ptr());
  throw py::error_already_set();
}

template <typename F>
auto translated(F&& f) {
  try {
    py::gil_scoped_release release;
    return f();
  } catch (const InputError& e) {
    raise(e.code(), e.field(), e.exit_code(), e.what());
  } catch (const Error& e) {
    const bool limit = e.code() == ErrorCode::OversizeGroup || e.code() == ErrorCode::BudgetExceeded ||
                       e.code() == ErrorCode::Overflow;
    raise(std::string(to_string(e.code())), "", limit ? kExitResourceLimit : kExitInvalidInput, e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_wreathvar, m) {
  m.doc() = "Native core of wreathvar: nilpotent-by-abelian wreath product varieties.";

  error_type = py::module_::import("wreathvar._errors").attr("WreathvarError");

  m.attr("DEFAULT_CAP") = Settings{}.cap;
  m.attr("DEFAULT_BUDGET") = Settings{}.budget;

  m.def("command_names", &command_names);

  m.def(
      "run_command",
      [](const std::string& command, const std::string& inputs_json, std::uint64_t cap, std::uint64_t budget) {
        const auto inputs = nlohmann::json::parse(inputs_json);
        return translated([&] { return run_command(command, inputs, settings_for(cap, budget)).dump(); });
      },
      py::arg("command"), py::arg("inputs_json"), py::arg("cap"), py::arg("budget"),
      "Run one command on JSON-encoded inputs and return the JSON result.");

  m.def(
      "run_report",
      [](const std::string& path, std::uint64_t cap, std::uint64_t budget, unsigned jobs) {
        return translated([&] { return run_report(path, settings_for(cap, budget), jobs).to_json().dump(); });
      },
      py::arg("path"), py::arg("cap"), py::arg("budget"), py::arg("jobs") = 0);

  m.def(
      "run_report_text",
      [](const std::string& text, std::uint64_t cap, std::uint64_t budget, unsigned jobs) {
        return translated([&] { return run_report_text(text, settings_for(cap, budget), jobs).to_json().dump(); });
      },
      py::arg("text"), py::arg("cap"), py::arg("budget"), py::arg("jobs") = 0);

  m.def(
      "bound1",
      [](std::uint64_t c, std::uint64_t t, std::uint64_t l, std::uint64_t p, unsigned v, unsigned alpha) {
        const auto r = translated([&] { return bound1(c, t, l, p, v, alpha); });
        return py::make_tuple(r.num(), r.den());
      },
      py::arg("c"), py::arg("t"), py::arg("l"), py::arg("p"), py::arg("v"), py::arg("alpha"),
      "Class of A wr Z(l, t) as (numerator, denominator).");

  m.def(
      "bound2",
      [](std::uint64_t c, std::uint64_t t, std::uint64_t z, std::uint64_t p, unsigned v, unsigned alpha) {
        return translated([&] { return bound2(c, t, z, p, v, alpha); });
      },
      py::arg("c"), py::arg("t"), py::arg("z"), py::arg("p"), py::arg("v"), py::arg("alpha"));

  m.def(
      "reduced_word_count", [](unsigned arity, unsigned maxlen) { return reduced_word_count(arity, maxlen); },
      py::arg("arity"), py::arg("maxlen"));

  m.def(
      "normalize_shape",
      [](const std::string& text) { return translated([&] { return to_json(parse_abelian_shape(text)).dump(); }); },
      py::arg("text"), "Canonical JSON form of an abelian shape written like 'C2^3 x C4^inf'.");
}
