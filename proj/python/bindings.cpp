#include "fuchs/chartab.hpp"
#include "fuchs/classes.hpp"
#include "fuchs/cli.hpp"
#include "fuchs/construct.hpp"
#include "fuchs/error.hpp"
#include "fuchs/fuchsian.hpp"
#include "fuchs/homcount.hpp"
#include "fuchs/levi.hpp"
#include "fuchs/signature.hpp"
#include "fuchs/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

// Exact values cross the boundary as Python ints and fractions.Fraction.
py::object to_py(const fuchs::BigInt& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(fuchs::to_string(v).c_str(), nullptr, 10)); }

py::object to_py(const fuchs::Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(fuchs::numerator_of(r)), to_py(fuchs::denominator_of(r)));
}

py::object to_py(const std::optional<fuchs::Rational>& r) { return r ? to_py(*r) : py::none(); }

struct LoadedGroup {
  fuchs::GroupTable group;
  fuchs::ClassData classes;
  fuchs::CharacterTable table;
};

LoadedGroup load(const std::string& spec) {
  auto group = fuchs::standard_group(fuchs::parse_group_spec(spec));
  auto classes = fuchs::conjugacy_classes(group);
  auto table = fuchs::character_table(group, classes);
  return {std::move(group), std::move(classes), std::move(table)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact homomorphism counts from Fuchsian groups and Levi alpha invariants";
  m.attr("__version__") = fuchs::kToolVersion;

  py::register_exception<fuchs::Error>(m, "FuchsError", PyExc_ValueError);

  m.def("measure", [](const std::string& sig) { return to_py(fuchs::measure(fuchs::parse_signature(sig))); }, py::arg("sig"));

  m.def(
      "validate",
      [](const std::string& sig) {
        const auto v = fuchs::validate(fuchs::parse_signature(sig));
        return py::make_tuple(v.valid, v.reasons);
      },
      py::arg("sig"));

  m.def(
      "thresholds",
      [](const std::string& sig) {
        const auto th = fuchs::thresholds(fuchs::parse_signature(sig));
        py::dict d;
        d["mu"] = to_py(th.mu);
        d["t"] = to_py(th.t);
        d["nu"] = to_py(th.nu);
        d["N1"] = to_py(th.N1);
        d["N2"] = to_py(th.N2);
        d["N3"] = to_py(th.N3);
        d["N4"] = to_py(th.N4);
        d["N5"] = to_py(th.N5);
        return d;
      },
      py::arg("sig"));

  m.def(
      "character_degrees", [](const std::string& group) { return load(group).table.degrees; }, py::arg("group"));

  m.def(
      "hom_count",
      [](const std::string& sig, const std::string& group, std::optional<std::vector<std::size_t>> classes, bool exact_orders,
         const std::string& method) {
        const auto s = fuchs::parse_signature(sig);
        const auto g = load(group);
        if (method == "oracle") {
          fuchs::OracleOptions oo;
          oo.classes = classes;
          oo.exact_orders = exact_orders;
          return to_py(fuchs::oracle_hom_count(s, g.group, g.classes, oo));
        }
        if (method != "formula") throw fuchs::Error(fuchs::ErrorKind::ParseError, "method must be formula or oracle");
        fuchs::FormulaOptions fo;
        fo.exact_orders = exact_orders;
        return to_py(classes ? fuchs::hom_count_classes(s, g.table, *classes, fo) : fuchs::hom_count_total(s, g.table, fo));
      },
      py::arg("sig"), py::arg("group"), py::arg("classes") = py::none(), py::arg("exact_orders") = false, py::arg("method") = "formula");

  m.def(
      "epi_count",
      [](const std::string& sig, const std::string& group) {
        auto g = fuchs::standard_group(fuchs::parse_group_spec(group));
        const auto res = fuchs::epi_count(fuchs::parse_signature(sig), g, fuchs::conjugacy_classes(g));
        return py::make_tuple(to_py(res.epi), to_py(res.hom));
      },
      py::arg("sig"), py::arg("group"));

  m.def(
      "alpha",
      [](const std::string& levi) {
        const auto res = fuchs::alpha(fuchs::parse_levi(levi));
        return py::make_tuple(to_py(res.value), res.witness_string());
      },
      py::arg("levi"));

  m.def(
      "alpha_bound", [](const std::string& levi) { return to_py(fuchs::alpha_bound_classical(fuchs::parse_levi(levi))); }, py::arg("levi"));

  m.def(
      "dim_jm",
      [](const std::string& family, int n, std::uint64_t order) {
        const fuchs::JmFamily f = family == "GL"   ? fuchs::JmFamily::GL
                                  : family == "SL" ? fuchs::JmFamily::SL
                                  : family == "Sp" ? fuchs::JmFamily::Sp
                                  : family == "SO" ? fuchs::JmFamily::SO
                                                   : throw fuchs::Error(fuchs::ErrorKind::ParseError, "family must be GL, SL, Sp or SO");
        return fuchs::dim_Jm(f, n, order).jm;
      },
      py::arg("family"), py::arg("n"), py::arg("m"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = fuchs::run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end in-process; returns (status, stdout, stderr).");
}
