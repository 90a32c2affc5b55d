#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcd/bounds.hpp"
#include "lcd/canonical.hpp"
#include "lcd/classifier.hpp"
#include "lcd/code.hpp"
#include "lcd/errors.hpp"
#include "lcd/io.hpp"
#include "lcd/lcd_theory.hpp"
#include "lcd/properties.hpp"

namespace py = pybind11;
using namespace lcd;

namespace {

LinearCode from_rows(const std::vector<std::string>& rows, std::size_t n) {
  return LinearCode(BinaryMatrix::from_strings(rows, n));
}

py::dict metrics_dict(const CodeMetrics& m) {
  py::dict d;
  d["d"] = m.d ? py::cast(*m.d) : py::none();
  d["d_dual"] = m.d_dual ? py::cast(*m.d_dual) : py::none();
  d["hull_dim"] = m.hull_dim;
  d["is_lcd"] = m.is_lcd();
  d["even_like"] = m.is_even_like;
  d["has_all_ones"] = m.has_all_ones;
  d["weight_enumerator"] = m.weight_enumerator;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary LCD codes: analysis, constructions, classification and bounds.";
  m.attr("__version__") = LCD_VERSION;

  auto base = py::register_exception<Error>(m, "LcdError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ScaleGuardError>(m, "ScaleGuardError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<DegenerateCode>(m, "DegenerateCode", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
  py::register_exception<BoundsContradiction>(m, "BoundsContradiction", base.ptr());

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init(&from_rows), py::arg("rows"), py::arg("n") = 0,
           "Code spanned by full-rank rows given as '0'/'1' strings.")
      .def_static("parse", py::overload_cast<const std::string&>(&parse_code), py::arg("text"))
      .def_property_readonly("n", &LinearCode::length)
      .def_property_readonly("k", &LinearCode::dimension)
      .def("rows", [](const LinearCode& c) { return c.generator().to_strings(); })
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; })
      .def("__repr__", [](const LinearCode& c) {
        return "<LinearCode [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]>";
      });

  m.def("is_lcd", &is_lcd);
  m.def("hull_dim", &hull_dim);
  m.def("min_weight", &min_weight);
  m.def("dual_distance", &dual_distance);
  m.def("dual", &dual);
  m.def("metrics", [](const LinearCode& c) { return metrics_dict(compute_metrics(c)); });
  m.def("puncture", &puncture, py::arg("code"), py::arg("coordinate"));
  m.def("shorten", &shorten, py::arg("code"), py::arg("coordinate"));
  m.def("extend_parity", &extend_parity);
  m.def("duplicate_column", &duplicate_column, py::arg("code"), py::arg("v"));
  m.def("certificate", [](const LinearCode& c) { return py::bytes(canonical_form(c).certificate); });
  m.def("canonical_rows", [](const LinearCode& c) { return canonical_form(c).matrix.to_strings(); });
  m.def("are_equivalent", &are_equivalent);

  m.def(
      "classify",
      [](std::size_t n, std::size_t k, std::size_t d_min, std::size_t d_dual_min, unsigned threads) {
        ClassifyOptions o;
        o.threads = threads;
        std::vector<ClassificationRecord> recs;
        {
          py::gil_scoped_release release;
          recs = classify({n, k, d_min, d_dual_min, {}}, o);
        }
        py::list out;
        for (const auto& r : recs) out.append(py::make_tuple(r.code(), metrics_dict(r.metrics)));
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("d_min") = 1, py::arg("d_dual_min") = 1, py::arg("threads") = 1,
      "Inequivalent LCD [n,k,>=d_min] codes as (code, metrics) pairs, sorted by certificate.");
  m.def("d_lcd_exact", [](std::size_t n, std::size_t k) { return d_lcd_exact(n, k); });

  m.def("formula_dlcd", &formula_dlcd);
  m.def("griesmer_upper", &griesmer_upper);
  m.def(
      "build_table",
      [](std::size_t n_max, const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& seeds,
         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& ceilings) {
        auto conv = [](const auto& v) {
          std::vector<CellValue> out;
          for (auto [n, k, d] : v) out.push_back({n, k, d});
          return out;
        };
        const auto t = build_table(n_max, conv(seeds), conv(ceilings));
        py::dict out;
        for (const auto& c : t.cells()) out[py::make_tuple(c.n, c.k)] = py::make_tuple(c.lower, c.upper);
        return out;
      },
      py::arg("n_max"), py::arg("seeds") = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{},
      py::arg("ceilings") = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{},
      "{(n, k): (lower, upper)} after propagation.");

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::size_t trials, std::uint64_t seed) {
        const auto r = run_suite(name, trials, seed);
        return py::make_tuple(r.trials, r.failures, r.first_failure);
      },
      py::arg("name"), py::arg("trials") = 1000, py::arg("seed") = 1);
}
