// Python bindings for the main operations: construction, stopping-set
// analysis, counting, and erasure-channel decoding.  Big counts cross the
// boundary as python ints (built from decimal strings, so nothing truncates).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stopset/bec.hpp"
#include "stopset/config.hpp"
#include "stopset/generator_counts.hpp"
#include "stopset/stopping.hpp"

namespace py = pybind11;
using namespace stopset;

namespace {

py::object to_pyint(const Bigint& value) {
  std::string s = value.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list to_pyint_list(const std::vector<Bigint>& values) {
  py::list out;
  for (const Bigint& v : values) out.append(to_pyint(v));
  return out;
}

CodeFamily family_of(const std::string& name, int m) { return parse_code_family(name, m); }

Construction construction_of(const CodeFamily& family, const std::string& flag) {
  return flag.empty() ? canonical_construction(family.tag) : parse_construction(flag);
}

GeometryKind kind_of(const std::string& name) { return parse_geometry_kind(name); }

py::dict report_to_dict(const BecOptimalityReport& rep) {
  py::dict d;
  d["distributions_match"] = rep.distributions_match;
  d["first_mismatch_size"] = rep.first_mismatch_size;
  d["ssd_matrix"] = to_pyint_list(rep.ssd_matrix.T);
  d["ssd_star"] = to_pyint_list(rep.ssd_star.T);
  d["all_minimum_dual_rows_present"] = rep.all_minimum_dual_rows_present;
  d["missing_minimum_dual_codewords"] =
      static_cast<int>(rep.missing_minimum_dual_codewords.size());
  d["row_minimality_checked"] = rep.row_minimality_checked;
  d["every_row_necessary"] = rep.every_row_necessary;
  d["optimal"] = rep.optimal();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "stopping sets, finite-geometry parity-check matrices, and erasure decoding";

  py::class_<CodeFamily>(mod, "CodeFamily")
      .def(py::init([](const std::string& name, int m) { return family_of(name, m); }),
           py::arg("name"), py::arg("m"))
      .def_property_readonly("name", &CodeFamily::name)
      .def_readonly("m", &CodeFamily::m)
      .def_property_readonly("n", &CodeFamily::length)
      .def_property_readonly("k", &CodeFamily::dimension)
      .def_property_readonly("d", &CodeFamily::min_distance)
      .def("dual", &CodeFamily::dual)
      .def("__eq__",
           [](const CodeFamily& a, const CodeFamily& b) { return a == b; })
      .def("__repr__", [](const CodeFamily& f) {
        return "CodeFamily('" + f.name() + "', " + std::to_string(f.m) + ")";
      });

  py::class_<ParityCheckMatrix>(mod, "ParityCheckMatrix")
      .def_property_readonly("rows", &ParityCheckMatrix::rows)
      .def_property_readonly("cols", &ParityCheckMatrix::cols)
      .def_property_readonly("family",
                             [](const ParityCheckMatrix& p) -> py::object {
                               return p.family ? py::cast(*p.family) : py::none();
                             })
      .def_property_readonly("construction",
                             [](const ParityCheckMatrix& p) {
                               return construction_name(p.construction);
                             })
      .def("rank", [](const ParityCheckMatrix& p) { return p.matrix.rank(); })
      .def("row_support",
           [](const ParityCheckMatrix& p, int r) { return p.matrix.row(r).support(); },
           py::arg("row"), "1-based column indices of the ones in a row")
      .def("to_alist",
           [](const ParityCheckMatrix& p) { return export_matrix(p, ExportFormat::Alist); })
      .def("to_dense",
           [](const ParityCheckMatrix& p) {
             return export_matrix(p, ExportFormat::DenseText);
           })
      .def("to_json",
           [](const ParityCheckMatrix& p) { return export_matrix(p, ExportFormat::Json); })
      .def("__repr__", [](const ParityCheckMatrix& p) {
        return "<ParityCheckMatrix " + std::to_string(p.rows()) + "x" +
               std::to_string(p.cols()) + " " + construction_name(p.construction) + ">";
      });

  mod.def(
      "build",
      [](const std::string& family, int m, const std::string& construction) {
        CodeFamily fam = family_of(family, m);
        return build_matrix(fam, construction_of(fam, construction));
      },
      py::arg("family"), py::arg("m"), py::arg("construction") = "",
      "construct a parity-check matrix (default: the family's own construction)");
  mod.def("import_alist", &import_alist, py::arg("text"));
  mod.def("import_dense", &import_dense_text, py::arg("text"));

  mod.def(
      "ssd_formula",
      [](const std::string& family, int m) {
        return to_pyint_list(ssd_formula(family_of(family, m)).T);
      },
      py::arg("family"), py::arg("m"),
      "closed-form stopping-set distribution, T[0..n] as python ints");
  mod.def(
      "exhaustive_ssd",
      [](const ParityCheckMatrix& h, int threads, int max_n) {
        return to_pyint_list(exhaustive_ssd(h, threads, max_n).T);
      },
      py::arg("h"), py::arg("threads") = 1, py::arg("max_n") = 28);
  mod.def(
      "stopping_distance",
      [](const ParityCheckMatrix& h, int max_n) { return stopping_distance(h, max_n); },
      py::arg("h"), py::arg("max_n") = 28);
  mod.def(
      "is_stopping_set",
      [](const ParityCheckMatrix& h, const std::vector<int>& s) {
        return is_stopping_set(h, s);
      },
      py::arg("h"), py::arg("columns"), "columns are 1-based");
  mod.def(
      "verify_bec_optimal",
      [](const ParityCheckMatrix& h, const std::string& family, int m, int threads) {
        return report_to_dict(verify_bec_optimal(h, family_of(family, m), threads));
      },
      py::arg("h"), py::arg("family"), py::arg("m"), py::arg("threads") = 1);

  mod.def(
      "count_generators",
      [](const std::string& kind, int u, int l) {
        return to_pyint(count_generators(kind_of(kind), u, l));
      },
      py::arg("kind"), py::arg("u"), py::arg("l"),
      "u-subsets of an l-flat that span it ('pg' or 'eg')");
  mod.def(
      "count_stopping_generators",
      [](const std::string& kind, int u, int l) {
        return to_pyint(count_stopping_generators(kind_of(kind), u, l));
      },
      py::arg("kind"), py::arg("u"), py::arg("l"));
  mod.def(
      "gaussian_binomial",
      [](int n, int m) { return to_pyint(gaussian_binomial(n, m)); }, py::arg("n"),
      py::arg("m"));
  mod.def(
      "t3_fullrank_hamming", [](int m) { return to_pyint(t3_fullrank_hamming(m)); },
      py::arg("m"));
  mod.def("a3_hamming", [](int m) { return to_pyint(a3_hamming(m)); }, py::arg("m"));

  mod.def(
      "peel",
      [](const ParityCheckMatrix& h, const std::string& word,
         const std::vector<int>& erased) {
        DecodeOutcome out = peel(h, BitVector::from_string(word),
                                 ErasurePattern::from_positions(h.cols(), erased));
        py::object resolved = out.resolved_word
                                  ? py::cast(out.resolved_word->to_string())
                                  : py::object(py::none());
        return py::make_tuple(out.recovered(), out.residual, resolved);
      },
      py::arg("h"), py::arg("word"), py::arg("erased"),
      "returns (recovered, residual positions, resolved word or None)");
  mod.def(
      "is_incorrigible",
      [](const std::string& family, int m, const std::vector<int>& erased) {
        CodeFamily fam = family_of(family, m);
        return is_incorrigible(fam, ErasurePattern::from_positions(fam.length(), erased));
      },
      py::arg("family"), py::arg("m"), py::arg("erased"));
  mod.def(
      "exhaustive_pattern_analysis",
      [](const ParityCheckMatrix& h, const std::string& family, int m, int threads) {
        PatternAnalysis pa =
            exhaustive_pattern_analysis(h, family_of(family, m), threads);
        py::dict d;
        d["n"] = pa.n;
        d["fail_peel"] = to_pyint_list(pa.fail_peel);
        d["fail_ml"] = to_pyint_list(pa.fail_ml);
        return d;
      },
      py::arg("h"), py::arg("family"), py::arg("m"), py::arg("threads") = 1);
  mod.def(
      "monte_carlo",
      [](const ParityCheckMatrix& h, double epsilon, long long trials, uint64_t seed,
         int threads, bool track_ml) {
        MonteCarloReport r =
            monte_carlo(h, ChannelConfig{epsilon, trials, seed}, threads, track_ml);
        py::dict d;
        d["epsilon"] = r.epsilon;
        d["trials"] = r.trials;
        d["seed"] = r.seed;
        d["generator"] = r.generator;
        d["fail_peel"] = r.fail_peel;
        d["fail_rate_peel"] = r.fail_rate_peel();
        d["stderr"] = r.standard_error();
        if (r.fail_ml) {
          d["fail_ml"] = *r.fail_ml;
          d["fail_rate_ml"] = r.fail_rate_ml();
        }
        return d;
      },
      py::arg("h"), py::arg("epsilon"), py::arg("trials"), py::arg("seed") = 0,
      py::arg("threads") = 1, py::arg("track_ml") = false);

  mod.def("set_verify_mode", &set_verify_mode, py::arg("enabled"),
          "cross-check closed forms against recursions on every call");
}
