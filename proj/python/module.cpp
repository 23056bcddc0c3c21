#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "midlayer/analysis.hpp"
#include "midlayer/construct.hpp"
#include "midlayer/io.hpp"
#include "midlayer/search.hpp"
#include "midlayer/suites.hpp"
#include "midlayer/trees.hpp"

namespace py = pybind11;
using namespace midlayer;

namespace {

std::vector<std::vector<std::string>> cycle_strings(const TwoFactor& tf) {
  std::vector<std::vector<std::string>> out;
  out.reserve(tf.cycles.size());
  for (const auto& c : tf.cycles) {
    auto& row = out.emplace_back();
    row.reserve(c.size());
    for (Word v : c) row.push_back(bits::to_string(v, tf.bit_length()));
  }
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["ok"] = r.ok();
  d["coverage"] = r.coverage;
  d["disjoint"] = r.disjoint;
  d["adjacency"] = r.adjacency;
  d["divisibility"] = r.divisibility;
  d["failures"] = r.failures;
  return d;
}

py::dict record_dict(const SearchResultRecord& r) {
  py::dict d;
  d["alpha"] = r.alpha.str();
  d["n"] = r.alpha.target_n();
  d["num_cycles"] = r.num_cycles();
  d["spectrum"] = r.spectrum.counts;
  d["wall_ms"] = r.wall_ms;
  if (r.seed) d["seed"] = *r.seed;
  return d;
}

SuiteReport run_suite(const std::string& name, int n, std::uint64_t budget, std::uint64_t seed) {
  if (name == "lemmas") return lemmas_suite(n, budget, seed, n);
  if (name == "trees") return trees_suite(n, 2 * n);
  if (name == "parity") return parity_suite(n, budget, seed);
  if (name == "tau") return tau_suite(n, budget, seed);
  if (name == "distinct") return distinct_suite(n, budget, seed);
  if (name == "lattice") return lattice_suite(2 * n, 2 * n);
  if (name == "divisibility") return divisibility_suite(n, budget, seed);
  if (name == "all-zero") return all_zero_suite(n);
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parametrized 2-factors in the middle layer of the odd-dimensional cube";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<TwoFactor>(m, "TwoFactor")
      .def_readonly("n", &TwoFactor::n)
      .def_property_readonly("alpha", [](const TwoFactor& t) { return t.alpha.str(); })
      .def_property_readonly("cycles", &cycle_strings)
      .def_property_readonly("num_cycles", [](const TwoFactor& t) { return t.cycles.size(); })
      .def_property_readonly("vertex_count", &TwoFactor::vertex_count)
      .def("spectrum", [](const TwoFactor& t) { return spectrum(t).counts; })
      .def("dyck_counts", [](const TwoFactor& t) { return spectrum(t).dyck_counts; })
      .def("verify", [](const TwoFactor& t) { return report_dict(verify_two_factor(t)); })
      .def("same_edges", [](const TwoFactor& a, const TwoFactor& b) { return same_edges(a, b); })
      .def("tau_image", [](const TwoFactor& t, const std::string& alpha_prime) {
        return tau_image(t, AlphaVector::parse(alpha_prime, t.n));
      })
      .def("to_json", [](const TwoFactor& t, int indent) { return two_factor_json(t, indent); },
           py::arg("indent") = -1)
      .def_static("from_json", [](const std::string& text) { return parse_two_factor_json(text); })
      .def("__len__", [](const TwoFactor& t) { return t.cycles.size(); })
      .def("__repr__", [](const TwoFactor& t) {
        return "<TwoFactor n=" + std::to_string(t.n) + " alpha='" + t.alpha.str() + "' cycles=" +
               std::to_string(t.cycles.size()) + ">";
      });

  m.def(
      "build",
      [](const std::string& alpha, std::optional<int> k_cap) {
        const ParameterSequence seq = ParameterSequence::parse(alpha);
        py::gil_scoped_release release;
        return build(seq, k_cap);
      },
      py::arg("alpha"), py::arg("k_cap") = py::none(),
      "2-factor for a comma-separated parameter sequence such as \",0,10\".");

  m.def(
      "spectrum",
      [](const std::string& alpha) {
        const ParameterSequence seq = ParameterSequence::parse(alpha);
        py::gil_scoped_release release;
        return spectrum(build(seq, seq.target_n())).counts;
      },
      py::arg("alpha"));

  m.def("f_alpha", [](const std::string& alpha, const std::string& x) {
    const Bitstring b = Bitstring::parse(x);
    return f_alpha(AlphaVector::parse(alpha, b.length() / 2), b).str();
  });
  m.def("tau_alpha", [](const std::string& alpha, const std::string& x) {
    const Bitstring b = Bitstring::parse(x);
    return tau_alpha(AlphaVector::parse(alpha, b.length() / 2), b).str();
  });

  m.def("beta", [](int n) { return beta(n).entries; });
  m.def("predicted_parity", [](const std::string& alpha, int n) {
    return predicted_parity(AlphaVector::parse(alpha, n), n);
  });

  m.def("catalan", &catalan);
  m.def("count_plane_trees", &count_plane_trees);
  m.def("count_asymmetric", &count_asymmetric);

  m.def(
      "table1_row",
      [](int n, int workers) {
        py::gil_scoped_release release;
        const Table1Row r = table1_row(n, workers);
        return std::make_pair(r.one_cycle, r.two_cycles);
      },
      py::arg("n"), py::arg("workers") = 1);

  m.def(
      "search",
      [](int n, const std::string& mode, std::set<std::uint64_t> targets, std::uint64_t limit,
         std::optional<std::uint64_t> seed, int workers, std::uint64_t checkpoint, std::uint64_t budget) {
        SearchJob job;
        job.n = n;
        job.mode = parse_search_mode(mode);
        job.targets = std::move(targets);
        job.limit = limit;
        job.seed = seed;
        job.workers = workers;
        job.checkpoint = checkpoint;
        job.budget = budget;
        std::vector<SearchResultRecord> records;
        SearchSummary s;
        {
          py::gil_scoped_release release;
          s = run_search(job, [&](const SearchResultRecord& r) { records.push_back(r); });
        }
        py::list out;
        for (const auto& r : records) out.append(record_dict(r));
        py::dict summary;
        summary["evaluated"] = s.evaluated;
        summary["hits"] = s.hits;
        summary["histogram"] = s.histogram;
        summary["next_checkpoint"] = s.next_checkpoint;
        summary["stopped_by_limit"] = s.stopped_by_limit;
        return py::make_tuple(out, summary);
      },
      py::arg("n"), py::arg("mode") = "exhaustive", py::arg("targets") = std::set<std::uint64_t>{},
      py::arg("limit") = 0, py::arg("seed") = py::none(), py::arg("workers") = 1, py::arg("checkpoint") = 0,
      py::arg("budget") = 1000,
      "Returns (records, summary); each record is a dict with alpha, n, num_cycles, spectrum, wall_ms.");

  m.def(
      "verify",
      [](const std::string& suite, int n, std::uint64_t budget, std::uint64_t seed) {
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, n, budget, seed);
        }
        py::dict d;
        d["name"] = r.name;
        d["passed"] = r.passed();
        d["checks"] = r.checks;
        d["notes"] = r.notes;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("suite"), py::arg("n"), py::arg("budget") = 1000, py::arg("seed") = 1);
}
