#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "multiswap/analytics.hpp"
#include "multiswap/errors.hpp"
#include "multiswap/estimation.hpp"
#include "multiswap/io.hpp"
#include "multiswap/multiswap.hpp"
#include "multiswap/san.hpp"

namespace py = pybind11;
using namespace multiswap;

namespace {

using RawStates = std::vector<std::vector<Amplitude>>;

StateEnsemble to_ensemble(const RawStates& raw, bool normalize_inputs) {
  std::vector<PureState> states;
  for (const auto& s : raw) states.push_back(normalize_inputs ? normalize(s) : PureState(s));
  return StateEnsemble(std::move(states));
}

RawStates from_ensemble(const StateEnsemble& e) {
  RawStates out;
  for (const auto& s : e.states()) out.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
  return out;
}

py::dict estimate_dict(const OverlapEstimate& e) {
  py::dict d;
  d["pair"] = e.pair;
  d["exact"] = e.exact;
  d["estimate"] = e.estimate;
  d["samples"] = e.samples;
  d["stderr"] = e.stderr_bound;
  return d;
}

py::list estimate_list(const std::vector<OverlapEstimate>& estimates) {
  py::list out;
  for (const auto& e : estimates) out.append(estimate_dict(e));
  return out;
}

BuiltScheme build(std::string_view scheme, std::size_t n, std::size_t width, std::string_view final_variant) {
  return build_scheme(parse_scheme(scheme), padded_size(n), width, parse_variant(final_variant), n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-state swap-test circuits, simulation and overlap estimation";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  m.def("load_states", [](const std::filesystem::path& p, bool normalize_inputs) {
        return from_ensemble(load_states(p, normalize_inputs));
      },
      py::arg("path"), py::arg("normalize") = false);

  m.def("exact_overlap", [](const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
        return exact_overlap(PureState(a), PureState(b));
      },
      py::arg("a"), py::arg("b"));

  m.def("success_probability",
        [](std::string_view variant, const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
          return success_probability(parse_variant(variant), PureState(a), PureState(b));
        },
        py::arg("variant"), py::arg("a"), py::arg("b"));

  m.def("estimate", [](std::uint64_t t0, std::uint64_t t1) {
        const auto e = estimate(TallyRecord{{0, 0}, t0, t1, {}});
        return py::make_tuple(e.estimate, e.stderr_bound);
      },
      py::arg("t0"), py::arg("t1"));

  m.def("resources",
        [](std::string_view scheme, std::size_t n, std::size_t width, std::string_view final_variant) {
          const auto b = build(scheme, n, width, final_variant);
          const auto net = count_resources(b.network);
          const auto full = count_resources(b.circuit);
          py::dict d;
          d["cswap"] = net.cswap_count;
          d["ancilla"] = net.ancilla_count;
          d["cswap_with_tests"] = full.cswap_count;
          d["qubits"] = full.qubit_count;
          d["gates"] = full.gate_count_total;
          d["bit_labels"] = b.layout.bit_labels;
          return d;
        },
        py::arg("scheme") = "new", py::arg("n") = 8, py::arg("width") = 1,
        py::arg("final") = "standard");

  m.def("permutation_table", [](std::string_view scheme, std::size_t n) {
        const auto table = derive_permutation_table(build(scheme, n, 1, "standard"));
        std::vector<std::pair<std::string, std::vector<std::size_t>>> rows;
        for (std::uint64_t o = 0; o < table.row_count(); ++o) {
          const auto r = table.row(o);
          rows.emplace_back(table.outcome_bits(o), std::vector<std::size_t>(r.begin(), r.end()));
        }
        return rows;
      },
      py::arg("scheme") = "new", py::arg("n") = 8);

  m.def("run_experiment",
        [](const RawStates& states, std::string_view scheme, std::uint64_t shots, std::uint64_t seed,
           std::string_view final_variant, std::string_view engine, unsigned workers, bool normalize_inputs) {
          ExperimentConfig cfg;
          cfg.scheme = parse_scheme(scheme);
          cfg.shots = shots;
          cfg.seed = seed;
          cfg.final_variant = parse_variant(final_variant);
          cfg.engine = parse_engine(engine);
          cfg.workers = workers;
          const auto ensemble = to_ensemble(states, normalize_inputs);
          std::optional<ExperimentResult> result;
          {
            py::gil_scoped_release release;
            result = run_experiment(ensemble, cfg);
          }
          const auto& r = *result;
          py::dict d;
          d["engine"] = std::string(engine_name(r.engine_used));
          d["labels"] = std::vector<std::string>(r.counts.labels().begin(), r.counts.labels().end());
          d["counts"] = r.counts.counts();
          d["estimates"] = estimate_list(r.estimates);
          return d;
        },
        py::arg("states"), py::arg("scheme") = "new", py::arg("shots") = 8192, py::arg("seed") = 1,
        py::arg("final") = "standard", py::arg("engine") = "auto", py::arg("workers") = 0,
        py::arg("normalize") = false);

  m.def("replay",
        [](const std::filesystem::path& counts, const std::filesystem::path& states,
           std::optional<std::filesystem::path> reference, double tolerance) {
          const auto c = load_counts(counts);
          const auto prepared = prepare_scheme(load_states(states), c.scheme.value_or(Scheme::New),
                                               c.final_variant.value_or(SwapTestVariant::Standard));
          const auto report = replay(c, prepared, reference ? load_reference(*reference) : ReferenceTable{},
                                     tolerance);
          py::list rows;
          for (const auto& row : report.rows) {
            auto d = estimate_dict(row.estimate);
            d["reference"] = row.reference ? row.reference->estimate : std::nullopt;
            d["deviation"] = row.deviation;
            d["flagged"] = row.flagged;
            rows.append(d);
          }
          py::dict d;
          d["total_shots"] = report.total_shots;
          d["flagged"] = report.flagged_count();
          d["rows"] = rows;
          return d;
        },
        py::arg("counts"), py::arg("states"), py::arg("reference") = std::nullopt,
        py::arg("tolerance") = 0.005);

  m.def("precision", [](std::size_t n, std::uint64_t shots) {
        const auto p = precision(n, shots);
        py::dict d;
        d["requested_n"] = p.requested_n;
        d["n"] = p.n;
        d["m1"] = p.m1;
        d["m2"] = p.m2;
        d["ratio"] = p.ratio;
        return d;
      },
      py::arg("n"), py::arg("shots") = 8192);
}
