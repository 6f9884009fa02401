#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stepmp/dictionary.hpp"
#include "stepmp/maximizer.hpp"
#include "stepmp/pursuit.hpp"
#include "stepmp/simulate.hpp"
#include "stepmp/verify.hpp"

namespace py = pybind11;
using namespace stepmp;

namespace {

ScalarSequence to_sequence(const std::vector<double>& values) { return ScalarSequence(values); }

py::dict simulation_dict(const SimulationOutput& sim) {
  py::dict out;
  out["values"] = sim.values.vector();
  out["states"] = sim.states;
  out["true_means"] = sim.true_means.vector();
  out["seed"] = sim.seed;
  out["burn_in"] = sim.burn_in;
  return out;
}

}  // namespace

PYBIND11_MODULE(_stepmp, m) {
  m.doc() = "Matching pursuit over a rectangular-window wavelet dictionary";

  py::class_<WindowAtom>(m, "WindowAtom")
      .def(py::init<long, long>(), py::arg("start"), py::arg("length"))
      .def_readwrite("start", &WindowAtom::start)
      .def_readwrite("length", &WindowAtom::length)
      .def("__eq__", [](const WindowAtom& a, const WindowAtom& b) { return a == b; })
      .def("__repr__", [](const WindowAtom& a) {
        return "WindowAtom(start=" + std::to_string(a.start) +
               ", length=" + std::to_string(a.length) + ")";
      });

  py::class_<ScoredAtom>(m, "ScoredAtom")
      .def_readonly("atom", &ScoredAtom::atom)
      .def_readonly("value", &ScoredAtom::value)
      .def_readonly("signed_sum", &ScoredAtom::signed_sum);

  py::class_<ExpansionTerm>(m, "ExpansionTerm")
      .def_readonly("atom", &ExpansionTerm::atom)
      .def_readonly("coefficient", &ExpansionTerm::coefficient)
      .def_readonly("iteration", &ExpansionTerm::iteration)
      .def_readonly("level", &ExpansionTerm::level);

  py::class_<GreedyExpansion>(m, "GreedyExpansion")
      .def_readonly("terms", &GreedyExpansion::terms)
      .def_property_readonly("residual", [](const GreedyExpansion& e) { return e.residual.vector(); })
      .def_readonly("norm_history", &GreedyExpansion::norm_history)
      .def_property_readonly("shift", [](const GreedyExpansion& e) { return e.shift.shift; });

  py::class_<KMeansResult>(m, "KMeansResult")
      .def_readonly("centers", &KMeansResult::centers)
      .def_readonly("assignments", &KMeansResult::assignments)
      .def_readonly("iterations", &KMeansResult::iterations);

  m.def("best_window", [](const std::vector<double>& v) { return best_window(to_sequence(v)); });
  m.def("best_window_single_signed",
        [](const std::vector<double>& v) { return best_window_single_signed(to_sequence(v)); });
  m.def("brute_force_best", [](const std::vector<double>& v) { return brute_force_best(to_sequence(v)); });
  m.def("three_term_max", [](const std::vector<double>& v) { return three_term_max(to_sequence(v)); });

  m.def(
      "inner_product",
      [](const std::vector<double>& v, double t, double xi, double u) {
        return inner_product(make_step_function(to_sequence(v)), WaveformAtom{t, xi, u});
      },
      py::arg("values"), py::arg("t"), py::arg("xi"), py::arg("u"));
  m.def("alternating_modulus", &alternating_modulus, py::arg("a"), py::arg("t"), py::arg("delta"),
        py::arg("xi"));

  m.def("pursuit_step", [](const std::vector<double>& v) {
    auto [term, residual] = pursuit_step(to_sequence(v));
    return py::make_tuple(term, residual.vector());
  });
  m.def(
      "run_pursuit",
      [](const std::vector<double>& v, long max_iterations, double residual_epsilon,
         double coefficient_epsilon, std::optional<double> pre_shift) {
        return run_pursuit(to_sequence(v), PursuitConfig{max_iterations, residual_epsilon,
                                                         coefficient_epsilon, pre_shift});
      },
      py::arg("values"), py::arg("max_iterations") = 10, py::arg("residual_epsilon") = 0.0,
      py::arg("coefficient_epsilon") = 0.0, py::arg("pre_shift") = py::none());
  m.def("reconstruct", [](const GreedyExpansion& e) { return reconstruct(e).vector(); });
  m.def("breakpoints", &breakpoints, py::arg("expansion"), py::arg("threshold") = 0.0);
  m.def("energy_ledger", [](const GreedyExpansion& e) {
    py::list rows;
    for (const auto& r : energy_ledger(e)) {
      rows.append(py::make_tuple(r.iteration, r.coefficient_squared, r.residual_norm_squared));
    }
    return rows;
  });

  m.def("preset_names", &preset_names);
  m.def(
      "simulate",
      [](const std::string& name, std::optional<std::size_t> T, std::uint64_t seed) {
        const Preset p = preset(name);
        return simulation_dict(simulate_preset(p, T.value_or(p.default_length), seed));
      },
      py::arg("preset"), py::arg("T") = py::none(), py::arg("seed") = 1);
  m.def(
      "kmeans_1d",
      [](const std::vector<double>& v, int k, std::uint64_t seed) {
        return kmeans_1d(to_sequence(v), k, seed);
      },
      py::arg("values"), py::arg("k"), py::arg("seed") = 1);
  m.def("mse", [](const std::vector<double>& a, const std::vector<double>& b) { return mse(a, b); });

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, long trials, long n, double grid_step) {
        verify::Options o;
        o.seed = seed;
        o.trials = trials;
        o.max_n = n;
        o.grid_step = grid_step;
        const verify::Result r = verify::run_suite(suite, o);
        py::list checks;
        for (const auto& c : r.checks) {
          checks.append(py::dict(py::arg("name") = c.name, py::arg("observed") = c.observed,
                                 py::arg("tolerance") = c.tolerance, py::arg("passed") = c.passed));
        }
        return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed(),
                        py::arg("checks") = checks, py::arg("seconds") = r.seconds);
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 10, py::arg("n") = 0,
      py::arg("grid_step") = 0.02);
}
