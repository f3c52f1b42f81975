#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uflp/errors.hpp"
#include "uflp/eval.hpp"
#include "uflp/exact.hpp"
#include "uflp/experiment.hpp"
#include "uflp/instance.hpp"
#include "uflp/rng.hpp"
#include "uflp/search.hpp"
#include "uflp/stats.hpp"

namespace py = pybind11;
using namespace uflp;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Facility-location heuristics: instances, search, exact baseline, "
            "experiments";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FeasibilityError>(m, "FeasibilityError",
                                           PyExc_ValueError);

  py::class_<Rng64>(m, "Rng64")
      .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
      .def("next", &Rng64::next)
      .def("uniform_int", &Rng64::uniform_int, py::arg("lo"), py::arg("hi"));

  m.def(
      "derive_seed",
      [](std::uint64_t master, const std::vector<std::uint64_t>& parts) {
        Rng64 rng(master);
        for (std::uint64_t part : parts) rng = Rng64(rng.next() ^ part);
        return rng.next();
      },
      py::arg("master"), py::arg("parts"));

  py::class_<ModelId>(m, "ModelId")
      .def(py::init(&ModelId::from_number), py::arg("number"))
      .def_readwrite("number", &ModelId::number)
      .def_readwrite("trials", &ModelId::trials)
      .def_readwrite("lambda_num", &ModelId::lambda_num)
      .def_readwrite("lambda_den", &ModelId::lambda_den);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](int n, int m_, std::vector<Cost> opening,
                       std::vector<Cost> service) {
             Instance instance{n, m_, std::move(opening), std::move(service)};
             instance.validate();
             return instance;
           }),
           py::arg("num_facilities"), py::arg("num_customers"),
           py::arg("opening_cost"), py::arg("service_cost"))
      .def_readonly("num_facilities", &Instance::num_facilities)
      .def_readonly("num_customers", &Instance::num_customers)
      .def_readonly("opening_cost", &Instance::opening_cost)
      .def_readonly("service_cost", &Instance::service_cost)
      .def("service", &Instance::service, py::arg("facility"),
           py::arg("customer"))
      .def("__repr__", [](const Instance& instance) {
        std::ostringstream out;
        out << "Instance(n=" << instance.num_facilities
            << ", m=" << instance.num_customers << ")";
        return out.str();
      });

  m.def("generate", &generate, py::arg("model"), py::arg("num_facilities"),
        py::arg("num_customers"), py::arg("seed"));
  m.def("write_instance",
        py::overload_cast<const Instance&>(&write_instance),
        py::arg("instance"));
  m.def("parse_instance",
        py::overload_cast<const std::string&>(&parse_instance),
        py::arg("text"));

  m.def("evaluate_full", &evaluate_full, py::arg("instance"), py::arg("open"));

  py::class_<SearchState>(m, "SearchState")
      .def(py::init([](const Instance& instance) {
             return SearchState(instance);
           }),
           py::arg("instance"), py::keep_alive<1, 2>())
      .def_property_readonly("objective", &SearchState::objective)
      .def_property_readonly("open_count", &SearchState::open_count)
      .def("is_open", &SearchState::is_open, py::arg("facility"))
      .def("open_set", &SearchState::open_set)
      .def("assignment", &SearchState::assignment, py::arg("customer"))
      .def("delta_flip",
           [](const SearchState& state, int facility) -> py::object {
             const auto delta = state.delta_flip(facility);
             if (!delta) return py::none();
             return py::int_(*delta);
           },
           py::arg("facility"))
      .def("apply_flip", &SearchState::apply_flip, py::arg("facility"));

  py::enum_<Algorithm>(m, "Algorithm")
      .value("LS", Algorithm::LS)
      .value("RLS", Algorithm::RLS);

  py::class_<TracePoint>(m, "TracePoint")
      .def_readonly("iteration", &TracePoint::iteration)
      .def_readonly("objective", &TracePoint::objective);

  py::class_<RunRecord>(m, "RunRecord")
      .def_readonly("algorithm", &RunRecord::algorithm)
      .def_readonly("seed", &RunRecord::seed)
      .def_readonly("final_objective", &RunRecord::final_objective)
      .def_readonly("iterations_used", &RunRecord::iterations_used)
      .def_readonly("accepted_moves", &RunRecord::accepted_moves)
      .def_readonly("trace", &RunRecord::trace)
      .def_readonly("wall_time_ms", &RunRecord::wall_time_ms);

  m.def("ls_run", &ls_run, py::arg("instance"));
  m.def("rls_run", &rls_run, py::arg("instance"), py::arg("seed"));
  m.def("multi_start", &multi_start, py::arg("instance"), py::arg("algorithm"),
        py::arg("runs"), py::arg("base_seed"));

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("optimal_objective", &ExactResult::optimal_objective)
      .def_readonly("optimal_open_set", &ExactResult::optimal_open_set)
      .def_readonly("enumerated_count", &ExactResult::enumerated_count);

  m.def("brute_force_opt", &brute_force_opt, py::arg("instance"));
  m.def("brute_force_opt_naive", &brute_force_opt_naive, py::arg("instance"));
  m.def("export_lp", py::overload_cast<const Instance&>(&export_lp),
        py::arg("instance"));

  py::class_<VerifiedSolution>(m, "VerifiedSolution")
      .def_readonly("open_set", &VerifiedSolution::open_set)
      .def_readonly("objective", &VerifiedSolution::objective);

  m.def("import_open_set",
        py::overload_cast<const Instance&, const std::string&>(
            &import_open_set),
        py::arg("instance"), py::arg("text"));

  py::class_<BoxStats>(m, "BoxStats")
      .def_readonly("count", &BoxStats::count)
      .def_readonly("min", &BoxStats::min)
      .def_readonly("max", &BoxStats::max)
      .def_readonly("lo_whisker", &BoxStats::lo_whisker)
      .def_readonly("hi_whisker", &BoxStats::hi_whisker)
      .def_readonly("q1", &BoxStats::q1)
      .def_readonly("median", &BoxStats::median)
      .def_readonly("q3", &BoxStats::q3)
      .def_readonly("mean", &BoxStats::mean)
      .def_readonly("stddev", &BoxStats::stddev)
      .def_readonly("outliers", &BoxStats::outliers);

  m.def("summarize", &summarize, py::arg("values"));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("model", &ExperimentConfig::model)
      .def_readwrite("customers", &ExperimentConfig::customers)
      .def_readwrite("facility_counts", &ExperimentConfig::facility_counts)
      .def_readwrite("instances_per_cell", &ExperimentConfig::instances_per_cell)
      .def_readwrite("runs_per_algorithm", &ExperimentConfig::runs_per_algorithm)
      .def_readwrite("master_seed", &ExperimentConfig::master_seed)
      .def_readwrite("algorithms", &ExperimentConfig::algorithms);

  py::class_<RunRow>(m, "RunRow")
      .def_readonly("model", &RunRow::model)
      .def_readonly("n", &RunRow::n)
      .def_readonly("m", &RunRow::m)
      .def_readonly("instance_seed", &RunRow::instance_seed)
      .def_readonly("instance_index", &RunRow::instance_index)
      .def_readonly("algorithm", &RunRow::algorithm)
      .def_readonly("run_index", &RunRow::run_index)
      .def_readonly("run_seed", &RunRow::run_seed)
      .def_readonly("objective", &RunRow::objective)
      .def_readonly("iterations_used", &RunRow::iterations_used)
      .def_readonly("accepted_moves", &RunRow::accepted_moves)
      .def_readonly("wall_time_ms", &RunRow::wall_time_ms);

  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::arg("jobs") = 1);

  m.def("instance_seed_for", &instance_seed_for, py::arg("master_seed"),
        py::arg("model_number"), py::arg("n"), py::arg("instance_index"));
  m.def("cell_seed_for", &cell_seed_for, py::arg("instance_seed"),
        py::arg("algorithm"));

  m.def(
      "runs_csv",
      [](const RunTable& table) {
        std::ostringstream out;
        emit_runs_csv(table, out);
        return out.str();
      },
      py::arg("table"));
  m.def(
      "summary_csv",
      [](const RunTable& table) {
        std::ostringstream out;
        emit_summary_csv(summarize_runs(table), out);
        return out.str();
      },
      py::arg("table"));
  m.def(
      "comparison_csv",
      [](const RunTable& table) {
        std::ostringstream out;
        emit_comparison_csv(compare_algorithms(table).per_instance, out);
        return out.str();
      },
      py::arg("table"));
  m.def(
      "pairs_csv",
      [](const RunTable& table) {
        std::ostringstream out;
        emit_pairs_csv(compare_algorithms(table).pairs, out);
        return out.str();
      },
      py::arg("table"));
  m.def(
      "parse_runs_csv",
      [](const std::string& text) {
        std::istringstream in(text);
        return parse_runs_csv(in);
      },
      py::arg("text"));
}
