#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uflp/instance.hpp"
#include "uflp/search.hpp"
#include "uflp/stats.hpp"

namespace uflp {

/// One model's benchmark grid: for each facility count, generate
/// `instances_per_cell` instances and run every listed algorithm
/// `runs_per_algorithm` times per instance. The whole experiment is
/// reproducible from master_seed alone.
struct ExperimentConfig {
  ModelId model;
  int customers = 1000;
  std::vector<int> facility_counts;
  int instances_per_cell = 10;
  int runs_per_algorithm = 1000;
  std::uint64_t master_seed = 0;
  std::vector<Algorithm> algorithms = {Algorithm::LS, Algorithm::RLS};

  void validate() const;  // throws std::invalid_argument
};

/// One algorithm run flattened for the run table / runs.csv.
struct RunRow {
  int model = 0;
  int n = 0;
  int m = 0;
  std::uint64_t instance_seed = 0;
  int instance_index = 0;
  Algorithm algorithm = Algorithm::LS;
  int run_index = 0;
  std::uint64_t run_seed = 0;
  Cost objective = 0;
  std::uint64_t iterations_used = 0;
  std::uint64_t accepted_moves = 0;
  double wall_time_ms = 0.0;
};

using RunTable = std::vector<RunRow>;

/// Seed of instance `instance_index` in the (model, n) cell of an
/// experiment. Chained from the master seed so any instance of an
/// experiment can be regenerated in isolation.
std::uint64_t instance_seed_for(std::uint64_t master_seed, int model_number,
                                int n, int instance_index);

/// Base seed handed to multi_start for one (instance, algorithm) cell.
std::uint64_t cell_seed_for(std::uint64_t instance_seed, Algorithm alg);

/// Runs the full grid. Rows come back sorted by
/// (model, n, instance_index, algorithm, run_index). `jobs` bounds the
/// number of concurrently executing (instance, algorithm) cells.
RunTable run_experiment(const ExperimentConfig& config, int jobs = 1);

struct SummaryRow {
  int model = 0;
  int n = 0;
  int m = 0;
  int instance_index = 0;
  Algorithm algorithm = Algorithm::LS;
  BoxStats stats;
};

/// Box statistics of the run objectives, one row per
/// (model, n, instance, algorithm) group, in table order.
std::vector<SummaryRow> summarize_runs(const RunTable& table);

enum class Winner { LS, RLS, Tie };
std::string to_string(Winner winner);

struct ComparisonRow {
  int model = 0;
  int n = 0;
  int m = 0;
  int instance_index = 0;
  double ls_median = 0.0;
  double rls_median = 0.0;
  Cost ls_best = 0;
  Cost rls_best = 0;
  Winner by_median = Winner::Tie;
  Winner by_best = Winner::Tie;
};

/// Run r of LS paired with run r of RLS, plus the external reference
/// objective for the instance when one was supplied.
struct PairRow {
  int model = 0;
  int n = 0;
  int m = 0;
  int instance_index = 0;
  int run_index = 0;
  Cost ls_objective = 0;
  Cost rls_objective = 0;
  std::optional<Cost> reference;
};

struct Comparison {
  std::vector<ComparisonRow> per_instance;
  std::vector<PairRow> pairs;
};

/// Key identifying an instance of an experiment, for attaching reference
/// objectives obtained from an external solver.
struct InstanceKey {
  int model = 0;
  int n = 0;
  int instance_index = 0;
  auto operator<=>(const InstanceKey&) const = default;
};

/// Per-instance LS/RLS comparison. Throws std::invalid_argument when an
/// instance is missing either algorithm's runs.
Comparison compare_algorithms(
    const RunTable& table,
    const std::map<InstanceKey, Cost>& references = {});

// CSV emitters. Header row always present, '.' decimals, LF endings.
void emit_runs_csv(const RunTable& table, std::ostream& out);
void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void emit_comparison_csv(const std::vector<ComparisonRow>& rows,
                         std::ostream& out);
void emit_pairs_csv(const std::vector<PairRow>& rows, std::ostream& out);

/// Inverse of emit_runs_csv; round-trips a table exactly.
RunTable parse_runs_csv(std::istream& in);

/// Reads experiment configs from key=value lines: model (comma list gives
/// one config per model), customers, facilities (comma list), instances,
/// runs, seed, algorithms. Unknown keys are errors.
std::vector<ExperimentConfig> parse_config(std::istream& in);
std::vector<ExperimentConfig> parse_config(const std::string& text);

}  // namespace uflp
