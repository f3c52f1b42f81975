// Command-line front end: instance generation, heuristic solving, the exact
// baseline, LP export/import, and the experiment harness.
//
// Exit codes: 0 success, 1 usage error, 2 data/feasibility/guard error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uflp/errors.hpp"
#include "uflp/exact.hpp"
#include "uflp/experiment.hpp"
#include "uflp/instance.hpp"
#include "uflp/search.hpp"
#include "uflp/stats.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw uflp::ParseError(uflp::ParseError::Kind::Io,
                           "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw uflp::ParseError(uflp::ParseError::Kind::Io,
                           "cannot read '" + path.string() + "'");
  }
  return buffer.str();
}

// All output files are written via a temp file in the same directory plus a
// rename, so readers never observe a half-written file.
void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) {
      throw uflp::ParseError(uflp::ParseError::Kind::Io,
                             "cannot open '" + tmp.string() + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw uflp::ParseError(uflp::ParseError::Kind::Io,
                             "cannot write '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, path);
}

void write_output(const std::optional<std::string>& out_path,
                  const std::string& content) {
  if (out_path) {
    write_file_atomic(*out_path, content);
  } else {
    std::cout << content;
  }
}

struct GenMetadata {
  int model = 0;
  std::uint64_t seed = 0;
};

// Instances written by `gen` carry a leading comment naming their model and
// seed; `solve` copies those into its CSV rows when present.
std::optional<GenMetadata> read_gen_metadata(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '#') break;
    const auto model_pos = line.find("model=");
    const auto seed_pos = line.find("seed=");
    if (model_pos == std::string::npos || seed_pos == std::string::npos) {
      continue;
    }
    GenMetadata meta;
    meta.model = std::atoi(line.c_str() + model_pos + 6);
    meta.seed = std::strtoull(line.c_str() + seed_pos + 5, nullptr, 10);
    return meta;
  }
  return std::nullopt;
}

uflp::Instance load_instance(const fs::path& path,
                             std::optional<GenMetadata>* meta = nullptr) {
  const std::string text = read_file(path);
  if (meta) *meta = read_gen_metadata(text);
  return uflp::parse_instance(text);
}

int run_gen(int model, int facilities, int customers, std::uint64_t seed,
            const std::optional<std::string>& out_path) {
  const uflp::Instance instance = uflp::generate(
      uflp::ModelId::from_number(model), facilities, customers, seed);
  std::ostringstream text;
  text << "# generated by uflp gen: model=" << model << " n=" << facilities
       << " m=" << customers << " seed=" << seed << '\n';
  uflp::write_instance(instance, text);
  write_output(out_path, text.str());
  return 0;
}

int run_solve(const std::string& alg_name, const fs::path& instance_path,
              int runs, std::uint64_t seed,
              const std::optional<std::string>& out_path) {
  std::optional<GenMetadata> meta;
  const uflp::Instance instance = load_instance(instance_path, &meta);
  const uflp::Algorithm alg = uflp::algorithm_from_string(alg_name);
  const auto records = uflp::multi_start(instance, alg, runs, seed);

  uflp::RunTable table;
  table.reserve(records.size());
  for (std::size_t r = 0; r < records.size(); ++r) {
    const uflp::RunRecord& record = records[r];
    uflp::RunRow row;
    row.model = meta ? meta->model : 0;
    row.n = instance.num_facilities;
    row.m = instance.num_customers;
    row.instance_seed = meta ? meta->seed : 0;
    row.instance_index = 0;
    row.algorithm = alg;
    row.run_index = static_cast<int>(r);
    row.run_seed = record.seed;
    row.objective = record.final_objective;
    row.iterations_used = record.iterations_used;
    row.accepted_moves = record.accepted_moves;
    row.wall_time_ms = record.wall_time_ms;
    table.push_back(row);
  }

  std::ostringstream csv;
  uflp::emit_runs_csv(table, csv);
  write_output(out_path, csv.str());
  return 0;
}

int run_oracle(const fs::path& instance_path) {
  const uflp::Instance instance = load_instance(instance_path);
  const uflp::ExactResult result = uflp::brute_force_opt(instance);
  std::cout << "objective " << result.optimal_objective << '\n' << "open";
  for (std::uint8_t bit : result.optimal_open_set) {
    std::cout << ' ' << int(bit);
  }
  std::cout << '\n';
  return 0;
}

int run_export_lp(const fs::path& instance_path,
                  const std::optional<std::string>& out_path) {
  const uflp::Instance instance = load_instance(instance_path);
  write_output(out_path, uflp::export_lp(instance));
  return 0;
}

int run_import_sol(const fs::path& instance_path, const fs::path& solution_path) {
  const uflp::Instance instance = load_instance(instance_path);
  const uflp::VerifiedSolution solution =
      uflp::import_open_set(instance, read_file(solution_path));
  std::cout << "objective " << solution.objective << '\n';
  return 0;
}

int run_bench(const std::optional<std::string>& config_path, bool small,
              const fs::path& out_dir, int jobs) {
  std::vector<uflp::ExperimentConfig> configs;
  if (small) {
    configs = uflp::parse_config(
        "customers=100\nfacilities=10,15,20\ninstances=5\nruns=100\n");
  } else if (config_path) {
    configs = uflp::parse_config(read_file(*config_path));
  } else {
    configs = uflp::parse_config("");  // defaults name the full grid
  }

  uflp::RunTable table;
  for (const uflp::ExperimentConfig& config : configs) {
    std::cerr << "bench: model " << config.model.number << ", "
              << config.facility_counts.size() << " facility counts x "
              << config.instances_per_cell << " instances x "
              << config.algorithms.size() << " algorithms\n";
    uflp::RunTable part = uflp::run_experiment(config, jobs);
    table.insert(table.end(), part.begin(), part.end());
  }

  const auto summary = uflp::summarize_runs(table);
  const uflp::Comparison comparison = uflp::compare_algorithms(table);

  fs::create_directories(out_dir);
  auto emit_to = [&](const char* name, auto&& emitter) {
    std::ostringstream out;
    emitter(out);
    write_file_atomic(out_dir / name, out.str());
  };
  emit_to("runs.csv", [&](std::ostream& o) { uflp::emit_runs_csv(table, o); });
  emit_to("summary.csv",
          [&](std::ostream& o) { uflp::emit_summary_csv(summary, o); });
  emit_to("comparison.csv", [&](std::ostream& o) {
    uflp::emit_comparison_csv(comparison.per_instance, o);
  });
  emit_to("pairs.csv",
          [&](std::ostream& o) { uflp::emit_pairs_csv(comparison.pairs, o); });
  std::cerr << "bench: wrote " << table.size() << " runs to "
            << out_dir.string() << '\n';
  return 0;
}

int run_stats(const fs::path& runs_path,
              const std::optional<std::string>& out_path) {
  std::istringstream in(read_file(runs_path));
  const uflp::RunTable table = uflp::parse_runs_csv(in);
  const auto summary = uflp::summarize_runs(table);
  std::ostringstream csv;
  uflp::emit_summary_csv(summary, csv);
  write_output(out_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Facility-location heuristic toolkit"};
  app.require_subcommand(1);

  int model = 1;
  int facilities = 1;
  int customers = 1;
  int runs = 1;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string alg_name;
  std::string instance_path;
  std::string solution_path;
  std::string runs_path;
  std::string out_dir;
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  bool small = false;

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--model", model, "Instance model (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  gen->add_option("--facilities", facilities, "Number of facilities")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--customers", customers, "Number of customers")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  CLI::App* solve = app.add_subcommand("solve", "Run a heuristic on an instance");
  solve->add_option("--alg", alg_name, "Algorithm: ls or rls")
      ->required()
      ->check(CLI::IsMember({"ls", "rls"}, CLI::ignore_case));
  solve->add_option("--instance", instance_path, "Instance file")->required();
  solve->add_option("--runs", runs, "Number of runs")
      ->check(CLI::PositiveNumber);
  solve->add_option("--seed", seed, "Base seed for run seeds");
  solve->add_option("--out", out_path, "Runs CSV output (default: stdout)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
  oracle->add_option("--instance", instance_path, "Instance file")->required();

  CLI::App* export_lp =
      app.add_subcommand("export-lp", "Write the instance as an LP file");
  export_lp->add_option("--instance", instance_path, "Instance file")
      ->required();
  export_lp->add_option("--out", out_path, "LP output file (default: stdout)");

  CLI::App* import_sol = app.add_subcommand(
      "import-sol", "Verify an open-set solution file against an instance");
  import_sol->add_option("--instance", instance_path, "Instance file")
      ->required();
  import_sol->add_option("--solution", solution_path, "Solution file")
      ->required();

  CLI::App* bench =
      app.add_subcommand("bench", "Run the full experiment grid");
  bench->add_option("--config", config_path, "Experiment config file");
  bench->add_flag("--small", small, "Desk-test preset (overrides --config)");
  bench->add_option("--out-dir", out_dir, "Directory for the CSV outputs")
      ->required();
  bench->add_option("--jobs", jobs, "Concurrent cells")
      ->check(CLI::PositiveNumber);

  CLI::App* stats =
      app.add_subcommand("stats", "Summarize a runs CSV into box statistics");
  stats->add_option("--runs", runs_path, "Runs CSV file")->required();
  stats->add_option("--out", out_path, "Summary CSV output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen) return run_gen(model, facilities, customers, seed, out_path);
    if (*solve) return run_solve(alg_name, instance_path, runs, seed, out_path);
    if (*oracle) return run_oracle(instance_path);
    if (*export_lp) return run_export_lp(instance_path, out_path);
    if (*import_sol) return run_import_sol(instance_path, solution_path);
    if (*bench) return run_bench(config_path, small, out_dir, jobs);
    if (*stats) return run_stats(runs_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
