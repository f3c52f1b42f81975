#include "uflp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "uflp/errors.hpp"
#include "uflp/rng.hpp"

namespace uflp {

void ExperimentConfig::validate() const {
  if (model.number < 1 || model.number > 4) {
    throw std::invalid_argument("config: model number must be 1..4");
  }
  if (customers < 1) throw std::invalid_argument("config: customers must be >= 1");
  if (facility_counts.empty()) {
    throw std::invalid_argument("config: facility_counts must be non-empty");
  }
  for (int n : facility_counts) {
    if (n < 1) throw std::invalid_argument("config: facility counts must be >= 1");
  }
  if (instances_per_cell < 1 || runs_per_algorithm < 1) {
    throw std::invalid_argument("config: instance and run counts must be >= 1");
  }
  if (algorithms.empty()) {
    throw std::invalid_argument("config: at least one algorithm required");
  }
}

std::uint64_t instance_seed_for(std::uint64_t master_seed, int model_number,
                                int n, int instance_index) {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(model_number),
                                   static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(instance_index)});
}

std::uint64_t cell_seed_for(std::uint64_t instance_seed, Algorithm alg) {
  return derive_seed(instance_seed, {alg == Algorithm::LS ? 0ULL : 1ULL});
}

namespace {

bool row_order(const RunRow& a, const RunRow& b) {
  return std::tie(a.model, a.n, a.instance_index, a.algorithm, a.run_index) <
         std::tie(b.model, b.n, b.instance_index, b.algorithm, b.run_index);
}

}  // namespace

RunTable run_experiment(const ExperimentConfig& config, int jobs) {
  config.validate();

  struct Cell {
    int n;
    int instance_index;
    Algorithm alg;
  };
  std::vector<Cell> cells;
  for (int n : config.facility_counts) {
    for (int k = 0; k < config.instances_per_cell; ++k) {
      for (Algorithm alg : config.algorithms) {
        cells.push_back({n, k, alg});
      }
    }
  }

  std::vector<std::vector<RunRow>> per_cell(cells.size());
  auto run_cell = [&](std::size_t index) {
    const Cell& cell = cells[index];
    const std::uint64_t iseed = instance_seed_for(
        config.master_seed, config.model.number, cell.n, cell.instance_index);
    const Instance instance =
        generate(config.model, cell.n, config.customers, iseed);
    const auto records = multi_start(instance, cell.alg,
                                     config.runs_per_algorithm,
                                     cell_seed_for(iseed, cell.alg));
    auto& rows = per_cell[index];
    rows.reserve(records.size());
    for (std::size_t r = 0; r < records.size(); ++r) {
      const RunRecord& record = records[r];
      RunRow row;
      row.model = config.model.number;
      row.n = cell.n;
      row.m = config.customers;
      row.instance_seed = iseed;
      row.instance_index = cell.instance_index;
      row.algorithm = cell.alg;
      row.run_index = static_cast<int>(r);
      row.run_seed = record.seed;
      row.objective = record.final_objective;
      row.iterations_used = record.iterations_used;
      row.accepted_moves = record.accepted_moves;
      row.wall_time_ms = record.wall_time_ms;
      rows.push_back(row);
    }
  };

  if (jobs <= 1) {
    for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t c = next.fetch_add(1); c < cells.size();
           c = next.fetch_add(1)) {
        run_cell(c);
      }
    };
    const int thread_count =
        std::min<std::size_t>(jobs, cells.size());
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  RunTable table;
  for (auto& rows : per_cell) {
    table.insert(table.end(), rows.begin(), rows.end());
  }
  std::sort(table.begin(), table.end(), row_order);
  return table;
}

std::vector<SummaryRow> summarize_runs(const RunTable& table) {
  std::map<std::tuple<int, int, int, int, Algorithm>, std::vector<Cost>>
      groups;
  for (const RunRow& row : table) {
    groups[{row.model, row.n, row.m, row.instance_index, row.algorithm}]
        .push_back(row.objective);
  }
  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, objectives] : groups) {
    SummaryRow row;
    std::tie(row.model, row.n, row.m, row.instance_index, row.algorithm) = key;
    row.stats = summarize(std::move(objectives));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(Winner winner) {
  switch (winner) {
    case Winner::LS: return "LS";
    case Winner::RLS: return "RLS";
    default: return "tie";
  }
}

Comparison compare_algorithms(const RunTable& table,
                              const std::map<InstanceKey, Cost>& references) {
  struct Group {
    int m = 0;
    std::vector<std::pair<int, Cost>> ls;   // (run_index, objective)
    std::vector<std::pair<int, Cost>> rls;
  };
  std::map<InstanceKey, Group> groups;
  for (const RunRow& row : table) {
    Group& group = groups[{row.model, row.n, row.instance_index}];
    group.m = row.m;
    auto& runs = row.algorithm == Algorithm::LS ? group.ls : group.rls;
    runs.emplace_back(row.run_index, row.objective);
  }

  Comparison comparison;
  for (auto& [key, group] : groups) {
    if (group.ls.empty() || group.rls.empty()) {
      throw std::invalid_argument(
          "compare_algorithms: instance (model " + std::to_string(key.model) +
          ", n " + std::to_string(key.n) + ", index " +
          std::to_string(key.instance_index) + ") is missing " +
          (group.ls.empty() ? "LS" : "RLS") + " runs");
    }
    std::sort(group.ls.begin(), group.ls.end());
    std::sort(group.rls.begin(), group.rls.end());

    auto objectives = [](const std::vector<std::pair<int, Cost>>& runs) {
      std::vector<Cost> values;
      values.reserve(runs.size());
      for (const auto& [index, objective] : runs) values.push_back(objective);
      return values;
    };
    const auto ls_objs = objectives(group.ls);
    const auto rls_objs = objectives(group.rls);

    ComparisonRow row;
    row.model = key.model;
    row.n = key.n;
    row.m = group.m;
    row.instance_index = key.instance_index;
    row.ls_median = summarize(ls_objs).median;
    row.rls_median = summarize(rls_objs).median;
    row.ls_best = *std::min_element(ls_objs.begin(), ls_objs.end());
    row.rls_best = *std::min_element(rls_objs.begin(), rls_objs.end());
    row.by_median = row.ls_median < row.rls_median   ? Winner::LS
                    : row.rls_median < row.ls_median ? Winner::RLS
                                                     : Winner::Tie;
    row.by_best = row.ls_best < row.rls_best   ? Winner::LS
                  : row.rls_best < row.ls_best ? Winner::RLS
                                               : Winner::Tie;
    comparison.per_instance.push_back(row);

    std::optional<Cost> reference;
    if (auto it = references.find(key); it != references.end()) {
      reference = it->second;
    }
    const std::size_t paired = std::min(group.ls.size(), group.rls.size());
    for (std::size_t r = 0; r < paired; ++r) {
      PairRow pair;
      pair.model = key.model;
      pair.n = key.n;
      pair.m = group.m;
      pair.instance_index = key.instance_index;
      pair.run_index = group.ls[r].first;
      pair.ls_objective = group.ls[r].second;
      pair.rls_objective = group.rls[r].second;
      pair.reference = reference;
      comparison.pairs.push_back(pair);
    }
  }
  return comparison;
}

namespace {

// Locale-independent decimal text. Quartiles are exact halves: integral
// values print bare, otherwise one decimal. Other decimals print with up to
// six places, trailing zeros trimmed but one decimal always kept.
std::string format_quartile(double value) {
  char buffer[64];
  if (value == std::floor(value)) {
    std::snprintf(buffer, sizeof buffer, "%lld",
                  static_cast<long long>(value));
  } else {
    std::snprintf(buffer, sizeof buffer, "%.1f", value);
  }
  return buffer;
}

std::string format_decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  std::string text(buffer);
  while (text.size() > 1 && text.back() == '0' &&
         text[text.size() - 2] != '.') {
    text.pop_back();
  }
  return text;
}

std::string format_wall_time(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", value);
  return buffer;
}

constexpr const char* kRunsHeader =
    "model,n,m,instance_seed,instance_index,algorithm,run_index,run_seed,"
    "objective,iterations_used,accepted_moves,wall_time_ms";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T parse_number(const std::string& token, const char* what) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ParseError::Kind::Token,
                     std::string("bad ") + what + ": '" + token + "'");
  }
  return value;
}

}  // namespace

void emit_runs_csv(const RunTable& table, std::ostream& out) {
  out << kRunsHeader << '\n';
  for (const RunRow& row : table) {
    out << row.model << ',' << row.n << ',' << row.m << ','
        << row.instance_seed << ',' << row.instance_index << ','
        << to_string(row.algorithm) << ',' << row.run_index << ','
        << row.run_seed << ',' << row.objective << ',' << row.iterations_used
        << ',' << row.accepted_moves << ','
        << format_wall_time(row.wall_time_ms) << '\n';
  }
}

void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << "model,n,m,instance_index,algorithm,count,min,q1,median,q3,max,"
         "lo_whisker,hi_whisker,mean,stddev,n_outliers\n";
  for (const SummaryRow& row : rows) {
    const BoxStats& s = row.stats;
    out << row.model << ',' << row.n << ',' << row.m << ','
        << row.instance_index << ',' << to_string(row.algorithm) << ','
        << s.count << ',' << s.min << ',' << format_quartile(s.q1) << ','
        << format_quartile(s.median) << ',' << format_quartile(s.q3) << ','
        << s.max << ',' << s.lo_whisker << ',' << s.hi_whisker << ','
        << format_decimal(s.mean) << ',' << format_decimal(s.stddev) << ','
        << s.outliers.size() << '\n';
  }
}

void emit_comparison_csv(const std::vector<ComparisonRow>& rows,
                         std::ostream& out) {
  out << "model,n,m,instance_index,ls_median,rls_median,ls_best,rls_best,"
         "winner_median,winner_best\n";
  for (const ComparisonRow& row : rows) {
    out << row.model << ',' << row.n << ',' << row.m << ','
        << row.instance_index << ',' << format_quartile(row.ls_median) << ','
        << format_quartile(row.rls_median) << ',' << row.ls_best << ','
        << row.rls_best << ',' << to_string(row.by_median) << ','
        << to_string(row.by_best) << '\n';
  }
}

void emit_pairs_csv(const std::vector<PairRow>& rows, std::ostream& out) {
  out << "model,n,m,instance_index,run_index,ls_objective,rls_objective,"
         "reference\n";
  for (const PairRow& row : rows) {
    out << row.model << ',' << row.n << ',' << row.m << ','
        << row.instance_index << ',' << row.run_index << ','
        << row.ls_objective << ',' << row.rls_objective << ',';
    if (row.reference) out << *row.reference;
    out << '\n';
  }
}

RunTable parse_runs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError(ParseError::Kind::Header, "runs csv: empty input");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRunsHeader) {
    throw ParseError(ParseError::Kind::Header,
                     "runs csv: unexpected header '" + line + "'");
  }

  RunTable table;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 12) {
      throw ParseError(ParseError::Kind::RowLength,
                       "runs csv line " + std::to_string(line_number) +
                           ": expected 12 fields, got " +
                           std::to_string(fields.size()));
    }
    RunRow row;
    row.model = parse_number<int>(fields[0], "model");
    row.n = parse_number<int>(fields[1], "n");
    row.m = parse_number<int>(fields[2], "m");
    row.instance_seed = parse_number<std::uint64_t>(fields[3], "instance_seed");
    row.instance_index = parse_number<int>(fields[4], "instance_index");
    row.algorithm = algorithm_from_string(fields[5]);
    row.run_index = parse_number<int>(fields[6], "run_index");
    row.run_seed = parse_number<std::uint64_t>(fields[7], "run_seed");
    row.objective = parse_number<Cost>(fields[8], "objective");
    row.iterations_used =
        parse_number<std::uint64_t>(fields[9], "iterations_used");
    row.accepted_moves =
        parse_number<std::uint64_t>(fields[10], "accepted_moves");
    char* end = nullptr;
    row.wall_time_ms = std::strtod(fields[11].c_str(), &end);
    if (end != fields[11].c_str() + fields[11].size() || fields[11].empty()) {
      throw ParseError(ParseError::Kind::Token,
                       "bad wall_time_ms: '" + fields[11] + "'");
    }
    table.push_back(row);
  }
  return table;
}

namespace {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw ParseError(ParseError::Kind::Token, "empty item in list: '" + text + "'");
    }
    items.push_back(item);
  }
  if (items.empty()) {
    throw ParseError(ParseError::Kind::Token, "empty list");
  }
  return items;
}

}  // namespace

std::vector<ExperimentConfig> parse_config(std::istream& in) {
  // The defaults reproduce the standard benchmark protocol; an empty config
  // file therefore names the full grid.
  std::vector<int> models = {1, 2, 3, 4};
  ExperimentConfig base;
  base.customers = 1000;
  base.facility_counts = {50, 60, 70, 80, 90, 100, 110, 120, 130, 140};
  base.instances_per_cell = 10;
  base.runs_per_algorithm = 1000;
  base.master_seed = 0;
  base.algorithms = {Algorithm::LS, Algorithm::RLS};

  std::map<std::string, bool> seen;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(ParseError::Kind::Token,
                       "config line " + std::to_string(line_number) +
                           ": expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (seen[key]) {
      throw ParseError(ParseError::Kind::Token,
                       "config: duplicate key '" + key + "'");
    }
    seen[key] = true;

    if (key == "model") {
      models.clear();
      for (const auto& item : split_list(value)) {
        models.push_back(parse_number<int>(item, "model"));
      }
    } else if (key == "customers") {
      base.customers = parse_number<int>(value, "customers");
    } else if (key == "facilities") {
      base.facility_counts.clear();
      for (const auto& item : split_list(value)) {
        base.facility_counts.push_back(parse_number<int>(item, "facilities"));
      }
    } else if (key == "instances") {
      base.instances_per_cell = parse_number<int>(value, "instances");
    } else if (key == "runs") {
      base.runs_per_algorithm = parse_number<int>(value, "runs");
    } else if (key == "seed") {
      base.master_seed = parse_number<std::uint64_t>(value, "seed");
    } else if (key == "algorithms") {
      base.algorithms.clear();
      for (const auto& item : split_list(value)) {
        base.algorithms.push_back(algorithm_from_string(item));
      }
    } else {
      throw ParseError(ParseError::Kind::Token,
                       "config: unknown key '" + key + "'");
    }
  }

  std::vector<ExperimentConfig> configs;
  for (int model : models) {
    ExperimentConfig config = base;
    config.model = ModelId::from_number(model);
    config.validate();
    configs.push_back(std::move(config));
  }
  return configs;
}

std::vector<ExperimentConfig> parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace uflp
