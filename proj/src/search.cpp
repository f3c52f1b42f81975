#include "uflp/search.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>

#include "uflp/rng.hpp"

namespace uflp {

std::string to_string(Algorithm alg) {
  return alg == Algorithm::LS ? "LS" : "RLS";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "LS" || name == "ls") return Algorithm::LS;
  if (name == "RLS" || name == "rls") return Algorithm::RLS;
  throw std::invalid_argument("unknown algorithm: '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

RunRecord ls_run(const Instance& instance) {
  const auto start = Clock::now();
  const int n = instance.num_facilities;

  RunRecord record;
  record.algorithm = Algorithm::LS;

  SearchState state(instance);
  record.final_objective = state.objective();

  for (int iteration = 1; iteration <= n; ++iteration) {
    record.iterations_used = iteration;
    Cost best_delta = 0;
    int best_facility = -1;
    for (int i = 0; i < n; ++i) {
      const auto delta = state.delta_flip(i);
      if (delta && (best_facility < 0 || *delta < best_delta)) {
        best_delta = *delta;
        best_facility = i;
      }
    }
    if (best_facility < 0 || best_delta >= 0) break;  // local optimum
    state.apply_flip(best_facility);
    ++record.accepted_moves;
    record.trace.push_back(
        {static_cast<std::uint64_t>(iteration), state.objective()});
    record.final_objective = state.objective();
  }

  record.wall_time_ms = elapsed_ms(start);
  return record;
}

RunRecord rls_run(const Instance& instance, std::uint64_t seed) {
  const auto start = Clock::now();
  const int n = instance.num_facilities;
  const std::uint64_t budget =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);

  RunRecord record;
  record.algorithm = Algorithm::RLS;
  record.seed = seed;

  SearchState state(instance);
  record.final_objective = state.objective();
  Rng64 rng(seed);

  for (std::uint64_t iteration = 1; iteration <= budget; ++iteration) {
    const int facility = static_cast<int>(rng.next() % n);
    const auto delta = state.delta_flip(facility);
    if (delta && *delta <= 0) {
      state.apply_flip(facility);
      ++record.accepted_moves;
      record.trace.push_back({iteration, state.objective()});
      record.final_objective = state.objective();
    }
  }

  record.iterations_used = budget;
  record.wall_time_ms = elapsed_ms(start);
  return record;
}

std::vector<RunRecord> multi_start(const Instance& instance, Algorithm alg,
                                   std::uint64_t runs,
                                   std::uint64_t base_seed) {
  if (runs < 1) throw std::invalid_argument("multi_start: runs must be >= 1");

  Rng64 seed_stream(base_seed);
  std::vector<std::uint64_t> seeds(runs);
  for (auto& s : seeds) s = seed_stream.next();

  std::vector<RunRecord> records;
  records.reserve(runs);

  if (alg == Algorithm::LS) {
    if (runs > 1) {
      std::cerr << "multi_start: LS is deterministic; " << runs
                << " runs will produce identical records\n";
    }
    RunRecord record = ls_run(instance);
    for (std::uint64_t r = 0; r < runs; ++r) records.push_back(record);
    return records;
  }

  for (std::uint64_t r = 0; r < runs; ++r) {
    records.push_back(rls_run(instance, seeds[r]));
  }
  return records;
}

}  // namespace uflp
