#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uflp/eval.hpp"
#include "uflp/instance.hpp"

namespace uflp {

enum class Algorithm { LS, RLS };

std::string to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& name);

struct TracePoint {
  std::uint64_t iteration;
  Cost objective;
};

/// Outcome of one algorithm run. Trace objectives are non-increasing and the
/// final objective equals the last trace entry, or the initial objective when
/// no move was accepted.
struct RunRecord {
  Algorithm algorithm = Algorithm::LS;
  std::uint64_t seed = 0;  // meaningful for RLS only; LS is deterministic
  Cost final_objective = 0;
  std::uint64_t iterations_used = 0;
  std::uint64_t accepted_moves = 0;
  std::vector<TracePoint> trace;
  double wall_time_ms = 0.0;
};

/// Steepest-descent local search. Starts all-open; each iteration evaluates
/// every feasible flip, applies the best strictly improving one (lowest
/// facility index on ties) and stops at a local optimum or after n
/// iterations. Deterministic: no randomness, no random tie-breaks.
RunRecord ls_run(const Instance& instance);

/// Randomised local search. Starts all-open; each of exactly n^2 iterations
/// proposes one uniformly random flip and accepts it when the objective does
/// not increase. An infeasible proposal is rejected but still consumes its
/// iteration. Deterministic given (instance, seed).
RunRecord rls_run(const Instance& instance, std::uint64_t seed);

/// Independent runs with per-run seeds chained from base_seed. LS being
/// deterministic, its run is computed once and the record is replicated, with
/// a warning to stderr when runs > 1.
std::vector<RunRecord> multi_start(const Instance& instance, Algorithm alg,
                                   std::uint64_t runs, std::uint64_t base_seed);

}  // namespace uflp
