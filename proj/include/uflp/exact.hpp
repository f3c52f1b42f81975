#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uflp/instance.hpp"

namespace uflp {

/// Number of facilities the exhaustive oracle will accept (2^n - 1 subsets).
inline constexpr int kBruteForceMaxFacilities = 25;

struct ExactResult {
  Cost optimal_objective = 0;
  std::vector<std::uint8_t> optimal_open_set;
  std::uint64_t enumerated_count = 0;
};

/// Exhaustive optimum over all non-empty open sets, walking the subset tree
/// with incrementally maintained per-customer minima. Ties prefer the open
/// set whose lowest-index facilities come first (smallest set encoded as an
/// integer with facility 0 in the lowest bit). Throws std::invalid_argument
/// when n exceeds kBruteForceMaxFacilities.
ExactResult brute_force_opt(const Instance& instance);

/// Same contract, but enumerating bit masks in ascending order and scoring
/// each from scratch with evaluate_full. Slower; kept as the independent
/// route for cross-checking brute_force_opt.
ExactResult brute_force_opt_naive(const Instance& instance);

/// Writes the instance as a CPLEX-LP-format integer program: variables
/// y1..yn and x1_1..xn_m, one assignment constraint per customer, one
/// linking constraint per (facility, customer), all variables binary.
/// Byte-deterministic for a given instance.
void export_lp(const Instance& instance, std::ostream& out);
std::string export_lp(const Instance& instance);

struct VerifiedSolution {
  std::vector<std::uint8_t> open_set;
  Cost objective = 0;
};

/// Reads an open set as n whitespace-separated 0/1 tokens (the format
/// external MILP solutions come back in) and returns it with its verified
/// objective. Rejects the all-zero vector.
VerifiedSolution import_open_set(const Instance& instance, std::istream& in);
VerifiedSolution import_open_set(const Instance& instance,
                                 const std::string& text);

}  // namespace uflp
