#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "uflp/errors.hpp"
#include "uflp/rng.hpp"

namespace uflp {

/// Costs and objectives are exact 64-bit integers throughout; there is no
/// floating point in the core.
using Cost = std::int64_t;

/// One problem instance: opening costs per candidate facility and the
/// facility-by-customer service cost matrix.
struct Instance {
  int num_facilities = 0;
  int num_customers = 0;
  std::vector<Cost> opening_cost;  // size num_facilities, entries >= 0
  std::vector<Cost> service_cost;  // row-major [facility][customer], entries >= 1

  Cost service(int facility, int customer) const {
    return service_cost[static_cast<std::size_t>(facility) * num_customers +
                        customer];
  }

  std::span<const Cost> service_row(int facility) const {
    return {service_cost.data() +
                static_cast<std::size_t>(facility) * num_customers,
            static_cast<std::size_t>(num_customers)};
  }

  /// Throws std::invalid_argument if dimensions or value ranges are off.
  void validate() const;
};

/// Selects one of the four instance models. Model 4 draws each distance as
/// 1 + the number of successes in `trials` Bernoulli trials with success
/// probability lambda_num / (lambda_den * trials) each; the defaults give
/// 10 trials at probability 0.1.
struct ModelId {
  int number = 1;  // 1..4
  int trials = 10;
  int lambda_num = 1;
  int lambda_den = 1;

  static ModelId from_number(int number) { return ModelId{number, 10, 1, 1}; }
};

/// Generates an instance. Draw order is fixed: opening costs in ascending
/// facility order first, then the cost matrix row by row, all from a single
/// Rng64 seeded with `seed`, so a (model, n, m, seed) tuple names one
/// instance exactly.
Instance generate(const ModelId& model, int num_facilities, int num_customers,
                  std::uint64_t seed);

/// Canonical text format: optional '#' comment lines, then "n m", then one
/// line of n opening costs, then n lines of m service costs each.
void write_instance(const Instance& instance, std::ostream& out);
std::string write_instance(const Instance& instance);

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

}  // namespace uflp
