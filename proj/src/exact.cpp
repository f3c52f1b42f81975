#include "uflp/exact.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "uflp/errors.hpp"
#include "uflp/eval.hpp"

namespace uflp {

namespace {

void check_oracle_guard(const Instance& instance) {
  instance.validate();
  if (instance.num_facilities > kBruteForceMaxFacilities) {
    throw std::invalid_argument(
        "brute force oracle limited to n <= " +
        std::to_string(kBruteForceMaxFacilities) + ", got n = " +
        std::to_string(instance.num_facilities));
  }
}

std::vector<std::uint8_t> mask_to_open_set(std::uint32_t mask, int n) {
  std::vector<std::uint8_t> open(n, 0);
  for (int i = 0; i < n; ++i) {
    if (mask & (std::uint32_t{1} << i)) open[i] = 1;
  }
  return open;
}

}  // namespace

ExactResult brute_force_opt(const Instance& instance) {
  check_oracle_guard(instance);
  const int n = instance.num_facilities;
  const int m = instance.num_customers;

  Cost best_objective = std::numeric_limits<Cost>::max();
  std::uint32_t best_mask = 0;
  std::uint64_t leaves = 0;

  // Depth d decides facility d. Each level keeps the per-customer service
  // minimum over the facilities opened so far, so a leaf costs O(1) and an
  // "open" edge costs O(m).
  std::vector<std::vector<Cost>> level_min(
      n + 1, std::vector<Cost>(m, std::numeric_limits<Cost>::max()));
  std::vector<Cost> level_sum(n + 1, 0);
  std::vector<Cost> level_open_cost(n + 1, 0);
  std::vector<std::uint32_t> level_mask(n + 1, 0);

  // Explicit stack of (depth, branch) frames; branch 0 visits the closed
  // child, branch 1 the open child.
  struct Frame {
    int depth;
    int branch;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0});

  while (!stack.empty()) {
    auto [depth, branch] = stack.back();
    stack.pop_back();

    if (depth == n) {
      const std::uint32_t mask = level_mask[depth];
      if (mask != 0) {
        ++leaves;
        const Cost objective = level_open_cost[depth] + level_sum[depth];
        if (objective < best_objective ||
            (objective == best_objective && mask < best_mask)) {
          best_objective = objective;
          best_mask = mask;
        }
      }
      continue;
    }

    if (branch == 0) {
      stack.push_back({depth, 1});
      // Closed child: carry the level data down unchanged.
      level_min[depth + 1] = level_min[depth];
      level_sum[depth + 1] = level_sum[depth];
      level_open_cost[depth + 1] = level_open_cost[depth];
      level_mask[depth + 1] = level_mask[depth];
      stack.push_back({depth + 1, 0});
    } else {
      // Open child: fold this facility's row into the running minima.
      const auto row = instance.service_row(depth);
      const auto& parent = level_min[depth];
      auto& child = level_min[depth + 1];
      Cost sum = 0;
      for (int j = 0; j < m; ++j) {
        const Cost c = row[j] < parent[j] ? row[j] : parent[j];
        child[j] = c;
        sum += c;
      }
      level_sum[depth + 1] = sum;
      level_open_cost[depth + 1] =
          level_open_cost[depth] + instance.opening_cost[depth];
      level_mask[depth + 1] =
          level_mask[depth] | (std::uint32_t{1} << depth);
      stack.push_back({depth + 1, 0});
    }
  }

  ExactResult result;
  result.optimal_objective = best_objective;
  result.optimal_open_set = mask_to_open_set(best_mask, n);
  result.enumerated_count = leaves;
  return result;
}

ExactResult brute_force_opt_naive(const Instance& instance) {
  check_oracle_guard(instance);
  const int n = instance.num_facilities;

  ExactResult result;
  result.optimal_objective = std::numeric_limits<Cost>::max();
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const auto open = mask_to_open_set(mask, n);
    const Cost objective = evaluate_full(instance, open);
    ++result.enumerated_count;
    if (objective < result.optimal_objective) {
      result.optimal_objective = objective;
      result.optimal_open_set = open;
    }
  }
  return result;
}

void export_lp(const Instance& instance, std::ostream& out) {
  instance.validate();
  const int n = instance.num_facilities;
  const int m = instance.num_customers;

  auto term = [&out](Cost coefficient, const std::string& variable,
                     bool first) {
    out << (first ? " " : " + ");
    if (coefficient != 1) out << coefficient << ' ';
    out << variable;
  };

  out << "Minimize\n";
  out << "obj:";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    term(instance.opening_cost[i], "y" + std::to_string(i + 1), first);
    first = false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      term(instance.service(i, j),
           "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1), first);
      first = false;
    }
  }
  out << '\n';

  out << "Subject To\n";
  for (int j = 0; j < m; ++j) {
    out << "assign_" << (j + 1) << ":";
    for (int i = 0; i < n; ++i) {
      out << (i == 0 ? " " : " + ") << 'x' << (i + 1) << '_' << (j + 1);
    }
    out << " = 1\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      out << "link_" << (i + 1) << '_' << (j + 1) << ": x" << (i + 1) << '_'
          << (j + 1) << " - y" << (i + 1) << " <= 0\n";
    }
  }

  out << "Binary\n";
  for (int i = 0; i < n; ++i) out << 'y' << (i + 1) << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      out << 'x' << (i + 1) << '_' << (j + 1) << '\n';
    }
  }
  out << "End\n";
}

std::string export_lp(const Instance& instance) {
  std::ostringstream out;
  export_lp(instance, out);
  return out.str();
}

VerifiedSolution import_open_set(const Instance& instance, std::istream& in) {
  const int n = instance.num_facilities;
  std::vector<std::uint8_t> open;
  open.reserve(n);
  std::string token;
  while (in >> token) {
    if (token == "0") {
      open.push_back(0);
    } else if (token == "1") {
      open.push_back(1);
    } else {
      throw ParseError(ParseError::Kind::Token,
                       "open-set token must be 0 or 1, got '" + token + "'");
    }
  }
  if (open.size() != static_cast<std::size_t>(n)) {
    throw ParseError(ParseError::Kind::RowLength,
                     "open-set holds " + std::to_string(open.size()) +
                         " tokens, expected " + std::to_string(n));
  }

  VerifiedSolution solution;
  solution.open_set = std::move(open);
  solution.objective = evaluate_full(instance, solution.open_set);
  return solution;
}

VerifiedSolution import_open_set(const Instance& instance,
                                 const std::string& text) {
  std::istringstream in(text);
  return import_open_set(instance, in);
}

}  // namespace uflp
