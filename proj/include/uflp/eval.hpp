#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uflp/errors.hpp"
#include "uflp/instance.hpp"

namespace uflp {

/// Objective of an open set evaluated from scratch: sum of opening costs of
/// the open facilities plus, per customer, the cheapest open service cost.
/// Reference path for all incremental delta logic. Throws FeasibilityError
/// when no facility is open.
Cost evaluate_full(const Instance& instance,
                   const std::vector<std::uint8_t>& open);

/// A feasible solution under single-flip search: the open set, each
/// customer's assignment to its cheapest open facility (lowest index on
/// ties), the inverse member lists, and the tracked objective. The all-closed
/// state is unrepresentable; flips that would close the last open facility
/// are reported infeasible instead of applied.
class SearchState {
 public:
  /// Starts with every facility open, the search's initial state. The state
  /// keeps a reference to the instance, which must outlive it; temporaries
  /// are rejected at compile time.
  explicit SearchState(const Instance& instance);
  explicit SearchState(Instance&&) = delete;

  const Instance& instance() const { return *instance_; }
  int open_count() const { return open_count_; }
  bool is_open(int facility) const { return open_[facility] != 0; }
  std::vector<std::uint8_t> open_set() const { return open_; }
  Cost objective() const { return objective_; }
  int assignment(int customer) const { return assigned_[customer]; }
  const std::vector<int>& members(int facility) const {
    return members_[facility];
  }

  /// Objective change of toggling `facility`, without mutating the state.
  /// Empty when the flip would close the last open facility.
  std::optional<Cost> delta_flip(int facility) const;

  /// Toggles `facility` and repairs assignments, member lists and the
  /// tracked objective. Throws FeasibilityError on an infeasible flip.
  void apply_flip(int facility);

 private:
  void check_index(int facility) const;

  const Instance* instance_;
  std::vector<std::uint8_t> open_;
  int open_count_;
  std::vector<int> assigned_;            // per customer: open facility index
  std::vector<Cost> assigned_cost_;      // per customer: cost at assigned_
  std::vector<std::vector<int>> members_;  // inverse of assigned_
  std::vector<int> member_slot_;         // customer's position in its list
  std::vector<Cost> by_customer_;        // transposed costs [customer][facility]
  Cost objective_;
};

inline SearchState init_all_open(const Instance& instance) {
  return SearchState(instance);
}

}  // namespace uflp
