#include "uflp/eval.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace uflp {

Cost evaluate_full(const Instance& instance,
                   const std::vector<std::uint8_t>& open) {
  const int n = instance.num_facilities;
  const int m = instance.num_customers;
  if (open.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("evaluate_full: open vector size != n");
  }

  Cost total = 0;
  bool any_open = false;
  std::vector<Cost> best(m, std::numeric_limits<Cost>::max());
  for (int i = 0; i < n; ++i) {
    if (!open[i]) continue;
    any_open = true;
    total += instance.opening_cost[i];
    const auto row = instance.service_row(i);
    for (int j = 0; j < m; ++j) {
      if (row[j] < best[j]) best[j] = row[j];
    }
  }
  if (!any_open) {
    throw FeasibilityError("evaluate_full: no facility open");
  }
  for (int j = 0; j < m; ++j) total += best[j];
  return total;
}

SearchState::SearchState(const Instance& instance) : instance_(&instance) {
  instance.validate();
  const int n = instance.num_facilities;
  const int m = instance.num_customers;

  open_.assign(n, 1);
  open_count_ = n;
  assigned_.assign(m, 0);
  assigned_cost_.assign(m, std::numeric_limits<Cost>::max());
  members_.assign(n, {});
  member_slot_.assign(m, 0);

  by_customer_.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < n; ++i) {
    const auto row = instance.service_row(i);
    for (int j = 0; j < m; ++j) {
      by_customer_[static_cast<std::size_t>(j) * n + i] = row[j];
    }
  }

  // Ascending facility order with a strict compare lands each customer on
  // the lowest-index cheapest facility.
  for (int i = 0; i < n; ++i) {
    const auto row = instance.service_row(i);
    for (int j = 0; j < m; ++j) {
      if (row[j] < assigned_cost_[j]) {
        assigned_cost_[j] = row[j];
        assigned_[j] = i;
      }
    }
  }

  objective_ = 0;
  for (int i = 0; i < n; ++i) objective_ += instance.opening_cost[i];
  for (int j = 0; j < m; ++j) {
    objective_ += assigned_cost_[j];
    member_slot_[j] = static_cast<int>(members_[assigned_[j]].size());
    members_[assigned_[j]].push_back(j);
  }
}

void SearchState::check_index(int facility) const {
  if (facility < 0 || facility >= instance_->num_facilities) {
    throw std::out_of_range("facility index out of range: " +
                            std::to_string(facility));
  }
}

std::optional<Cost> SearchState::delta_flip(int facility) const {
  check_index(facility);
  const int n = instance_->num_facilities;

  if (!open_[facility]) {
    // Opening: gains are the strict improvements over current assignments.
    Cost delta = instance_->opening_cost[facility];
    const auto row = instance_->service_row(facility);
    const int m = instance_->num_customers;
    for (int j = 0; j < m; ++j) {
      const Cost diff = row[j] - assigned_cost_[j];
      if (diff < 0) delta += diff;
    }
    return delta;
  }

  if (open_count_ == 1) return std::nullopt;

  // Closing: each member moves to its cheapest remaining open facility.
  Cost delta = -instance_->opening_cost[facility];
  for (int j : members_[facility]) {
    const Cost* costs = by_customer_.data() + static_cast<std::size_t>(j) * n;
    Cost best = std::numeric_limits<Cost>::max();
    for (int i = 0; i < n; ++i) {
      if (open_[i] && i != facility && costs[i] < best) best = costs[i];
    }
    delta += best - assigned_cost_[j];
  }
  return delta;
}

void SearchState::apply_flip(int facility) {
  check_index(facility);
  const int n = instance_->num_facilities;
  const int m = instance_->num_customers;

  if (!open_[facility]) {
    open_[facility] = 1;
    ++open_count_;
    Cost delta = instance_->opening_cost[facility];
    const auto row = instance_->service_row(facility);
    for (int j = 0; j < m; ++j) {
      const Cost c = row[j];
      // Move on strict improvement, and on ties toward the lower index so
      // the assignment stays canonical.
      if (c < assigned_cost_[j] ||
          (c == assigned_cost_[j] && facility < assigned_[j])) {
        delta += c - assigned_cost_[j];
        auto& old_list = members_[assigned_[j]];
        const int slot = member_slot_[j];
        old_list[slot] = old_list.back();
        member_slot_[old_list[slot]] = slot;
        old_list.pop_back();
        assigned_[j] = facility;
        assigned_cost_[j] = c;
        member_slot_[j] = static_cast<int>(members_[facility].size());
        members_[facility].push_back(j);
      }
    }
    objective_ += delta;
    return;
  }

  if (open_count_ == 1) {
    throw FeasibilityError("apply_flip: cannot close the last open facility");
  }

  open_[facility] = 0;
  --open_count_;
  Cost delta = -instance_->opening_cost[facility];
  for (int j : members_[facility]) {
    const Cost* costs = by_customer_.data() + static_cast<std::size_t>(j) * n;
    Cost best = std::numeric_limits<Cost>::max();
    int best_i = -1;
    for (int i = 0; i < n; ++i) {
      if (open_[i] && costs[i] < best) {
        best = costs[i];
        best_i = i;
      }
    }
    delta += best - assigned_cost_[j];
    assigned_[j] = best_i;
    assigned_cost_[j] = best;
    member_slot_[j] = static_cast<int>(members_[best_i].size());
    members_[best_i].push_back(j);
  }
  members_[facility].clear();
  objective_ += delta;
}

}  // namespace uflp
