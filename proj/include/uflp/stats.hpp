#pragma once

#include <vector>

#include "uflp/instance.hpp"

namespace uflp {

/// Five-number summary with Tukey whiskers for a set of run objectives.
/// Quartiles are Tukey hinges: medians of the lower/upper halves of the
/// sorted data, each half including the middle element at odd counts.
/// Whiskers are the most extreme data points within 1.5 IQR of the hinges;
/// points beyond are outliers. Invariant:
///   min <= lo_whisker <= q1 <= median <= q3 <= hi_whisker <= max.
struct BoxStats {
  std::size_t count = 0;
  Cost min = 0;
  Cost max = 0;
  Cost lo_whisker = 0;
  Cost hi_whisker = 0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double mean = 0.0;
  double stddev = 0.0;              // sample standard deviation, 0 for count 1
  std::vector<Cost> outliers;      // ascending
};

/// Summary of `values`; order does not matter. Throws std::invalid_argument
/// on empty input.
BoxStats summarize(std::vector<Cost> values);

}  // namespace uflp
