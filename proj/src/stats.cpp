#include "uflp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uflp {

namespace {

// Median of sorted[first, last) doubled to stay in integers: 2*median.
Cost doubled_median(const std::vector<Cost>& sorted, std::size_t first,
                    std::size_t last) {
  const std::size_t len = last - first;
  const std::size_t mid = first + len / 2;
  if (len % 2 == 1) return 2 * sorted[mid];
  return sorted[mid - 1] + sorted[mid];
}

}  // namespace

BoxStats summarize(std::vector<Cost> values) {
  if (values.empty()) {
    throw std::invalid_argument("summarize: empty input");
  }
  std::sort(values.begin(), values.end());
  const std::size_t count = values.size();

  BoxStats stats;
  stats.count = count;
  stats.min = values.front();
  stats.max = values.back();

  // Tukey hinges, kept exact as doubled integers until the final division.
  const std::size_t half = count / 2;
  const std::size_t lower_end = count % 2 == 1 ? half + 1 : half;
  const Cost median2 = doubled_median(values, 0, count);
  const Cost q1_2 = doubled_median(values, 0, lower_end);
  const Cost q3_2 = doubled_median(values, count - lower_end, count);
  stats.median = static_cast<double>(median2) / 2.0;
  stats.q1 = static_cast<double>(q1_2) / 2.0;
  stats.q3 = static_cast<double>(q3_2) / 2.0;

  // Fences at hinge +- 1.5 IQR, doubled and tripled to stay integral:
  // 4*lo_fence = 4*q1_2/2 - 3*(q3_2 - q1_2) etc. Compare 4*value against.
  const Cost iqr2 = q3_2 - q1_2;
  const Cost lo_fence4 = 2 * q1_2 - 3 * iqr2;
  const Cost hi_fence4 = 2 * q3_2 + 3 * iqr2;

  Cost lo_whisker = 0, hi_whisker = 0;
  bool have_whisker = false;
  for (Cost v : values) {
    const Cost v4 = 4 * v;
    if (v4 < lo_fence4 || v4 > hi_fence4) {
      stats.outliers.push_back(v);
    } else {
      if (!have_whisker) {
        lo_whisker = v;
        have_whisker = true;
      }
      hi_whisker = v;
    }
  }
  stats.lo_whisker = lo_whisker;
  stats.hi_whisker = hi_whisker;

  Cost sum = 0, sum_sq = 0;
  for (Cost v : values) {
    sum += v;
    sum_sq += v * v;
  }
  stats.mean = static_cast<double>(sum) / static_cast<double>(count);
  if (count > 1) {
    const long double num =
        static_cast<long double>(sum_sq) -
        static_cast<long double>(sum) * sum / static_cast<long double>(count);
    const long double variance =
        num > 0 ? num / static_cast<long double>(count - 1) : 0.0L;
    stats.stddev = static_cast<double>(std::sqrt(variance));
  }
  return stats;
}

}  // namespace uflp
