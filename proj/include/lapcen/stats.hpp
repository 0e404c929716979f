#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace lapcen {

using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

/// Throws std::invalid_argument when lengths differ or are below 2, and
/// UndefinedError when either vector is constant.
double pearson(const VectorRef& x, const VectorRef& y);

/// Pearson correlation of average ranks (ties share the mean rank).
double spearman(const VectorRef& x, const VectorRef& y);

/// Tie-corrected Kendall tau-b, O(n log n) (Knight's merge-sort count).
double kendall_tau_b(const VectorRef& x, const VectorRef& y);

/// 1-based ranks; tied values get the average of the ranks they span.
Eigen::VectorXd average_ranks(const VectorRef& x);

/// Pair counts behind tau-b. concordant - discordant is exact.
struct KendallCounts {
  std::int64_t pairs = 0;       // n(n-1)/2
  std::int64_t ties_x = 0;      // pairs tied in x
  std::int64_t ties_y = 0;      // pairs tied in y
  std::int64_t ties_xy = 0;     // pairs tied in both
  std::int64_t difference = 0;  // concordant - discordant
};
KendallCounts kendall_counts(const VectorRef& x, const VectorRef& y);

/// Scores sorted ascending; the k-th (1-based) gets percentile k/n.
std::vector<std::pair<double, double>> percentile_curve(const VectorRef& scores);

}  // namespace lapcen
