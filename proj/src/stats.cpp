#include "lapcen/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lapcen/error.hpp"

namespace lapcen {

namespace {

void check_pair(const VectorRef& x, const VectorRef& y) {
  if (x.size() != y.size()) throw std::invalid_argument("correlation inputs differ in length");
  if (x.size() < 2) throw std::invalid_argument("correlation needs at least two observations");
}

std::int64_t tied_pairs(std::int64_t run) { return run * (run - 1) / 2; }

// Sorts v[lo, hi) ascending, returning the number of inversions.
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      buf[k++] = v[j++];
    } else {
      buf[k++] = v[i++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

double pearson(const VectorRef& x, const VectorRef& y) {
  check_pair(x, y);
  const Eigen::VectorXd dx = x.array() - x.mean();
  const Eigen::VectorXd dy = y.array() - y.mean();
  const double sxx = dx.squaredNorm();
  const double syy = dy.squaredNorm();
  if (sxx == 0.0 || syy == 0.0) throw UndefinedError("correlation of a constant vector");
  return std::clamp(dx.dot(dy) / std::sqrt(sxx * syy), -1.0, 1.0);
}

Eigen::VectorXd average_ranks(const VectorRef& x) {
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x(static_cast<Eigen::Index>(a)) < x(static_cast<Eigen::Index>(b));
  });
  Eigen::VectorXd ranks(x.size());
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && x(static_cast<Eigen::Index>(order[end])) == x(static_cast<Eigen::Index>(order[start]))) ++end;
    const double mean_rank = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) ranks(static_cast<Eigen::Index>(order[k])) = mean_rank;
    start = end;
  }
  return ranks;
}

double spearman(const VectorRef& x, const VectorRef& y) {
  check_pair(x, y);
  return pearson(average_ranks(x), average_ranks(y));
}

KendallCounts kendall_counts(const VectorRef& x, const VectorRef& y) {
  check_pair(x, y);
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ia = static_cast<Eigen::Index>(a), ib = static_cast<Eigen::Index>(b);
    return x(ia) < x(ib) || (x(ia) == x(ib) && y(ia) < y(ib));
  });

  KendallCounts c;
  c.pairs = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  std::vector<double> ys(n);
  for (std::size_t k = 0; k < n; ++k) ys[k] = y(static_cast<Eigen::Index>(order[k]));

  std::int64_t run_x = 1, run_xy = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool same_x = k < n && x(static_cast<Eigen::Index>(order[k])) == x(static_cast<Eigen::Index>(order[k - 1]));
    const bool same_xy = same_x && ys[k] == ys[k - 1];
    if (same_x) {
      ++run_x;
    } else {
      c.ties_x += tied_pairs(run_x);
      run_x = 1;
    }
    if (same_xy) {
      ++run_xy;
    } else {
      c.ties_xy += tied_pairs(run_xy);
      run_xy = 1;
    }
  }

  std::vector<double> buf(n);
  const std::int64_t swaps = merge_count(ys, buf, 0, n);

  std::int64_t run_y = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k < n && ys[k] == ys[k - 1]) {
      ++run_y;
    } else {
      c.ties_y += tied_pairs(run_y);
      run_y = 1;
    }
  }
  c.difference = c.pairs - c.ties_x - c.ties_y + c.ties_xy - 2 * swaps;
  return c;
}

double kendall_tau_b(const VectorRef& x, const VectorRef& y) {
  const KendallCounts c = kendall_counts(x, y);
  const std::int64_t ax = c.pairs - c.ties_x;
  const std::int64_t ay = c.pairs - c.ties_y;
  if (ax == 0 || ay == 0) throw UndefinedError("Kendall tau-b of a constant vector");
  return static_cast<double>(c.difference) / std::sqrt(static_cast<double>(ax) * static_cast<double>(ay));
}

std::vector<std::pair<double, double>> percentile_curve(const VectorRef& scores) {
  std::vector<double> sorted(scores.data(), scores.data() + scores.size());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> curve;
  curve.reserve(sorted.size());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) curve.emplace_back(static_cast<double>(k + 1) / n, sorted[k]);
  return curve;
}

}  // namespace lapcen
