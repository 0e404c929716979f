#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "lapcen/scores.hpp"
#include "lapcen/spectrum.hpp"

namespace lapcen {

namespace detail {

/// Unmodified cumulative sum 1/n + sum_{k=1..m} q_k^2. The endpoints are the
/// exact identities (constant share at m = 0, rows of an orthogonal matrix at
/// m = n - 1).
template <typename Scalar>
Vector<Scalar> lec_prefix(const Spectrum<Scalar>& s, Index m) {
  const Index n = s.size();
  if (m == 0) return Vector<Scalar>::Constant(n, Scalar(1) / Scalar(n));
  if (m == n - 1) return Vector<Scalar>::Ones(n);
  return Vector<Scalar>::Constant(n, Scalar(1) / Scalar(n)) +
         s.eigenvectors.leftCols(m).array().square().rowwise().sum().matrix();
}

/// sum_{k in g} q_k^2, invariant under any orthonormal change of basis inside g.
template <typename Scalar>
Vector<Scalar> group_mass(const Spectrum<Scalar>& s, const EigenGroup& g) {
  return s.eigenvectors.middleCols(g.first - 1, g.size()).array().square().rowwise().sum().matrix();
}

}  // namespace detail

/// Laplacian eigenvector centrality of order r (0 <= r <= n-1).
///
/// score_i = 1/n + sum_{k=1..r} q_k(i)^2. When r stops strictly inside a
/// block of equal eigenvalues [lo, hi], the block's total mass is shared in
/// proportion (r - lo + 1) / (hi - lo + 1), which makes the result independent
/// of the basis chosen inside the degenerate eigenspace.
template <typename Scalar>
ScoreVector<Scalar> lec(const Spectrum<Scalar>& s, Index r) {
  const Index n = s.size();
  if (r < 0 || r > n - 1) throw std::out_of_range("LEC order must lie in 0..n-1");

  ScoreVector<Scalar> out;
  out.measure = "lec";
  out.with("order", r);
  if (r == 0 || s.aligned(r)) {
    out.scores = detail::lec_prefix(s, r);
    return out;
  }
  const EigenGroup& g = s.group_of(r);
  const Vector<Scalar> below = detail::lec_prefix(s, g.first - 1);
  const Scalar share = Scalar(r - (g.first - 1)) / Scalar(g.last - (g.first - 1));
  out.scores = below + share * detail::group_mass(s, g);
  out.with("modified", "true");
  return out;
}

/// Order used by the s%-proportional rule: ceil(pct/100 * n), capped at n-1.
inline Index proportional_order(double pct, Index n) {
  if (!(pct > 0.0 && pct <= 100.0)) throw std::invalid_argument("percentage must lie in (0, 100]");
  const double exact = pct * double(n) / 100.0;
  // Guard against representation noise pushing an integral product up a step.
  const auto r = static_cast<Index>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  return std::min(std::max<Index>(r, 0), n - 1);
}

template <typename Scalar>
ScoreVector<Scalar> plec_proportional(const Spectrum<Scalar>& s, double pct) {
  const Index r = proportional_order(pct, s.size());
  auto out = lec(s, r);
  out.measure = "plec";
  out.params.insert(out.params.begin(), {"pct", format_number(pct)});
  return out;
}

/// Smallest k whose cumulative eigenvalue fraction reaches `threshold`.
template <typename Scalar>
Index cumulative_order(const Spectrum<Scalar>& s, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw std::invalid_argument("threshold must lie in (0, 1)");
  const Index n = s.size();
  for (Index k = 0; k < n - 1; ++k) {
    if (double(cumulative_fraction(s, k)) + 1e-12 >= threshold) return k;
  }
  return n - 1;
}

template <typename Scalar>
std::pair<Index, ScoreVector<Scalar>> plec_cumulative(const Spectrum<Scalar>& s, double threshold) {
  const Index r = cumulative_order(s, threshold);
  auto out = lec(s, r);
  out.measure = "plec_cum";
  out.params.insert(out.params.begin(), {"threshold", format_number(threshold)});
  out.with("fraction", double(cumulative_fraction(s, r)));
  return {r, std::move(out)};
}

/// Generalized LEC: w_0/n + sum_k w_k q_k^2, where each degenerate block
/// contributes its total mass times the mean of its weights.
template <typename Scalar>
ScoreVector<Scalar> glec(const Spectrum<Scalar>& s, const WeightVector<Scalar>& w) {
  const Index n = s.size();
  if (w.size() != n) throw std::invalid_argument("weight vector length must equal n");
  ScoreVector<Scalar> out;
  out.measure = "glec";
  out.scores = Vector<Scalar>::Constant(n, w(0) / Scalar(n));
  for (const auto& g : s.groups) {
    const Scalar mean_weight = w.values().segment(g.first, g.size()).mean();
    if (mean_weight != Scalar(0)) out.scores += mean_weight * detail::group_mass(s, g);
  }
  return out;
}

/// w_0 = 1, w_k = lambda_k / n. Nonincreasing because lambda_1 <= n.
template <typename Scalar>
WeightVector<Scalar> degree_weights(const Spectrum<Scalar>& s) {
  const Index n = s.size();
  Vector<Scalar> w(n);
  w(0) = Scalar(1);
  for (Index k = 1; k < n; ++k) w(k) = s.lambda(k) / Scalar(n);
  return WeightVector<Scalar>(std::move(w));
}

/// First r+1 weights 1, the rest 0.
template <typename Scalar>
WeightVector<Scalar> order_weights(Index n, Index r) {
  Vector<Scalar> w = Vector<Scalar>::Zero(n);
  w.head(r + 1).setOnes();
  return WeightVector<Scalar>(std::move(w));
}

/// (1 + d_i) / n straight from the degrees.
template <typename Scalar = double>
ScoreVector<Scalar> glec_degree_variant(const Graph& g) {
  ScoreVector<Scalar> out;
  out.measure = "glec_degree";
  const Scalar n = Scalar(g.size());
  out.scores = (degrees(g).template cast<Scalar>().array() + Scalar(1)).matrix() / n;
  return out;
}

// -- order selection --------------------------------------------------------

struct OrderPolicy {
  enum class Kind { largest_gap, cumulative, proportional };
  Kind kind = Kind::largest_gap;
  double value = 0.0;  // threshold in (0,1) or percentage in (0,100]

  /// "largest_gap", "cumulative:0.5", "proportional:20".
  static OrderPolicy parse(std::string_view text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    OrderPolicy p;
    if (name == "largest_gap" || name == "gap") {
      if (colon != std::string_view::npos) throw std::invalid_argument("largest_gap takes no argument");
      return p;
    }
    if (colon == std::string_view::npos) throw std::invalid_argument("policy '" + std::string(name) + "' needs a value");
    p.value = std::stod(std::string(text.substr(colon + 1)));
    if (name == "cumulative") {
      p.kind = Kind::cumulative;
    } else if (name == "proportional") {
      p.kind = Kind::proportional;
    } else {
      throw std::invalid_argument("unknown order policy '" + std::string(name) + "'");
    }
    return p;
  }

  std::string str() const {
    switch (kind) {
      case Kind::largest_gap: return "largest_gap";
      case Kind::cumulative: return "cumulative:" + format_number(value);
      case Kind::proportional: return "proportional:" + format_number(value);
    }
    return {};
  }
};

/// Chosen order plus the quantity that justified it.
struct OrderChoice {
  Index order = 0;
  std::string policy;
  double gap = 0.0;       // lambda_k - lambda_{k+1} at the chosen k
  double fraction = 0.0;  // cumulative eigenvalue fraction at the chosen k
};

template <typename Scalar>
OrderChoice suggest_order(const Spectrum<Scalar>& s, const OrderPolicy& policy) {
  const Index n = s.size();
  OrderChoice c;
  c.policy = policy.str();
  switch (policy.kind) {
    case OrderPolicy::Kind::largest_gap: {
      // k ranges over 1..n-2; smallest k wins ties.
      c.order = n - 1;
      if (n >= 3) {
        const Vector<Scalar> gaps = spectral_gap_profile(s);
        const double tie = double(s.group_tol) * std::max(1.0, double(s.lambda(1)));
        c.order = 1;
        for (Index k = 2; k <= n - 2; ++k)
          if (double(gaps(k - 1)) > double(gaps(c.order - 1)) + tie) c.order = k;
      }
      break;
    }
    case OrderPolicy::Kind::cumulative:
      c.order = cumulative_order(s, policy.value);
      break;
    case OrderPolicy::Kind::proportional:
      c.order = proportional_order(policy.value, n);
      break;
  }
  c.gap = c.order >= 1 ? double(s.lambda(c.order) - s.lambda(c.order + 1)) : 0.0;
  c.fraction = double(cumulative_fraction(s, c.order));
  return c;
}

}  // namespace lapcen
