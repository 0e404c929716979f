#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>

#include "lapcen/error.hpp"
#include "lapcen/lec.hpp"

namespace lapcen {

/// Linear-quadratic coordination game on a graph. Agent i best-responds with
/// a_i = (theta_i + beta sum_j g_ij a_j) / (1 + beta d_i); the unique
/// equilibrium solves (I + beta L) a = theta.
template <typename Scalar = double>
struct EconScenario {
  Scalar beta = Scalar(0);
  Vector<Scalar> theta;
  Scalar beta_tilde = Scalar(0);
  std::vector<Index> targets;
};

namespace detail {

inline void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be a finite value >= 0");
}

template <typename Scalar>
Eigen::LLT<Matrix<Scalar>> factor_response(const Graph& g, Scalar beta) {
  check_beta(double(beta));
  const Index n = g.size();
  Eigen::LLT<Matrix<Scalar>> llt(Matrix<Scalar>::Identity(n, n) + beta * laplacian<Scalar>(g));
  if (llt.info() != Eigen::Success) throw SingularSystemError("I + beta L is not positive definite");
  return llt;
}

}  // namespace detail

template <typename Scalar = double>
Vector<Scalar> equilibrium(const Graph& g, Scalar beta, const Vector<Scalar>& theta) {
  if (theta.size() != g.size()) throw std::invalid_argument("theta must have one entry per node");
  return detail::factor_response<Scalar>(g, beta).solve(theta);
}

/// max_i |a_i - BR_i(a, theta)|.
template <typename Scalar = double>
Scalar best_response_check(const Graph& g, Scalar beta, const Vector<Scalar>& a, const Vector<Scalar>& theta) {
  detail::check_beta(double(beta));
  if (a.size() != g.size() || theta.size() != g.size()) throw std::invalid_argument("vector length must equal n");
  Scalar worst = Scalar(0);
  for (Index i = 0; i < g.size(); ++i) {
    Scalar peer = Scalar(0);
    for (Index j : g.neighbors(i)) peer += a(j);
    const Scalar br = (theta(i) + beta * peer) / (Scalar(1) + beta * Scalar(g.degree(i)));
    worst = std::max(worst, std::abs(a(i) - br));
  }
  return worst;
}

template <typename Scalar = double>
struct Shock {
  Vector<Scalar> direction;
  Scalar value;  // a'a of the equilibrium response to the unit shock
};

/// The unit shock with the smallest equilibrium response: q_1, attenuated to
/// a'a = 1 / (1 + beta lambda_1)^2.
template <typename Scalar>
Shock<Scalar> min_deviation_shock(const Spectrum<Scalar>& s, Scalar beta) {
  detail::check_beta(double(beta));
  if (s.size() == 1) return {s.q(0), Scalar(1)};
  const Scalar f = Scalar(1) / (Scalar(1) + beta * s.lambda(1));
  return {s.q(1), f * f};
}

/// Equilibrium norm of the response to a unit shock along q_k.
template <typename Scalar>
Scalar attenuation(const Spectrum<Scalar>& s, Scalar beta, Index k) {
  return Scalar(1) / (Scalar(1) + beta * s.lambda(k));
}

struct Disclosure {
  std::vector<Index> statistics;  // disclosed m_k, ascending; 0 is the constant statistic
  Index order = 0;                // number of disclosed non-constant statistics
  bool empty() const { return statistics.empty(); }
};

/// Statistic m_k = q_k' theta is disclosed when 1/(2n) + (beta/n) lambda_k >=
/// beta_tilde. Degenerate blocks are decided on their mean eigenvalue. The
/// constant statistic m_0 goes out with any non-empty disclosure.
template <typename Scalar>
Disclosure disclosure_set(const Spectrum<Scalar>& s, Scalar beta, Scalar beta_tilde) {
  detail::check_beta(double(beta));
  const Index n = s.size();
  const Scalar base = Scalar(1) / Scalar(2 * n);
  auto passes = [&](Scalar lambda) { return base + beta / Scalar(n) * lambda >= beta_tilde; };
  Disclosure d;
  for (const auto& g : s.groups) {
    if (!passes(s.group_lambda(g))) continue;
    for (Index k = g.first; k <= g.last; ++k) d.statistics.push_back(k);
    d.order += g.size();
  }
  if (d.order > 0 || passes(Scalar(0))) d.statistics.insert(d.statistics.begin(), 0);
  return d;
}

/// diag(Q_r (Q_r' Q_r)^{-1} Q_r') for Q_r = [q_0, q_1, ..., q_r], the
/// variability of the public posterior mean. An order inside a degenerate
/// block is extended to the block's end (the projection is only defined
/// there); params record requested and effective order.
template <typename Scalar>
ScoreVector<Scalar> informativeness_diag(const Spectrum<Scalar>& s, Index r) {
  const Index n = s.size();
  if (r < 0 || r > n - 1) throw std::out_of_range("order must lie in 0..n-1");
  const Index effective = r == 0 ? 0 : s.group_of(r).last;
  Matrix<Scalar> basis(n, effective + 1);
  basis.col(0) = s.q(0);
  if (effective > 0) basis.rightCols(effective) = s.eigenvectors.leftCols(effective);
  const Matrix<Scalar> gram = basis.transpose() * basis;
  const Matrix<Scalar> weighted = basis * gram.ldlt().solve(Matrix<Scalar>::Identity(effective + 1, effective + 1));
  ScoreVector<Scalar> out;
  out.measure = "informativeness";
  out.with("order", effective);
  if (effective != r) out.with("requested_order", r);
  out.scores = weighted.cwiseProduct(basis).rowwise().sum();
  return out;
}

/// phi(i) = sum_{j=1..n-1} (1 - omega_j) q_j(i)^2 with omega_j =
/// (1 + beta lambda_j)^{-2}: the social-loss reduction from neutralizing a
/// uniform shock at agent i. It is the gLEC with w_0 = 0, w_j = 1 - omega_j.
template <typename Scalar>
ScoreVector<Scalar> targeting_scores(const Spectrum<Scalar>& s, Scalar beta) {
  detail::check_beta(double(beta));
  ScoreVector<Scalar> out;
  out.measure = "phi";
  out.with("beta", double(beta));
  out.scores = Vector<Scalar>::Zero(s.size());
  for (const auto& g : s.groups) {
    const Scalar f = Scalar(1) / (Scalar(1) + beta * s.group_lambda(g));
    const Scalar weight = Scalar(1) - f * f;
    if (weight != Scalar(0)) out.scores += weight * detail::group_mass(s, g);
  }
  return out;
}

/// Same phi through the generic gLEC path.
template <typename Scalar>
WeightVector<Scalar> targeting_weights(const Spectrum<Scalar>& s, Scalar beta) {
  Vector<Scalar> w(s.size());
  w(0) = Scalar(0);
  for (Index k = 1; k < s.size(); ++k) {
    const Scalar f = Scalar(1) / (Scalar(1) + beta * s.lambda(k));
    w(k) = Scalar(1) - f * f;
  }
  // 1 - omega_j increases with lambda_j, hence decreases along the descending order.
  return WeightVector<Scalar>::constant_free(std::move(w));
}

/// Social loss a'a after neutralizing agent i, direct route: solve
/// (I + beta L) a = 1 - e_i.
template <typename Scalar = double>
Scalar social_loss_direct(const Graph& g, Scalar beta, Index i) {
  if (i < 0 || i >= g.size()) throw std::out_of_range("target outside the node range");
  Vector<Scalar> theta = Vector<Scalar>::Ones(g.size());
  theta(i) = Scalar(0);
  return equilibrium<Scalar>(g, beta, theta).squaredNorm();
}

/// social_loss_direct for every node, reusing one factorization.
template <typename Scalar = double>
Vector<Scalar> social_losses_direct(const Graph& g, Scalar beta) {
  const auto llt = detail::factor_response<Scalar>(g, beta);
  Vector<Scalar> out(g.size());
  Vector<Scalar> theta = Vector<Scalar>::Ones(g.size());
  for (Index i = 0; i < g.size(); ++i) {
    theta(i) = Scalar(0);
    out(i) = llt.solve(theta).squaredNorm();
    theta(i) = Scalar(1);
  }
  return out;
}

/// Spectral route: n - 1 - phi(i).
template <typename Scalar>
Scalar social_loss_spectral(const Spectrum<Scalar>& s, Scalar beta, Index i) {
  if (i < 0 || i >= s.size()) throw std::out_of_range("target outside the node range");
  return Scalar(s.size() - 1) - targeting_scores(s, beta).scores(i);
}

template <typename Scalar = double>
struct SocialLoss {
  Scalar spectral;
  Scalar direct;
};

template <typename Scalar>
SocialLoss<Scalar> social_loss_after_target(const Graph& g, const Spectrum<Scalar>& s, Scalar beta, Index i) {
  return {social_loss_spectral(s, beta, i), social_loss_direct<Scalar>(g, beta, i)};
}

/// argmax_{i in targets} phi(i); ties (within 1e-12 relative) go to the
/// smallest node index. Throws std::invalid_argument on an empty target set.
template <typename Scalar>
Index optimal_target(const Spectrum<Scalar>& s, Scalar beta, const std::vector<Index>& targets) {
  if (targets.empty()) throw std::invalid_argument("target set is empty");
  const Vector<Scalar> phi = targeting_scores(s, beta).scores;
  Scalar best = -1;
  for (Index i : targets) {
    if (i < 0 || i >= s.size()) throw std::out_of_range("target outside the node range");
    best = std::max(best, phi(i));
  }
  const Scalar slack = Scalar(1e-12) * std::max(Scalar(1), best);
  Index pick = -1;
  for (Index i : targets)
    if (phi(i) >= best - slack && (pick < 0 || i < pick)) pick = i;
  return pick;
}

/// Loss without intervention (theta = 1): always n.
template <typename Scalar = double>
Scalar no_intervention_loss(const Graph& g, Scalar beta) {
  return equilibrium<Scalar>(g, beta, Vector<Scalar>::Ones(g.size())).squaredNorm();
}

/// Loss when every state is lowered by 1/n: n (1 - 1/n)^2.
template <typename Scalar = double>
Scalar uniform_intervention_loss(const Graph& g, Scalar beta) {
  const Scalar n = Scalar(g.size());
  return equilibrium<Scalar>(g, beta, Vector<Scalar>::Constant(g.size(), Scalar(1) - Scalar(1) / n)).squaredNorm();
}

}  // namespace lapcen
