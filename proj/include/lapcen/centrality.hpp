#pragma once

#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "lapcen/error.hpp"
#include "lapcen/scores.hpp"

namespace lapcen {

/// Largest adjacency eigenvalue mu (0 for an edgeless graph).
template <typename Scalar = double>
Scalar spectral_radius(const Graph& g) {
  if (g.edge_count() == 0) return Scalar(0);
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(adjacency<Scalar>(g), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DecompositionError("adjacency eigensolver did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

template <typename Scalar = double>
ScoreVector<Scalar> degree_centrality(const Graph& g) {
  ScoreVector<Scalar> out;
  out.measure = "degree";
  out.scores = degrees(g).template cast<Scalar>();
  return out;
}

enum class EigNorm { unit, mean_one };

inline EigNorm parse_eig_norm(std::string_view s) {
  if (s == "unit") return EigNorm::unit;
  if (s == "mean_one" || s == "mean-one") return EigNorm::mean_one;
  throw std::invalid_argument("unknown normalization '" + std::string(s) + "'");
}

/// Principal adjacency eigenvector, oriented nonnegative. Isolated nodes are
/// kept and score 0. Throws UndefinedError on a graph without edges.
template <typename Scalar = double>
ScoreVector<Scalar> eigenvector_centrality(const Graph& g, EigNorm norm = EigNorm::unit) {
  if (g.size() == 0 || g.edge_count() == 0) throw UndefinedError("eigenvector centrality needs at least one edge");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(adjacency<Scalar>(g));
  if (es.info() != Eigen::Success) throw DecompositionError("adjacency eigensolver did not converge");
  Vector<Scalar> v = es.eigenvectors().col(g.size() - 1);
  if (v.sum() < Scalar(0)) v = -v;
  // Perron vector of the dominant component: entries are >= 0 up to noise.
  const Scalar noise = Scalar(64) * Eigen::NumTraits<Scalar>::epsilon();
  for (Index i = 0; i < v.size(); ++i)
    v(i) = g.degree(i) == 0 || std::abs(v(i)) <= noise ? Scalar(0) : std::abs(v(i));

  ScoreVector<Scalar> out;
  out.measure = "eigenvector";
  if (norm == EigNorm::unit) {
    out.scores = v / v.norm();
    out.with("normalize", "unit");
  } else {
    out.scores = v * (Scalar(g.size()) / v.sum());
    out.with("normalize", "mean_one");
  }
  return out;
}

namespace detail {

template <typename Scalar>
Vector<Scalar> solve_resolvent(const Matrix<Scalar>& a, Scalar alpha, const Vector<Scalar>& rhs) {
  const Index n = a.rows();
  const Matrix<Scalar> m = Matrix<Scalar>::Identity(n, n) - alpha * a;
  Eigen::LLT<Matrix<Scalar>> llt(m);
  if (llt.info() != Eigen::Success) throw SingularSystemError("I - alpha A is not positive definite");
  return llt.solve(rhs);
}

inline void check_decay(double decay) {
  if (!(decay >= 0.0 && decay < 1.0)) throw std::invalid_argument("decay must lie in [0, 1)");
}

}  // namespace detail

/// x = (I - alpha A)^{-1} 1 with alpha = decay / mu.
template <typename Scalar = double>
ScoreVector<Scalar> katz_bonacich(const Graph& g, double decay = 0.8) {
  detail::check_decay(decay);
  const Scalar mu = spectral_radius<Scalar>(g);
  const Scalar alpha = mu > Scalar(0) ? Scalar(decay) / mu : Scalar(0);
  ScoreVector<Scalar> out;
  out.measure = "katz";
  out.with("decay", decay).with("alpha", double(alpha));
  out.scores = detail::solve_resolvent<Scalar>(adjacency<Scalar>(g), alpha, Vector<Scalar>::Ones(g.size()));
  return out;
}

/// Beta centrality x = (I - beta A)^{-1} A 1 with beta = decay / mu, rescaled
/// so that sum x_i^2 = n. An edgeless graph yields zeros with degenerate=true.
template <typename Scalar = double>
ScoreVector<Scalar> bonacich_power(const Graph& g, double decay = 0.8) {
  detail::check_decay(decay);
  const Scalar mu = spectral_radius<Scalar>(g);
  const Scalar beta = mu > Scalar(0) ? Scalar(decay) / mu : Scalar(0);
  ScoreVector<Scalar> out;
  out.measure = "bonacich";
  out.with("decay", decay).with("beta", double(beta));
  const Matrix<Scalar> a = adjacency<Scalar>(g);
  Vector<Scalar> x = detail::solve_resolvent<Scalar>(a, beta, a * Vector<Scalar>::Ones(g.size()));
  const Scalar sq = x.squaredNorm();
  if (sq == Scalar(0)) {
    out.with("degenerate", "true");
    out.scores = Vector<Scalar>::Zero(g.size());
    return out;
  }
  out.scores = x * std::sqrt(Scalar(g.size()) / sq);
  return out;
}

/// x = sum_{t=1..T} (q A)^t 1. A negative pass_prob selects 0.8 / mu.
template <typename Scalar = double>
ScoreVector<Scalar> diffusion_centrality(const Graph& g, Index iterations, double pass_prob = -1.0) {
  if (iterations < 1) throw std::invalid_argument("diffusion needs T >= 1");
  Scalar q = Scalar(pass_prob);
  if (pass_prob < 0.0) {
    const Scalar mu = spectral_radius<Scalar>(g);
    q = mu > Scalar(0) ? Scalar(0.8) / mu : Scalar(0);
  }
  const Matrix<Scalar> qa = q * adjacency<Scalar>(g);
  Vector<Scalar> walk = Vector<Scalar>::Ones(g.size());
  Vector<Scalar> x = Vector<Scalar>::Zero(g.size());
  for (Index t = 0; t < iterations; ++t) {
    walk = qa * walk;
    x += walk;
  }
  ScoreVector<Scalar> out;
  out.measure = "diffusion";
  out.with("T", iterations).with("q", double(q));
  out.scores = std::move(x);
  return out;
}

namespace detail {

inline std::vector<Index> bfs_distances(const Graph& g, Index src) {
  std::vector<Index> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<Index> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!queue.empty()) {
    const Index u = queue.front();
    queue.pop_front();
    for (Index v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace detail

/// (n_c - 1) / sum of distances within the node's component; 0 when isolated.
template <typename Scalar = double>
ScoreVector<Scalar> closeness_centrality(const Graph& g) {
  ScoreVector<Scalar> out;
  out.measure = "closeness";
  out.scores = Vector<Scalar>::Zero(g.size());
  for (Index i = 0; i < g.size(); ++i) {
    const auto dist = detail::bfs_distances(g, i);
    Index reached = 0, total = 0;
    for (Index d : dist) {
      if (d > 0) {
        ++reached;
        total += d;
      }
    }
    if (total > 0) out.scores(i) = Scalar(reached) / Scalar(total);
  }
  return out;
}

/// Unnormalized shortest-path betweenness (Brandes accumulation), each
/// unordered pair counted once.
template <typename Scalar = double>
ScoreVector<Scalar> betweenness_centrality(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  Vector<Scalar> bc = Vector<Scalar>::Zero(g.size());
  std::vector<Index> order;
  std::vector<std::vector<Index>> preds(n);
  std::vector<Scalar> sigma(n), delta(n);
  std::vector<Index> dist(n);
  for (Index s = 0; s < g.size(); ++s) {
    order.clear();
    for (auto& p : preds) p.clear();
    std::fill(sigma.begin(), sigma.end(), Scalar(0));
    std::fill(delta.begin(), delta.end(), Scalar(0));
    std::fill(dist.begin(), dist.end(), Index(-1));
    sigma[static_cast<std::size_t>(s)] = 1;
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<Index> queue{s};
    while (!queue.empty()) {
      const Index v = queue.front();
      queue.pop_front();
      order.push_back(v);
      const auto vv = static_cast<std::size_t>(v);
      for (Index w : g.neighbors(v)) {
        const auto ww = static_cast<std::size_t>(w);
        if (dist[ww] < 0) {
          dist[ww] = dist[vv] + 1;
          queue.push_back(w);
        }
        if (dist[ww] == dist[vv] + 1) {
          sigma[ww] += sigma[vv];
          preds[ww].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = static_cast<std::size_t>(*it);
      for (Index v : preds[w]) {
        const auto vv = static_cast<std::size_t>(v);
        delta[vv] += sigma[vv] / sigma[w] * (Scalar(1) + delta[w]);
      }
      if (*it != s) bc(*it) += delta[w];
    }
  }
  ScoreVector<Scalar> out;
  out.measure = "betweenness";
  out.scores = bc / Scalar(2);
  return out;
}

}  // namespace lapcen
