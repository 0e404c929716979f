#pragma once

#include <Eigen/Core>

#include "lapcen/graph.hpp"

namespace lapcen {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Index, Eigen::Dynamic, 1>;

inline IntVector degrees(const Graph& g) {
  IntVector d(g.size());
  for (Index i = 0; i < g.size(); ++i) d(i) = g.degree(i);
  return d;
}

inline IntMatrix adjacency_int(const Graph& g) {
  IntMatrix a = IntMatrix::Zero(g.size(), g.size());
  for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1;
  return a;
}

/// L = D - A in exact integer arithmetic; every row sums to zero.
inline IntMatrix laplacian_int(const Graph& g) {
  IntMatrix l = -adjacency_int(g);
  l.diagonal() = degrees(g);
  return l;
}

template <typename Scalar = double>
Matrix<Scalar> adjacency(const Graph& g) {
  return adjacency_int(g).template cast<Scalar>();
}

template <typename Scalar = double>
Matrix<Scalar> laplacian(const Graph& g) {
  return laplacian_int(g).template cast<Scalar>();
}

}  // namespace lapcen
