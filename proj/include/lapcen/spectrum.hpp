#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lapcen/error.hpp"
#include "lapcen/matrices.hpp"

namespace lapcen {

/// Maximal run of numerically equal eigenvalues, as inclusive eigenvalue
/// indices in the 1-based descending convention (1 = largest).
struct EigenGroup {
  Index first;
  Index last;

  Index size() const { return last - first + 1; }
  bool contains(Index k) const { return first <= k && k <= last; }
  friend bool operator==(const EigenGroup&, const EigenGroup&) = default;
};

/// Full eigendecomposition of a graph Laplacian.
///
/// Eigenvalues are stored in descending order, so `eigenvalues(k - 1)` is
/// lambda_k for k = 1..n and the last entry is exactly zero. Column k - 1 of
/// `eigenvectors` is q_k; the last column is the exact constant vector
/// (1/sqrt(n)) 1, which is also addressed as q_0. Groups partition the
/// non-constant indices 1..n-1.
template <typename Scalar = double>
struct Spectrum {
  Vector<Scalar> eigenvalues;
  Matrix<Scalar> eigenvectors;
  std::vector<EigenGroup> groups;
  Scalar group_tol = Scalar(1e-8);

  Index size() const { return eigenvalues.size(); }

  /// lambda_k for k in 1..n; k = 0 aliases the constant direction (lambda = 0).
  Scalar lambda(Index k) const { return k == 0 ? Scalar(0) : eigenvalues(k - 1); }

  /// q_k for k in 0..n, with q_0 == q_n.
  auto q(Index k) const { return eigenvectors.col(k == 0 ? size() - 1 : k - 1); }

  const EigenGroup& group_of(Index k) const {
    auto it = std::find_if(groups.begin(), groups.end(), [k](const EigenGroup& g) { return g.contains(k); });
    if (it == groups.end()) throw std::out_of_range("eigen index " + std::to_string(k) + " not in any group");
    return *it;
  }

  /// Mean eigenvalue over a group; used wherever a weight depends on lambda so
  /// that solver noise inside a degenerate block cannot split it.
  Scalar group_lambda(const EigenGroup& g) const {
    return eigenvalues.segment(g.first - 1, g.size()).mean();
  }

  /// True when order r ends on a group boundary (r = 0 counts as aligned).
  bool aligned(Index r) const { return r == 0 || group_of(r).last == r; }
};

/// Splits descending eigenvalues lambda_1..lambda_{n-1} into groups. A new
/// group starts once an eigenvalue is more than tol * max(1, lambda_1) below
/// the first member of the current group.
template <typename Scalar>
std::vector<EigenGroup> group_eigenvalues(const Vector<Scalar>& descending, Scalar group_tol) {
  std::vector<EigenGroup> groups;
  const Index n = descending.size();
  if (n < 2) return groups;
  const Scalar scale = std::max(Scalar(1), descending(0));
  Index start = 1;
  for (Index k = 2; k <= n - 1; ++k) {
    if (descending(start - 1) - descending(k - 1) > group_tol * scale) {
      groups.push_back({start, k - 1});
      start = k;
    }
  }
  groups.push_back({start, n - 1});
  return groups;
}

/// Decomposes a Laplacian L = Q Lambda Q'.
///
/// Throws std::invalid_argument when L is not symmetric or its rows do not sum
/// to zero, and DecompositionError when the solver fails, an eigenvalue is
/// more negative than tol * max(1, lambda_1), or the reconstruction check
/// fails. The zero eigenspace is rebuilt as the exact constant vector plus an
/// orthonormal complement.
template <typename Scalar = double, typename Derived>
Spectrum<Scalar> eigendecompose(const Eigen::MatrixBase<Derived>& laplacian_matrix, Scalar tol = Scalar(1e-8),
                                Scalar group_tol = Scalar(1e-8)) {
  const Matrix<Scalar> L = laplacian_matrix.template cast<Scalar>();
  const Index n = L.rows();
  if (L.cols() != n) throw std::invalid_argument("Laplacian must be square");
  if (n == 0) throw std::invalid_argument("Laplacian of an empty node set");
  if ((L - L.transpose()).cwiseAbs().maxCoeff() != Scalar(0))
    throw std::invalid_argument("Laplacian must be symmetric");
  const Scalar entry_scale = std::max(Scalar(1), L.cwiseAbs().maxCoeff());
  if (L.rowwise().sum().cwiseAbs().maxCoeff() > tol * entry_scale)
    throw std::invalid_argument("Laplacian rows must sum to zero");

  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(L);
  if (solver.info() != Eigen::Success) throw DecompositionError("symmetric eigensolver did not converge");

  Spectrum<Scalar> s;
  s.group_tol = group_tol;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();

  const Scalar scale = std::max(Scalar(1), s.eigenvalues(0));
  if (s.eigenvalues(n - 1) < -tol * scale)
    throw DecompositionError("Laplacian has a negative eigenvalue " + std::to_string(double(s.eigenvalues(n - 1))));

  // Zero eigenspace: trailing eigenvalues within group_tol of zero.
  Index zeros = 0;
  while (zeros < n && std::abs(s.eigenvalues(n - 1 - zeros)) <= group_tol * scale) ++zeros;
  if (zeros == 0) throw DecompositionError("Laplacian has no zero eigenvalue");

  const Vector<Scalar> constant = Vector<Scalar>::Constant(n, Scalar(1) / std::sqrt(Scalar(n)));
  if (zeros > 1) {
    Matrix<Scalar> basis = s.eigenvectors.rightCols(zeros);
    basis -= constant * (constant.transpose() * basis);
    Eigen::JacobiSVD<Matrix<Scalar>> svd(basis, Eigen::ComputeThinU);
    Matrix<Scalar> complement = svd.matrixU().leftCols(zeros - 1);
    complement -= constant * (constant.transpose() * complement);
    complement = Eigen::HouseholderQR<Matrix<Scalar>>(complement).householderQ() *
                 Matrix<Scalar>::Identity(n, zeros - 1);
    s.eigenvectors.middleCols(n - zeros, zeros - 1) = complement;
  }
  s.eigenvectors.col(n - 1) = constant;
  s.eigenvalues.tail(zeros).setZero();
  s.eigenvalues = s.eigenvalues.cwiseMax(Scalar(0));

  const Scalar residual =
      (s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.transpose() - L).cwiseAbs().maxCoeff();
  if (residual > tol * scale)
    throw DecompositionError("reconstruction error " + std::to_string(double(residual)) + " exceeds tolerance");

  s.groups = group_eigenvalues<Scalar>(s.eigenvalues, group_tol);
  // Repeated eigenvalues of an integer Laplacian are equal; drop solver noise.
  for (const auto& g : s.groups) {
    auto block = s.eigenvalues.segment(g.first - 1, g.size());
    block.setConstant(block.mean());
  }
  return s;
}

template <typename Scalar = double>
Spectrum<Scalar> eigendecompose(const Graph& g, Scalar tol = Scalar(1e-8), Scalar group_tol = Scalar(1e-8)) {
  return eigendecompose<Scalar>(laplacian<Scalar>(g), tol, group_tol);
}

/// Share of the eigenvalue total carried by lambda_1..lambda_k, k in 0..n-1.
/// An edgeless graph has nothing to capture and reports 1 for every k >= 1.
template <typename Scalar>
Scalar cumulative_fraction(const Spectrum<Scalar>& s, Index k) {
  const Index n = s.size();
  if (k < 0 || k > n - 1) throw std::out_of_range("cumulative order must lie in 0..n-1");
  if (k == 0) return Scalar(0);
  if (k == n - 1) return Scalar(1);
  const Scalar total = s.eigenvalues.sum();
  if (total == Scalar(0)) return Scalar(1);
  return s.eigenvalues.head(k).sum() / total;
}

/// Fractions for every k in 0..n-1.
template <typename Scalar>
Vector<Scalar> cumulative_curve(const Spectrum<Scalar>& s) {
  Vector<Scalar> out(s.size());
  for (Index k = 0; k < s.size(); ++k) out(k) = cumulative_fraction(s, k);
  return out;
}

/// lambda_i - lambda_{i+1} for i = 1..n-1.
template <typename Scalar>
Vector<Scalar> spectral_gap_profile(const Spectrum<Scalar>& s) {
  const Index n = s.size();
  if (n < 2) return Vector<Scalar>();
  return (s.eigenvalues.head(n - 1) - s.eigenvalues.tail(n - 1)).cwiseMax(Scalar(0));
}

}  // namespace lapcen
