#pragma once

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lapcen/matrices.hpp"

namespace lapcen {

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

struct Param {
  std::string name;
  std::string value;
  friend bool operator==(const Param&, const Param&) = default;
};

/// Per-node scores aligned with graph node order, tagged with the measure
/// that produced them and its parameters (in insertion order).
template <typename Scalar = double>
struct ScoreVector {
  std::string measure;
  std::vector<Param> params;
  Vector<Scalar> scores;

  Index size() const { return scores.size(); }
  Scalar operator()(Index i) const { return scores(i); }

  ScoreVector& with(std::string name, std::string value) {
    params.push_back({std::move(name), std::move(value)});
    return *this;
  }
  ScoreVector& with(std::string name, double value) { return with(std::move(name), format_number(value)); }
  ScoreVector& with(std::string name, Index value) { return with(std::move(name), std::to_string(value)); }

  const std::string* param(const std::string& name) const {
    for (const auto& p : params)
      if (p.name == name) return &p.value;
    return nullptr;
  }
};

/// Nonincreasing nonnegative weights w_0 >= ... >= w_{n-1} >= 0; w_0 applies
/// to the constant eigenvector and w_k to q_k.
template <typename Scalar = double>
class WeightVector {
 public:
  /// Throws std::invalid_argument on a negative or increasing entry. Rises
  /// below `slack` (relative to the largest weight) are treated as noise.
  explicit WeightVector(Vector<Scalar> w, Scalar slack = Scalar(1e-12)) : w_(std::move(w)) {
    const Scalar tol = slack * std::max(Scalar(1), w_.size() ? w_.cwiseAbs().maxCoeff() : Scalar(0));
    for (Index i = 0; i < w_.size(); ++i) {
      if (!std::isfinite(double(w_(i))) || w_(i) < -tol) throw std::invalid_argument("weights must be nonnegative");
      if (i > 0 && w_(i) > w_(i - 1) + tol) throw std::invalid_argument("weights must be nonincreasing");
    }
    w_ = w_.cwiseMax(Scalar(0));
  }

  /// w_0 = 0 on the constant vector, nonincreasing w_1..w_{n-1} on the rest.
  /// The constant term then drops out entirely, as in the targeting score.
  static WeightVector constant_free(Vector<Scalar> w, Scalar slack = Scalar(1e-12)) {
    if (w.size() == 0 || w(0) != Scalar(0)) throw std::invalid_argument("constant-free weights need w_0 = 0");
    Vector<Scalar> tail = w.tail(w.size() - 1);
    WeightVector checked(std::move(tail), slack);
    WeightVector out;
    out.w_ = Vector<Scalar>::Zero(w.size());
    out.w_.tail(w.size() - 1) = checked.w_;
    return out;
  }

  Index size() const { return w_.size(); }
  Scalar operator()(Index i) const { return w_(i); }
  const Vector<Scalar>& values() const { return w_; }

 private:
  WeightVector() = default;
  Vector<Scalar> w_;
};

}  // namespace lapcen
