#include <doctest.h>

#include "lapcen/lapcen.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace lapcen;
using doctest::Approx;

namespace {

void check_spectrum(const Graph& g, const Spectrum<double>& s) {
  const Index n = g.size();
  const Matrix<double> L = laplacian<double>(g);
  const Matrix<double>& Q = s.eigenvectors;
  const double scale = std::max(1.0, s.lambda(1));
  CHECK((Q.transpose() * Q - Matrix<double>::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-8);
  CHECK((L * Q - Q * s.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff() <= 1e-7 * scale);
  for (Index k = 1; k < n; ++k) CHECK(s.lambda(k) >= s.lambda(k + 1));
  CHECK(s.lambda(n) == 0.0);
  CHECK(s.q(n).isApprox(Vector<double>::Constant(n, 1 / std::sqrt(double(n)))));
  CHECK(s.q(0) == s.q(n));

  // Groups partition 1..n-1 into maximal runs.
  Index next = 1;
  const double tol = s.group_tol * scale;
  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    const auto& grp = s.groups[gi];
    CHECK(grp.first == next);
    next = grp.last + 1;
    CHECK(s.lambda(grp.first) - s.lambda(grp.last) <= tol);
    if (gi + 1 < s.groups.size()) CHECK(s.lambda(grp.last) - s.lambda(grp.last + 1) > tol);
  }
  CHECK(next == n);
}

}  // namespace

// K_{1,3} has spectrum [4, 1, 1, 0]: trace(L) = 6 and L (3,-1,-1,-1)' = 4 (3,-1,-1,-1)'.
TEST_CASE("star(4) eigenvalues") {
  const auto s = eigendecompose<double>(star(4));
  CHECK(s.lambda(1) == Approx(4).epsilon(1e-12));
  CHECK(s.lambda(2) == Approx(1).epsilon(1e-12));
  CHECK(s.lambda(3) == Approx(1).epsilon(1e-12));
  CHECK(s.lambda(4) == 0.0);
  REQUIRE(s.groups.size() == 2);
  CHECK(s.groups[1].first == 2);
  CHECK(s.groups[1].last == 3);
}

TEST_CASE("complete graph eigenvalues") {
  for (Index n : {2, 3, 7}) {
    const auto s = eigendecompose<double>(complete(n));
    for (Index k = 1; k < n; ++k) CHECK(s.lambda(k) == Approx(double(n)));
    CHECK(s.groups.size() == 1);
  }
  const auto e = oracle::jacobi(oracle::laplacian(complete(3)));
  CHECK(e.values[0] == Approx(3));
  CHECK(e.values[1] == Approx(3));
  CHECK(e.values[2] == Approx(0).epsilon(1e-12));
}

TEST_CASE("isolated nodes give extra zero eigenvalues") {
  const Graph g = parse_edge_list("a b\nb c\nc a\nx\ny");
  const auto s = eigendecompose<double>(g);
  Index zeros = 0;
  for (Index k = 1; k <= g.size(); ++k) zeros += s.lambda(k) == 0.0;
  CHECK(zeros == 3);
  check_spectrum(g, s);
}

TEST_CASE("cumulative_fraction") {
  const auto s = eigendecompose<double>(star(4));
  CHECK(cumulative_fraction(s, 0) == 0.0);
  CHECK(cumulative_fraction(s, 1) == Approx(4.0 / 6));
  CHECK(cumulative_fraction(s, 3) == 1.0);
  CHECK_THROWS_AS(cumulative_fraction(s, 4), std::out_of_range);
  CHECK_THROWS_AS(cumulative_fraction(s, -1), std::out_of_range);

  const auto e = eigendecompose<double>(empty_graph(3));
  CHECK(cumulative_fraction(e, 0) == 0.0);
  CHECK(cumulative_fraction(e, 2) == 1.0);
}

TEST_CASE("spectral_gap_profile") {
  auto near = [](const Vector<double>& v, std::vector<double> want) {
    REQUIRE(v.size() == Index(want.size()));
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(v(Index(i)) == Approx(want[i]).epsilon(1e-12));
  };
  near(spectral_gap_profile(eigendecompose<double>(star(4))), {3, 0, 1});
  near(spectral_gap_profile(eigendecompose<double>(complete(3))), {0, 3});
  near(spectral_gap_profile(eigendecompose<double>(path(2))), {2});
}

TEST_CASE("eigenvalues agree with the Jacobi oracle") {
  for (const auto& [name, g] : suite::family_graphs()) {
    CAPTURE(name);
    const auto s = eigendecompose<double>(g);
    const auto e = oracle::jacobi(oracle::laplacian(g));
    for (Index k = 1; k <= g.size(); ++k) CHECK(s.lambda(k) == Approx(e.values[std::size_t(k - 1)]).epsilon(1e-9).scale(1));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate(GenSpec::er_avg_degree(40, 3, seed));
    const auto s = eigendecompose<double>(g);
    const auto e = oracle::jacobi(oracle::laplacian(g));
    for (Index k = 1; k <= g.size(); ++k) CHECK(s.lambda(k) == Approx(e.values[std::size_t(k - 1)]).epsilon(1e-9).scale(1));
  }
}

TEST_CASE("spectrum invariants on the property suite and families") {
  for (const auto& [name, g] : suite::family_graphs()) {
    CAPTURE(name);
    check_spectrum(g, eigendecompose<double>(g));
  }
  for (const auto& [name, g] : suite::property_graphs()) {
    CAPTURE(name);
    const auto planted = suite::plant(g);
    check_spectrum(planted.graph, eigendecompose<double>(planted.graph));
  }
}

TEST_CASE("spectrum at n = 600") {
  const Graph g = generate(GenSpec::er_avg_degree(600, 8, 7));
  check_spectrum(g, eigendecompose<double>(g));
}

TEST_CASE("rejects matrices that are not Laplacians") {
  Matrix<double> a(2, 2);
  a << 1, -1, 0, 1;
  CHECK_THROWS_AS(eigendecompose<double>(a), std::invalid_argument);
  a << 1, 0, 0, 1;
  CHECK_THROWS_AS(eigendecompose<double>(a), std::invalid_argument);
}

TEST_CASE("single node") {
  const auto s = eigendecompose<double>(empty_graph(1));
  CHECK(s.size() == 1);
  CHECK(s.groups.empty());
  CHECK(s.q(0)(0) == 1.0);
}

TEST_CASE("float scalar") {
  const auto s = eigendecompose<float>(star(4), 1e-5f, 1e-5f);
  CHECK(s.lambda(1) == Approx(4).epsilon(1e-5));
  CHECK(s.groups.size() == 2);
}
