#include <doctest.h>

#include "lapcen/lapcen.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace lapcen;
using doctest::Approx;

namespace {

void check_near(const Vector<double>& v, const std::vector<double>& want, double tol) {
  REQUIRE(v.size() == Index(want.size()));
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(v(Index(i)) - want[i]) <= tol);
}

// Properties 1-6 at the given orders.
void check_properties(const suite::Planted& p, const std::vector<Index>& orders) {
  const Graph& g = p.graph;
  const Index n = g.size();
  const auto s = eigendecompose<double>(g);
  std::vector<Index> isolated;
  for (Index i = 0; i < n; ++i)
    if (g.degree(i) == 0) isolated.push_back(i);
  const Index iso = Index(isolated.size());
  for (Index r : orders) {
    CAPTURE(r);
    const auto c = lec(s, r).scores;
    if (r + 1 <= n - 1) CHECK(((lec(s, r + 1).scores - c).array() >= -1e-12).all());
    CHECK(c.minCoeff() >= 1.0 / n - 1e-10);
    CHECK(c.maxCoeff() <= 1 + 1e-10);
    CHECK(c.sum() == Approx(1.0 + r).epsilon(1e-8).scale(1));
    CHECK(std::abs(c(p.twin_a) - c(p.twin_b)) <= 1e-8);
    CHECK(c(p.pendant) <= c(p.anchor) + 1e-10);
    if (r <= n - iso - 1)
      for (Index i : isolated) CHECK(c(i) == 1.0 / double(n));
  }
  CHECK((lec(s, 0).scores.array() == 1.0 / double(n)).all());
  CHECK((lec(s, n - 1).scores.array() == 1.0).all());
}

}  // namespace

TEST_CASE("star(4) golden values") {
  const auto s = eigendecompose<double>(star(4));
  check_near(lec(s, 0).scores, {0.25, 0.25, 0.25, 0.25}, 1e-12);
  check_near(lec(s, 1).scores, {1, 1. / 3, 1. / 3, 1. / 3}, 1e-9);
  check_near(lec(s, 2).scores, {1, 2. / 3, 2. / 3, 2. / 3}, 1e-9);
  check_near(lec(s, 3).scores, {1, 1, 1, 1}, 0);
  const auto sv = lec(s, 2);
  CHECK(sv.measure == "lec");
  REQUIRE(sv.param("order"));
  CHECK(*sv.param("order") == "2");
}

TEST_CASE("lec rejects orders outside 0..n-1") {
  const auto s = eigendecompose<double>(star(4));
  CHECK_THROWS_AS(lec(s, 4), std::out_of_range);
  CHECK_THROWS_AS(lec(s, -1), std::out_of_range);
}

TEST_CASE("complete graph gives (1+r)/n everywhere") {
  const Index n = 9;
  const auto s = eigendecompose<double>(complete(n));
  for (Index r = 0; r < n; ++r)
    for (Index i = 0; i < n; ++i) CHECK(lec(s, r)(i) == Approx(double(1 + r) / n).epsilon(1e-12));
}

TEST_CASE("pLEC proportional order") {
  CHECK(proportional_order(20, 200) == 40);
  CHECK(proportional_order(20, 4) == 1);
  CHECK(proportional_order(100, 10) == 9);
  CHECK(proportional_order(10, 30) == 3);
  CHECK_THROWS_AS(proportional_order(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(proportional_order(101, 10), std::invalid_argument);

  const auto s = eigendecompose<double>(star(4));
  const auto sv = plec_proportional(s, 20);
  check_near(sv.scores, {1, 1. / 3, 1. / 3, 1. / 3}, 1e-9);
  CHECK(*sv.param("pct") == "20");
  CHECK(*sv.param("order") == "1");
  check_near(plec_proportional(eigendecompose<double>(path(10)), 100).scores, std::vector<double>(10, 1.0), 0);
}

TEST_CASE("pLEC cumulative rule") {
  const auto [r, sv] = plec_cumulative(eigendecompose<double>(star(4)), 0.5);
  CHECK(r == 1);
  check_near(sv.scores, {1, 1. / 3, 1. / 3, 1. / 3}, 1e-9);
  CHECK(plec_cumulative(eigendecompose<double>(complete(3)), 0.5).first == 1);
  CHECK(plec_cumulative(eigendecompose<double>(complete(3)), 0.51).first == 2);
  CHECK_THROWS_AS(plec_cumulative(eigendecompose<double>(star(4)), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(plec_cumulative(eigendecompose<double>(star(4)), 0.0), std::invalid_argument);
}

TEST_CASE("gLEC specializations") {
  for (const auto& [name, g] : suite::family_graphs()) {
    CAPTURE(name);
    const auto s = eigendecompose<double>(g);
    const Index n = g.size();
    for (Index r = 0; r < n; ++r) {
      if (!s.aligned(r)) continue;
      CHECK((glec(s, order_weights<double>(n, r)).scores - lec(s, r).scores).cwiseAbs().maxCoeff() <= 1e-12);
    }
    // Weights cutting a block reproduce the modified LEC.
    for (Index r = 0; r < n; ++r)
      CHECK((glec(s, order_weights<double>(n, r)).scores - lec(s, r).scores).cwiseAbs().maxCoeff() <= 1e-12);
    const auto d = glec(s, degree_weights(s)).scores;
    CHECK((d - glec_degree_variant<double>(g).scores).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK((glec(s, order_weights<double>(n, 0)).scores.array() == 1.0 / double(n)).all());
  }
}

TEST_CASE("glec_degree_variant closed form") {
  check_near(glec_degree_variant<double>(path(3)).scores, {2. / 3, 1, 2. / 3}, 1e-15);
  check_near(glec_degree_variant<double>(star(4)).scores, {1, 0.5, 0.5, 0.5}, 1e-15);
  check_near(glec_degree_variant<double>(empty_graph(4)).scores, {0.25, 0.25, 0.25, 0.25}, 1e-15);
}

TEST_CASE("weight vectors must be nonincreasing and nonnegative") {
  Vector<double> w(3);
  w << 1, 2, 0;
  CHECK_THROWS_AS(WeightVector<double>{w}, std::invalid_argument);
  w << 1, 0.5, -0.1;
  CHECK_THROWS_AS(WeightVector<double>{w}, std::invalid_argument);
  w << 1, 0.5, 0.5;
  CHECK_NOTHROW(WeightVector<double>{w});
  const auto s = eigendecompose<double>(star(4));
  CHECK_THROWS_AS(glec(s, WeightVector<double>{w}), std::invalid_argument);
}

TEST_CASE("suggest_order") {
  const auto star4 = eigendecompose<double>(star(4));
  auto c = suggest_order(star4, OrderPolicy::parse("largest_gap"));
  CHECK(c.order == 1);
  CHECK(c.gap == Approx(3));

  CHECK(suggest_order(eigendecompose<double>(florentine()), OrderPolicy{}).order == 1);

  // K4: gaps [0, 0, 4]; the last gap is outside 1..n-2, so every candidate ties
  // at 0 and the smallest wins.
  c = suggest_order(eigendecompose<double>(complete(4)), OrderPolicy{});
  CHECK(c.order == 1);
  CHECK(c.gap == 0.0);

  c = suggest_order(star4, OrderPolicy::parse("cumulative:0.5"));
  CHECK(c.order == 1);
  CHECK(c.fraction == Approx(4.0 / 6));
  CHECK(c.policy == "cumulative:0.5");

  c = suggest_order(star4, OrderPolicy::parse("proportional:50"));
  CHECK(c.order == 2);

  CHECK_THROWS_AS(OrderPolicy::parse("gapz"), std::invalid_argument);
  CHECK_THROWS_AS(OrderPolicy::parse("cumulative"), std::invalid_argument);
}

TEST_CASE("properties 1-6 on planted family graphs") {
  for (const auto& [name, g] : suite::family_graphs()) {
    if (g.size() < 2 || g.edge_count() == 0) continue;
    CAPTURE(name);
    const auto p = suite::plant(g);
    std::vector<Index> all;
    for (Index r = 0; r < p.graph.size(); ++r) all.push_back(r);
    check_properties(p, all);
  }
}

TEST_CASE("properties 1-6 on the seeded property suite") {
  for (const auto& [name, g] : suite::property_graphs()) {
    CAPTURE(name);
    const auto p = suite::plant(g);
    check_properties(p, suite::property_orders(p.graph.size()));
  }
}

TEST_CASE("core-periphery closed form") {
  for (auto [n, k] : std::vector<std::pair<Index, Index>>{{10, 2}, {50, 5}, {12, 1}, {30, 29}}) {
    CAPTURE(n);
    CAPTURE(k);
    const auto s = eigendecompose<double>(core_periphery(n, k));
    for (Index r = 0; r <= k; ++r) {
      const auto c = lec(s, r).scores;
      const double hub = 1.0 / n + double(n - 1) * r / double(n * k);
      const double peri = 1.0 / n + double(r) / double(n * (n - k));
      for (Index i = 0; i < k; ++i) CHECK(std::abs(c(i) - hub) <= 1e-8);
      for (Index i = k; i < n; ++i) CHECK(std::abs(c(i) - peri) <= 1e-8);
    }
    for (Index i = 0; i < k; ++i) CHECK(lec(s, k)(i) == Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("modified LEC is basis independent") {
  Rng rng(11);
  for (const auto& [name, g] : suite::family_graphs()) {
    CAPTURE(name);
    const auto s = eigendecompose<double>(g);
    for (int rep = 0; rep < 5; ++rep) {
      const auto t = suite::rotate_groups(s, rng);
      for (Index r = 0; r < g.size(); ++r) CHECK((lec(t, r).scores - lec(s, r).scores).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("lec matches the Jacobi oracle") {
  std::vector<suite::Named> graphs = suite::family_graphs();
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    graphs.push_back({"er" + std::to_string(seed), generate(GenSpec::er_avg_degree(30, 3, seed))});
  graphs.push_back({"ba", generate(GenSpec::ba(30, 2, 4))});
  for (const auto& [name, g] : graphs) {
    CAPTURE(name);
    const auto s = eigendecompose<double>(g);
    for (Index r = 0; r < g.size(); ++r) {
      CAPTURE(r);
      const auto want = oracle::lec(g, r);
      check_near(lec(s, r).scores, want, 1e-8);
    }
  }
}

TEST_CASE("lec is permutation equivariant") {
  const Graph g = generate(GenSpec::er_avg_degree(40, 4, 3));
  std::vector<Index> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(5);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Graph::Edge> edges;
  for (const auto& [i, j] : g.edges()) edges.emplace_back(perm[std::size_t(i)], perm[std::size_t(j)]);
  const Graph h = Graph::from_edges(g.size(), edges);
  const auto sg = eigendecompose<double>(g), sh = eigendecompose<double>(h);
  for (Index r : {1, 5, 12, 30})
    for (Index i = 0; i < g.size(); ++i) CHECK(std::abs(lec(sg, r)(i) - lec(sh, r)(perm[std::size_t(i)])) <= 1e-8);
}
