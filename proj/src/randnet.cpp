#include "lapcen/randnet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "lapcen/random.hpp"
#include "lapcen/scores.hpp"

namespace lapcen {

std::string to_string(Model m) { return m == Model::ER ? "ER" : "BA"; }

Model parse_model(std::string_view s) {
  if (s == "ER" || s == "er") return Model::ER;
  if (s == "BA" || s == "ba") return Model::BA;
  throw std::invalid_argument("unknown random graph model '" + std::string(s) + "'");
}

void GenSpec::validate() const {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  if (model == Model::ER) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ER edge probability must lie in [0, 1]");
  } else if (m < 1 || m >= n) {
    throw std::invalid_argument("BA needs 1 <= m < n");
  }
}

std::string GenSpec::param_string() const {
  return model == Model::ER ? format_number(p) : std::to_string(m);
}

GenSpec GenSpec::er_avg_degree(Index n, double avg_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("average-degree parameterization needs n >= 2");
  return er(n, std::min(1.0, avg_degree / double(n - 1)), seed);
}

Graph erdos_renyi(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<Graph::Edge> edges;
  for (Index i = 0; i < spec.n; ++i)
    for (Index j = i + 1; j < spec.n; ++j)
      if (rng.uniform() < spec.p) edges.emplace_back(i, j);
  return Graph::from_edges(spec.n, std::move(edges));
}

Graph barabasi_albert(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<Graph::Edge> edges;
  std::vector<Index> ends;  // every edge endpoint once, so picks are degree-weighted
  for (Index i = 0; i <= spec.m; ++i) {
    for (Index j = i + 1; j <= spec.m; ++j) {
      edges.emplace_back(i, j);
      ends.push_back(i);
      ends.push_back(j);
    }
  }
  std::vector<Index> chosen;
  for (Index t = spec.m + 1; t < spec.n; ++t) {
    chosen.clear();
    while (static_cast<Index>(chosen.size()) < spec.m) {
      const Index target = ends[rng.below(ends.size())];
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) chosen.push_back(target);
    }
    for (Index target : chosen) {
      edges.emplace_back(target, t);
      ends.push_back(target);
      ends.push_back(t);
    }
  }
  return Graph::from_edges(spec.n, std::move(edges));
}

Graph generate(const GenSpec& spec) {
  return spec.model == Model::ER ? erdos_renyi(spec) : barabasi_albert(spec);
}

void ClusterSpec::validate() const {
  if (clusters < 1 || cluster_size < 1) throw std::invalid_argument("clustered graph needs k >= 1 and n_per >= 1");
  if (!(p_in >= 0.0 && p_in <= 1.0)) throw std::invalid_argument("within-cluster probability must lie in [0, 1]");
  if (!(rewire >= 0.0 && rewire <= 1.0)) throw std::invalid_argument("rewire probability must lie in [0, 1]");
  if (clusters == 1 && rewire > 0.0) throw std::invalid_argument("rewiring needs at least two clusters");
}

Graph clustered_er(const ClusterSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const Index n = spec.clusters * spec.cluster_size;
  std::vector<Graph::Edge> within;
  for (Index c = 0; c < spec.clusters; ++c) {
    const Index base = c * spec.cluster_size;
    for (Index i = 0; i < spec.cluster_size; ++i)
      for (Index j = i + 1; j < spec.cluster_size; ++j)
        if (rng.uniform() < spec.p_in) within.emplace_back(base + i, base + j);
  }

  std::set<Graph::Edge> current(within.begin(), within.end());
  auto key = [](Index a, Index b) { return Graph::Edge{std::min(a, b), std::max(a, b)}; };
  const auto outside = static_cast<std::uint64_t>(n - spec.cluster_size);
  for (auto [u, v] : within) {
    if (!rng.bernoulli(spec.rewire)) continue;
    const Index keep = rng.bernoulli(0.5) ? u : v;
    const Index own = keep / spec.cluster_size;
    for (int attempt = 0; attempt < 100; ++attempt) {
      Index w = static_cast<Index>(rng.below(outside));
      if (w >= own * spec.cluster_size) w += spec.cluster_size;
      if (current.count(key(keep, w))) continue;
      current.erase(key(u, v));
      current.insert(key(keep, w));
      break;
    }
  }
  return Graph::from_edges(n, std::vector<Graph::Edge>(current.begin(), current.end()));
}

}  // namespace lapcen
