#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "lapcen/graph.hpp"

namespace lapcen {

enum class Model { ER, BA };

std::string to_string(Model m);
Model parse_model(std::string_view s);

/// Parameters of one seeded random graph. ER uses p, BA uses m.
struct GenSpec {
  Model model = Model::ER;
  Index n = 0;
  double p = 0.0;
  Index m = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless 0 <= p <= 1 (ER) or 1 <= m < n (BA).
  void validate() const;
  /// "p" for ER, "m" for BA, as text.
  std::string param_string() const;

  static GenSpec er(Index n, double p, std::uint64_t seed) { return {Model::ER, n, p, 1, seed}; }
  /// ER with p = avg_degree / (n - 1).
  static GenSpec er_avg_degree(Index n, double avg_degree, std::uint64_t seed);
  static GenSpec ba(Index n, Index m, std::uint64_t seed) { return {Model::BA, n, 0.0, m, seed}; }

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Each unordered pair independently with probability p.
Graph erdos_renyi(const GenSpec& spec);

/// Preferential attachment from a clique on m+1 nodes; every arriving node
/// adds m distinct edges, targets drawn proportionally to current degree.
Graph barabasi_albert(const GenSpec& spec);

Graph generate(const GenSpec& spec);

/// k disjoint ER(n_per, p_in) blocks; afterwards every within-block edge is,
/// with probability `rewire`, redirected from one endpoint to a uniform node
/// of another block. A redirect that would duplicate an edge is redrawn (up to
/// 100 times, then the edge stays put), so the edge count never changes.
struct ClusterSpec {
  Index clusters = 5;
  Index cluster_size = 50;
  double p_in = 0.1;
  double rewire = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

Graph clustered_er(const ClusterSpec& spec);

}  // namespace lapcen
