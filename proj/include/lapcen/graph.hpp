#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lapcen {

using Index = std::ptrdiff_t;

/// Undirected simple graph with stable string labels.
///
/// Nodes are indexed 0..n-1 in label order. The edge list is kept sorted with
/// the smaller endpoint first; neighbor lists are sorted. Instances are
/// immutable once built, use GraphBuilder to construct one.
class Graph {
 public:
  using Edge = std::pair<Index, Index>;

  Graph() = default;

  Index size() const { return static_cast<Index>(labels_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }
  std::optional<Index> find(std::string_view label) const;
  /// Throws std::out_of_range for unknown labels.
  Index index_of(std::string_view label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Index>& neighbors(Index i) const { return adj_.at(static_cast<std::size_t>(i)); }
  Index degree(Index i) const { return static_cast<Index>(neighbors(i).size()); }
  bool has_edge(Index i, Index j) const;

  /// Same node set, edges given by index. Used by generators.
  static Graph from_edges(std::vector<std::string> labels, std::vector<Edge> edges);
  /// Nodes labelled "0".."n-1".
  static Graph from_edges(Index n, std::vector<Edge> edges);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> adj_;
};

/// Incremental construction. Duplicate and reversed edges collapse; self-loops
/// are rejected with std::invalid_argument.
class GraphBuilder {
 public:
  /// Registers the label if new and returns its index.
  Index add_node(std::string_view label);
  void add_edge(std::string_view a, std::string_view b);
  void add_edge(Index i, Index j);

  Index size() const { return static_cast<Index>(labels_.size()); }
  Graph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Graph::Edge> edges_;
};

// -- edge-list text format --------------------------------------------------

enum class Delimiter { automatic, whitespace, comma };

struct ParseOptions {
  Delimiter delimiter = Delimiter::automatic;
  /// Skip the first non-comment line (a column header).
  bool header = false;
};

/// One edge per line, '#' comments, single-token lines declare nodes. Labels
/// are opaque strings ("10" sorts nowhere special). Throws ParseError.
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});
Graph read_edge_list(const std::string& path, const ParseOptions& options = {});

/// Inverse of parse_edge_list: re-parsing yields the same labels in the same
/// order and the same edge set. Single-token lines are emitted only where
/// needed to pin label order or to declare isolated nodes.
std::string serialize_edge_list(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);

// -- canonical families -----------------------------------------------------

enum class Family { star, complete, path, core_periphery };

/// star: node 0 is the hub. core_periphery: nodes 0..k-1 form the core and are
/// adjacent to every node, nodes k..n-1 only to the core.
Graph make_family(Family kind, Index n, Index k = 0);
Graph star(Index n);
Graph complete(Index n);
Graph path(Index n);
Graph core_periphery(Index n, Index k);
Graph empty_graph(Index n);

Family parse_family(std::string_view name);

/// Padgett's Florentine marriage network, 16 families, Pucci isolated.
Graph florentine();

}  // namespace lapcen
