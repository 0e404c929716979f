#include "lapcen/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lapcen/error.hpp"

namespace lapcen {

std::optional<Index> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Graph::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw std::out_of_range("unknown node label '" + std::string(label) + "'");
}

bool Graph::has_edge(Index i, Index j) const {
  const auto& nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

Graph Graph::from_edges(std::vector<std::string> labels, std::vector<Edge> edges) {
  GraphBuilder b;
  for (const auto& l : labels) {
    const Index before = b.size();
    if (b.add_node(l) != before) throw std::invalid_argument("duplicate label '" + l + "'");
  }
  for (auto [i, j] : edges) b.add_edge(i, j);
  return std::move(b).build();
}

Graph Graph::from_edges(Index n, std::vector<Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_edges(std::move(labels), std::move(edges));
}

Index GraphBuilder::add_node(std::string_view label) {
  if (label.empty()) throw std::invalid_argument("empty node label");
  auto [it, inserted] = index_.try_emplace(std::string(label), size());
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
  if (a == b) throw std::invalid_argument("self-loop on '" + std::string(a) + "'");
  const Index i = add_node(a);
  const Index j = add_node(b);
  add_edge(i, j);
}

void GraphBuilder::add_edge(Index i, Index j) {
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw std::out_of_range("edge endpoint out of range");
  if (i == j) throw std::invalid_argument("self-loop on '" + labels_[static_cast<std::size_t>(i)] + "'");
  edges_.emplace_back(std::min(i, j), std::max(i, j));
}

Graph GraphBuilder::build() && {
  Graph g;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  g.adj_.resize(labels_.size());
  for (auto [i, j] : edges_) {
    g.adj_[static_cast<std::size_t>(i)].push_back(j);
    g.adj_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);
  g.edges_ = std::move(edges_);
  return g;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::vector<std::string_view> split_comma(std::string_view line, std::size_t lineno) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    auto tok = trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (tok.empty()) throw ParseError("empty field in comma-delimited line", lineno);
    out.push_back(tok);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool needs_quoting(std::string_view label) {
  return label.empty() || label.front() == '#' ||
         std::any_of(label.begin(), label.end(), [](char c) {
           return c == ',' || std::isspace(static_cast<unsigned char>(c));
         });
}

}  // namespace

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
  GraphBuilder builder;
  bool header_pending = options.header;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }

    const bool comma = options.delimiter == Delimiter::comma ||
                       (options.delimiter == Delimiter::automatic && line.find(',') != std::string_view::npos);
    const auto tokens = comma ? split_comma(line, lineno) : split_whitespace(line);

    if (tokens.size() == 1) {
      builder.add_node(tokens[0]);
    } else if (tokens.size() == 2) {
      if (tokens[0] == tokens[1]) throw ParseError("self-loop on '" + std::string(tokens[0]) + "'", lineno);
      builder.add_edge(tokens[0], tokens[1]);
    } else {
      throw ParseError("expected one or two node tokens, found " + std::to_string(tokens.size()), lineno);
    }
  }
  return std::move(builder).build();
}

Graph read_edge_list(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str(), options);
}

std::string serialize_edge_list(const Graph& g) {
  for (const auto& l : g.labels()) {
    if (needs_quoting(l)) throw std::invalid_argument("label '" + l + "' cannot be written to an edge list");
  }
  std::string out;
  Index next = 0;  // first label not yet introduced
  auto declare_up_to = [&](Index end) {
    for (; next < end; ++next) out.append(g.label(next)).push_back('\n');
  };
  for (auto [i, j] : g.edges()) {
    if (j >= next) {
      if (i == next && j == next + 1) {
        next = j + 1;
      } else {
        declare_up_to(j);
        next = j + 1;
      }
    }
    out.append(g.label(i)).push_back(' ');
    out.append(g.label(j)).push_back('\n');
  }
  declare_up_to(g.size());
  return out;
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_edge_list(g);
}

Graph make_family(Family kind, Index n, Index k) {
  if (n < 1) throw std::invalid_argument("graph family needs n >= 1");
  std::vector<Graph::Edge> edges;
  switch (kind) {
    case Family::star:
      for (Index i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::complete:
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::path:
      for (Index i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::core_periphery:
      if (k < 1 || k >= n) throw std::invalid_argument("core_periphery needs 1 <= k < n");
      for (Index i = 0; i < k; ++i)
        for (Index j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph star(Index n) { return make_family(Family::star, n); }
Graph complete(Index n) { return make_family(Family::complete, n); }
Graph path(Index n) { return make_family(Family::path, n); }
Graph core_periphery(Index n, Index k) { return make_family(Family::core_periphery, n, k); }

Graph empty_graph(Index n) {
  if (n < 0) throw std::invalid_argument("negative node count");
  return Graph::from_edges(n, {});
}

Family parse_family(std::string_view name) {
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "path") return Family::path;
  if (name == "core_periphery" || name == "core-periphery") return Family::core_periphery;
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

}  // namespace lapcen
