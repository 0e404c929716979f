#include "lapcen/scenario.hpp"

#include <string>

#include <json.hpp>

namespace lapcen {

namespace {

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    auto part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Index node_index(const Graph& g, std::string_view label) {
  if (auto i = g.find(label)) return *i;
  throw ParseError("unknown node '" + std::string(label) + "'");
}

}  // namespace

Vector<double> parse_theta(std::string_view text, const Graph& g, const Spectrum<double>& s) {
  const Index n = g.size();
  if (text == "uniform") return Vector<double>::Ones(n);
  if (text.starts_with("eigvec:")) {
    const std::string k(text.substr(7));
    Index idx = 0;
    try {
      idx = std::stoll(k);
    } catch (const std::exception&) {
      throw ParseError("bad eigenvector index '" + k + "'");
    }
    if (idx < 0 || idx > n - 1) throw ParseError("eigenvector index must lie in 0..n-1");
    return s.q(idx);
  }
  if (text.starts_with("unit:")) {
    Vector<double> e = Vector<double>::Zero(n);
    e(node_index(g, text.substr(5))) = 1.0;
    return e;
  }
  const auto parts = split_list(text);
  if (static_cast<Index>(parts.size()) != n)
    throw ParseError("theta needs " + std::to_string(n) + " values, got " + std::to_string(parts.size()));
  Vector<double> theta(n);
  for (Index i = 0; i < n; ++i) {
    try {
      theta(i) = std::stod(parts[static_cast<std::size_t>(i)]);
    } catch (const std::exception&) {
      throw ParseError("bad theta value '" + parts[static_cast<std::size_t>(i)] + "'");
    }
  }
  return theta;
}

std::vector<Index> parse_targets(std::string_view text, const Graph& g) {
  std::vector<Index> out;
  if (text == "all") {
    for (Index i = 0; i < g.size(); ++i) out.push_back(i);
    return out;
  }
  for (const auto& label : split_list(text)) out.push_back(node_index(g, label));
  return out;
}

EconScenario<double> parse_scenario(std::string_view json_text, const Graph& g, const Spectrum<double>& s) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");

  EconScenario<double> sc;
  try {
    sc.beta = j.at("beta").get<double>();
    sc.beta_tilde = j.value("beta_tilde", 0.0);
    const json theta = j.value("theta", json("uniform"));
    if (theta.is_string()) {
      sc.theta = parse_theta(theta.get<std::string>(), g, s);
    } else if (theta.is_array()) {
      if (static_cast<Index>(theta.size()) != g.size()) throw ParseError("theta must have one entry per node");
      sc.theta.resize(g.size());
      for (Index i = 0; i < g.size(); ++i) sc.theta(i) = theta.at(static_cast<std::size_t>(i)).get<double>();
    } else {
      throw ParseError("theta must be a string or an array");
    }
    const json targets = j.value("targets", json("all"));
    if (targets.is_string()) {
      sc.targets = parse_targets(targets.get<std::string>(), g);
    } else if (targets.is_array()) {
      for (const auto& t : targets) sc.targets.push_back(node_index(g, t.get<std::string>()));
    } else {
      throw ParseError("targets must be \"all\" or an array of labels");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  if (!(sc.beta >= 0.0)) throw ParseError("beta must be >= 0");
  return sc;
}

}  // namespace lapcen
