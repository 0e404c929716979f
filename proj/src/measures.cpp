#include "lapcen/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "lapcen/centrality.hpp"
#include "lapcen/econ.hpp"
#include "lapcen/lec.hpp"

namespace lapcen {

namespace {

double number_arg(const MeasureSpec& spec, std::size_t i, double fallback) {
  if (i >= spec.args.size()) return fallback;
  std::size_t used = 0;
  const double v = std::stod(spec.args[i], &used);
  if (used != spec.args[i].size()) throw std::invalid_argument("bad numeric argument '" + spec.args[i] + "'");
  return v;
}

Index index_arg(const MeasureSpec& spec, std::size_t i, Index fallback) {
  if (i >= spec.args.size()) return fallback;
  std::size_t used = 0;
  const long long v = std::stoll(spec.args[i], &used);
  if (used != spec.args[i].size()) throw std::invalid_argument("bad integer argument '" + spec.args[i] + "'");
  return static_cast<Index>(v);
}

void require_args(const MeasureSpec& spec, std::size_t lo, std::size_t hi) {
  if (spec.args.size() < lo || spec.args.size() > hi)
    throw std::invalid_argument("measure '" + spec.name + "' takes " + std::to_string(lo) + ".." +
                                std::to_string(hi) + " arguments");
}

}  // namespace

MeasureSpec MeasureSpec::parse(std::string_view text) {
  MeasureSpec spec;
  std::size_t pos = 0;
  bool first = true;
  while (true) {
    const auto colon = text.find(':', pos);
    std::string part(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (part.empty()) throw std::invalid_argument("empty field in measure '" + std::string(text) + "'");
    if (first) {
      spec.name = std::move(part);
      first = false;
    } else {
      spec.args.push_back(std::move(part));
    }
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  const auto& known = measure_names();
  if (std::find(known.begin(), known.end(), spec.name) == known.end())
    throw std::invalid_argument("unknown measure '" + spec.name + "'");
  return spec;
}

std::string MeasureSpec::str() const {
  std::string s = name;
  for (const auto& a : args) s += ":" + a;
  return s;
}

bool MeasureSpec::needs_spectrum() const {
  return name == "lec" || name == "plec" || name == "plec_cum" || name == "phi";
}

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names{"lec",       "plec",      "plec_cum",  "glec_degree", "degree",
                                              "eigenvector", "katz",    "bonacich",  "diffusion",   "closeness",
                                              "betweenness", "phi"};
  return names;
}

const Spectrum<double>& MeasureContext::spectrum() {
  if (!spectrum_) spectrum_ = eigendecompose<double>(graph_);
  return *spectrum_;
}

ScoreVector<double> compute_measure(const MeasureSpec& spec, MeasureContext& ctx) {
  const Graph& g = ctx.graph();
  const auto& n = spec.name;
  if (n == "lec") {
    require_args(spec, 1, 1);
    return lec(ctx.spectrum(), index_arg(spec, 0, 0));
  }
  if (n == "plec") {
    require_args(spec, 0, 1);
    return plec_proportional(ctx.spectrum(), number_arg(spec, 0, 20.0));
  }
  if (n == "plec_cum") {
    require_args(spec, 0, 1);
    return plec_cumulative(ctx.spectrum(), number_arg(spec, 0, 0.5)).second;
  }
  if (n == "glec_degree") {
    require_args(spec, 0, 0);
    return glec_degree_variant<double>(g);
  }
  if (n == "degree") {
    require_args(spec, 0, 0);
    return degree_centrality<double>(g);
  }
  if (n == "eigenvector") {
    require_args(spec, 0, 1);
    return eigenvector_centrality<double>(g, spec.args.empty() ? EigNorm::unit : parse_eig_norm(spec.args[0]));
  }
  if (n == "katz") {
    require_args(spec, 0, 1);
    return katz_bonacich<double>(g, number_arg(spec, 0, 0.8));
  }
  if (n == "bonacich") {
    require_args(spec, 0, 1);
    return bonacich_power<double>(g, number_arg(spec, 0, 0.8));
  }
  if (n == "diffusion") {
    require_args(spec, 1, 2);
    return diffusion_centrality<double>(g, index_arg(spec, 0, 1), number_arg(spec, 1, -1.0));
  }
  if (n == "closeness") {
    require_args(spec, 0, 0);
    return closeness_centrality<double>(g);
  }
  if (n == "betweenness") {
    require_args(spec, 0, 0);
    return betweenness_centrality<double>(g);
  }
  if (n == "phi") {
    require_args(spec, 1, 1);
    return targeting_scores(ctx.spectrum(), number_arg(spec, 0, 0.0));
  }
  throw std::invalid_argument("unknown measure '" + n + "'");
}

std::vector<MeasureSpec> classic_bundle() {
  std::vector<MeasureSpec> out;
  for (const char* m : {"degree", "eigenvector:mean_one", "katz:0.8", "bonacich:0.8", "diffusion:3", "diffusion:7",
                        "diffusion:10", "closeness", "betweenness", "plec:20", "plec_cum:0.5"})
    out.push_back(MeasureSpec::parse(m));
  return out;
}

}  // namespace lapcen
