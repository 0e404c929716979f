#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapcen/graph.hpp"
#include "lapcen/scores.hpp"
#include "lapcen/spectrum.hpp"

namespace lapcen {

/// A measure named on the command line or in an experiment, e.g. "lec:3",
/// "plec:20", "plec_cum:0.5", "glec_degree", "degree", "eigenvector:mean_one",
/// "katz:0.8", "bonacich", "diffusion:10", "diffusion:3:0.1", "closeness",
/// "betweenness", "phi:2". Missing arguments take the documented defaults.
struct MeasureSpec {
  std::string name;
  std::vector<std::string> args;

  static MeasureSpec parse(std::string_view text);
  std::string str() const;
  bool needs_spectrum() const;
};

/// Known measure names, for help text.
const std::vector<std::string>& measure_names();

/// Graph plus a lazily computed Laplacian spectrum.
class MeasureContext {
 public:
  explicit MeasureContext(const Graph& g) : graph_(g) {}
  MeasureContext(Graph&&) = delete;

  const Graph& graph() const { return graph_; }
  const Spectrum<double>& spectrum();

 private:
  const Graph& graph_;
  std::optional<Spectrum<double>> spectrum_;
};

ScoreVector<double> compute_measure(const MeasureSpec& spec, MeasureContext& ctx);

/// The comparison bundle: degree, eigenvector (mean_one), katz, bonacich,
/// diffusion T = 3, 7, 10, closeness, betweenness, pLEC 20% and 50%-rule.
std::vector<MeasureSpec> classic_bundle();

}  // namespace lapcen
