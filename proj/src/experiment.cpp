#include "lapcen/experiment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lapcen/centrality.hpp"
#include "lapcen/lec.hpp"
#include "lapcen/stats.hpp"

namespace lapcen {

SummarySpec SummarySpec::parse(std::string_view text) {
  SummarySpec s;
  const auto colon = text.find(':');
  s.name = std::string(text.substr(0, colon));
  if (s.name == "cumulative_at") {
    if (colon == std::string_view::npos) throw std::invalid_argument("cumulative_at needs a fraction, e.g. cumulative_at:0.2");
    s.arg = std::stod(std::string(text.substr(colon + 1)));
    if (!(s.arg >= 0.0 && s.arg <= 1.0)) throw std::invalid_argument("cumulative_at fraction must lie in [0, 1]");
    return s;
  }
  if (colon != std::string_view::npos) throw std::invalid_argument("summary '" + s.name + "' takes no argument");
  if (s.name != "cumulative" && s.name != "percentile" && s.name != "kendall_degree" && s.name != "pearson_degree" &&
      s.name != "spearman_degree")
    throw std::invalid_argument("unknown summary '" + s.name + "'");
  return s;
}

namespace {

void run_one(ExperimentResult& res, const std::vector<MeasureSpec>& measures,
             const std::vector<SummarySpec>& summaries, bool keep_scores) {
  const Graph g = generate(res.spec);
  MeasureContext ctx(g);
  auto emit = [&](std::string measure, std::string statistic, std::string key, double value) {
    res.rows.push_back({res.spec_id, res.spec, std::move(measure), std::move(statistic), std::move(key), value});
  };

  const Index n = g.size();
  for (const auto& s : summaries) {
    if (s.name == "cumulative") {
      const auto& sp = ctx.spectrum();
      for (Index k = 0; k < n; ++k)
        emit("spectrum", "cumulative_fraction", format_number(double(k) / double(n)), cumulative_fraction(sp, k));
    } else if (s.name == "cumulative_at") {
      const Index k = std::min<Index>(n - 1, static_cast<Index>(std::ceil(s.arg * double(n) - 1e-9)));
      emit("spectrum", "cumulative_fraction", format_number(s.arg), cumulative_fraction(ctx.spectrum(), k));
    }
  }

  const Eigen::VectorXd deg = degrees(g).cast<double>();
  for (const auto& m : measures) {
    const std::string name = m.str();
    const ScoreVector<double> sv = compute_measure(m, ctx);
    for (const auto& p : sv.params) {
      if (p.name == "order") emit(name, "order", "", std::stod(p.value));
    }
    for (const auto& s : summaries) {
      if (s.name == "percentile") {
        for (auto [pct, score] : percentile_curve(sv.scores)) emit(name, "percentile", format_number(pct), score);
      } else if (s.name == "kendall_degree") {
        emit(name, "kendall_tau_b", "degree", kendall_tau_b(sv.scores, deg));
      } else if (s.name == "pearson_degree") {
        emit(name, "pearson", "degree", pearson(sv.scores, deg));
      } else if (s.name == "spearman_degree") {
        emit(name, "spearman", "degree", spearman(sv.scores, deg));
      }
    }
    if (keep_scores) res.measures.emplace(name, sv);
  }
}

}  // namespace

std::vector<ExperimentResult> batch_experiment(const std::vector<GenSpec>& specs,
                                               const std::vector<MeasureSpec>& measures,
                                               const std::vector<SummarySpec>& summaries, bool keep_scores) {
  std::vector<ExperimentResult> results;
  results.reserve(specs.size());
  for (std::size_t id = 0; id < specs.size(); ++id) {
    ExperimentResult res;
    res.spec_id = id;
    res.spec = specs[id];
    try {
      run_one(res, measures, summaries, keep_scores);
    } catch (const std::exception& e) {
      res.error = e.what();
      res.rows.push_back({id, specs[id], "", "error", e.what(), std::numeric_limits<double>::quiet_NaN()});
    }
    results.push_back(std::move(res));
  }
  return results;
}

std::vector<ExperimentRow> flatten(const std::vector<ExperimentResult>& results) {
  std::vector<ExperimentRow> rows;
  for (const auto& r : results) rows.insert(rows.end(), r.rows.begin(), r.rows.end());
  return rows;
}

}  // namespace lapcen
