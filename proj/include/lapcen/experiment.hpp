#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapcen/measures.hpp"
#include "lapcen/randnet.hpp"

namespace lapcen {

/// Per-graph summaries that batch_experiment can emit.
///   cumulative        full cumulative eigenvalue curve, keyed by k/n
///   cumulative_at:x   curve value at k = ceil(x n)
///   percentile        percentile curve of every measure
///   kendall_degree, pearson_degree, spearman_degree
///                     correlation of every measure with degree
struct SummarySpec {
  std::string name;
  double arg = 0.0;

  static SummarySpec parse(std::string_view text);
};

/// One line of the long-format result table.
struct ExperimentRow {
  std::size_t spec_id = 0;
  GenSpec spec;
  std::string measure;
  std::string statistic;
  std::string key;
  double value = 0.0;
};

struct ExperimentResult {
  std::size_t spec_id = 0;
  GenSpec spec;
  std::map<std::string, ScoreVector<double>> measures;  // keyed by MeasureSpec::str()
  std::vector<ExperimentRow> rows;
  std::optional<std::string> error;
};

/// Generates each graph, computes every measure and summary. A failure on one
/// graph becomes a row with statistic "error" (message in `key`, value NaN)
/// and the batch carries on. Rows come out in spec order.
std::vector<ExperimentResult> batch_experiment(const std::vector<GenSpec>& specs,
                                               const std::vector<MeasureSpec>& measures,
                                               const std::vector<SummarySpec>& summaries,
                                               bool keep_scores = false);

std::vector<ExperimentRow> flatten(const std::vector<ExperimentResult>& results);

}  // namespace lapcen
