#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lapcen/experiment.hpp"
#include "lapcen/lec.hpp"
#include "lapcen/randnet.hpp"

namespace lapcen {

enum class Format { csv, json };
Format parse_format(std::string_view s);

/// `measure[name=value;...]`, or the bare measure without params.
std::string column_name(const ScoreVector<double>& sv);

/// "# measure=lec order=1" then "label,score" rows. JSON holds the same
/// fields: {"measure", "params", "rows": [{"label", "score"}]}.
std::string scores_csv(const Graph& g, const ScoreVector<double>& sv);
std::string scores_json(const Graph& g, const ScoreVector<double>& sv);

/// One graph's worth of rows in a wide comparison table.
struct CompareBlock {
  std::string graph_id;  // empty for single-graph tables
  const Graph* graph = nullptr;
  std::vector<ScoreVector<double>> measures;  // aligned with the column list
};

/// Wide table, one column per measure. Each block contributes a
/// "# [graph_id] column: params" line per measure and one row per node; a
/// leading "graph" column appears when any block has a graph_id.
/// JSON: {"columns": [...], "graphs": [{"graph", "params": {...}, "rows": [...]}]}.
std::string compare_csv(const std::vector<std::string>& columns, const std::vector<CompareBlock>& blocks);
std::string compare_json(const std::vector<std::string>& columns, const std::vector<CompareBlock>& blocks);

/// index,eigenvalue,cumulative_fraction with 1-based descending index.
std::string spectrum_csv(const Spectrum<double>& s);
std::string spectrum_json(const Spectrum<double>& s);
/// label,q1,...,qn; column qn is the constant vector.
std::string eigenvectors_csv(const Graph& g, const Spectrum<double>& s);

std::string order_csv(const OrderChoice& c);
std::string order_json(const OrderChoice& c);

/// spec_id,model,n,param,seed,measure,statistic,key,value
std::string experiment_csv(const std::vector<ExperimentRow>& rows);
std::string experiment_json(const std::vector<ExperimentRow>& rows);

std::string genspec_json(const GenSpec& spec);
GenSpec parse_genspec_json(std::string_view text);
/// A JSON array of GenSpec objects.
std::vector<GenSpec> parse_genspecs_json(std::string_view text);

std::string csv_field(std::string_view s);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace lapcen
