#include "lapcen/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lapcen/error.hpp"

namespace lapcen {

using ojson = nlohmann::ordered_json;

namespace {

ojson params_json(const ScoreVector<double>& sv) {
  ojson p = ojson::object();
  for (const auto& kv : sv.params) p[kv.name] = kv.value;
  return p;
}

std::string params_line(const ScoreVector<double>& sv) {
  std::string s = "measure=" + sv.measure;
  for (const auto& p : sv.params) s += " " + p.name + "=" + p.value;
  return s;
}

// JSON numbers for finite values, strings otherwise (JSON has no NaN).
ojson number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string column_name(const ScoreVector<double>& sv) {
  if (sv.params.empty()) return sv.measure;
  std::string s = sv.measure + "[";
  for (std::size_t i = 0; i < sv.params.size(); ++i) {
    if (i) s += ";";
    s += sv.params[i].name + "=" + sv.params[i].value;
  }
  return s + "]";
}

std::string scores_csv(const Graph& g, const ScoreVector<double>& sv) {
  if (sv.size() != g.size()) throw std::invalid_argument("score vector length differs from node count");
  std::string out = "# " + params_line(sv) + "\nlabel,score\n";
  for (Index i = 0; i < g.size(); ++i) out += csv_field(g.label(i)) + "," + format_number(sv(i)) + "\n";
  return out;
}

std::string scores_json(const Graph& g, const ScoreVector<double>& sv) {
  if (sv.size() != g.size()) throw std::invalid_argument("score vector length differs from node count");
  ojson j;
  j["measure"] = sv.measure;
  j["params"] = params_json(sv);
  j["rows"] = ojson::array();
  for (Index i = 0; i < g.size(); ++i) j["rows"].push_back({{"label", g.label(i)}, {"score", number(sv(i))}});
  return j.dump(2) + "\n";
}

std::string compare_csv(const std::vector<std::string>& columns, const std::vector<CompareBlock>& blocks) {
  const bool multi = std::any_of(blocks.begin(), blocks.end(), [](const CompareBlock& b) { return !b.graph_id.empty(); });
  std::string out;
  for (const auto& b : blocks) {
    if (b.measures.size() != columns.size()) throw std::invalid_argument("measure count differs from column count");
    for (std::size_t c = 0; c < columns.size(); ++c)
      out += "# " + (multi ? b.graph_id + " " : std::string()) + columns[c] + ": " + params_line(b.measures[c]) + "\n";
  }
  out += multi ? "graph,label" : "label";
  for (const auto& c : columns) out += "," + csv_field(c);
  out += "\n";
  for (const auto& b : blocks) {
    for (Index i = 0; i < b.graph->size(); ++i) {
      if (multi) out += csv_field(b.graph_id) + ",";
      out += csv_field(b.graph->label(i));
      for (const auto& m : b.measures) out += "," + format_number(m(i));
      out += "\n";
    }
  }
  return out;
}

std::string compare_json(const std::vector<std::string>& columns, const std::vector<CompareBlock>& blocks) {
  ojson j;
  j["columns"] = columns;
  j["graphs"] = ojson::array();
  for (const auto& b : blocks) {
    if (b.measures.size() != columns.size()) throw std::invalid_argument("measure count differs from column count");
    ojson block;
    block["graph"] = b.graph_id;
    block["params"] = ojson::object();
    for (std::size_t c = 0; c < columns.size(); ++c) {
      ojson p = params_json(b.measures[c]);
      p["measure"] = b.measures[c].measure;
      block["params"][columns[c]] = std::move(p);
    }
    block["rows"] = ojson::array();
    for (Index i = 0; i < b.graph->size(); ++i) {
      ojson row;
      row["label"] = b.graph->label(i);
      for (std::size_t c = 0; c < columns.size(); ++c) row[columns[c]] = number(b.measures[c](i));
      block["rows"].push_back(std::move(row));
    }
    j["graphs"].push_back(std::move(block));
  }
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum<double>& s) {
  std::string out = "index,eigenvalue,cumulative_fraction\n";
  for (Index k = 1; k <= s.size(); ++k) {
    const double frac = k <= s.size() - 1 ? cumulative_fraction(s, k) : 1.0;
    out += std::to_string(k) + "," + format_number(s.lambda(k)) + "," + format_number(frac) + "\n";
  }
  return out;
}

std::string spectrum_json(const Spectrum<double>& s) {
  ojson j;
  j["rows"] = ojson::array();
  for (Index k = 1; k <= s.size(); ++k) {
    const double frac = k <= s.size() - 1 ? cumulative_fraction(s, k) : 1.0;
    j["rows"].push_back({{"index", k}, {"eigenvalue", s.lambda(k)}, {"cumulative_fraction", frac}});
  }
  return j.dump(2) + "\n";
}

std::string eigenvectors_csv(const Graph& g, const Spectrum<double>& s) {
  std::string out = "label";
  for (Index k = 1; k <= s.size(); ++k) out += ",q" + std::to_string(k);
  out += "\n";
  for (Index i = 0; i < g.size(); ++i) {
    out += csv_field(g.label(i));
    for (Index k = 1; k <= s.size(); ++k) out += "," + format_number(s.q(k)(i));
    out += "\n";
  }
  return out;
}

std::string order_csv(const OrderChoice& c) {
  return "policy,order,gap,cumulative_fraction\n" + c.policy + "," + std::to_string(c.order) + "," +
         format_number(c.gap) + "," + format_number(c.fraction) + "\n";
}

std::string order_json(const OrderChoice& c) {
  ojson j{{"policy", c.policy}, {"order", c.order}, {"gap", c.gap}, {"cumulative_fraction", c.fraction}};
  return j.dump(2) + "\n";
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::string out = "spec_id,model,n,param,seed,measure,statistic,key,value\n";
  for (const auto& r : rows) {
    out += std::to_string(r.spec_id) + "," + to_string(r.spec.model) + "," + std::to_string(r.spec.n) + "," +
           r.spec.param_string() + "," + std::to_string(r.spec.seed) + "," + csv_field(r.measure) + "," +
           csv_field(r.statistic) + "," + csv_field(r.key) + "," + format_number(r.value) + "\n";
  }
  return out;
}

std::string experiment_json(const std::vector<ExperimentRow>& rows) {
  ojson j = ojson::array();
  for (const auto& r : rows) {
    j.push_back({{"spec_id", r.spec_id},
                 {"model", to_string(r.spec.model)},
                 {"n", r.spec.n},
                 {"param", r.spec.param_string()},
                 {"seed", r.spec.seed},
                 {"measure", r.measure},
                 {"statistic", r.statistic},
                 {"key", r.key},
                 {"value", number(r.value)}});
  }
  return j.dump(2) + "\n";
}

namespace {

ojson genspec_to_json(const GenSpec& s) {
  ojson j{{"model", to_string(s.model)}, {"n", s.n}};
  if (s.model == Model::ER) {
    j["p"] = s.p;
  } else {
    j["m"] = s.m;
  }
  j["seed"] = s.seed;
  return j;
}

GenSpec genspec_from_json(const ojson& j) {
  if (!j.is_object()) throw ParseError("GenSpec must be a JSON object");
  GenSpec s;
  try {
    s.model = parse_model(j.at("model").get<std::string>());
    s.n = j.at("n").get<Index>();
    if (s.model == Model::ER) {
      if (j.contains("avg_degree")) {
        s = GenSpec::er_avg_degree(s.n, j.at("avg_degree").get<double>(), 0);
      } else {
        s.p = j.at("p").get<double>();
      }
    } else {
      s.m = j.at("m").get<Index>();
    }
    s.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("GenSpec: ") + e.what());
  }
  s.validate();
  return s;
}

}  // namespace

std::string genspec_json(const GenSpec& spec) { return genspec_to_json(spec).dump() + "\n"; }

GenSpec parse_genspec_json(std::string_view text) {
  try {
    return genspec_from_json(ojson::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::vector<GenSpec> parse_genspecs_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_array()) throw ParseError("expected a JSON array of GenSpec objects");
  std::vector<GenSpec> out;
  for (const auto& item : j) out.push_back(genspec_from_json(item));
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lapcen
