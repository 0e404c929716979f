#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapcen/lapcen.hpp"

namespace lapcen::cli {

namespace {

namespace fs = std::filesystem;

/// Data-level failure: exit code 1.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string output;
  std::string format = "csv";
  bool verbose = false;
};

struct Sink {
  const Common& common;
  std::ostream& out;

  Format format() const { return parse_format(common.format); }

  std::string resolve(const std::string& path) const {
    if (path.empty() || fs::path(path).is_absolute()) return path;
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) return (fs::path(dir) / path).string();
    return path;
  }

  void emit(const std::string& text) const {
    if (common.output.empty() || common.output == "-") {
      out << text;
    } else {
      write_text(resolve(common.output), text);
    }
  }
};

Graph load_graph(const std::string& path) {
  if (path == "florentine") return florentine();
  return read_edge_list(path);
}

std::string graph_id(const std::string& path) {
  return path == "florentine" ? path : fs::path(path).stem().string();
}

std::string row_csv(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
  return s + "\n";
}

// -- subcommands ------------------------------------------------------------

struct SpectrumArgs {
  std::string input;
  std::string eigenvectors;
};

void do_spectrum(const SpectrumArgs& a, const Sink& sink) {
  const Graph g = load_graph(a.input);
  const auto s = eigendecompose<double>(g);
  sink.emit(sink.format() == Format::csv ? spectrum_csv(s) : spectrum_json(s));
  if (!a.eigenvectors.empty()) write_text(sink.resolve(a.eigenvectors), eigenvectors_csv(g, s));
}

struct LecArgs {
  std::string input;
  std::optional<Index> order;
  std::optional<double> pct;
  std::optional<double> threshold;
};

void do_lec(const LecArgs& a, const Sink& sink) {
  const Graph g = load_graph(a.input);
  const auto s = eigendecompose<double>(g);
  ScoreVector<double> sv;
  if (a.order) {
    sv = lec(s, *a.order);
  } else if (a.pct) {
    sv = plec_proportional(s, *a.pct);
  } else {
    sv = plec_cumulative(s, *a.threshold).second;
  }
  sink.emit(sink.format() == Format::csv ? scores_csv(g, sv) : scores_json(g, sv));
}

struct CentralityArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> measures;
};

std::string run_compare(const std::vector<std::pair<std::string, Graph>>& graphs, const std::vector<MeasureSpec>& specs,
                        Format format) {
  std::vector<std::string> columns;
  for (const auto& m : specs) columns.push_back(m.str());
  std::vector<CompareBlock> blocks;
  for (const auto& [id, g] : graphs) {
    MeasureContext ctx(g);
    CompareBlock b{id, &g, {}};
    for (const auto& m : specs) b.measures.push_back(compute_measure(m, ctx));
    blocks.push_back(std::move(b));
  }
  return format == Format::csv ? compare_csv(columns, blocks) : compare_json(columns, blocks);
}

void do_centrality(const CentralityArgs& a, const Sink& sink) {
  std::vector<MeasureSpec> specs;
  for (const auto& m : a.measures) specs.push_back(MeasureSpec::parse(m));
  if (specs.empty()) specs = classic_bundle();
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& path : a.inputs) graphs.emplace_back(a.inputs.size() > 1 ? graph_id(path) : "", load_graph(path));
  sink.emit(run_compare(graphs, specs, sink.format()));
}

struct OrderArgs {
  std::string input;
  std::string policy = "largest_gap";
};

void do_order(const OrderArgs& a, const Sink& sink) {
  const Graph g = load_graph(a.input);
  const auto choice = suggest_order(eigendecompose<double>(g), OrderPolicy::parse(a.policy));
  sink.emit(sink.format() == Format::csv ? order_csv(choice) : order_json(choice));
}

struct GenArgs {
  std::string model = "ER";
  Index n = 0;
  std::optional<double> p;
  std::optional<double> avg_degree;
  std::optional<Index> m;
  std::uint64_t seed = 0;
  Index reps = 1;
  std::string spec_file;
};

GenSpec make_spec(const GenArgs& a, std::uint64_t seed) {
  if (!a.spec_file.empty()) {
    GenSpec s = parse_genspec_json(read_text(a.spec_file));
    s.seed += seed - a.seed;
    return s;
  }
  const Model model = parse_model(a.model);
  GenSpec s;
  if (model == Model::ER) {
    if (a.p.has_value() == a.avg_degree.has_value()) throw CLI::ValidationError("ER needs exactly one of --p, --avg-degree");
    s = a.p ? GenSpec::er(a.n, *a.p, seed) : GenSpec::er_avg_degree(a.n, *a.avg_degree, seed);
  } else {
    if (!a.m) throw CLI::ValidationError("BA needs --m");
    s = GenSpec::ba(a.n, *a.m, seed);
  }
  s.validate();
  return s;
}

void do_gen(const GenArgs& a, const Sink& sink) {
  if (a.reps < 1) throw CLI::ValidationError("--reps must be >= 1");
  if (a.reps == 1) {
    const GenSpec spec = make_spec(a, a.seed);
    const Graph g = generate(spec);
    sink.emit("# " + genspec_json(spec) + serialize_edge_list(g));
    return;
  }
  if (sink.common.output.empty()) throw CLI::ValidationError("--reps > 1 needs --output naming a directory");
  const fs::path dir = sink.resolve(sink.common.output);
  fs::create_directories(dir);
  for (Index r = 0; r < a.reps; ++r) {
    const GenSpec spec = make_spec(a, a.seed + static_cast<std::uint64_t>(r));
    const Graph g = generate(spec);
    const std::string name = to_string(spec.model) + "_n" + std::to_string(spec.n) + "_seed" + std::to_string(spec.seed);
    write_text((dir / (name + ".edges")).string(), "# " + genspec_json(spec) + serialize_edge_list(g));
  }
}

struct EconArgs {
  std::string input;
  std::optional<double> beta;
  double beta_tilde = 0.0;
  std::string theta = "uniform";
  std::string targets = "all";
  std::string scenario;
  bool diag = false;
};

EconScenario<double> load_scenario(const EconArgs& a, const Graph& g, const Spectrum<double>& s) {
  if (!a.scenario.empty()) return parse_scenario(read_text(a.scenario), g, s);
  if (!a.beta) throw CLI::ValidationError("--beta or --scenario is required");
  EconScenario<double> sc;
  sc.beta = *a.beta;
  sc.beta_tilde = a.beta_tilde;
  sc.theta = parse_theta(a.theta, g, s);
  sc.targets = parse_targets(a.targets, g);
  return sc;
}

void do_equilibrium(const EconArgs& a, const Sink& sink) {
  const Graph g = load_graph(a.input);
  const auto s = eigendecompose<double>(g);
  const auto sc = load_scenario(a, g, s);
  const Vector<double> act = equilibrium<double>(g, sc.beta, sc.theta);
  const double violation = best_response_check<double>(g, sc.beta, act, sc.theta);
  if (sink.format() == Format::csv) {
    std::string text = "# beta=" + format_number(sc.beta) + " max_best_response_violation=" + format_number(violation) +
                       " social_loss=" + format_number(act.squaredNorm()) + "\n";
    text += "label,theta,action\n";
    for (Index i = 0; i < g.size(); ++i)
      text += row_csv({g.label(i), format_number(sc.theta(i)), format_number(act(i))});
    sink.emit(text);
  } else {
    nlohmann::ordered_json j{{"beta", sc.beta}, {"max_best_response_violation", violation},
                             {"social_loss", act.squaredNorm()}};
    j["rows"] = nlohmann::ordered_json::array();
    for (Index i = 0; i < g.size(); ++i) j["rows"].push_back({{"label", g.label(i)}, {"theta", sc.theta(i)}, {"action", act(i)}});
    sink.emit(j.dump(2) + "\n");
  }
}

void do_target(const EconArgs& a, const Sink& sink) {
  const Graph g = load_graph(a.input);
  const auto s = eigendecompose<double>(g);
  const auto sc = load_scenario(a, g, s);
  const Vector<double> phi = targeting_scores(s, sc.beta).scores;
  const Vector<double> direct = social_losses_direct<double>(g, sc.beta);
  const Index best = optimal_target(s, sc.beta, sc.targets);
  std::vector<bool> feasible(static_cast<std::size_t>(g.size()), false);
  for (Index i : sc.targets) feasible[static_cast<std::size_t>(i)] = true;
  const double n = double(g.size());
  if (sink.format() == Format::csv) {
    std::string text = "# beta=" + format_number(sc.beta) + " optimal_target=" + g.label(best) +
                       " no_intervention_loss=" + format_number(n) +
                       " uniform_intervention_loss=" + format_number(uniform_intervention_loss<double>(g, sc.beta)) + "\n";
    text += "label,phi,loss_spectral,loss_direct,feasible\n";
    for (Index i = 0; i < g.size(); ++i)
      text += row_csv({g.label(i), format_number(phi(i)), format_number(n - 1 - phi(i)), format_number(direct(i)),
                       feasible[static_cast<std::size_t>(i)] ? "1" : "0"});
    sink.emit(text);
  } else {
    nlohmann::ordered_json j{{"beta", sc.beta},
                             {"optimal_target", g.label(best)},
                             {"no_intervention_loss", n},
                             {"uniform_intervention_loss", uniform_intervention_loss<double>(g, sc.beta)}};
    j["rows"] = nlohmann::ordered_json::array();
    for (Index i = 0; i < g.size(); ++i)
      j["rows"].push_back({{"label", g.label(i)},
                           {"phi", phi(i)},
                           {"loss_spectral", n - 1 - phi(i)},
                           {"loss_direct", direct(i)},
                           {"feasible", feasible[static_cast<std::size_t>(i)] ? 1 : 0}});
    sink.emit(j.dump(2) + "\n");
  }
}

void do_disclose(const EconArgs& a, const Sink& sink) {
  const Graph g = load_graph(a.input);
  const auto s = eigendecompose<double>(g);
  const auto sc = load_scenario(a, g, s);
  const Disclosure d = disclosure_set(s, sc.beta, sc.beta_tilde);
  if (a.diag) {
    if (d.empty()) throw DataError("nothing is disclosed at this beta_tilde; no informativeness diagonal");
    const auto sv = informativeness_diag(s, d.order);
    sink.emit(sink.format() == Format::csv ? scores_csv(g, sv) : scores_json(g, sv));
    return;
  }
  const Index n = s.size();
  std::vector<bool> shown(static_cast<std::size_t>(n), false);
  for (Index k : d.statistics) shown[static_cast<std::size_t>(k)] = true;
  auto criterion = [&](Index k) { return 1.0 / (2.0 * double(n)) + sc.beta / double(n) * s.lambda(k); };
  if (sink.format() == Format::csv) {
    std::string text = "# beta=" + format_number(sc.beta) + " beta_tilde=" + format_number(sc.beta_tilde) +
                       " disclosed_order=" + std::to_string(d.order) + "\n";
    text += "statistic,eigenvalue,criterion,disclosed\n";
    for (Index k = 0; k < n; ++k)
      text += row_csv({std::to_string(k), format_number(s.lambda(k)), format_number(criterion(k)),
                       shown[static_cast<std::size_t>(k)] ? "1" : "0"});
    sink.emit(text);
  } else {
    nlohmann::ordered_json j{{"beta", sc.beta}, {"beta_tilde", sc.beta_tilde}, {"disclosed_order", d.order}};
    j["rows"] = nlohmann::ordered_json::array();
    for (Index k = 0; k < n; ++k)
      j["rows"].push_back({{"statistic", k},
                           {"eigenvalue", s.lambda(k)},
                           {"criterion", criterion(k)},
                           {"disclosed", shown[static_cast<std::size_t>(k)] ? 1 : 0}});
    sink.emit(j.dump(2) + "\n");
  }
}

struct ExperimentArgs {
  std::string specs_file;
  std::string model = "ER";
  std::vector<Index> sizes;
  std::optional<double> p;
  std::optional<double> avg_degree;
  std::optional<Index> m;
  std::uint64_t seed = 0;
  Index reps = 10;
  std::vector<std::string> measures;
  std::vector<std::string> summaries;
};

void do_experiment(const ExperimentArgs& a, const Sink& sink) {
  std::vector<GenSpec> specs;
  if (!a.specs_file.empty()) {
    specs = parse_genspecs_json(read_text(a.specs_file));
  } else {
    if (a.sizes.empty()) throw CLI::ValidationError("--n or --specs is required");
    if (a.reps < 1) throw CLI::ValidationError("--reps must be >= 1");
    GenArgs ga;
    ga.model = a.model;
    ga.p = a.p;
    ga.avg_degree = a.avg_degree;
    ga.m = a.m;
    for (Index n : a.sizes) {
      ga.n = n;
      for (Index r = 0; r < a.reps; ++r) specs.push_back(make_spec(ga, a.seed + static_cast<std::uint64_t>(r)));
    }
  }
  std::vector<MeasureSpec> measures;
  for (const auto& m : a.measures) measures.push_back(MeasureSpec::parse(m));
  std::vector<SummarySpec> summaries;
  for (const auto& s : a.summaries) summaries.push_back(SummarySpec::parse(s));
  if (summaries.empty()) summaries.push_back(SummarySpec::parse("cumulative"));
  if (measures.empty())
    for (const auto& s : summaries)
      if (s.name != "cumulative" && s.name != "cumulative_at")
        throw CLI::ValidationError("summary '" + s.name + "' needs at least one --measure");
  const auto rows = flatten(batch_experiment(specs, measures, summaries));
  sink.emit(sink.format() == Format::csv ? experiment_csv(rows) : experiment_json(rows));
}

void do_florentine_demo(const Sink& sink) {
  const Graph g = florentine();
  std::vector<MeasureSpec> specs;
  for (const char* m : {"lec:0", "lec:1", "lec:3", "lec:6", "degree", "betweenness", "closeness", "eigenvector",
                        "katz:0.8", "bonacich:0.8"})
    specs.push_back(MeasureSpec::parse(m));
  sink.emit(run_compare({{"", g}}, specs, sink.format()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian eigenvector centrality toolkit"};
  app.name(args.empty() ? "lapcen" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", common.output, "Output file (default stdout); relative to $" + std::string(kOutputDirEnv));
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--verbose,-v", common.verbose, "Report progress on stderr");
  };
  const char* input_help = "Edge-list file, or 'florentine' for the bundled network";

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues and cumulative fractions");
  spectrum->add_option("--input,-i", spectrum_args.input, input_help)->required();
  spectrum->add_option("--eigenvectors", spectrum_args.eigenvectors, "Also write the eigenvector matrix here (CSV)");
  add_common(spectrum);

  LecArgs lec_args;
  auto* lec_cmd = app.add_subcommand("lec", "LEC of a fixed order, or pLEC by percentage / cumulative threshold");
  lec_cmd->add_option("--input,-i", lec_args.input, input_help)->required();
  auto* o_order = lec_cmd->add_option("--order,-r", lec_args.order, "LEC order r in 0..n-1");
  auto* o_pct = lec_cmd->add_option("--pct", lec_args.pct, "Proportional order, percent of n");
  auto* o_thr = lec_cmd->add_option("--threshold", lec_args.threshold, "Cumulative eigenvalue threshold in (0,1)");
  o_order->excludes(o_pct)->excludes(o_thr);
  o_pct->excludes(o_thr);
  add_common(lec_cmd);

  CentralityArgs cent_args;
  auto* cent = app.add_subcommand("centrality", "Wide table of centrality measures (default: comparison bundle)");
  cent->add_option("--input,-i", cent_args.inputs, input_help + std::string(" (repeatable)"))->required();
  cent->add_option("--measure", cent_args.measures, "Measure spec, e.g. lec:3, plec:20, katz:0.8 (repeatable)");
  add_common(cent);

  OrderArgs order_args;
  auto* order = app.add_subcommand("order", "Suggest an LEC order from the spectrum");
  order->add_option("--input,-i", order_args.input, input_help)->required();
  order->add_option("--policy", order_args.policy, "largest_gap | cumulative:<t> | proportional:<pct>");
  add_common(order);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate seeded random graphs as edge lists");
  gen->add_option("--model", gen_args.model, "ER or BA")->check(CLI::IsMember({"ER", "BA", "er", "ba"}));
  gen->add_option("--n", gen_args.n, "Node count");
  gen->add_option("--p", gen_args.p, "ER edge probability");
  gen->add_option("--avg-degree", gen_args.avg_degree, "ER average degree (p = d/(n-1))");
  gen->add_option("--m", gen_args.m, "BA edges per arriving node");
  gen->add_option("--seed", gen_args.seed, "Seed; replicate r uses seed + r");
  gen->add_option("--reps", gen_args.reps, "Number of graphs");
  gen->add_option("--spec", gen_args.spec_file, "GenSpec JSON file instead of flags");
  add_common(gen);

  EconArgs econ_args;
  auto add_econ = [&](CLI::App* sub) {
    sub->add_option("--input,-i", econ_args.input, input_help)->required();
    sub->add_option("--beta", econ_args.beta, "Coordination strength >= 0");
    sub->add_option("--scenario", econ_args.scenario, "Scenario JSON (overrides the flags)");
    add_common(sub);
  };
  auto* equil = app.add_subcommand("equilibrium", "Equilibrium actions (I + beta L)^-1 theta");
  add_econ(equil);
  equil->add_option("--theta", econ_args.theta, "uniform | eigvec:k | unit:<label> | comma-separated values");
  auto* target = app.add_subcommand("target", "Targeting scores phi and social losses");
  add_econ(target);
  target->add_option("--targets", econ_args.targets, "Feasible targets: 'all' or comma-separated labels");
  auto* disclose = app.add_subcommand("disclose", "Public-information disclosure set");
  add_econ(disclose);
  disclose->add_option("--beta-tilde", econ_args.beta_tilde, "Principal's coordination weight");
  disclose->add_flag("--diag", econ_args.diag, "Emit the informativeness diagonal instead");

  ExperimentArgs exp_args;
  auto* exp = app.add_subcommand("experiment", "Batch random-graph experiment, long-format output");
  exp->add_option("--specs", exp_args.specs_file, "JSON array of GenSpec objects");
  exp->add_option("--model", exp_args.model, "ER or BA")->check(CLI::IsMember({"ER", "BA", "er", "ba"}));
  exp->add_option("--n", exp_args.sizes, "Node counts (repeatable)");
  exp->add_option("--p", exp_args.p, "ER edge probability");
  exp->add_option("--avg-degree", exp_args.avg_degree, "ER average degree");
  exp->add_option("--m", exp_args.m, "BA edges per arriving node");
  exp->add_option("--seed", exp_args.seed, "Base seed; replicate r uses seed + r");
  exp->add_option("--reps", exp_args.reps, "Graphs per size");
  exp->add_option("--measure", exp_args.measures, "Measure spec (repeatable)");
  exp->add_option("--summary", exp_args.summaries,
                  "cumulative | cumulative_at:<x> | percentile | kendall_degree | pearson_degree | spearman_degree");
  add_common(exp);

  auto* demo = app.add_subcommand("florentine-demo", "LEC orders 0,1,3,6 and classical measures on the Florentine families");
  add_common(demo);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  const Sink sink{common, out};
  try {
    if (*spectrum) do_spectrum(spectrum_args, sink);
    else if (*lec_cmd) {
      if (!lec_args.order && !lec_args.pct && !lec_args.threshold)
        throw CLI::ValidationError("lec needs one of --order, --pct, --threshold");
      do_lec(lec_args, sink);
    }
    else if (*cent) do_centrality(cent_args, sink);
    else if (*order) do_order(order_args, sink);
    else if (*gen) do_gen(gen_args, sink);
    else if (*equil) do_equilibrium(econ_args, sink);
    else if (*target) do_target(econ_args, sink);
    else if (*disclose) do_disclose(econ_args, sink);
    else if (*exp) do_experiment(exp_args, sink);
    else if (*demo) do_florentine_demo(sink);
    if (common.verbose) err << "done\n";
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lapcen::cli
