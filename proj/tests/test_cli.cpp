#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "lapcen/lapcen.hpp"

namespace fs = std::filesystem;
using namespace lapcen;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lapcen");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lapcen_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = (path / name).string();
    if (!text.empty()) write_text(p, text);
    return p;
  }
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("lec on star(4)") {
  TempDir t;
  const auto input = t.file("star4.edges", "0 1\n0 2\n0 3\n");
  const auto r = run({"lec", "--input", input, "--order", "1"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 6);
  CHECK(l[0] == "# measure=lec order=1");
  CHECK(l[1] == "label,score");
  CHECK(std::stod(l[2].substr(2)) == doctest::Approx(1));
  CHECK(std::stod(l[3].substr(2)) == doctest::Approx(1.0 / 3));

  const auto pct = run({"lec", "--input", input, "--pct", "20"});
  CHECK(pct.code == 0);
  CHECK(pct.out.find("measure=plec pct=20 order=1") != std::string::npos);
  const auto thr = run({"lec", "--input", input, "--threshold", "0.5", "--format", "json"});
  CHECK(thr.code == 0);
  CHECK(nlohmann::json::parse(thr.out)["measure"] == "plec_cum");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"lec", "--input", "florentine"}).code == 2);
  CHECK(run({"lec", "--input", "florentine", "--order", "1", "--pct", "5"}).code == 2);
  CHECK(run({"lec", "--order", "1"}).code == 2);
  CHECK(run({"lec", "--input", "florentine", "--order", "x"}).code == 2);
  CHECK(run({"spectrum", "--input", "florentine", "--format", "xml"}).code == 2);
  CHECK(run({"gen", "--model", "ER", "--n", "10"}).code == 2);
  CHECK(run({"target", "--input", "florentine"}).code == 2);
  CHECK(run({"experiment", "--model", "BA", "--n", "20", "--m", "2", "--reps", "1", "--summary", "kendall_degree"})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("data errors exit 1 with line numbers") {
  TempDir t;
  const auto bad = run({"spectrum", "--input", t.file("bad.edges", "a b\nc c\n")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"spectrum", "--input", t.file("missing.edges")}).code == 1);
  CHECK(run({"lec", "--input", "florentine", "--order", "16"}).code == 1);
  CHECK(run({"equilibrium", "--input", "florentine", "--beta", "-1"}).code == 1);
  CHECK(run({"target", "--input", "florentine", "--beta", "1", "--targets", "Nobody"}).code == 1);
  CHECK(run({"centrality", "--input", "florentine", "--measure", "bogus"}).code == 1);
}

TEST_CASE("order policies") {
  auto r = run({"order", "--input", "florentine"});
  CHECK(r.code == 0);
  CHECK(lines(r.out)[1].rfind("largest_gap,1,", 0) == 0);
  r = run({"order", "--input", "florentine", "--policy", "cumulative:0.5", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["policy"] == "cumulative:0.5");
  CHECK(j["cumulative_fraction"].get<double>() >= 0.5);
}

TEST_CASE("spectrum with eigenvector dump") {
  TempDir t;
  const auto ev = t.file("ev.csv");
  const auto r = run({"spectrum", "--input", "florentine", "--eigenvectors", ev});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 17);
  CHECK(lines(read_text(ev)).size() == 17);
}

TEST_CASE("gen output feeds back into analysis") {
  TempDir t;
  const auto g = t.file("ba.edges");
  CHECK(run({"gen", "--model", "BA", "--n", "60", "--m", "2", "--seed", "4", "--output", g}).code == 0);
  const Graph back = read_edge_list(g);
  CHECK(back == generate(GenSpec::ba(60, 2, 4)));
  CHECK(run({"lec", "--input", g, "--pct", "20"}).code == 0);

  const auto dir = t.file("reps");
  CHECK(run({"gen", "--model", "ER", "--n", "30", "--p", "0.1", "--reps", "3", "--seed", "10", "--output", dir}).code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 3);
  CHECK(read_edge_list((fs::path(dir) / "ER_n30_seed11.edges").string()) == generate(GenSpec::er(30, 0.1, 11)));

  const auto spec = t.file("spec.json", R"({"model": "ER", "n": 40, "avg_degree": 4, "seed": 2})");
  const auto r = run({"gen", "--spec", spec});
  CHECK(r.code == 0);
  CHECK(parse_edge_list(r.out) == generate(GenSpec::er_avg_degree(40, 4, 2)));
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<std::string> args{"experiment", "--model", "BA", "--n", "40", "--m", "2", "--reps", "3",
                                      "--seed", "5", "--measure", "plec:20", "--summary", "kendall_degree"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out)[0] == "spec_id,model,n,param,seed,measure,statistic,key,value");
}

TEST_CASE("output directory from the environment") {
  TempDir t;
  ::setenv(cli::kOutputDirEnv, t.path.c_str(), 1);
  const auto r = run({"florentine-demo", "--output", "demo.csv"});
  ::unsetenv(cli::kOutputDirEnv);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(fs::exists(t.path / "demo.csv"));
}

TEST_CASE("florentine demo") {
  const auto r = run({"florentine-demo"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  const auto header = std::find_if(l.begin(), l.end(), [](const std::string& s) { return s.rfind("label,", 0) == 0; });
  REQUIRE(header != l.end());
  CHECK(*header == "label,lec:0,lec:1,lec:3,lec:6,degree,betweenness,closeness,eigenvector,katz:0.8,bonacich:0.8");
  CHECK(l.end() - header == 17);
  const auto medici = std::find_if(l.begin(), l.end(), [](const std::string& s) { return s.rfind("Medici,", 0) == 0; });
  REQUIRE(medici != l.end());
  CHECK(medici->rfind("Medici,0.0625,0.816", 0) == 0);
}

TEST_CASE("centrality bundle over several graphs") {
  TempDir t;
  const auto a = t.file("a.edges", serialize_edge_list(star(5)));
  const auto b = t.file("b.edges", serialize_edge_list(path(4)));
  const auto r = run({"centrality", "--input", a, "--input", b});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  const auto header = std::find_if(l.begin(), l.end(), [](const std::string& s) { return s.rfind("graph,label,", 0) == 0; });
  REQUIRE(header != l.end());
  CHECK(l.end() - header == 10);
  const auto j = run({"centrality", "--input", a, "--measure", "lec:2", "--measure", "katz:0.5", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["columns"] == nlohmann::json::array({"lec:2", "katz:0.5"}));
}

TEST_CASE("economic subcommands") {
  TempDir t;
  auto r = run({"equilibrium", "--input", "florentine", "--beta", "0.5", "--theta", "eigvec:1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("max_best_response_violation=") != std::string::npos);

  r = run({"target", "--input", "florentine", "--beta", "2", "--targets", "Strozzi,Pucci"});
  CHECK(r.code == 0);
  CHECK(r.out.find("optimal_target=Strozzi") != std::string::npos);

  r = run({"disclose", "--input", "florentine", "--beta", "1", "--beta-tilde", "0.3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 16);

  r = run({"disclose", "--input", "florentine", "--beta", "1", "--beta-tilde", "0.3", "--diag"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# measure=informativeness", 0) == 0);
  CHECK(run({"disclose", "--input", "florentine", "--beta", "1", "--beta-tilde", "5", "--diag"}).code == 1);

  const auto sc = t.file("sc.json", R"({"beta": 1.5, "theta": "unit:Medici", "targets": ["Medici", "Strozzi"]})");
  r = run({"target", "--input", "florentine", "--scenario", sc});
  CHECK(r.code == 0);
  CHECK(r.out.find("optimal_target=Medici") != std::string::npos);
}
