#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "dofregion/cli/commands.hpp"
#include "dofregion/cli/pattern_file.hpp"
#include "dofregion/polytope.hpp"

using namespace dofregion;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("structured");
  const Result r = run(args);
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return json::parse(r.out);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("dofregion_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

const TempDir& temp() {
  static TempDir dir;
  return dir;
}

std::string pattern(const std::string& name, const std::string& rows, int k, int m) {
  return temp().write(name, "K: " + std::to_string(k) + "\nM: " + std::to_string(m) + "\nalpha:\n" + rows);
}

std::string crossed() { return pattern("crossed.yaml", "  - [\"1\", \"0\"]\n  - [\"0\", \"1\"]\n", 2, 2); }
std::string aligned() { return pattern("aligned.yaml", "  - [1, 0]\n  - [1, 0]\n", 2, 2); }
std::string ladder() {
  return pattern("ladder.yaml", "  - [1, 1/2]\n  - [3/4, 1/4]\n  - [1/2, 0]\n", 3, 2);
}

std::vector<std::string> texts(const json& facets) {
  std::vector<std::string> out;
  for (const auto& f : facets) out.push_back(f["text"].get<std::string>());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("pattern files parse exactly") {
  const CsitPattern p = cli::parse_pattern("K: 2\nM: 1\nalpha:\n  - [\"0.625\"]\n  - [3/8]\n");
  CHECK(p(0, 0) == Rational(5, 8));
  CHECK(p(1, 0) == Rational(3, 8));
  const CsitPattern j = cli::parse_pattern(R"({"K": 2, "M": 2, "alpha": [["1", "0"], ["0", "1/2"]]})");
  CHECK(j(1, 1) == Rational(1, 2));
  CHECK(cli::pattern_digest(p) == cli::pattern_digest(cli::parse_pattern("K: 2\nM: 1\nalpha: [[5/8], [0.375]]")));
  CHECK(cli::pattern_digest(p) != cli::pattern_digest(j));
}

TEST_CASE("pattern file errors carry positions") {
  const auto line_of = [](const std::string& text) {
    try {
      cli::parse_pattern(text);
    } catch (const cli::ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(-1, -1);
  };
  CHECK(line_of("K: 2\nM: 1\nalpha:\n  - [1]\n  - [3/2]\n") == std::make_pair(5, 6));
  CHECK(line_of("K: 2\nM: 1\nalpha:\n  - [1]\n  - [x]\n") == std::make_pair(5, 6));
  CHECK(line_of("K: 2\nM: 2\nalpha:\n  - [1, 0]\n  - [1]\n").first == 5);
  CHECK(line_of("K: 3\nM: 1\nalpha:\n  - [1]\n  - [1]\n").first == 4);
  CHECK(line_of("K: 2\nM: 1\nalpha: [[1], [1]\n").first > 0);
  CHECK(line_of("K: two\nM: 1\nalpha: [[1], [1]]\n") == std::make_pair(1, 4));
  CHECK(line_of("K: 1\nM: 1\nalpha: [[1]]\n").first > 0);
  CHECK(line_of("M: 1\nalpha: [[1], [1]]\n").first == 1);
  CHECK(line_of("").first == 1);
}

TEST_CASE("region command") {
  SUBCASE("separate coding for crossed subchannels") {
    const json doc = run_json({"region", "--pattern", crossed(), "--kind", "separate"});
    const auto f = texts(doc["facets"]);
    CHECK(f == std::vector<std::string>{"-d1 <= 0", "-d2 <= 0", "d1 + d2 <= 1"});
    CHECK(doc["vertices"].size() == 3);
    CHECK(doc["metadata"]["pattern_digest"].get<std::string>().size() == 16);
  }
  SUBCASE("outer equals subchannel 1 when M = 1") {
    const std::string single = pattern("single.yaml", "  - [1/3]\n  - [1]\n  - [0.5]\n", 3, 1);
    const json outer = run_json({"region", "--pattern", single, "--kind", "outer"});
    const json sub = run_json({"region", "--pattern", single, "--kind", "subchannel:1"});
    CHECK(outer["facets"] == sub["facets"]);
    CHECK(outer["vertices"] == sub["vertices"]);
  }
  SUBCASE("canonical triple sum") {
    const json doc = run_json({"region", "--kind", "canonical", "5/8", "5/8", "1/2"});
    CHECK(contains(texts(doc["facets"]), "d1 + d2 + d3 <= 17/8"));
  }
  SUBCASE("subset query") {
    const json doc = run_json({"region", "--pattern", crossed(), "--subset", "1,2"});
    CHECK(doc["subset"]["max_sum"] == "3/2");
    CHECK(doc["subset"]["bound"] == "3/2");
    const json sep = run_json({"region", "--pattern", crossed(), "--kind", "separate", "--subset", "2,1"});
    CHECK(sep["subset"]["max_sum"] == "1");
  }
  SUBCASE("vertices command") {
    const json doc = run_json({"vertices", "--pattern", crossed()});
    CHECK_FALSE(doc.contains("facets"));
    CHECK(doc["vertices"].size() == 5);
  }
  SUBCASE("table output") {
    const Result r = run({"region", "--pattern", crossed()});
    CHECK(r.code == 0);
    CHECK(r.out.find("d1 + d2 <= 3/2") != std::string::npos);
    CHECK(r.out.find("(1, 1/2)") != std::string::npos);
  }
}

TEST_CASE("region reports round trip") {
  for (const std::string& kind : {"outer", "separate", "subchannel:2"}) {
    const json doc = run_json({"region", "--pattern", ladder(), "--kind", kind});
    std::vector<VectorXr> vertices;
    for (const auto& v : doc["vertices"]) {
      std::vector<Rational> entries;
      for (const auto& x : v) entries.push_back(parse_rational(x.get<std::string>()));
      vertices.push_back(make_vector(entries));
    }
    const HPolytope hull = convex_hull(3, vertices);
    std::vector<json> rebuilt;
    for (const auto& row : hull.inequalities()) {
      json coefficients = json::array();
      for (Eigen::Index i = 0; i < row.dimension(); ++i) coefficients.push_back(to_string(row.coefficients(i)));
      rebuilt.push_back(coefficients);
    }
    REQUIRE(rebuilt.size() == doc["facets"].size());
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
      CHECK(rebuilt[i] == doc["facets"][i]["coefficients"]);
      CHECK(to_string(hull.inequalities()[i].bound) == doc["facets"][i]["bound"].get<std::string>());
    }
  }
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"region", "--pattern", ladder(), "--kind", "separate"},
      {"separability", "--pattern", crossed()},
      {"decompose", "--pattern", ladder(), "3/4", "1/2", "1/4"},
      {"pn-decompose", "--pattern", ladder()},
      {"polymatroid", "1", "0.5", "0.8"},
      {"verify-lemma2", "1", "4/5", "1/2"},
  };
  for (const auto& args : commands) {
    for (const std::string& format : {"table", "structured"}) {
      auto full = args;
      full.push_back("--format");
      full.push_back(format);
      const Result a = run(full);
      const Result b = run(full);
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);
      CHECK_FALSE(a.out.empty());
    }
  }
}

TEST_CASE("separability command") {
  const json a = run_json({"separability", "--pattern", crossed()}, 1);
  CHECK(a["separable"] == false);
  CHECK(a["caps"]["separate"] == "1");
  CHECK(a["caps"]["joint"] == "3/2");
  CHECK(a["dof_witness"] == json::array({"1", "1/2"}));
  CHECK(a["order_witness"] == json({{"k", 1}, {"j", 2}, {"l", 1}, {"q", 2}}));

  const json b = run_json({"separability", "--pattern", aligned()});
  CHECK(b["separable"] == true);

  const json c = run_json({"separability", "--pattern", ladder()});
  CHECK(c["separable"] == true);
  const json p = run_json({"region", "--kind", "canonical", "3/4", "1/2", "1/4"});
  CHECK(c["region"]["facets"] == p["facets"]);
}

TEST_CASE("decompose command") {
  const json d = run_json({"decompose", "--pattern", aligned(), "3/4", "3/4"});
  CHECK(d["subchannels"][0]["tuple"] == json::array({"1", "1"}));
  CHECK(d["subchannels"][1]["tuple"] == json::array({"1/2", "1/2"}));
  CHECK(d["subchannels"][0]["in_region"] == true);
  CHECK(d["average_matches"] == true);

  const json z = run_json({"decompose", "--pattern", aligned(), "0", "0"});
  for (const auto& s : z["subchannels"]) CHECK(s["tuple"] == json::array({"0", "0"}));

  const Result out = run({"decompose", "--pattern", aligned(), "1", "1"});
  CHECK(out.code == 5);
  CHECK(out.err.find("violated facet: d1 + d2 <= 3/2") != std::string::npos);

  CHECK(run({"decompose", "--pattern", crossed(), "0", "0"}).code == 4);
  CHECK(run({"decompose", "--pattern", aligned(), "0"}).code == 3);
  CHECK(run({"decompose", "--pattern", aligned(), "0", "x"}).code == 2);
}

TEST_CASE("pn-decompose command") {
  const json l = run_json({"pn-decompose", "--pattern", ladder()});
  CHECK(l["replication"] == 4);
  CHECK(l["weights"] == json::array({"1/4", "1/4", "1/4", "1/4"}));
  CHECK(l["region_equality"] == true);

  const json ones = run_json({"pn-decompose", "--pattern", pattern("ones.yaml", "  - [1, 1]\n  - [1, 1]\n", 2, 2)});
  CHECK(ones["replication"] == 1);
  CHECK(ones["pn_pattern"] == json::array({json::array({"1"}), json::array({"1"})}));

  const json thirds = run_json({"pn-decompose", "--pattern", pattern("thirds.yaml", "  - [2/3]\n  - [1/3]\n", 2, 1)});
  CHECK(thirds["replication"] == 3);

  const json unordered = run_json({"pn-decompose", "--pattern", crossed()});
  CHECK(unordered["totally_ordered"] == false);
  CHECK_FALSE(unordered.contains("region_equality"));
}

TEST_CASE("polymatroid command") {
  const json a = run_json({"polymatroid", "1", "0.5", "0.8"}, 1);
  CHECK(a["violation"]["S"] == json::array({1, 2}));
  CHECK(a["violation"]["T"] == json::array({2, 3}));
  CHECK(a["violation"]["lhs"] == "13/10");
  CHECK(a["violation"]["rhs"] == "1");
  CHECK(run_json({"polymatroid", "0", "0", "0"})["polymatroid"] == true);
  const json b = run_json({"polymatroid", "1,0.8,0.5"}, 1);
  CHECK(b["violation"]["S"] == json::array({1, 3}));
  CHECK(b["violation"]["T"] == json::array({2, 3}));
  CHECK(run({"polymatroid", "1", "half"}).code == 2);
  CHECK(run({"polymatroid", "1", "3/2"}).code == 3);
}

TEST_CASE("verify-lemma2 command") {
  CHECK(run_json({"verify-lemma2", "1", "1/2"})["verdict"] == "PASS");
  CHECK(run_json({"verify-lemma2", "0", "0"})["verdict"] == "PASS");
  CHECK(run_json({"verify-lemma2", "1", "4/5", "1/2"})["verdict"] == "PASS");
  CHECK(run({"verify-lemma2", "1/2", "1"}).code == 2);
  CHECK(run({"verify-lemma2", "1/2", "1/0"}).code == 2);
}

TEST_CASE("exit codes for invalid arguments and parse errors") {
  CHECK(run({"region", "--pattern", crossed(), "--kind", "inner"}).code == 3);
  CHECK(run({"region", "--pattern", crossed(), "--kind", "subchannel:3"}).code == 3);
  CHECK(run({"region", "--pattern", crossed(), "--kind", "subchannel:x"}).code == 3);
  CHECK(run({"region", "--pattern", crossed(), "--subset", "3"}).code == 3);
  CHECK(run({"region", "--kind", "outer"}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({}).code == 3);
  CHECK(run({"region", "--pattern", crossed(), "--format", "xml"}).code == 3);
  CHECK(run({"region", "--pattern", crossed(), "--max-users", "0"}).code == 3);
  CHECK(run({"separability", "--pattern", ladder(), "--max-users", "2"}).code == 3);
  CHECK(run({"separability", "--pattern", temp().path("missing.yaml")}).code == 2);

  const std::string bad = temp().write("bad.yaml", "K: 2\nM: 1\nalpha:\n  - [1]\n  - [2]\n");
  const Result r = run({"region", "--pattern", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5, column 6") != std::string::npos);
  CHECK(run({"separability", "--pattern", bad}).code == 2);
  CHECK(run({"pn-decompose", "--pattern", bad}).code == 2);
}

TEST_CASE("plot export") {
  const std::string file = temp().path("plot.json");
  CHECK(run({"region", "--pattern", crossed(), "--export-plot", file}).code == 0);
  std::ifstream in(file);
  const json plot = json::parse(in);
  CHECK(plot["dimension"] == 2);
  CHECK(plot["vertices"].size() == 5);
  CHECK(plot["edges"].size() == 5);
  for (const auto& f : plot["facets"]) CHECK(f["vertices"].size() == 2);

  const std::string ladder_plot = temp().path("ladder_plot.json");
  CHECK(run({"region", "--pattern", ladder(), "--export-plot", ladder_plot}).code == 0);
  std::ifstream in3(ladder_plot);
  const json plot3 = json::parse(in3);
  // Euler: V - E + F = 2 for a 3-polytope.
  const auto v = static_cast<long>(plot3["vertices"].size());
  const auto e = static_cast<long>(plot3["edges"].size());
  const auto f = static_cast<long>(plot3["facets"].size());
  CHECK(v - e + f == 2);

  const std::string four = pattern("four.yaml", "  - [1]\n  - [1]\n  - [1]\n  - [1]\n", 4, 1);
  CHECK(run({"region", "--pattern", four, "--export-plot", temp().path("four.json")}).code == 3);
  CHECK(run({"separability", "--pattern", crossed(), "--export-plot", file}).code == 3);
}

TEST_CASE("the installed tool reports exit codes to the shell") {
  const auto status = [](const std::string& args) {
    const std::string cmd = std::string(DOFREGION_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("separability --pattern " + crossed()) == 1);
  CHECK(status("separability --pattern " + aligned()) == 0);
  CHECK(status("decompose --pattern " + crossed() + " 0 0") == 4);
  CHECK(status("decompose --pattern " + aligned() + " 1 1") == 5);
  CHECK(status("--help") == 0);
}
