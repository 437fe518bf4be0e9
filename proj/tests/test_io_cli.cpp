#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "quiverseq/cli.hpp"
#include "quiverseq/component.hpp"
#include "quiverseq/error.hpp"
#include "quiverseq/io.hpp"
#include "quiverseq/weyl.hpp"

using namespace quiverseq;
using io::json;
namespace fs = std::filesystem;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::inconsistent;
}

class Workspace {
 public:
  Workspace() {
    dir_ = fs::temp_directory_path() / ("quiverseq_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("q3.json", R"({"n": 3, "arrows": [[1, 2], [2, 3]]})");
    write("qk.json", R"({"n": 2, "arrows": [[1, 2], [1, 2]]})");
    write("tri.json", R"({"n": 3, "arrows": [[1, 2], [2, 3], [1, 3]]})");
    write("a4.json", R"({"cartan": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]})");
    write("a2.json", R"({"cartan": [[2, -1], [-1, 2]]})");
    write("l1.json", R"({"quiver": {"n": 3, "arrows": [[1, 2], [2, 3]]}, "dims": [1, 0, 0], "maps": []})");
    write("regular.json",
          R"({"quiver": {"n": 2, "arrows": [[1, 2], [1, 2]]}, "dims": [1, 1],
              "maps": [{"arrow": 0, "matrix": [[1]]}, {"arrow": 1, "matrix": [[0]]}]})");
    write("broken.json", R"({"n": 3, "arrows": [[1, 2], [2, )");
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

 private:
  fs::path dir_;
};

const Workspace& ws() {
  static const Workspace w;
  return w;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

// {"-q", "q3"} style: bare names ending a file flag are resolved in the workspace.
Result run(std::vector<std::string> args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i - 1];
    if (flag == "-q" || flag == "--quiver" || flag == "--cartan" || flag == "--module") args[i] = ws().path(args[i]);
  }
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Result r = run(std::move(args));
  REQUIRE(r.code != cli::exit_input_error);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("quiver and Cartan documents") {
  const Quiver q = io::quiver_from_json(json::parse(R"({"n": 3, "arrows": [[1, 2], [2, 3]]})"));
  CHECK(q == fixtures::q3());
  CHECK(io::quiver_from_json(io::to_json(fixtures::qk())) == fixtures::qk());
  for (const auto& [name, q2] : fixtures::lattice_quivers()) {
    CAPTURE(name);
    CHECK(io::quiver_from_json(io::to_json(q2)) == q2);
    CHECK(io::cartan_from_json(io::cartan_to_json(q2.graph().cartan())) == q2.graph().cartan());
    CHECK(io::cartan_from_json(io::to_json(q2)) == q2.graph().cartan());
  }
  const Quiver viac =
      io::quiver_from_json(json::parse(R"({"cartan": [[2, -2], [-2, 2]], "arrows": [[1, 2], [1, 2]]})"));
  CHECK(viac == fixtures::qk());

  CHECK(code_of([] { io::quiver_from_json(json::parse(R"({"cartan": [[2, -1], [-1, 2]], "arrows": [[1, 2], [1, 2]]})")); }) ==
        Errc::invalid_graph);
  CHECK(code_of([] { io::quiver_from_json(json::parse(R"({"arrows": [[1, 2]]})")); }) == Errc::parse_error);
  CHECK(code_of([] { io::quiver_from_json(json::parse(R"({"n": 2, "arrows": [[1, "x"]]})")); }) == Errc::parse_error);
  CHECK(code_of([] { io::quiver_from_json(json::parse(R"({"n": 2, "arrows": [[1, 2, 3]]})")); }) == Errc::parse_error);
  CHECK(code_of([] { io::quiver_from_json(json::parse(R"({"n": 2, "arrows": [[1, 2], [2, 1]]})")); }) ==
        Errc::not_acyclic);
  CHECK(code_of([] { io::quiver_from_json(json::parse(R"({"n": 3, "arrows": [[1, 2]]})")); }) ==
        Errc::not_indecomposable);
  CHECK(code_of([] { io::cartan_from_json(json::parse(R"({"cartan": 5})")); }) == Errc::parse_error);
  CHECK(code_of([] { io::read_json_file("/nonexistent/quiverseq.json"); }) == Errc::parse_error);
  CHECK(code_of([] { io::read_json_file(ws().path("broken.json")); }) == Errc::parse_error);
}

TEST_CASE("rationals and representations") {
  CHECK(io::rational_from_json(json(3)) == Rational(3));
  CHECK(io::rational_from_json(json("-2/6")) == Rational(-1, 3));
  CHECK(io::rational_from_json(json("7")) == Rational(7));
  CHECK(io::to_json(Rational(4)) == json(4));
  CHECK(io::to_json(Rational(-1, 3)) == json("-1/3"));
  CHECK(code_of([] { io::rational_from_json(json("1/0")); }) == Errc::parse_error);
  CHECK(code_of([] { io::rational_from_json(json("a/b")); }) == Errc::parse_error);
  CHECK(code_of([] { io::rational_from_json(json(1.5)); }) == Errc::parse_error);

  const json doc = json::parse(R"({"quiver": {"n": 2, "arrows": [[1, 2], [1, 2]]}, "dims": [2, 1],
      "maps": [{"arrow": 1, "matrix": [["1/2", -3]]}]})");
  const Representation m = io::representation_from_json(doc);
  CHECK(m.dims() == DimVector{2, 1});
  CHECK(m.map(0).is_zero());
  CHECK(m.map(1)(0, 0) == Rational(1, 2));
  CHECK(m.map(1)(0, 1) == Rational(-3));
  const Representation back = io::representation_from_json(io::to_json(m));
  CHECK(back.dims() == m.dims());
  CHECK(back.maps() == m.maps());
  CHECK(back.quiver() == m.quiver());
  CHECK(io::to_json(m)["maps"][1]["matrix"][0][0] == json("1/2"));

  CHECK(code_of([] {
          io::representation_from_json(json::parse(
              R"({"quiver": {"n": 2, "arrows": [[1, 2]]}, "dims": [1, 1], "maps": [{"arrow": 0, "matrix": [[1, 2]]}]})"));
        }) == Errc::parse_error);
  CHECK(code_of([] {
          io::representation_from_json(json::parse(
              R"({"quiver": {"n": 2, "arrows": [[1, 2]]}, "dims": [1, 1], "maps": [{"arrow": 3, "matrix": [[1]]}]})"));
        }) == Errc::parse_error);
  CHECK(code_of([] {
          io::representation_from_json(json::parse(R"({"quiver": {"n": 2, "arrows": [[1, 2]]}, "dims": [1, 1],
              "maps": [{"arrow": 0, "matrix": [[1]]}, {"arrow": 0, "matrix": [[2]]}]})"));
        }) == Errc::parse_error);
}

TEST_CASE("vertex lists and formatting") {
  CHECK(io::parse_vertex_list("3,2,3") == std::vector<Vertex>{3, 2, 3});
  CHECK(io::parse_vertex_list(" 3, 2 ").size() == 2);
  CHECK(io::parse_vertex_list("").empty());
  CHECK(code_of([] { io::parse_vertex_list("3,,2"); }) == Errc::parse_error);
  CHECK(code_of([] { io::parse_vertex_list("3,x"); }) == Errc::parse_error);
  CHECK(io::format_vertex_list({3, 2, 1}) == "3,2,1");
  CHECK(io::format_vertex_set({1, 3}) == "{1,3}");
  CHECK(io::format_canonical(check_admissible(fixtures::q3(), {3, 2, 3, 1})) == "3,2,1 | 3");
  CHECK(io::format_canonical(AdmissibleSeq(fixtures::q3())) == "()");
  CHECK(io::format_dims({0, 1, 2}) == "(0,1,2)");
}

TEST_CASE("cli examples and exit codes") {
  Result r = run({"canon", "-q", "q3.json", "-s", "3,2,1,3"});
  CHECK(r.code == 0);
  CHECK(r.out == "3,2,1 | 3\n");
  r = run({"reduced", "--cartan", "a4.json", "-w", "2,3,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "reduced (length 3)\n");
  r = run({"preceq", "-q", "q3.json", "-s", "3,2,3", "-t", "3,2,1"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
  CHECK(run({"preceq", "-q", "q3.json", "-s", "3", "-t", "3,2,3"}).code == 0);
  CHECK(run({"equiv", "-q", "q3.json", "-s", "3,2,1,3", "-t", "3,2,3,1"}).code == 0);

  r = run({"check-seq", "-q", "q3.json", "-s", "3,2,2"});
  CHECK(r.code == 1);
  CHECK(r.out == "not admissible at letter 3\n");
  CHECK(run({"check-seq", "-q", "q3.json", "-s", "3,2,3"}).code == 0);
  CHECK(run({"mult", "-q", "q3.json", "-s", "3,2,3"}).out == "(0,1,2)\n");
  CHECK(run({"meet", "-q", "q3.json", "-s", "3,2,3", "-t", "3,2,1"}).out == "3,2\n");
  CHECK(run({"join", "-q", "q3.json", "-s", "3,2,3", "-t", "3,2,1"}).out == "3,2,1 | 3\n");
  CHECK(run({"complement", "-q", "q3.json", "-s", "3,2,3", "-t", "3,2,1"}).out == "meet: 3,2\nU: 3\nV: 1\n");
  CHECK(run({"principal", "-q", "q3.json", "-r", "3", "-x", "3"}).out == "3,2,1 | 3,2 | 3\n");
  CHECK(run({"decompose", "-q", "q3.json", "-s", "3,2,1,3"}).out == "S(1,1) = 3,2,1\nS(2,3) = 3,2 | 3\n");
  CHECK(run({"psi", "-r", "2", "-x", "3"}).out == "(1,3)\n");
  CHECK(run({"principal-reduced", "-q", "q3.json", "-r", "2", "-x", "3"}).code == 0);
  CHECK(run({"principal-reduced", "-q", "q3.json", "-r", "4", "-x", "3"}).code == 1);
  CHECK(run({"coxeter-check", "-q", "qk.json", "-s", "2,1"}).code == 0);
  CHECK(run({"coxeter-check", "-q", "q3.json", "-s", "3,2,1", "-m", "4"}).code == 1);
  CHECK(run({"finite", "--cartan", "a4.json"}).out == "finite\n");
  CHECK(run({"finite", "-q", "qk.json"}).code == 1);
  CHECK(run({"sorting-word", "--cartan", "a2.json", "--coxeter", "2,1", "-w", "1,2"}).out == "2 | 1\n");
  CHECK(run({"sortable", "--cartan", "a2.json", "--coxeter", "2,1", "-w", "1,2"}).code == 1);
  CHECK(run({"sortable", "-q", "qk.json", "-s", "2,1", "-w", "2,1,2", "--inverse"}).code == 1);
  CHECK(run({"sortable", "-q", "qk.json", "-s", "2,1", "-w", "2,1,2", "--inverse", "--k-order"}).code == 0);

  CHECK(run({"module", "-q", "q3.json", "-s", "3,2,3"}).out.rfind("dims (0,1,0)\n", 0) == 0);
  CHECK(run({"apply", "-q", "q3.json", "-x", "1", "-s", "3,2,1,3,2"}).out.rfind("dims (0,0,1)\n", 0) == 0);
  CHECK(run({"phi-plus", "--module", "l1.json", "-m", "2"}).out.rfind("dims (0,0,1)\n", 0) == 0);
  r = run({"preproj", "-q", "q3.json", "-x", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "preprojective (m = 3)\n");
  CHECK(run({"preproj", "--module", "regular.json", "-m", "16"}).code == 1);
  CHECK(run({"sm", "-q", "q3.json", "-x", "1"}).out == "3,2,1 | 3,2 | 3\n");
  CHECK(run({"sm", "--module", "l1.json"}).out == "3,2,1 | 3,2 | 3\n");
  CHECK(run({"sm-brute", "-q", "q3.json", "-x", "2", "-m", "2"}).out == "3,2 | 3\n");
  CHECK(run({"sm-brute", "-q", "q3.json", "-x", "2", "-t", "3,2,1,3,2,3"}).out == "3,2 | 3\n");

  CHECK(run({"help-me"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"canon", "-q", "q3.json", "-s", "2"}).code == 2);
  CHECK(run({"canon", "-q", "missing.json", "-s", "3"}).code == 2);
  CHECK(run({"canon", "-q", "broken.json", "-s", "3"}).code == 2);
  CHECK(run({"canon", "-q", "q3.json"}).code == 2);
  CHECK(run({"canon", "-q", "q3.json", "-s", "3", "--format", "dot"}).code == 2);
  CHECK(run({"canon", "-q", "q3.json", "-s", "3", "--format", "yaml"}).code == 2);
  CHECK(run({"sm", "--module", "regular.json", "-m", "8"}).code == 2);
  CHECK(run({"module", "-q", "q3.json", "-s", "3,2,1,3,2,1,3,2,1"}).code == 2);
  r = run({"canon", "-q", "q3.json", "-s", ""});
  CHECK(r.code == 2);
  CHECK(r.err.find("empty-sequence") != std::string::npos);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("File formats") != std::string::npos);
}

TEST_CASE("json output follows the documented schemas") {
  const Quiver q3 = fixtures::q3();
  json j = run_json({"canon", "-q", "q3.json", "-s", "3,2,3,1"});
  CHECK(j["letters"] == json({3, 2, 3, 1}));
  CHECK(j["segments"] == json::parse("[[3,2,1],[3]]"));
  CHECK(j["multiplicities"] == json({1, 1, 2}));
  CHECK(multiplicities(seq_from_multiplicities(q3, j["multiplicities"].get<MultVector>())) ==
        j["multiplicities"].get<MultVector>());

  j = run_json({"check-seq", "-q", "q3.json", "-s", "3,2"});
  CHECK(j["admissible"] == true);
  CHECK(io::quiver_from_json(j["end_quiver"]) == check_admissible(q3, {3, 2}).end_orientation());
  j = run_json({"check-seq", "-q", "q3.json", "-s", "2"});
  CHECK(j["admissible"] == false);
  CHECK(j["index"] == 1);

  CHECK(run_json({"equiv", "-q", "q3.json", "-s", "3", "-t", "3"})["result"] == true);
  j = run_json({"complement", "-q", "q3.json", "-s", "3,2,3", "-t", "3,2,1"});
  const Quiver base = io::quiver_from_json(j["quiver"]);
  CHECK(check_admissible(base, j["u"]["letters"].get<std::vector<Vertex>>()).letters() == std::vector<Vertex>{3});
  CHECK(j["v"]["letters"] == json({1}));
  j = run_json({"principal", "-q", "q3.json", "-r", "2", "-x", "3"});
  CHECK(j["sequence"]["letters"] == json({3, 2, 3}));
  j = run_json({"decompose", "-q", "q3.json", "-s", "3,2,1,3"});
  CHECK(j["principals"].size() == 2);
  CHECK(j["principals"][1]["r"] == 2);
  j = run_json({"tail", "-q", "q3.json", "-s", "3,2,3"});
  CHECK(io::quiver_from_json(j["quiver"]) == q3.reflect(3));
  CHECK(j["tail"]["letters"] == json({2, 3}));
  CHECK(run_json({"psi", "-r", "2", "-x", "3"}) == json::parse(R"({"level": 1, "vertex": 3})"));

  j = run_json({"word", "-q", "qk.json", "-w", "2,1"});
  CHECK(j["matrix"] == json::parse("[[3,-2],[2,-1]]"));
  j = run_json({"reduced", "--cartan", "a4.json", "-w", "2,3,2"});
  CHECK(j == json::parse(R"({"reduced": true, "length": 3})"));
  j = run_json({"coxeter-check", "-q", "qk.json", "-s", "2,1", "-m", "3"});
  CHECK(j["powers"].size() == 3);
  CHECK(j["powers"][2]["length"] == 6);
  j = run_json({"sorting-word", "--cartan", "a2.json", "--coxeter", "2,1", "-w", "1,2"});
  CHECK(j["blocks"] == json::parse("[[2],[1]]"));
  CHECK(j["sortable"] == false);

  j = run_json({"module", "-q", "q3.json", "-s", "3,2,1,3,2,3"});
  const Representation m = io::representation_from_json(j);
  CHECK(m.dims() == DimVector{1, 0, 0});
  CHECK(m.quiver() == q3);
  j = run_json({"preproj", "--module", "regular.json", "-m", "4"});
  CHECK(j["preprojective"] == false);
  CHECK(j["m"].is_null());
  j = run_json({"sm", "-q", "q3.json", "-x", "2"});
  CHECK(j["letters"] == json({3, 2, 3}));
}

TEST_CASE("component export") {
  const Component c = build_component(fixtures::q3(), 1);
  CHECK(c.nodes.size() == 3);
  std::set<std::pair<std::pair<int, Vertex>, std::pair<int, Vertex>>> edges;
  for (const auto& e : c.edges) edges.insert({{e.from.level, e.from.vertex}, {e.to.level, e.to.vertex}});
  CHECK(edges == decltype(edges){{{0, 2}, {0, 1}}, {{0, 3}, {0, 2}}});

  const Component k = build_component(fixtures::qk(), 2);
  CHECK(k.nodes.size() == 4);
  int back = 0, up = 0;
  for (const auto& e : k.edges) {
    if (e.from == NodeIndex{0, 2} && e.to == NodeIndex{0, 1}) ++back;
    if (e.from == NodeIndex{0, 1} && e.to == NodeIndex{1, 2}) ++up;
    CHECK(e.to.level < 2);
  }
  CHECK(back == 2);
  CHECK(up == 2);
  CHECK(code_of([] { build_component(fixtures::q3(), 0); }) == Errc::invalid_argument);

  for (const auto& [name, q] : fixtures::lattice_quivers()) {
    CAPTURE(name);
    const Component comp = build_component(q, 3);
    CHECK(comp.nodes.size() == static_cast<std::size_t>(3 * q.size()));
    const bool infinite = !weyl_is_finite(q.graph());
    for (const auto& n : comp.nodes) {
      CHECK(n.seq.letters() == principal(q, n.node.level + 1, n.node.vertex).letters());
      CHECK(n.reduced == principal_reduced_criterion(n.seq));
      CHECK(n.dims.has_value() == n.reduced);
      if (infinite) CHECK(n.reduced);
    }
  }

  const std::string dot = export_component(fixtures::q3(), 2);
  CHECK(dot.rfind("digraph component", 0) == 0);
  CHECK(dot.find("\"0,3\" -> \"0,2\"") != std::string::npos);
  const Result r = run({"component", "-q", "q3.json", "--levels", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == dot);
  CHECK(run({"component", "-q", "q3.json", "--levels", "2", "--format", "dot"}).out == dot);
  const json j = run_json({"component", "-q", "q3.json", "--levels", "2"});
  CHECK(j["nodes"].size() == 6);
  CHECK(j["nodes"][0]["dims"].is_array());
  CHECK(run({"component", "-q", "q3.json", "--levels", "0"}).code == 2);
}
