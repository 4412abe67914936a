#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "halin/cli.hpp"
#include "halin/cli_io.hpp"
#include "halin/tree_ola.hpp"

using namespace halin;
namespace fs = std::filesystem;

namespace {

const char* kK4 = R"({"schemaVersion": 1, "tree": {"n": 4, "root": 0, "children": {"0": [1, 2, 3]}}})";

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::BadParam;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("halin_cli_io_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("parse K4") {
  auto inst = parse_instance(kK4);
  CHECK(inst.graph.size() == 4);
  CHECK(inst.graph.edge_count() == 6);
  CHECK_FALSE(inst.name.has_value());
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_instance(R"({"schemaVersion": 1, "tree": {"n": 4,)"); }) == ErrorKind::ParseError);
  try {
    parse_instance("{\n  \"schemaVersion\": 1,\n  \"tree\": ]\n}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] {
          parse_instance(R"({"schemaVersion": 99, "tree": {"n": 4, "root": 0, "children": {"0": [1, 2, 3]}}})");
        }) == ErrorKind::SchemaVersionUnsupported);
  CHECK(kind_of([] {
          parse_instance(R"({"schemaVersion": 1, "tree": {"n": 3, "root": 0, "children": {"0": [1, 2]}}})");
        }) == ErrorKind::InvalidSubstrate);
  CHECK(kind_of([] {
          parse_instance(R"({"schemaVersion": 1, "tree": {"n": 4, "root": 0, "children": {"x": [1, 2, 3]}}})");
        }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_instance(R"({"schemaVersion": 1})"); }) == ErrorKind::ParseError);
}

TEST_CASE("unknown fields: strict and lax") {
  const std::string text =
      R"({"schemaVersion": 1, "extra": true, "tree": {"n": 4, "root": 0, "children": {"0": [1, 2, 3]}}})";
  CHECK(kind_of([&] { parse_instance(text); }) == ErrorKind::ParseError);
  auto inst = parse_instance(text, true);
  REQUIRE(inst.warnings.size() == 1);
  CHECK(inst.warnings[0].find("extra") != std::string::npos);
}

TEST_CASE("stored cycle order is not trusted") {
  auto inst = parse_instance(
      R"({"schemaVersion": 1, "cycleOrder": [3, 2, 1], "tree": {"n": 4, "root": 0, "children": {"0": [1, 2, 3]}}})");
  CHECK(inst.graph.cycle_order() == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("instance round trip is byte exact") {
  for (const auto& spec : standard_corpus()) {
    Instance inst;
    inst.graph = generate(spec);
    inst.name = spec.name();
    inst.gen_spec = spec;
    const auto text = serialize_instance(inst);
    const auto back = parse_instance(text);
    CHECK(serialize_instance(back) == text);
    CHECK(back.gen_spec == spec);
    CHECK(back.graph.tree() == inst.graph.tree());
  }
  const auto bare = serialize_instance(gen_wheel(5));
  CHECK(serialize_instance(parse_instance(bare)) == bare);
}

TEST_CASE("layout round trip") {
  const Layout l({3, 0, 2, 1});
  const auto text = serialize_layout(l);
  CHECK(text == "{\"schemaVersion\":1,\"vertexAt\":[3,0,2,1]}\n");
  CHECK(parse_layout(text) == l);
  CHECK(serialize_layout(parse_layout(text)) == text);
  CHECK(kind_of([] { parse_layout(R"({"schemaVersion":1,"vertexAt":[0,0]})"); }) == ErrorKind::InvalidLayout);
  CHECK(kind_of([] { parse_layout(R"({"schemaVersion":2,"vertexAt":[0]})"); }) ==
        ErrorKind::SchemaVersionUnsupported);
}

TEST_CASE("DOT export") {
  auto k4 = gen_wheel(3);
  const auto dot = export_dot(k4);
  auto count = [](const std::string& s, const std::string& needle) {
    int c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
  };
  CHECK(dot.rfind("graph halin {", 0) == 0);
  CHECK(count(dot, "style=dashed") == 3);
  CHECK(count(dot, "style=bold") == 3);
  CHECK(dot.find(':') == std::string::npos);

  auto w5 = gen_wheel(4);
  const auto opt = brute_force_ola(w5.graph()).optimal_layouts.front();
  const auto labelled = export_dot(w5, opt);
  for (int p = 1; p <= 5; ++p) CHECK(labelled.find(":" + std::to_string(p) + "\"") != std::string::npos);
}

TEST_CASE("JSON converters") {
  auto w5 = gen_wheel(4);
  auto j = to_json(certify(w5, Layout({1, 0, 2, 3, 4}), 6));
  CHECK(j["layoutCost"] == 15);
  CHECK(j["optimal"] == false);
  CHECK(j["oracleCost"].is_null());
  SwapTrace t;
  t.steps.push_back({1, 1, 4, 2, false});
  t.total_moved_vertices = 4;
  auto jt = to_json(t);
  CHECK(jt["totalSwaps"] == 1);
  CHECK(jt["steps"][0]["firstB"] == 4);
}

TEST_CASE("cli commands") {
  TempDir dir;
  const auto inst = dir / "w5.json";
  const auto lay = dir / "w5.layout.json";

  CHECK(cli({"gen", "--family", "wheel", "--spokes", "4", "-o", inst}).code == 0);
  auto b = cli({"bound", "-i", inst, "--oracle"});
  CHECK(b.code == 0);
  CHECK(b.out == "14\n");
  CHECK(cli({"bound", "-i", inst, "--tree-opt", "6"}).out == "14\n");

  auto s = cli({"solve", "--method", "oracle", "-i", inst, "-o", lay});
  CHECK(s.code == 0);
  CHECK(s.out.find("cost 14") != std::string::npos);
  auto c = cli({"cost", "-i", inst, "-l", lay});
  CHECK(c.out == "total 14\ntree 6\ncycle 8\n");
  CHECK(cli({"verify", "-i", inst, "-l", lay, "--oracle"}).code == 0);

  write_file(lay, serialize_layout(Layout({1, 0, 2, 3, 4})));
  auto v = cli({"verify", "-i", inst, "-l", lay, "--oracle"});
  CHECK(v.code == 3);
  CHECK(v.out.find("15") != std::string::npos);

  const auto k4 = dir / "k4.json";
  write_file(k4, kK4);
  auto k = cli({"--json", "solve", "--method", "oracle", "-i", k4});
  CHECK(k.code == 0);
  CHECK(k.out.find("\"cost\":10") != std::string::npos);

  auto dot = cli({"export-dot", "-i", inst});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph halin") != std::string::npos);

  auto tr = dir / "trace.json";
  CHECK(cli({"gen", "--family", "kary", "--k", "3", "--c", "2", "--h", "3", "-o", inst}).code == 0);
  CHECK(cli({"solve", "--method", "rearrange", "-i", inst, "-o", lay, "--trace", tr}).code == 0);
  CHECK(fs::exists(tr));
  CHECK(cli({"verify", "-i", inst, "-l", lay}).code == 0);
  CHECK(cli({"solve", "--method", "oracle", "-i", inst, "-o", lay}).code == 1);
}

TEST_CASE("cli errors and exit codes") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"solve", "--method", "magic", "-i", "x"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
  auto missing = cli({"--json", "cost", "-i", "/nonexistent/file.json", "-l", "x"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("\"error\":\"IoError\"") != std::string::npos);

  TempDir dir;
  const auto bad = dir / "bad.json";
  write_file(bad, "{\"schemaVersion\": 1,");
  CHECK(cli({"cost", "-i", bad, "-l", bad}).code == 2);
  const auto cat = dir / "cat.json";
  CHECK(cli({"gen", "--family", "caterpillar", "--spine", "2", "--leaves", "2,2", "-o", cat}).code == 0);
  CHECK(cli({"solve", "--method", "direct", "-i", cat}).code == 1);
  CHECK(cli({"gen", "--family", "wheel", "--spokes", "2", "-o", cat}).code == 1);
}

TEST_CASE("cli proptest on a small corpus file") {
  TempDir dir;
  const auto corpus = dir / "corpus.json";
  write_file(corpus, R"([{"family": "wheel", "spokes": 4}, {"family": "caterpillar", "spine": 2, "leaves": [2, 2]}])");
  auto r = cli({"proptest", "--corpus", corpus, "--oracle-limit", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failing") != std::string::npos);
  auto j = cli({"--json", "proptest", "--corpus", corpus});
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);
}
