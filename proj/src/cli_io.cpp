#include "halin/cli_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace halin {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based; translate it to line/column for the message.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

void check_fields(const json& obj, const std::string& where, std::initializer_list<std::string_view> known,
                  bool lax, std::vector<std::string>* warnings) {
  if (!obj.is_object()) parse_fail(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (found) continue;
    const std::string msg = "unknown field '" + key + "' in " + where;
    if (!lax) parse_fail(msg);
    if (warnings) warnings->push_back(msg);
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_fail(what + " must be an integer");
  return j.get<int>();
}

void check_schema(const json& doc) {
  const int version = as_int(require(doc, "schemaVersion", "document"), "schemaVersion");
  if (version != kSchemaVersion)
    throw Error(ErrorKind::SchemaVersionUnsupported,
                "schemaVersion " + std::to_string(version) + " unsupported (expected " +
                    std::to_string(kSchemaVersion) + ")");
}

}  // namespace

json to_json(const GenSpec& spec) {
  json j;
  j["family"] = std::string(to_string(spec.family));
  switch (spec.family) {
    case Family::Wheel: j["spokes"] = spec.spokes; break;
    case Family::KaryRbt:
      j["k"] = spec.k;
      j["c"] = spec.c;
      j["h"] = spec.h;
      break;
    case Family::Caterpillar:
      j["spine"] = spec.spine;
      j["leaves"] = spec.leaves;
      break;
    case Family::Random:
      j["n"] = spec.n;
      j["seed"] = spec.seed;
      break;
  }
  return j;
}

GenSpec gen_spec_from_json(const json& j) {
  if (!j.is_object()) parse_fail("genSpec must be an object");
  GenSpec g;
  const auto& fam = require(j, "family", "genSpec");
  if (!fam.is_string()) parse_fail("genSpec.family must be a string");
  try {
    g.family = family_from_string(fam.get<std::string>());
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  switch (g.family) {
    case Family::Wheel:
      check_fields(j, "genSpec", {"family", "spokes"}, false, nullptr);
      g.spokes = as_int(require(j, "spokes", "genSpec"), "spokes");
      break;
    case Family::KaryRbt:
      check_fields(j, "genSpec", {"family", "k", "c", "h"}, false, nullptr);
      g.k = as_int(require(j, "k", "genSpec"), "k");
      g.c = as_int(require(j, "c", "genSpec"), "c");
      g.h = as_int(require(j, "h", "genSpec"), "h");
      break;
    case Family::Caterpillar: {
      check_fields(j, "genSpec", {"family", "spine", "leaves"}, false, nullptr);
      g.spine = as_int(require(j, "spine", "genSpec"), "spine");
      const auto& leaves = require(j, "leaves", "genSpec");
      if (!leaves.is_array()) parse_fail("genSpec.leaves must be an array");
      for (const auto& l : leaves) g.leaves.push_back(as_int(l, "leaf count"));
      break;
    }
    case Family::Random: {
      check_fields(j, "genSpec", {"family", "n", "seed"}, false, nullptr);
      g.n = as_int(require(j, "n", "genSpec"), "n");
      const auto& seed = require(j, "seed", "genSpec");
      if (!seed.is_number_unsigned() && !seed.is_number_integer()) parse_fail("genSpec.seed must be an integer");
      g.seed = seed.get<std::uint64_t>();
      break;
    }
  }
  return g;
}

Instance parse_instance(std::string_view text, bool lax) {
  const json doc = parse_json(text);
  Instance inst;
  check_fields(doc, "document", {"schemaVersion", "tree", "cycleOrder", "metadata"}, lax, &inst.warnings);
  check_schema(doc);

  const json& tree = require(doc, "tree", "document");
  check_fields(tree, "tree", {"n", "root", "children"}, lax, &inst.warnings);
  const int n = as_int(require(tree, "n", "tree"), "tree.n");
  if (n < 1) parse_fail("tree.n must be positive");
  const int root = as_int(require(tree, "root", "tree"), "tree.root");
  const json& children = require(tree, "children", "tree");
  if (!children.is_object()) parse_fail("tree.children must be an object");
  std::map<VertexId, std::vector<VertexId>> lists;
  for (const auto& [key, value] : children.items()) {
    VertexId v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_fail("tree.children key '" + key + "' is not a vertex id");
    }
    if (!value.is_array()) parse_fail("tree.children[" + key + "] must be an array");
    auto& list = lists[v];
    for (const auto& c : value) list.push_back(as_int(c, "child id"));
  }

  if (auto it = doc.find("metadata"); it != doc.end()) {
    check_fields(*it, "metadata", {"name", "genSpec"}, lax, &inst.warnings);
    if (auto nm = it->find("name"); nm != it->end()) {
      if (!nm->is_string()) parse_fail("metadata.name must be a string");
      inst.name = nm->get<std::string>();
    }
    if (auto gs = it->find("genSpec"); gs != it->end()) inst.gen_spec = gen_spec_from_json(*gs);
  }

  inst.graph = halin_from_tree(build_embedded_tree(root, lists, n));
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  const auto& h = instance.graph;
  const auto& t = h.tree();
  json children = json::object();
  for (VertexId v = 0; v < t.size(); ++v) {
    const auto ch = t.children(v);
    if (!ch.empty()) children[std::to_string(v)] = std::vector<VertexId>(ch.begin(), ch.end());
  }
  json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["tree"] = {{"n", t.size()}, {"root", t.root()}, {"children", children}};
  doc["cycleOrder"] = h.cycle_order();
  if (instance.name || instance.gen_spec) {
    json meta = json::object();
    if (instance.name) meta["name"] = *instance.name;
    if (instance.gen_spec) meta["genSpec"] = to_json(*instance.gen_spec);
    doc["metadata"] = meta;
  }
  return doc.dump(2) + "\n";
}

std::string serialize_instance(const HalinGraph& h) {
  Instance inst;
  inst.graph = h;
  return serialize_instance(inst);
}

Layout parse_layout(std::string_view text) {
  const json doc = parse_json(text);
  check_fields(doc, "layout", {"schemaVersion", "vertexAt"}, false, nullptr);
  check_schema(doc);
  const json& arr = require(doc, "vertexAt", "layout");
  if (!arr.is_array()) parse_fail("vertexAt must be an array");
  std::vector<VertexId> order;
  order.reserve(arr.size());
  for (const auto& v : arr) order.push_back(as_int(v, "vertexAt entry"));
  return Layout(std::move(order));
}

std::string serialize_layout(const Layout& layout) {
  json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["vertexAt"] = layout.order();
  return doc.dump() + "\n";
}

std::string export_dot(const HalinGraph& h, const std::optional<Layout>& layout) {
  std::ostringstream out;
  out << "graph halin {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < h.size(); ++v) {
    out << "  v" << v << " [label=\"" << v;
    if (layout) out << ':' << layout->position(v);
    out << "\"];\n";
  }
  for (const Edge& e : h.graph().edges)
    out << "  v" << e.u << " -- v" << e.v << " [style=" << (e.kind == EdgeKind::Tree ? "dashed" : "bold") << "];\n";
  out << "}\n";
  return out.str();
}

json to_json(const SwapTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"levelHeight", s.level_height},
                     {"firstA", s.first_a},
                     {"firstB", s.first_b},
                     {"length", s.length},
                     {"reversed", s.reversed}});
  return {{"totalSwaps", trace.total_swaps()}, {"totalMovedVertices", trace.total_moved_vertices}, {"steps", steps}};
}

json to_json(const OlaCertificate& cert) {
  json j{{"layoutCost", cert.layout_cost}, {"lowerBound", cert.lower_bound}, {"treeCost", cert.tree_cost},
         {"cycleCost", cert.cycle_cost},   {"optimal", cert.optimal},        {"reason", cert.reason}};
  j["oracleCost"] = cert.oracle_cost ? json(*cert.oracle_cost) : json(nullptr);
  return j;
}

json to_json(const SuiteReport& report) {
  json rows = json::array();
  for (const auto& r : report.instances) {
    json row{{"name", r.name}, {"genSpec", to_json(r.spec)}, {"n", r.n}, {"skipped", r.skipped}};
    if (r.skipped) {
      row["skipReason"] = r.skip_reason;
    } else {
      row.update({{"oracleCost", r.oracle_cost},
                  {"treeOpt", r.tree_opt},
                  {"bound", r.bound},
                  {"boundHolds", r.bound_holds},
                  {"tight", r.tight},
                  {"tightnessExpected", r.tightness_expected},
                  {"optimaTotal", r.optima_total},
                  {"optimaChecked", r.optima_checked},
                  {"contiguityFailures", r.contiguity_failures},
                  {"monotoneFailures", r.monotone_failures},
                  {"branchFailures", r.branch_failures},
                  {"vacuousBranchPasses", r.vacuous_branch_passes},
                  {"extremesBothLeaves", r.extremes_both_leaves},
                  {"extremesRepaired", r.extremes_repaired},
                  {"extremesViolations", r.extremes_violations}});
      row["counterexample"] = r.counterexample ? json(r.counterexample->order()) : json(nullptr);
    }
    row["passed"] = r.passed();
    rows.push_back(std::move(row));
  }
  return {{"instances", rows}, {"failures", report.failures()}, {"passed", report.passed()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace halin
