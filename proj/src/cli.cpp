#include "halin/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "halin/cli_io.hpp"
#include "halin/generators.hpp"
#include "halin/halin_ola.hpp"
#include "halin/property_suite.hpp"
#include "halin/tree_ola.hpp"

namespace halin {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitFailed = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParam:
    case ErrorKind::NotRecursivelyBalanced:
    case ErrorKind::NotTreeOptimalInput:
    case ErrorKind::UnsupportedTreeLayout:
    case ErrorKind::TooLarge:
      return kExitUsage;
    default:
      return kExitInput;
  }
}

struct Options {
  bool json = false;
  bool lax = false;

  // gen
  std::string family;
  int k = 3, c = 2, h = 2, spokes = 5, spine = 2, n = 8;
  std::vector<int> leaves;
  std::uint64_t seed = 1;

  std::string input;
  std::string output;
  std::string layout;
  std::string tree_layout;
  std::string trace;
  std::string method;
  std::optional<std::int64_t> tree_opt;
  bool oracle = false;
  int limit = 10;
  std::string corpus = "standard";
};

Instance load_instance(const Options& o) {
  Instance inst = parse_instance(read_file(o.input), o.lax);
  return inst;
}

Layout load_layout(const std::string& path, const HalinGraph& h) {
  Layout l = parse_layout(read_file(path));
  if (l.size() != h.size())
    throw Error(ErrorKind::InvalidLayout, "layout has " + std::to_string(l.size()) + " positions, instance has " +
                                              std::to_string(h.size()) + " vertices");
  return l;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

/// Tree optimum: linear construction for balanced trees, oracle otherwise.
std::int64_t tree_optimum(const HalinGraph& h, int limit) {
  const auto& t = h.tree();
  if (is_recursively_balanced(t).verdict) return la_cost(t.edges(), rbt_ola(t));
  OracleOptions opt;
  opt.limit = limit;
  opt.max_stored = 1;
  return brute_force_ola(t.as_graph(), opt).optimal_cost;
}

std::int64_t halin_oracle(const HalinGraph& h, int limit) {
  OracleOptions opt;
  opt.limit = limit;
  opt.max_stored = 1;
  return brute_force_ola(h.graph(), opt).optimal_cost;
}

GenSpec spec_from(const Options& o) {
  GenSpec g;
  g.family = family_from_string(o.family);
  g.spokes = o.spokes;
  g.k = o.k;
  g.c = o.c;
  g.h = o.h;
  g.spine = o.spine;
  g.leaves = o.leaves;
  g.n = o.n;
  g.seed = o.seed;
  // Keep only the fields the family reads so the recipe round-trips.
  GenSpec clean;
  clean.family = g.family;
  switch (g.family) {
    case Family::Wheel: clean.spokes = g.spokes; break;
    case Family::KaryRbt:
      clean.k = g.k;
      clean.c = g.c;
      clean.h = g.h;
      break;
    case Family::Caterpillar:
      clean.spine = g.spine;
      clean.leaves = g.leaves;
      break;
    case Family::Random:
      clean.n = g.n;
      clean.seed = g.seed;
      break;
  }
  return clean;
}

int run_gen(const Options& o, std::ostream& out) {
  const GenSpec spec = spec_from(o);
  Instance inst;
  inst.graph = generate(spec);
  inst.name = spec.name();
  inst.gen_spec = spec;
  emit(out, o.output, serialize_instance(inst));
  if (!o.output.empty() && o.output != "-") {
    if (o.json)
      out << json{{"name", *inst.name}, {"n", inst.graph.size()}, {"output", o.output}}.dump() << "\n";
    else
      out << *inst.name << ": n=" << inst.graph.size() << " -> " << o.output << "\n";
  }
  return kExitOk;
}

int run_solve(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  const HalinGraph& h = inst.graph;
  std::optional<Layout> result;
  std::optional<SwapTrace> trace;
  if (o.method == "oracle") {
    OracleOptions opt;
    opt.limit = o.limit;
    opt.max_stored = 1;
    result = brute_force_ola(h.graph(), opt).optimal_layouts.front();
  } else if (o.method == "rbt") {
    result = rbt_ola(h.tree());
  } else if (o.method == "rearrange") {
    const Layout tree_layout = o.tree_layout.empty() ? rbt_ola(h.tree()) : load_layout(o.tree_layout, h);
    auto r = rearrange_to_halin_ola(h, tree_layout);
    result = std::move(r.layout);
    trace = std::move(r.trace);
  } else if (o.method == "direct") {
    result = direct_rbt_halin_ola(h);
  } else {
    throw Error(ErrorKind::BadParam, "unknown method '" + o.method + "'");
  }
  emit(out, o.output, serialize_layout(*result));
  if (trace && !o.trace.empty()) write_file(o.trace, to_json(*trace).dump(2) + "\n");

  const auto report = la_cost(h, *result);
  if (o.json) {
    json j{{"method", o.method}, {"cost", report.total_cost}, {"treeCost", report.tree_cost},
           {"cycleCost", report.cycle_cost}};
    if (trace) j["swaps"] = trace->total_swaps();
    out << j.dump() << "\n";
  } else if (!o.output.empty() && o.output != "-") {
    out << o.method << ": cost " << report.total_cost << " (tree " << report.tree_cost << ", cycle "
        << report.cycle_cost << ")";
    if (trace) out << ", " << trace->total_swaps() << " swaps";
    out << "\n";
  }
  return kExitOk;
}

int run_cost(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  const Layout l = load_layout(o.layout, inst.graph);
  const auto r = la_cost(inst.graph, l);
  if (o.json)
    out << json{{"total", r.total_cost}, {"tree", r.tree_cost}, {"cycle", r.cycle_cost}}.dump() << "\n";
  else
    out << "total " << r.total_cost << "\ntree " << r.tree_cost << "\ncycle " << r.cycle_cost << "\n";
  return kExitOk;
}

int run_bound(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  const HalinGraph& h = inst.graph;
  std::int64_t t = 0;
  std::string source;
  if (o.tree_opt) {
    t = *o.tree_opt;
    source = "given";
  } else if (o.oracle) {
    OracleOptions opt;
    opt.limit = o.limit;
    opt.max_stored = 1;
    t = brute_force_ola(h.tree().as_graph(), opt).optimal_cost;
    source = "oracle";
  } else {
    t = tree_optimum(h, o.limit);
    source = is_recursively_balanced(h.tree()).verdict ? "rbt" : "oracle";
  }
  const auto b = halin_lower_bound(h, t);
  if (o.json)
    out << json{{"bound", b}, {"treeOpt", t}, {"treeOptSource", source}, {"n", h.size()}}.dump() << "\n";
  else
    out << b << "\n";
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  const HalinGraph& h = inst.graph;
  const Layout l = load_layout(o.layout, h);
  const auto t = tree_optimum(h, o.limit);
  std::optional<std::int64_t> exact;
  if (o.oracle) exact = halin_oracle(h, o.limit);
  const auto cert = certify(h, l, t, exact);
  if (o.json) {
    out << to_json(cert).dump(2) << "\n";
  } else {
    out << (cert.optimal ? "optimal" : "not certified optimal") << ": " << cert.reason << "\n"
        << "cost " << cert.layout_cost << " (tree " << cert.tree_cost << ", cycle " << cert.cycle_cost
        << "), bound " << cert.lower_bound;
    if (cert.oracle_cost) out << ", exact " << *cert.oracle_cost;
    out << "\n";
  }
  return cert.optimal ? kExitOk : kExitFailed;
}

std::vector<GenSpec> load_corpus(const std::string& what) {
  if (what == "standard") return standard_corpus();
  const json doc = json::parse(read_file(what), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::ParseError, "corpus file '" + what + "' is not valid JSON");
  const json& list = doc.is_object() && doc.contains("corpus") ? doc["corpus"] : doc;
  if (!list.is_array()) throw Error(ErrorKind::ParseError, "corpus must be an array of genSpec objects");
  std::vector<GenSpec> out;
  for (const auto& item : list) out.push_back(gen_spec_from_json(item));
  return out;
}

int run_proptest(const Options& o, std::ostream& out) {
  const auto corpus = load_corpus(o.corpus);
  const auto report = run_suite(corpus, o.limit);
  if (o.json)
    out << to_json(report).dump(2) << "\n";
  else
    out << format_table(report);
  if (!report.passed() && !o.json) {
    for (const auto& r : report.instances)
      if (r.counterexample) out << "counterexample " << r.name << ": " << serialize_layout(*r.counterexample);
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int run_export_dot(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o);
  std::optional<Layout> l;
  if (!o.layout.empty()) l = load_layout(o.layout, inst.graph);
  emit(out, o.output, export_dot(inst.graph, l));
  return kExitOk;
}

void report_error(const Options& o, std::ostream& err, std::string_view kind, const std::string& message, int code) {
  if (o.json)
    err << json{{"error", kind}, {"message", message}, {"exitCode", code}}.dump() << "\n";
  else
    err << "error (" << kind << "): " << message << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimal linear arrangements of Halin graphs", "halin"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output and diagnostics");
  app.add_flag("--lax", o.lax, "Warn instead of failing on unknown instance fields");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->set_help_flag("--help", "Print this help message and exit");
  gen->add_option("--family", o.family, "wheel|kary|caterpillar|random")
      ->required()
      ->check(CLI::IsMember({"wheel", "kary", "caterpillar", "random"}));
  gen->add_option("--k", o.k, "Root degree (kary)");
  gen->add_option("--c", o.c, "Inner degree (kary)");
  gen->add_option("--h", o.h, "Height (kary)");
  gen->add_option("--spokes", o.spokes, "Spokes (wheel)");
  gen->add_option("--spine", o.spine, "Spine length (caterpillar)");
  gen->add_option("--leaves", o.leaves, "Leaves per spine vertex (caterpillar)")->delimiter(',');
  gen->add_option("--n", o.n, "Target size (random)");
  gen->add_option("--seed", o.seed, "Seed (random)");
  gen->add_option("-o,--output", o.output, "Output instance file");

  auto* solve = app.add_subcommand("solve", "Compute a layout");
  solve->add_option("--method", o.method, "oracle|rbt|rearrange|direct")
      ->required()
      ->check(CLI::IsMember({"oracle", "rbt", "rearrange", "direct"}));
  solve->add_option("-i,--input", o.input, "Instance file")->required();
  solve->add_option("-t,--tree-layout", o.tree_layout, "Optimal tree layout for rearrange");
  solve->add_option("-o,--output", o.output, "Output layout file");
  solve->add_option("--trace", o.trace, "Write the swap trace of rearrange as JSON");
  solve->add_option("--oracle-limit", o.limit, "Largest n the oracle accepts");

  auto* cost = app.add_subcommand("cost", "Cost of a layout");
  cost->add_option("-i,--input", o.input, "Instance file")->required();
  cost->add_option("-l,--layout", o.layout, "Layout file")->required();

  auto* bound = app.add_subcommand("bound", "Lower bound 2(n-1) + tree optimum");
  bound->add_option("-i,--input", o.input, "Instance file")->required();
  auto* tree_opt_opt = bound->add_option("--tree-opt", o.tree_opt, "Known tree optimum");
  bound->add_flag("--oracle", o.oracle, "Compute the tree optimum exhaustively")->excludes(tree_opt_opt);
  bound->add_option("--oracle-limit", o.limit, "Largest n the oracle accepts");

  auto* verify = app.add_subcommand("verify", "Certify a layout");
  verify->add_option("-i,--input", o.input, "Instance file")->required();
  verify->add_option("-l,--layout", o.layout, "Layout file")->required();
  verify->add_flag("--oracle", o.oracle, "Compare against the exact optimum");
  verify->add_option("--oracle-limit", o.limit, "Largest n the oracle accepts");

  auto* prop = app.add_subcommand("proptest", "Run the structural property suite");
  prop->add_option("--corpus", o.corpus, "standard or a JSON file of genSpec objects");
  prop->add_option("--oracle-limit", o.limit, "Largest n checked");

  auto* dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  dot->add_option("-i,--input", o.input, "Instance file")->required();
  dot->add_option("-l,--layout", o.layout, "Layout file");
  dot->add_option("-o,--output", o.output, "Output DOT file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(o, err, "Usage", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(o, out);
    if (solve->parsed()) return run_solve(o, out);
    if (cost->parsed()) return run_cost(o, out);
    if (bound->parsed()) return run_bound(o, out);
    if (verify->parsed()) return run_verify(o, out);
    if (prop->parsed()) return run_proptest(o, out);
    if (dot->parsed()) return run_export_dot(o, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report_error(o, err, to_string(e.kind()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    report_error(o, err, "Internal", e.what(), kExitInput);
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace halin
