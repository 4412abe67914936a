#include "halin/property_suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "halin/halin_ola.hpp"
#include "halin/tree_ola.hpp"

namespace halin {

bool check_subtree_contiguity(const HalinGraph& h, const Layout& opt) {
  const auto d = spinal_decomposition(h, opt);
  BlockPartition blocks;
  blocks.reserve(d.subtrees.size());
  for (const auto& st : d.subtrees) blocks.push_back(st.vertices);
  return is_of_type(opt, blocks);
}

bool check_spine_monotone(const HalinGraph& h, const Layout& opt) {
  const auto path = spinal_path(h, opt);
  for (std::size_t i = 1; i < path.size(); ++i)
    if (opt.position(path[i - 1]) >= opt.position(path[i])) return false;
  return true;
}

BranchCheck check_branch_non_overlap(const HalinGraph& h, const Layout& opt) {
  BranchCheck result;
  const auto d = spinal_decomposition(h, opt);
  struct Span {
    int lo, hi;
  };
  for (const auto& st : d.subtrees) {
    const int w = opt.position(st.spine_vertex);
    std::vector<Span> before;
    std::vector<Span> after;
    for (const auto& br : st.branches) {
      Span s{h.size() + 1, 0};
      for (VertexId v : br.vertices) {
        s.lo = std::min(s.lo, opt.position(v));
        s.hi = std::max(s.hi, opt.position(v));
      }
      if (s.hi < w) before.push_back(s);
      if (s.lo > w) after.push_back(s);
    }
    for (const auto* side : {&before, &after}) {
      for (std::size_t i = 0; i < side->size(); ++i) {
        for (std::size_t j = i + 1; j < side->size(); ++j) {
          const Span& a = (*side)[i];
          const Span& b = (*side)[j];
          ++result.pairs_checked;
          if (!(a.hi < b.lo || b.hi < a.lo)) result.ok = false;
        }
      }
    }
  }
  return result;
}

std::string_view to_string(ExtremesVerdict v) {
  switch (v) {
    case ExtremesVerdict::BothLeaves: return "bothLeaves";
    case ExtremesVerdict::RepairedLeafSwap: return "repairedLeafSwap";
    case ExtremesVerdict::Violation: return "violation";
  }
  return "unknown";
}

ExtremesVerdict check_extremes_are_leaves(const HalinGraph& h, const Layout& opt) {
  const auto& t = h.tree();
  const auto cost = la_cost(h.graph().edges, opt);
  auto current = opt.order();
  bool repaired = false;
  for (const int p : {1, h.size()}) {
    const VertexId v = current[p - 1];
    if (t.is_leaf(v)) continue;
    if (t.degree(v) != 3) return ExtremesVerdict::Violation;
    std::vector<VertexId> leaf_nbrs;
    for (VertexId x : t.neighbors(v))
      if (t.is_leaf(x)) leaf_nbrs.push_back(x);
    if (leaf_nbrs.size() < 2) return ExtremesVerdict::Violation;
    bool fixed = false;
    for (VertexId leaf : leaf_nbrs) {
      auto trial = current;
      auto it = std::find(trial.begin(), trial.end(), leaf);
      std::swap(trial[p - 1], *it);
      if (la_cost(h.graph().edges, Layout(trial)) == cost) {
        current = std::move(trial);
        fixed = true;
        break;
      }
    }
    if (!fixed) return ExtremesVerdict::Violation;
    repaired = true;
  }
  return repaired ? ExtremesVerdict::RepairedLeafSwap : ExtremesVerdict::BothLeaves;
}

InstanceReport check_instance(const GenSpec& spec, int oracle_limit) {
  InstanceReport r;
  r.spec = spec;
  r.name = spec.name();
  try {
    const HalinGraph h = generate(spec);
    r.n = h.size();
    if (r.n > oracle_limit) {
      r.skipped = true;
      r.skip_reason = "n=" + std::to_string(r.n) + " exceeds oracle limit " + std::to_string(oracle_limit);
      return r;
    }
    OracleOptions opt;
    opt.limit = oracle_limit;
    const auto oracle = brute_force_ola(h.graph(), opt);
    OracleOptions tree_opt = opt;
    tree_opt.max_stored = 1;
    r.oracle_cost = oracle.optimal_cost;
    r.tree_opt = brute_force_ola(h.tree().as_graph(), tree_opt).optimal_cost;
    r.bound = halin_lower_bound(h, r.tree_opt);
    r.bound_holds = r.oracle_cost >= r.bound;
    r.tight = r.oracle_cost == r.bound;
    r.tightness_expected = spec.family != Family::Random;
    r.optima_total = oracle.optimal_count;

    for (const Layout& phi : oracle.optimal_layouts) {
      ++r.optima_checked;
      bool bad = false;
      if (!check_subtree_contiguity(h, phi)) {
        ++r.contiguity_failures;
        bad = true;
      }
      if (!check_spine_monotone(h, phi)) {
        ++r.monotone_failures;
        bad = true;
      }
      const auto br = check_branch_non_overlap(h, phi);
      if (!br.ok) {
        ++r.branch_failures;
        bad = true;
      } else if (br.pairs_checked == 0) {
        ++r.vacuous_branch_passes;
      }
      switch (check_extremes_are_leaves(h, phi)) {
        case ExtremesVerdict::BothLeaves: ++r.extremes_both_leaves; break;
        case ExtremesVerdict::RepairedLeafSwap: ++r.extremes_repaired; break;
        case ExtremesVerdict::Violation:
          ++r.extremes_violations;
          bad = true;
          break;
      }
      if (bad && !r.counterexample) r.counterexample = phi;
    }
  } catch (const Error& e) {
    r.skipped = true;
    r.skip_reason = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

SuiteReport run_suite(const std::vector<GenSpec>& corpus, int oracle_limit) {
  SuiteReport report;
  report.instances.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++)
        report.instances[i] = check_instance(corpus[i], oracle_limit);
    });
  }
  pool.clear();
  return report;
}

bool SuiteReport::passed() const { return failures() == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(),
                                        [](const InstanceReport& r) { return !r.passed(); }));
}

std::string format_table(const SuiteReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-26s %3s %6s %6s %6s %7s %5s %5s %5s %5s %5s\n", "instance", "n", "oracle",
                "bound", "tight", "optima", "contg", "mono", "branch", "extr", "ok");
  out += line;
  for (const auto& r : report.instances) {
    if (r.skipped) {
      std::snprintf(line, sizeof line, "%-26s skipped: %s\n", r.name.c_str(), r.skip_reason.c_str());
      out += line;
      continue;
    }
    std::snprintf(line, sizeof line, "%-26s %3d %6lld %6lld %6s %7lld %5d %5d %5d %5d %5s\n", r.name.c_str(), r.n,
                  static_cast<long long>(r.oracle_cost), static_cast<long long>(r.bound), r.tight ? "yes" : "no",
                  static_cast<long long>(r.optima_total), r.contiguity_failures, r.monotone_failures, r.branch_failures,
                  r.extremes_violations, r.passed() ? "pass" : "FAIL");
    out += line;
  }
  std::snprintf(line, sizeof line, "%zu instances, %d failing\n", report.instances.size(), report.failures());
  out += line;
  return out;
}

}  // namespace halin
