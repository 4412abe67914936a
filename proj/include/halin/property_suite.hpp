#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halin/generators.hpp"
#include "halin/graph_core.hpp"
#include "halin/layout_ops.hpp"

namespace halin {

// Structural checks meant for exact optima of Halin graphs. None of them
// claims anything about suboptimal layouts.

/// Each spinal subtree occupies one block, blocks in spine order.
bool check_subtree_contiguity(const HalinGraph& h, const Layout& opt);

/// Positions strictly increase along the spinal path.
bool check_spine_monotone(const HalinGraph& h, const Layout& opt);

struct BranchCheck {
  bool ok = true;
  int pairs_checked = 0;  // same-side branch pairs examined
};

/// Branches hanging on the same side of a spine vertex never interleave.
BranchCheck check_branch_non_overlap(const HalinGraph& h, const Layout& opt);

enum class ExtremesVerdict { BothLeaves, RepairedLeafSwap, Violation };
std::string_view to_string(ExtremesVerdict v);

/// Extremes of an optimum are tree leaves, or a degree-3 vertex next to at
/// least two leaves whose label can be traded with one of them at no cost.
ExtremesVerdict check_extremes_are_leaves(const HalinGraph& h, const Layout& opt);

struct InstanceReport {
  std::string name;
  GenSpec spec;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  std::int64_t oracle_cost = 0;
  std::int64_t tree_opt = 0;
  std::int64_t bound = 0;
  bool bound_holds = false;
  bool tight = false;
  bool tightness_expected = false;
  std::int64_t optima_total = 0;  // exact count from the oracle
  int optima_checked = 0;         // stored optima actually examined
  int contiguity_failures = 0;
  int monotone_failures = 0;
  int branch_failures = 0;
  int vacuous_branch_passes = 0;  // optima with no same-side branch pair
  int extremes_both_leaves = 0;
  int extremes_repaired = 0;
  int extremes_violations = 0;
  std::optional<Layout> counterexample;

  bool lemmas_pass() const {
    return contiguity_failures == 0 && monotone_failures == 0 && branch_failures == 0 && extremes_violations == 0;
  }
  bool passed() const { return skipped || (lemmas_pass() && bound_holds && (!tightness_expected || tight)); }
};

struct SuiteReport {
  std::vector<InstanceReport> instances;

  bool passed() const;
  int failures() const;
};

/// Runs the oracle on every instance within `oracle_limit` vertices and
/// checks every lemma on every stored optimum. Never throws for a single
/// instance; problems show up in that instance's row.
SuiteReport run_suite(const std::vector<GenSpec>& corpus, int oracle_limit);

InstanceReport check_instance(const GenSpec& spec, int oracle_limit);

/// Fixed-width table, one row per instance.
std::string format_table(const SuiteReport& report);

}  // namespace halin
