#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "halin/generators.hpp"
#include "halin/property_suite.hpp"
#include "halin/tree_ola.hpp"

using namespace halin;

TEST_CASE("K4 optima") {
  auto k4 = gen_wheel(3);
  const auto opt = brute_force_ola(k4.graph());
  REQUIRE(opt.optimal_layouts.size() == 24);
  int both = 0, repaired = 0;
  for (const auto& l : opt.optimal_layouts) {
    CHECK(check_subtree_contiguity(k4, l));
    CHECK(check_spine_monotone(k4, l));
    CHECK(check_branch_non_overlap(k4, l).ok);
    const auto v = check_extremes_are_leaves(k4, l);
    CHECK(v != ExtremesVerdict::Violation);
    both += v == ExtremesVerdict::BothLeaves;
    repaired += v == ExtremesVerdict::RepairedLeafSwap;
  }
  CHECK(both == 12);
  CHECK(repaired == 12);
}

TEST_CASE("W5 optima") {
  auto w5 = gen_wheel(4);
  const auto opt = brute_force_ola(w5.graph());
  REQUIRE_FALSE(opt.optimal_layouts.empty());
  for (const auto& l : opt.optimal_layouts) {
    CHECK(check_subtree_contiguity(w5, l));
    CHECK(check_spine_monotone(w5, l));
    CHECK(check_spine_monotone(w5, l.reversed()));
    const auto br = check_branch_non_overlap(w5, l);
    CHECK(br.ok);
    CHECK(check_extremes_are_leaves(w5, l) == ExtremesVerdict::BothLeaves);
  }
  // The hub's two branches sit on opposite sides in (l1,l2,c,l3,l4).
  CHECK(check_branch_non_overlap(w5, Layout({1, 2, 0, 3, 4})).pairs_checked == 0);
  CHECK(to_string(ExtremesVerdict::BothLeaves) == "bothLeaves");
}

TEST_CASE("a non-optimal layout can break the extremes property") {
  auto w5 = gen_wheel(4);
  CHECK(check_extremes_are_leaves(w5, Layout({0, 1, 2, 3, 4})) == ExtremesVerdict::Violation);
}

TEST_CASE("instance report") {
  GenSpec s;
  s.family = Family::Wheel;
  s.spokes = 5;
  auto r = check_instance(s, 10);
  CHECK_FALSE(r.skipped);
  CHECK(r.n == 6);
  CHECK(r.bound_holds);
  CHECK(r.tight);
  CHECK(r.oracle_cost == r.bound);
  CHECK(r.optima_checked > 0);
  CHECK(r.passed());
  CHECK_FALSE(r.counterexample.has_value());

  s.spokes = 12;
  auto big = check_instance(s, 10);
  CHECK(big.skipped);
  CHECK(big.passed());
}

TEST_CASE("suite on wheels and small caterpillars") {
  std::vector<GenSpec> corpus;
  for (int k = 3; k <= 6; ++k) {
    GenSpec s;
    s.family = Family::Wheel;
    s.spokes = k;
    corpus.push_back(s);
  }
  for (const auto& c : all_caterpillars(7)) corpus.push_back(c);
  const auto report = run_suite(corpus, 8);
  CHECK(report.instances.size() == corpus.size());
  CHECK(report.passed());
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(report.instances[i].spec == corpus[i]);
  const auto table = format_table(report);
  CHECK(table.find("wheel-3") != std::string::npos);
  CHECK(table.find("0 failing") != std::string::npos);
}
