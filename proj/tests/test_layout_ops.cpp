#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "halin/generators.hpp"
#include "halin/layout_ops.hpp"
#include "halin/tree_ola.hpp"

using namespace halin;

namespace {

std::vector<VertexId> vs(std::initializer_list<VertexId> l) { return l; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::BadParam;
}

}  // namespace

TEST_CASE("layout basics") {
  Layout l({2, 0, 1});
  CHECK(l.size() == 3);
  CHECK(l.position(2) == 1);
  CHECK(l.at(3) == 1);
  CHECK(l.reversed().order() == vs({1, 0, 2}));
  CHECK(Layout::identity(3).order() == vs({0, 1, 2}));
  CHECK(kind_of([] { Layout({0, 0, 1}); }) == ErrorKind::InvalidLayout);
  CHECK(kind_of([] { Layout({0, 3, 1}); }) == ErrorKind::InvalidLayout);
}

TEST_CASE("expand") {
  Layout l({0, 1, 2});
  CHECK(expand({0, 2, EdgeKind::Tree}, l) == 2);
  CHECK(expand({0, 1, EdgeKind::Tree}, l) == 1);
  CHECK(expand({0, 2, EdgeKind::Tree}, l.reversed()) == 2);
}

TEST_CASE("la_cost on simple graphs") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(la_cost(path_graph(n), Layout::identity(n)).total_cost == n - 1);
    CHECK(la_cost(cycle_graph(n), Layout::identity(n)).total_cost == 2 * (n - 1));
  }
  std::vector<VertexId> p{0, 1, 2, 3};
  do {
    CHECK(la_cost(complete_graph(4), Layout(p)).total_cost == 10);
  } while (std::next_permutation(p.begin(), p.end()));

  auto w5 = gen_wheel(4);
  auto r = la_cost(w5, Layout({1, 2, 0, 3, 4}));
  CHECK(r.total_cost == 14);
  CHECK(r.tree_cost == 6);
  CHECK(r.cycle_cost == 8);
  CHECK(r.per_edge_expand.size() == 8);
}

TEST_CASE("is_of_type") {
  // a=0 b=1 c=2 d=3
  CHECK(is_of_type(Layout({0, 1, 2, 3}), {{0, 1}, {2, 3}}));
  CHECK_FALSE(is_of_type(Layout({0, 2, 1, 3}), {{0, 1}, {2, 3}}));
  CHECK(is_of_type(Layout({3, 1, 0, 2}), {{0, 1, 2, 3}}));
}

TEST_CASE("sigma swap") {
  // (a1,a2,b1,b2) -> (b1,b2,a1,a2)
  CHECK(sigma_swap(Layout({0, 1, 2, 3}), vs({0, 1}), vs({2, 3})).order() == vs({2, 3, 0, 1}));
  // (a1,a2,x,b1,b2) -> (b1,b2,x,a1,a2)
  CHECK(sigma_swap(Layout({0, 1, 4, 2, 3}), vs({0, 1}), vs({2, 3})).order() == vs({2, 3, 4, 0, 1}));
  // Argument order does not matter; unequal sizes keep the gap intact.
  CHECK(sigma_swap(Layout({0, 1, 4, 2, 3}), vs({3, 2}), vs({0})).order() == vs({2, 3, 1, 4, 0}));
  CHECK(kind_of([] { sigma_swap(Layout({0, 1, 2, 3}), vs({0, 2}), vs({3})); }) == ErrorKind::NotContiguous);
  CHECK(kind_of([] { sigma_swap(Layout({0, 1, 2, 3}), vs({0, 1}), vs({1, 2})); }) == ErrorKind::Overlapping);
  CHECK(reverse_block(Layout({0, 1, 2, 3}), vs({1, 2, 3})).order() == vs({0, 3, 2, 1}));
}

TEST_CASE("equal-size sibling swap preserves tree cost on the tri-star OLA") {
  auto h = gen_kary_rbt_halin(3, 2, 2);
  const auto& t = h.tree();
  const Layout opt = rbt_ola(t);
  const auto before = la_cost(t.edges(), opt);
  auto subtree = [&](VertexId v) {
    std::vector<VertexId> s{v};
    for (VertexId c : t.children(v)) s.push_back(c);
    return s;
  };
  const auto kids = t.children(t.root());
  for (std::size_t i = 0; i < kids.size(); ++i)
    for (std::size_t j = i + 1; j < kids.size(); ++j) {
      const auto a = subtree(kids[i]);
      const auto b = subtree(kids[j]);
      CHECK(la_cost(t.edges(), sigma_swap(opt, a, b)) == before);
    }
}

TEST_CASE("randomized sigma involution and reversal invariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Layout l(order);
    const int len = 1 + static_cast<int>(rng() % (n / 2));
    const int a = static_cast<int>(rng() % (n - 2 * len + 1));
    const int b = a + len + static_cast<int>(rng() % (n - a - 2 * len + 1));
    std::vector<VertexId> A(order.begin() + a, order.begin() + a + len);
    std::vector<VertexId> B(order.begin() + b, order.begin() + b + len);
    const Layout once = sigma_swap(l, A, B);
    CHECK(sigma_swap(once, A, B) == l);
    const auto g = gen_random_halin(n, rng()).graph();
    if (g.n == n) CHECK(la_cost(g, l).total_cost == la_cost(g, l.reversed()).total_cost);
  }
}

TEST_CASE("spinal path") {
  auto k4 = gen_wheel(3);  // hub 0, leaves 1 2 3
  CHECK(spinal_path(k4, Layout({1, 0, 2, 3})) == vs({1, 0, 3}));
  auto w5 = gen_wheel(4);
  CHECK(spinal_path(w5, Layout({1, 2, 0, 3, 4})) == vs({1, 0, 4}));
  auto tri = gen_kary_rbt_halin(3, 2, 2);
  auto p = spinal_path(tri, Layout({4, 1, 5, 6, 2, 7, 0, 8, 3, 9}));
  CHECK(p == vs({4, 1, 0, 3, 9}));
}

TEST_CASE("delta count") {
  Layout l({0, 1, 2, 3});
  CHECK(delta_count(l, 0, 3, vs({1, 2})) == 2);
  CHECK(delta_count(l, 0, 1, vs({0, 1, 2, 3})) == 0);
  CHECK(delta_count(l, std::nullopt, 3, vs({0, 1, 2, 3})) == 3);
  CHECK(delta_count(l, 1, std::nullopt, vs({0, 3})) == 1);
}

TEST_CASE("spinal decomposition") {
  auto w5 = gen_wheel(4);
  auto d = spinal_decomposition(w5, Layout({1, 2, 0, 3, 4}));
  REQUIRE(d.path == vs({1, 0, 4}));
  REQUIRE(d.subtrees.size() == 3);
  const auto& hub = d.subtrees[1];
  CHECK(hub.spine_vertex == 0);
  CHECK(hub.vertices.size() == 3);
  REQUIRE(hub.branches.size() == 2);
  CHECK(hub.branches[0].vertices.size() == 1);
  CHECK(hub.branches[1].vertices.size() == 1);

  auto k4 = gen_wheel(3);
  auto dk = spinal_decomposition(k4, Layout({1, 0, 2, 3}));
  REQUIRE(dk.subtrees.size() == 3);
  CHECK(dk.subtrees[1].vertices.size() == 2);

  auto tri = gen_kary_rbt_halin(3, 2, 2);
  auto dt = spinal_decomposition(tri, Layout({4, 1, 5, 6, 2, 7, 0, 8, 3, 9}));
  std::size_t total = 0;
  for (const auto& st : dt.subtrees) total += st.vertices.size();
  CHECK(total == 10);
}
