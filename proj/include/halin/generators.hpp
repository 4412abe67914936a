#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halin/graph_core.hpp"

namespace halin {

enum class Family { Wheel, KaryRbt, Caterpillar, Random };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);  // throws BadParam

/// Instance recipe. Only the fields of the chosen family are read.
struct GenSpec {
  Family family = Family::Wheel;
  int spokes = 0;                     // Wheel
  int k = 0, c = 0, h = 0;            // KaryRbt: root degree, inner degree, height
  int spine = 0;                      // Caterpillar
  std::vector<int> leaves;            // Caterpillar: leaves per spine vertex
  int n = 0;                          // Random: target vertex count
  std::uint64_t seed = 0;             // Random

  std::string name() const;
  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

HalinGraph gen_wheel(int spokes);

/// Root with `k` children; every other internal vertex has `c` children;
/// height `h` counts vertices on a root-to-leaf path.
HalinGraph gen_kary_rbt_halin(int k, int c, int h);

/// Spine v0..v(s-1) rooted at v0; each spine vertex carries its leaves, half
/// of them embedded before the next spine vertex and half after.
HalinGraph gen_caterpillar_halin(int spine, const std::vector<int>& leaves);

/// Grows K4 by giving a random leaf 2 or 3 children until the target size
/// is reached (it may be exceeded by one).
HalinGraph gen_random_halin(int n_target, std::uint64_t seed);

HalinGraph generate(const GenSpec& spec);

/// Vertex count gen_kary_rbt_halin(k, c, h) produces.
std::int64_t kary_vertex_count(int k, int c, int h);

/// The fixed corpus the lemma suite and acceptance tests run over: wheels
/// with 3..8 spokes, k-ary RBT Halins up to 10 vertices, every caterpillar
/// Halin up to 9 vertices and 50 seeded random Halins up to 9 vertices.
std::vector<GenSpec> standard_corpus();

/// Every (spine, leaves) caterpillar recipe with at most `max_n` vertices.
std::vector<GenSpec> all_caterpillars(int max_n);

}  // namespace halin
