#include "halin/generators.hpp"

#include <random>
#include <string>
#include <tuple>

namespace halin {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Wheel: return "wheel";
    case Family::KaryRbt: return "kary";
    case Family::Caterpillar: return "caterpillar";
    case Family::Random: return "random";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "wheel") return Family::Wheel;
  if (name == "kary") return Family::KaryRbt;
  if (name == "caterpillar") return Family::Caterpillar;
  if (name == "random") return Family::Random;
  throw Error(ErrorKind::BadParam, "unknown family '" + std::string(name) + "'");
}

std::string GenSpec::name() const {
  std::string s(to_string(family));
  switch (family) {
    case Family::Wheel: return s + "-" + std::to_string(spokes);
    case Family::KaryRbt:
      return s + "-" + std::to_string(k) + "-" + std::to_string(c) + "-" + std::to_string(h);
    case Family::Caterpillar:
      for (int l : leaves) s += "-" + std::to_string(l);
      return s;
    case Family::Random: return s + "-" + std::to_string(n) + "-s" + std::to_string(seed);
  }
  return s;
}

HalinGraph gen_wheel(int spokes) {
  if (spokes < 3) throw Error(ErrorKind::BadParam, "wheel needs >= 3 spokes, got " + std::to_string(spokes));
  std::map<VertexId, std::vector<VertexId>> ch;
  for (int i = 1; i <= spokes; ++i) ch[0].push_back(i);
  return halin_from_tree(build_embedded_tree(0, ch, spokes + 1));
}

std::int64_t kary_vertex_count(int k, int c, int h) {
  std::int64_t level = k;
  std::int64_t total = 1;
  for (int d = 1; d < h; ++d) {
    total += level;
    level *= c;
  }
  return total + (h >= 1 ? level : 0);
}

HalinGraph gen_kary_rbt_halin(int k, int c, int h) {
  if (k < 3) throw Error(ErrorKind::BadParam, "root degree k must be >= 3, got " + std::to_string(k));
  if (c < 2) throw Error(ErrorKind::BadParam, "inner degree c must be >= 2, got " + std::to_string(c));
  if (h < 1) throw Error(ErrorKind::BadParam, "height h must be >= 1, got " + std::to_string(h));
  std::map<VertexId, std::vector<VertexId>> ch;
  std::vector<VertexId> frontier{0};
  VertexId next = 1;
  for (int depth = 0; depth < h; ++depth) {
    std::vector<VertexId> below;
    const int fan = depth == 0 ? k : c;
    for (VertexId v : frontier) {
      for (int i = 0; i < fan; ++i) {
        ch[v].push_back(next);
        below.push_back(next++);
      }
    }
    frontier = std::move(below);
  }
  return halin_from_tree(build_embedded_tree(0, ch, next));
}

HalinGraph gen_caterpillar_halin(int spine, const std::vector<int>& leaves) {
  if (spine < 1) throw Error(ErrorKind::BadParam, "spine length must be >= 1");
  if (static_cast<int>(leaves.size()) != spine)
    throw Error(ErrorKind::BadParam, "expected " + std::to_string(spine) + " leaf counts, got " +
                                         std::to_string(leaves.size()));
  for (int i = 0; i < spine; ++i) {
    const bool end = i == 0 || i == spine - 1;
    const int need = spine == 1 ? 3 : (end ? 2 : 1);
    if (leaves[i] < need)
      throw Error(ErrorKind::BadParam, "spine vertex " + std::to_string(i) + " has " + std::to_string(leaves[i]) +
                                           " leaves; degree >= 3 needs at least " + std::to_string(need));
  }
  std::map<VertexId, std::vector<VertexId>> ch;
  VertexId next = spine;
  for (int i = 0; i < spine; ++i) {
    std::vector<VertexId> own;
    for (int l = 0; l < leaves[i]; ++l) own.push_back(next++);
    const auto split = (own.size() + 1) / 2;
    auto& list = ch[i];
    list.assign(own.begin(), own.begin() + static_cast<std::ptrdiff_t>(split));
    if (i + 1 < spine) list.push_back(i + 1);
    list.insert(list.end(), own.begin() + static_cast<std::ptrdiff_t>(split), own.end());
  }
  return halin_from_tree(build_embedded_tree(0, ch, next));
}

HalinGraph gen_random_halin(int n_target, std::uint64_t seed) {
  if (n_target < 4) throw Error(ErrorKind::BadParam, "random Halin needs n >= 4, got " + std::to_string(n_target));
  std::mt19937_64 rng(seed);
  std::map<VertexId, std::vector<VertexId>> ch{{0, {1, 2, 3}}};
  std::vector<VertexId> leaves{1, 2, 3};
  VertexId n = 4;
  while (n < n_target) {
    const auto pick = static_cast<std::size_t>(rng() % leaves.size());
    int fan = 2 + static_cast<int>(rng() % 2);
    if (n + fan > n_target) fan = 2;
    const VertexId v = leaves[pick];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    for (int i = 0; i < fan; ++i) {
      ch[v].push_back(n);
      leaves.push_back(n++);
    }
  }
  return halin_from_tree(build_embedded_tree(0, ch, n));
}

HalinGraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::Wheel: return gen_wheel(spec.spokes);
    case Family::KaryRbt: return gen_kary_rbt_halin(spec.k, spec.c, spec.h);
    case Family::Caterpillar: return gen_caterpillar_halin(spec.spine, spec.leaves);
    case Family::Random: return gen_random_halin(spec.n, spec.seed);
  }
  throw Error(ErrorKind::BadParam, "unknown family");
}

std::vector<GenSpec> all_caterpillars(int max_n) {
  std::vector<GenSpec> out;
  // Each spine vertex needs at least one leaf, so the spine is at most half of n.
  for (int spine = 1; 2 * spine <= max_n; ++spine) {
    std::vector<int> leaves(static_cast<std::size_t>(spine));
    auto minimum = [&](int i) { return spine == 1 ? 3 : (i == 0 || i == spine - 1 ? 2 : 1); };
    for (int i = 0; i < spine; ++i) leaves[i] = minimum(i);
    // Odometer over leaf counts, bounded by the vertex budget.
    while (true) {
      int n = spine;
      for (int l : leaves) n += l;
      if (n <= max_n) {
        GenSpec g;
        g.family = Family::Caterpillar;
        g.spine = spine;
        g.leaves = leaves;
        out.push_back(g);
      }
      int i = spine - 1;
      while (i >= 0) {
        ++leaves[i];
        int total = spine;
        for (int l : leaves) total += l;
        if (total <= max_n) break;
        leaves[i] = minimum(i);
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

std::vector<GenSpec> standard_corpus() {
  std::vector<GenSpec> corpus;
  for (int s = 3; s <= 8; ++s) {
    GenSpec g;
    g.family = Family::Wheel;
    g.spokes = s;
    corpus.push_back(g);
  }
  for (auto [k, c, h] : {std::tuple{3, 2, 1}, std::tuple{4, 2, 1}, std::tuple{3, 2, 2}}) {
    GenSpec g;
    g.family = Family::KaryRbt;
    g.k = k;
    g.c = c;
    g.h = h;
    corpus.push_back(g);
  }
  for (auto& g : all_caterpillars(9)) corpus.push_back(g);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenSpec g;
    g.family = Family::Random;
    g.n = 4 + static_cast<int>(seed % 5);
    g.seed = seed;
    corpus.push_back(g);
  }
  return corpus;
}

}  // namespace halin
