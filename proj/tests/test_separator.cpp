#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "spannerweave/error.hpp"
#include "spannerweave/graph.hpp"
#include "spannerweave/separator.hpp"

using namespace spannerweave;
using namespace swtest;

namespace {

// ---- brute-force reference implementations ------------------------------
// Everything below works straight from the definitions (build the cover,
// list the components, compare against floor(n/2)); no layering tricks.

bool brute_balanced(const Graph& g, const VertexSet& cover) {
  return max_component_size(g, cover) <= g.n() / 2;
}

std::uint32_t brute_subset_radius(const Graph& g,
                                  const std::vector<Vertex>& centers) {
  VertexSet src(g.n());
  for (Vertex c : centers) src.insert(c);
  for (std::uint32_t r = 0;; ++r)
    if (brute_balanced(g, disk(g, src, r))) return r;
}

std::uint32_t brute_min_radius_at(const Graph& g, Vertex v) {
  return brute_subset_radius(g, {v});
}

struct BruteBest {
  std::uint32_t radius;
  std::vector<Vertex> centers;
};

// Lexicographic enumeration of k-subsets; strict improvement keeps the
// first (smallest) achiever.
BruteBest brute_best_k(const Graph& g, std::uint32_t k) {
  std::vector<Vertex> combo(k);
  for (std::uint32_t j = 0; j < k; ++j) combo[j] = j;
  BruteBest best{kUnreachable, {}};
  while (true) {
    std::uint32_t r = brute_subset_radius(g, combo);
    if (r < best.radius) {
      best.radius = r;
      best.centers = combo;
    }
    std::uint32_t j = k;
    while (j > 0 && combo[j - 1] == g.n() - k + (j - 1)) --j;
    if (j == 0) break;
    ++combo[j - 1];
    for (std::uint32_t l = j; l < k; ++l) combo[l] = combo[l - 1] + 1;
  }
  return best;
}

void check_separator_invariants(const Graph& g, const DiskSeparator& sep) {
  VertexSet src(g.n());
  for (Vertex c : sep.centers) src.insert(c);
  VertexSet cover = disk(g, src, sep.radius);
  CHECK(cover == sep.cover);
  CHECK(std::is_sorted(sep.centers.begin(), sep.centers.end()));
  CHECK(sep.max_component == max_component_size(g, cover));
  CHECK(sep.max_component <= g.n() / 2);
}

}  // namespace

TEST_SUITE_BEGIN("separators");

TEST_CASE("min radius on pinned shapes") {
  Graph p9 = path_graph(9);
  CHECK(min_radius_at(p9, 4) == 0);  // median of a path
  CHECK(min_radius_at(p9, 0) == 4);  // must swallow half the path
  CHECK(min_radius_at(p9, 3) == 1);

  Graph c6 = cycle_graph(6);
  for (Vertex v = 0; v < 6; ++v) CHECK(min_radius_at(c6, v) == 1);

  Graph k5 = complete_graph(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(min_radius_at(k5, v) == 1);

  Graph single = path_graph(1);
  CHECK(min_radius_at(single, 0) == 0);

  CHECK_THROWS_AS(min_radius_at(p9, 9), ContractViolation);
  Graph split = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(min_radius_at(split, 0), ContractViolation);
}

TEST_CASE("best single disk on pinned shapes") {
  DiskSeparator star = best_disk_separator(star_graph(6));
  CHECK(star.centers == std::vector<Vertex>{0});
  CHECK(star.radius == 0);

  DiskSeparator c6 = best_disk_separator(cycle_graph(6));
  CHECK(c6.radius == 1);
  CHECK(c6.centers == std::vector<Vertex>{0});  // symmetric, smallest id wins

  // Removing D_1 of any 4x4 grid vertex leaves a component over 8 vertices,
  // so radius 2 is needed; D_2(1) = {0..6,9} leaves exactly 8, and vertex 1
  // beats the interior vertices on the id tie-break.
  Graph grid = grid_graph(4, 4);
  DiskSeparator gsep = best_disk_separator(grid);
  CHECK(gsep.radius == 2);
  CHECK(gsep.centers == std::vector<Vertex>{1});
  check_separator_invariants(grid, gsep);
}

TEST_CASE("k-disk separators on pinned shapes") {
  Graph c12 = cycle_graph(12);
  DiskSeparator s = best_k_disk_separator(c12, 2);
  CHECK(s.radius == 0);
  CHECK(s.centers == std::vector<Vertex>{0, 5});
  check_separator_invariants(c12, s);

  Graph twin = two_cliques_with_path();
  DiskSeparator t = best_k_disk_separator(twin, 2);
  CHECK(t.radius == 0);
  CHECK(t.centers == std::vector<Vertex>{0, 5});
  check_separator_invariants(twin, t);
}

TEST_CASE("k-disk argument guards") {
  Graph c6 = cycle_graph(6);
  CHECK_THROWS_AS(best_k_disk_separator(c6, 0), ContractViolation);
  CHECK_THROWS_AS(best_k_disk_separator(c6, 4), ContractViolation);  // cap
  KDiskOptions wide;
  wide.k_cap = 16;
  CHECK_THROWS_AS(best_k_disk_separator(c6, 7, wide), ContractViolation);
  CHECK_NOTHROW(best_k_disk_separator(c6, 4, wide));
  CHECK_THROWS_AS(
      best_k_disk_separator(Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}), 2),
      ContractViolation);
}

TEST_CASE("k=1 reduces to the single-disk search") {
  SplitRng rng(101);
  for (int i = 0; i < 60; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(7));
    Graph g = random_connected(rng, n);
    DiskSeparator a = best_disk_separator(g);
    DiskSeparator b = best_k_disk_separator(g, 1);
    CHECK(a.radius == b.radius);
    CHECK(a.centers == b.centers);
  }
}

TEST_CASE("oracle equivalence on small random graphs") {
  SplitRng rng(202);
  for (int i = 0; i < 200; ++i) {
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(7));  // 2..8
    Graph g = random_connected(rng, n);

    for (Vertex v = 0; v < n; ++v)
      CHECK(min_radius_at(g, v) == brute_min_radius_at(g, v));

    DiskSeparator one = best_disk_separator(g);
    BruteBest bone = brute_best_k(g, 1);
    CHECK(one.radius == bone.radius);
    CHECK(one.centers == bone.centers);
    check_separator_invariants(g, one);

    std::uint32_t prev = kUnreachable;
    for (std::uint32_t k = 1; k <= 3 && k <= n; ++k) {
      DiskSeparator sep = best_k_disk_separator(g, k);
      BruteBest brute = brute_best_k(g, k);
      CHECK(sep.radius == brute.radius);
      CHECK(sep.centers == brute.centers);
      check_separator_invariants(g, sep);
      CHECK(sep.radius <= prev);  // nonincreasing in k
      prev = sep.radius;
    }
  }
}

TEST_CASE("per-subset radius matches the definition") {
  SplitRng rng(303);
  for (int i = 0; i < 80; ++i) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(6));  // 3..8
    Graph g = random_connected(rng, n);
    std::vector<Vertex> combo;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        combo = {a, b};
        CHECK(detail::k_subset_radius(g, combo) == brute_subset_radius(g, combo));
        for (Vertex c = b + 1; c < n; ++c) {
          combo = {a, b, c};
          CHECK(detail::k_subset_radius(g, combo) ==
                brute_subset_radius(g, combo));
        }
      }
  }
  Graph c6 = cycle_graph(6);
  CHECK_THROWS_AS(detail::k_subset_radius(c6, std::vector<Vertex>{0, 0}),
                  ContractViolation);
  CHECK_THROWS_AS(detail::k_subset_radius(c6, std::vector<Vertex>{}),
                  ContractViolation);
}

TEST_CASE("balancedness is monotone in the radius") {
  SplitRng rng(404);
  for (int i = 0; i < 40; ++i) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(6));
    Graph g = random_connected(rng, n);
    Vertex v = static_cast<Vertex>(rng.below(n));
    std::uint32_t r = min_radius_at(g, v);
    for (std::uint32_t rr = r; rr <= r + 2; ++rr)
      CHECK(brute_balanced(g, disk(g, v, rr)));
    if (r > 0) CHECK_FALSE(brute_balanced(g, disk(g, v, r - 1)));
  }
}

TEST_SUITE_END();
