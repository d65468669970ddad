#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "spannerweave/error.hpp"
#include "spannerweave/graph.hpp"
#include "spannerweave/hierarchy.hpp"
#include "spannerweave/rng.hpp"
#include "spannerweave/separator.hpp"

using namespace spannerweave;

namespace {

bool same_annotated(const AnnotatedGraph& a, const AnnotatedGraph& b) {
  return a.graph.n() == b.graph.n() && a.graph.edges() == b.graph.edges() &&
         a.tags == b.tags;
}

VertexSet to_set(std::uint32_t universe, const std::vector<Vertex>& vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

// Recomputes every structural invariant of a hierarchy from scratch.
void check_hierarchy(const HierTree& t, const Graph& g, std::uint32_t k) {
  REQUIRE(t.k == k);
  REQUIRE(t.original_n == g.n());
  REQUIRE(t.original_m == g.m());
  REQUIRE(!t.nodes.empty());
  REQUIRE(t.root == t.nodes.size() - 1);

  for (std::uint32_t i = 0; i < t.nodes.size(); ++i)
    REQUIRE(t.nodes[i].id == i);
  REQUIRE(t.nodes[t.root].parent == kNoNode);
  REQUIRE(t.nodes[t.root].depth == 0);

  std::vector<std::uint32_t> child_count(t.nodes.size(), 0);
  for (const HierNode& node : t.nodes)
    for (std::uint32_t c : node.children) {
      REQUIRE(c < node.id);  // children are finished before their parent
      REQUIRE(t.nodes[c].parent == node.id);
      REQUIRE(t.nodes[c].depth == node.depth + 1);
      ++child_count[c];
    }
  for (std::uint32_t i = 0; i < t.nodes.size(); ++i)
    REQUIRE(child_count[i] == (i == t.root ? 0u : 1u));

  // Bags' original vertices partition the input graph.
  std::vector<std::uint32_t> owner(g.n(), kNoNode);
  for (const HierNode& node : t.nodes)
    for (Vertex v : node.bag_originals()) {
      REQUIRE(v < g.n());
      REQUIRE(owner[v] == kNoNode);
      owner[v] = node.id;
    }
  REQUIRE(t.node_of_vertex.size() == g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    REQUIRE(owner[v] != kNoNode);
    REQUIRE(t.node_of_vertex[v] == owner[v]);
  }

  for (const HierNode& node : t.nodes) {
    const Graph& local = node.minor.graph;
    const std::uint32_t n_i = local.n();
    REQUIRE(is_connected(local));
    REQUIRE(node.bag.universe() == n_i);
    REQUIRE(node.minor.tags.size() == n_i);

    // Every meta vertex points at a proper ancestor that created it.
    VertexSet ancestors(static_cast<std::uint32_t>(t.nodes.size()));
    for (std::uint32_t a = node.parent; a != kNoNode; a = t.nodes[a].parent)
      ancestors.insert(a);
    for (const VertexTag& tag : node.minor.tags)
      if (tag.kind == VertexKind::kMeta) {
        REQUIRE(ancestors.contains(tag.origin));
        REQUIRE(tag.disk < k);
      }

    if (node.kind == NodeKind::kLeaf) {
      REQUIRE(node.children.empty());
      REQUIRE(n_i <= (k == 1 ? 5u : 2 * k + 1));
      REQUIRE(node.bag.count() == n_i);
      if (k == 1) {
        REQUIRE(node.centers.empty());
        REQUIRE(node.radius == 0);
      } else {
        REQUIRE(!node.centers.empty());
        REQUIRE(node.centers.size() <= k);
        REQUIRE(node.radius == 1);
        REQUIRE(disk(local, to_set(n_i, node.centers), 1).count() == n_i);
      }
    } else {
      REQUIRE(!node.centers.empty());
      REQUIRE(node.centers.size() <= k);
      // The bag is exactly the union of the separator's disks, and removing
      // it leaves only components of at most half the local graph.
      REQUIRE(disk(local, to_set(n_i, node.centers), node.radius).members() ==
              node.bag.members());
      REQUIRE(max_component_size(local, node.bag) <= n_i / 2);
      REQUIRE(node.children.size() == components(local, node.bag).size());
      for (std::uint32_t c : node.children)
        REQUIRE(t.nodes[c].minor.graph.n() <= n_i / 2 + k);
    }
  }

  if (k == 1) {
    if (g.n() >= 2) REQUIRE((1ull << (t.depth() + 1)) <= g.n());
  } else {
    REQUIRE((1ull << t.depth()) <= g.n());
  }
}

std::uint32_t max_radius(const HierTree& t) {
  std::uint32_t r = 0;
  for (const HierNode& node : t.nodes) r = std::max(r, node.radius);
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("hierarchy");

TEST_CASE("splitting a cycle on one disk leaves a smaller cycle") {
  AnnotatedGraph g = AnnotatedGraph::wrap(swtest::cycle_graph(6));
  DiskSeparator sep = best_disk_separator(g.graph);
  REQUIRE(sep.cover.members() == std::vector<Vertex>{0, 1, 5});

  auto kids = split_k1(g, sep, 9);
  REQUIRE(kids.size() == 1);
  const AnnotatedGraph& kid = kids[0];
  CHECK(kid.graph.n() == 4);
  CHECK(kid.graph.edges() ==
        std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(kid.tags[0] == VertexTag{VertexKind::kOriginal, 2, 0});
  CHECK(kid.tags[1] == VertexTag{VertexKind::kOriginal, 3, 0});
  CHECK(kid.tags[2] == VertexTag{VertexKind::kOriginal, 4, 0});
  CHECK(kid.tags[3] == VertexTag{VertexKind::kMeta, 9, 0});
}

TEST_CASE("splitting a star on its hub leaves one edge per ray") {
  AnnotatedGraph g = AnnotatedGraph::wrap(swtest::star_graph(6));
  DiskSeparator sep = best_disk_separator(g.graph);
  REQUIRE(sep.radius == 0);

  auto kids = split_k1(g, sep);
  REQUIRE(kids.size() == 6);
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK(kids[i].graph.n() == 2);
    CHECK(kids[i].graph.edges() == std::vector<Edge>{{0, 1}});
    CHECK(kids[i].tags[0] == VertexTag{VertexKind::kOriginal, i + 1, 0});
    CHECK(kids[i].is_meta(1));
  }
}

TEST_CASE("splitting on a disk that covers everything yields no children") {
  AnnotatedGraph g = AnnotatedGraph::wrap(swtest::complete_graph(7));
  DiskSeparator sep = best_disk_separator(g.graph);
  REQUIRE(sep.cover.count() == 7);
  CHECK(split_k1(g, sep).empty());
}

TEST_CASE("splitting rejects an unbalanced disk") {
  AnnotatedGraph g = AnnotatedGraph::wrap(swtest::path_graph(9));
  DiskSeparator sep;
  sep.centers = {0};
  sep.radius = 0;
  sep.cover = to_set(9, {0});
  CHECK_THROWS_AS(split_k1(g, sep), ContractViolation);
}

TEST_CASE("splitting keeps every edge and attaches metas to the boundary") {
  SplitRng rng(411);
  for (int it = 0; it < 80; ++it) {
    Graph g = swtest::random_connected(rng, 6 + rng.below(30), 25);
    if (g.n() <= 5) continue;
    AnnotatedGraph ag = AnnotatedGraph::wrap(g);
    DiskSeparator sep = best_disk_separator(g);
    auto kids = split_k1(ag, sep, 3);

    std::uint64_t total_edges = 0;
    auto comps = components(g, sep.cover);
    REQUIRE(kids.size() == comps.size());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const AnnotatedGraph& kid = kids[i];
      total_edges += kid.graph.m();
      REQUIRE(is_connected(kid.graph));
      std::uint32_t last = kid.graph.n() - 1;
      REQUIRE(kid.is_meta(last));
      // meta neighbors = component vertices one step from the cover
      std::vector<Vertex> expect;
      for (Vertex v : comps[i].members()) {
        bool boundary = false;
        for (Vertex w : g.neighbors(v)) boundary |= sep.cover.contains(w);
        if (boundary) expect.push_back(v);
      }
      std::vector<Vertex> got;
      for (Vertex x : kid.graph.neighbors(last))
        got.push_back(kid.tags[x].origin);
      REQUIRE(got == expect);
    }
    REQUIRE(total_edges <= g.m());
  }
}

TEST_CASE("disk partition around two cycle centers splits the shared disk") {
  Graph g = swtest::cycle_graph(12);
  SUBCASE("antipodal centers keep their own disks") {
    auto parts = partition_disks(g, std::vector<Vertex>{0, 6}, 1);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].members() == std::vector<Vertex>{0, 1, 11});
    CHECK(parts[1].members() == std::vector<Vertex>{5, 6, 7});
  }
  SUBCASE("overlapping disks give the shared vertex to the first center") {
    auto parts = partition_disks(g, std::vector<Vertex>{0, 2}, 1);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].members() == std::vector<Vertex>{0, 1, 11});
    CHECK(parts[1].members() == std::vector<Vertex>{2, 3});
  }
}

TEST_CASE("disk partition guards its inputs") {
  Graph g = swtest::cycle_graph(6);
  CHECK_THROWS_AS(partition_disks(g, std::vector<Vertex>{}, 1),
                  ContractViolation);
  CHECK_THROWS_AS(partition_disks(g, std::vector<Vertex>{0, 6}, 1),
                  ContractViolation);
  CHECK_THROWS_AS(partition_disks(g, std::vector<Vertex>{2, 2}, 1),
                  ContractViolation);
}

TEST_CASE("disk partition pieces are disjoint, connected, and cover the disks") {
  SplitRng rng(67);
  for (int it = 0; it < 120; ++it) {
    Graph g = swtest::random_connected(rng, 4 + rng.below(36), 25);
    std::uint32_t kk = 1 + rng.below(3);
    if (kk > g.n()) kk = g.n();
    std::vector<Vertex> centers;
    while (centers.size() < kk) {
      Vertex c = static_cast<Vertex>(rng.below(g.n()));
      if (std::find(centers.begin(), centers.end(), c) == centers.end())
        centers.push_back(c);
    }
    std::uint32_t r = rng.below(3);
    auto parts = partition_disks(g, centers, r);
    REQUIRE(parts.size() == centers.size());

    VertexSet seen(g.n());
    for (std::uint32_t j = 0; j < parts.size(); ++j) {
      REQUIRE(parts[j].contains(centers[j]));
      REQUIRE(parts[j].is_subset_of(disk(g, centers[j], r)));
      REQUIRE(!parts[j].intersects(seen));
      seen |= parts[j];
      REQUIRE(is_connected(induced(g, parts[j]).graph));
    }
    REQUIRE(seen.members() == disk(g, to_set(g.n(), centers), r).members());
  }
}

TEST_CASE("splitting a cycle on two antipodal arcs leaves two smaller cycles") {
  AnnotatedGraph g = AnnotatedGraph::wrap(swtest::cycle_graph(12));
  std::vector<VertexSet> parts = {to_set(12, {11, 0, 1}), to_set(12, {5, 6, 7})};
  auto kids = split_general(g, parts, 4);
  REQUIRE(kids.size() == 2);

  // Both children are 5-cycles: three path vertices plus two adjacent metas.
  CHECK(kids[0].graph.n() == 5);
  CHECK(kids[0].graph.edges() ==
        std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}});
  CHECK(kids[0].tags[0].origin == 2);
  CHECK(kids[0].tags[3] == VertexTag{VertexKind::kMeta, 4, 0});
  CHECK(kids[0].tags[4] == VertexTag{VertexKind::kMeta, 4, 1});

  CHECK(kids[1].graph.n() == 5);
  CHECK(kids[1].graph.edges() ==
        std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(kids[1].tags[0].origin == 8);
  CHECK(kids[1].tags[3] == VertexTag{VertexKind::kMeta, 4, 0});
  CHECK(kids[1].tags[4] == VertexTag{VertexKind::kMeta, 4, 1});
}

TEST_CASE("a component skips metas for pieces it never touches") {
  AnnotatedGraph g = AnnotatedGraph::wrap(swtest::path_graph(7));
  std::vector<VertexSet> parts = {to_set(7, {1}), to_set(7, {5})};
  auto kids = split_general(g, parts, 0);
  REQUIRE(kids.size() == 3);

  // {0} touches only the first piece, {6} only the second.
  CHECK(kids[0].graph.n() == 2);
  CHECK(kids[0].tags[1] == VertexTag{VertexKind::kMeta, 0, 0});
  CHECK(kids[2].graph.n() == 2);
  CHECK(kids[2].tags[1] == VertexTag{VertexKind::kMeta, 0, 1});

  // {2,3,4} touches both, but the pieces live in different components of
  // the rest of the path, so its metas stay non-adjacent.
  CHECK(kids[1].graph.n() == 5);
  CHECK(kids[1].graph.edges() ==
        std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 4}});
}

TEST_CASE("splitting on one piece matches the single-disk splitter") {
  SplitRng rng(92);
  for (int it = 0; it < 60; ++it) {
    Graph g = swtest::random_connected(rng, 6 + rng.below(24), 30);
    AnnotatedGraph ag = AnnotatedGraph::wrap(g);
    DiskSeparator sep = best_disk_separator(g);
    auto parts = partition_disks(g, sep.centers, sep.radius);
    REQUIRE(parts.size() == 1);
    REQUIRE(parts[0].members() == sep.cover.members());

    auto a = split_k1(ag, sep, 5);
    auto b = split_general(ag, parts, 5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(same_annotated(a[i], b[i]));
  }
}

TEST_CASE("splitting on several pieces keeps the edge budget") {
  SplitRng rng(143);
  for (int it = 0; it < 50; ++it) {
    Graph g = swtest::random_connected(rng, 8 + rng.below(28), 25);
    std::uint32_t kk = 2 + rng.below(2);
    DiskSeparator sep = best_k_disk_separator(g, kk);
    auto parts = partition_disks(g, sep.centers, sep.radius);
    auto kids = split_general(AnnotatedGraph::wrap(g), parts, 1);

    std::uint64_t total_edges = 0;
    for (const AnnotatedGraph& kid : kids) {
      REQUIRE(is_connected(kid.graph));
      total_edges += kid.graph.m();
      for (Vertex v = 0; v < kid.graph.n(); ++v)
        if (kid.is_meta(v)) {
          CHECK(kid.tags[v].origin == 1);
          CHECK(kid.tags[v].disk < kk);
        }
    }
    CHECK(total_edges <= g.m() + kids.size() * kk * kk);
  }
}

TEST_CASE("a six-cycle decomposes into an arc above a four-cycle leaf") {
  Graph g = swtest::cycle_graph(6);
  HierTree t = build_hierarchy(g, 1);
  check_hierarchy(t, g, 1);

  REQUIRE(t.nodes.size() == 2);
  const HierNode& root = t.nodes[t.root];
  CHECK(root.kind == NodeKind::kInternal);
  CHECK(root.radius == 1);
  CHECK(root.centers == std::vector<Vertex>{0});
  CHECK(root.bag_originals() == std::vector<Vertex>{0, 1, 5});

  const HierNode& leaf = t.nodes[0];
  CHECK(leaf.kind == NodeKind::kLeaf);
  CHECK(leaf.depth == 1);
  CHECK(leaf.minor.graph.n() == 4);
  CHECK(leaf.centers.empty());
  CHECK(leaf.radius == 0);
  CHECK(leaf.bag_originals() == std::vector<Vertex>{2, 3, 4});
  // the meta in the leaf names the root by its final id
  CHECK(leaf.minor.tags[3] == VertexTag{VertexKind::kMeta, t.root, 0});

  CHECK(t.node_of_vertex == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 1});
}

TEST_CASE("a clique whose disk covers everything is a childless internal node") {
  Graph g = swtest::complete_graph(7);
  HierTree t = build_hierarchy(g, 1);
  check_hierarchy(t, g, 1);
  REQUIRE(t.nodes.size() == 1);
  CHECK(t.nodes[0].kind == NodeKind::kInternal);
  CHECK(t.nodes[0].children.empty());
  CHECK(t.nodes[0].radius == 1);
  CHECK(t.nodes[0].bag.count() == 7);
}

TEST_CASE("a 64-path decomposes within the promised depth") {
  Graph g = swtest::path_graph(64);
  HierTree t = build_hierarchy(g, 1);
  check_hierarchy(t, g, 1);
  CHECK(t.depth() <= 5);
  CHECK(max_radius(t) == 0);  // paths always split on a middle vertex
}

TEST_CASE("trees decompose with zero-radius separators at every level") {
  SplitRng rng(58);
  for (int it = 0; it < 40; ++it) {
    Graph g = swtest::random_connected(rng, 2 + rng.below(60), 0);
    HierTree t = build_hierarchy(g, 1);
    check_hierarchy(t, g, 1);
    CHECK(max_radius(t) == 0);
  }
}

TEST_CASE("a twelve-cycle under two disks keeps its frozen root separator") {
  Graph g = swtest::cycle_graph(12);
  HierTree t = build_hierarchy(g, 2);
  check_hierarchy(t, g, 2);
  const HierNode& root = t.nodes[t.root];
  CHECK(root.radius == 0);
  CHECK(root.centers == std::vector<Vertex>{0, 5});
}

TEST_CASE("hierarchies satisfy every structural invariant on random graphs") {
  SplitRng rng(777);
  for (int it = 0; it < 60; ++it) {
    Graph g = swtest::random_connected(rng, 2 + rng.below(70), 20);
    for (std::uint32_t kk = 1; kk <= 3; ++kk) {
      if (kk > 1 && g.n() < kk) continue;
      HierTree t = build_hierarchy(g, kk);
      check_hierarchy(t, g, kk);
    }
  }
}

TEST_CASE("hierarchy construction guards its inputs") {
  Graph two = Graph::from_edges(2, {});
  CHECK_THROWS_AS(build_hierarchy(two, 1), ContractViolation);
  Graph g = swtest::cycle_graph(6);
  CHECK_THROWS_AS(build_hierarchy(g, 0), ContractViolation);
  CHECK_THROWS_AS(build_hierarchy(g, 4), ContractViolation);
  CHECK_THROWS_AS(build_hierarchy(Graph::from_edges(0, {}), 1),
                  ContractViolation);
}

TEST_SUITE_END();
