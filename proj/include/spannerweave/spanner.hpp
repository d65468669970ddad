#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spannerweave/graph.hpp"
#include "spannerweave/hierarchy.hpp"

namespace spannerweave {

enum class SubtreeSource : std::uint8_t {
  kBfsTree,            // BFS tree from an internal node's center
  kOptimalLeafSpanner, // exhaustive optimal tree spanner on a single-disk leaf
  kDominatingBfs,      // BFS tree from a dominating-set vertex on a k-disk leaf
};

// A tree (or forest, for single-disk leaves) built inside one hierarchy
// node, recorded in input-graph ids. Every edge is an edge of the input
// graph. For BFS-built subtrees, distances from the root inside the subtree
// equal distances inside the node's meta-free local graph.
struct LocalSubtree {
  std::uint32_t level = 0;  // depth of the owning node
  std::uint32_t node = 0;   // owning node id
  std::uint32_t center_index = 0;
  Vertex root = kNoVertex;  // input-graph id; kNoVertex for leaf forests
  std::vector<Edge> edges;  // ascending
  SubtreeSource source = SubtreeSource::kBfsTree;
};

enum class SystemMode : std::uint8_t { kCollective, kSparseUnion };

struct TaggedTree {
  std::uint32_t level = 0;
  std::uint32_t center_index = 0;
  std::vector<Edge> edges;  // ascending
};

// Either a system of spanning trees (collective mode, one tree per level and
// center index) or a single sparse subgraph (the deduplicated union of all
// local subtrees).
struct SpannerSystem {
  SystemMode mode = SystemMode::kSparseUnion;
  std::vector<TaggedTree> trees;  // collective mode
  std::vector<Edge> union_edges;  // sparse mode
};

// One subtree per internal node and center index whose center is an original
// vertex: the BFS tree of the center's component of the node's meta-free
// graph. Meta centers contribute nothing. Single-disk leaves contribute one
// forest of per-component optimal tree spanners; k-disk leaves contribute
// BFS trees from their dominating-set vertices.
std::vector<LocalSubtree> local_subtrees(const HierTree& h);

// Union of all local subtrees as one subgraph.
SpannerSystem sparse_spanner(const HierTree& h);

// One spanning tree per (level, center index): the level's vertex-disjoint
// forest completed by scanning the input graph's edges in ascending order
// and adding every component-merging edge.
SpannerSystem collective_system(const HierTree& h);

// Exhaustive search for a spanning tree minimizing the additive surplus
// max over pairs of d_T(x,y) - d_G(x,y). Ties break toward the
// lexicographically first edge set. Connected graphs only, n capped.
std::pair<std::vector<Edge>, std::uint32_t> optimal_tree_spanner_small(
    const Graph& g, std::uint32_t cap = 8);

// Proven surplus ceiling for a hierarchy with the given parameters; the
// radius floor is 1 (a zero-radius hierarchy still pays for tree detours).
double surplus_bound(SystemMode mode, std::uint32_t n, std::uint32_t k,
                     std::uint32_t r_max);

}  // namespace spannerweave
