#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spannerweave/graph.hpp"
#include "spannerweave/treedec.hpp"

namespace spannerweave {

// What a generator promises about its instance. Every field is re-verified
// by an independent check before the instance is returned; a generator that
// cannot honor its own certificate throws instead of handing it out.
struct GenCertificate {
  std::optional<std::uint32_t> tree_breadth;  // exact 1-disk tree-breadth
  std::optional<std::uint32_t> breadth_bound;  // tree-breadth at `bound_disks` is <= this
  std::uint32_t bound_disks = 1;
  std::vector<Edge> planted;               // certified spanning subgraph, if any
  std::optional<std::uint32_t> stretch;    // `planted` is a stretch-t spanner
  std::optional<TreeDecomposition> decomposition;  // low-width witness for `planted`
};

struct GenResult {
  Graph graph;
  GenCertificate certificate;
};

// Cycle on `length` vertices; length must be a positive multiple of 3, which
// pins the exact tree-breadth at length/3.
GenResult gen_cycle(std::uint32_t length);

// Connected chordal graph built by attaching each new vertex to a random
// clique; certificate: tree-breadth 1 (0 for a single vertex).
GenResult gen_chordal(std::uint32_t n, std::uint64_t seed);

// Random spanning tree plus `extra` chords, each joining a pair at tree
// distance at most t. The tree is a certified tree t-spanner of the result,
// so the graph's tree-breadth is at most ceil(t/2).
GenResult gen_planted_tree_spanner(std::uint32_t n, std::uint32_t t,
                                   std::uint64_t extra, std::uint64_t seed);

// Random connected spanning partial k-tree H (with its width-k decomposition)
// plus every chord joining a pair at H-distance at most t. H is a certified
// t-spanner of the result of treewidth <= k, so tree-breadth at k+1 disks is
// at most ceil(t/2).
GenResult gen_planted_tw_spanner(std::uint32_t n, std::uint32_t k,
                                 std::uint32_t t, std::uint64_t seed);

// rows x cols grid; no certificate claims.
GenResult gen_grid(std::uint32_t rows, std::uint32_t cols);

}  // namespace spannerweave
