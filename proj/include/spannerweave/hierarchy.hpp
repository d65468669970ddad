#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spannerweave/graph.hpp"
#include "spannerweave/separator.hpp"

namespace spannerweave {

inline constexpr std::uint32_t kNoNode = 0xffffffffu;

enum class NodeKind : std::uint8_t { kInternal, kLeaf };

// One node of a disk-separator hierarchy. `minor` is the graph the node was
// built on (original vertices of the input plus meta vertices standing in
// for already-removed regions); `bag` is the set of vertices retired at this
// node, in minor-local ids. Internal bags are separator covers, leaf bags
// are the whole remaining graph.
struct HierNode {
  std::uint32_t id = 0;
  std::uint32_t depth = 0;
  NodeKind kind = NodeKind::kLeaf;
  AnnotatedGraph minor;
  VertexSet bag;
  std::vector<Vertex> centers;  // minor-local ids; empty for single-disk leaves
  std::uint32_t radius = 0;
  std::uint32_t parent = kNoNode;
  std::vector<std::uint32_t> children;

  // Input-graph ids of the original vertices in the bag, ascending.
  std::vector<Vertex> bag_originals() const;
};

struct HierTree {
  std::uint32_t k = 1;
  std::uint32_t root = 0;
  std::uint32_t original_n = 0;
  std::uint64_t original_m = 0;
  std::vector<HierNode> nodes;              // indexed by node id
  std::vector<std::uint32_t> node_of_vertex;  // input vertex -> retiring node

  std::uint32_t depth() const;
};

// Removes a single balanced disk from `g` and returns one child graph per
// remaining component. Each child keeps its component's vertices (relabeled,
// order preserved) and gains one meta vertex adjacent to exactly the
// component vertices that neighbor the removed disk. Returns an empty list
// when the disk covers everything. `node_id` tags the new meta vertices.
std::vector<AnnotatedGraph> split_k1(const AnnotatedGraph& g,
                                     const DiskSeparator& sep,
                                     std::uint32_t node_id = 0);

// Partitions the union of the disks of radius r around `centers` into
// disjoint connected pieces, one per center, each contained in its center's
// disk. The assignment is a multi-source BFS truncated at depth r, seeding
// the centers in the given order and exploring neighbors in ascending id:
// every vertex joins the piece of the center that discovers it first.
std::vector<VertexSet> partition_disks(const Graph& g,
                                       std::span<const Vertex> centers,
                                       std::uint32_t r);

// Removes the disjoint pieces `parts` from `g` and returns one child graph
// per remaining component. A component gains one meta vertex per piece it
// touches, adjacent to the component vertices neighboring that piece; two
// metas of the same child are adjacent when their pieces lie in a common
// component of g minus the child's vertices.
std::vector<AnnotatedGraph> split_general(const AnnotatedGraph& g,
                                          std::span<const VertexSet> parts,
                                          std::uint32_t node_id);

struct HierarchyOptions {
  KDiskOptions separator;
};

// Recursively decomposes a connected graph with balanced disk separators
// (k disks per level). Node ids are assigned in post order: every child's id
// is smaller than its parent's, and the root's id is nodes.size() - 1.
HierTree build_hierarchy(const Graph& g, std::uint32_t k = 1,
                         const HierarchyOptions& options = {});

}  // namespace spannerweave
