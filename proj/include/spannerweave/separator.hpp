#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spannerweave/graph.hpp"

namespace spannerweave {

// A set of at most k disks of a common radius whose removal leaves only
// components of at most floor(n/2) vertices.
struct DiskSeparator {
  std::vector<Vertex> centers;      // ascending ids
  std::uint32_t radius = 0;
  VertexSet cover;                  // union of the radius-r disks
  std::uint32_t max_component = 0;  // largest component left after removal
};

struct KDiskOptions {
  // Subset enumeration is Theta(n^k); refuse anything past this unless the
  // caller raises the cap explicitly.
  std::uint32_t k_cap = 3;
};

// Smallest r such that the radius-r disk around v is a balanced separator.
// One BFS plus one union-find sweep over the layers, outermost first.
std::uint32_t min_radius_at(const Graph& g, Vertex v);

// Minimum min_radius_at over all centers; ties go to the smallest vertex id.
DiskSeparator best_disk_separator(const Graph& g);

// Minimum radius over all k-subsets of centers; ties go to the
// lexicographically smallest center tuple.
DiskSeparator best_k_disk_separator(const Graph& g, std::uint32_t k,
                                    const KDiskOptions& options = {});

namespace detail {

// Smallest r making the union of radius-r disks around `centers` balanced.
// Single multi-source layered sweep; shared by the subset scan and by tests
// as the per-subset reference value.
std::uint32_t k_subset_radius(const Graph& g, std::span<const Vertex> centers);

}  // namespace detail

}  // namespace spannerweave
