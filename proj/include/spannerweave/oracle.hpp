#pragma once

#include <cstdint>
#include <vector>

#include "spannerweave/graph.hpp"

namespace spannerweave {

// Exact all-pairs hop distances. Symmetric with a zero diagonal; connected
// inputs only, so every entry is finite.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::uint32_t n)
      : n_(n), d_(std::size_t(n) * n, 0) {}

  std::uint32_t size() const { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const {
    return d_[std::size_t(u) * n_ + v];
  }
  std::uint32_t& at(Vertex u, Vertex v) {
    return d_[std::size_t(u) * n_ + v];
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

// One BFS per vertex, sharded across the thread budget.
DistanceMatrix apsp(const Graph& g);

// Worst additive surplus and multiplicative stretch over all vertex pairs.
// `argmax` is the lexicographically first pair attaining max_surplus.
// `coverage` is filled by collective_surplus only: per tree, the number of
// pairs it serves at the minimum tree distance (ties count for every tree).
struct SurplusReport {
  std::uint32_t max_surplus = 0;
  std::uint32_t stretch_num = 1;  // max d/d_g as a reduced fraction
  std::uint32_t stretch_den = 1;
  Edge argmax{kNoVertex, kNoVertex};
  std::vector<std::uint64_t> coverage;
};

// Surplus of a spanning connected subgraph h against g.
SurplusReport surplus(const Graph& g, const Graph& h);

// Surplus when every pair may pick its best tree: max over pairs of
// (min over trees of d_T) - d_G. Each tree must be a spanning tree of g.
SurplusReport collective_surplus(const Graph& g, const std::vector<Graph>& trees);

// Exact k-disk tree-breadth by exhausting elimination orders. Each order's
// fill-in is a chordal supergraph whose elimination cliques bound the bags;
// every minimal chordal supergraph arises from some order, and the covering
// radius only grows with supergraph inclusion, so the minimum over orders is
// exact. Caps: n <= 9 for k = 1, n <= 6 otherwise.
std::uint32_t brute_tree_breadth(const Graph& g, std::uint32_t k = 1);

// Exact treewidth over the same elimination-order search; n <= 9.
std::uint32_t brute_treewidth(const Graph& g);

}  // namespace spannerweave
