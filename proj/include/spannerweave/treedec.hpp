#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spannerweave/graph.hpp"

namespace spannerweave {

// Bags plus a tree over bag indices. The three decomposition conditions
// (vertex cover, edge cover, per-vertex connected subtree) are checked by
// validate(), not enforced by the container.
struct TreeDecomposition {
  std::uint32_t host_n = 0;
  std::vector<VertexSet> bags;  // each with universe host_n
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tree;  // bag indices
};

struct TdViolation {
  enum class Kind : std::uint8_t {
    kTreeShape,                   // bag links do not form a tree
    kVertexUncovered,             // vertex in no bag
    kEdgeUncovered,               // edge endpoints share no bag
    kVertexSubtreeDisconnected,   // a vertex's bags are not connected
  };
  Kind kind = Kind::kTreeShape;
  Vertex vertex = kNoVertex;
  Edge edge{kNoVertex, kNoVertex};
  std::string detail;
};

// Exhaustive condition check; an empty result means the decomposition is
// valid for g. Malformed containers (universe mismatch, bag index out of
// range) throw instead of reporting.
std::vector<TdViolation> validate(const Graph& g, const TreeDecomposition& td);

struct TdMetrics {
  std::uint32_t width = 0;      // max bag size - 1
  std::uint32_t length = 0;     // max within-bag distance in g
  std::uint32_t breadth = 0;    // max over bags of the 1-center radius
  std::uint32_t k_breadth = 0;  // max over bags of the k-center radius
  bool k_breadth_exact = true;
};

struct KBreadthOptions {
  std::uint32_t k_cap = 3;     // exact k-center search cap on k
  std::uint32_t bag_cap = 24;  // exact search cap on bag size
  bool allow_greedy = false;   // over the caps: greedy bound instead of refusal
};

// Width, length, breadth, and k-breadth of a decomposition. Centers may be
// any host vertex, inside the bag or not. Exact k-center search runs within
// the caps; beyond them the greedy bound is reported (k_breadth_exact =
// false) when allowed, otherwise the call refuses.
TdMetrics metrics(const Graph& g, const TreeDecomposition& td, std::uint32_t k,
                  const KBreadthOptions& options = {});

// Same tree, each bag replaced by its radius-r neighborhood in h.
TreeDecomposition expand(const Graph& h, const TreeDecomposition& td,
                         std::uint32_t r);

// Turns a decomposition of a t-spanner into a decomposition of the host:
// verifies spanner_h is a subgraph of g whose distances stretch every g-edge
// by at most t, then expands td_of_h by ceil(t/2) radii measured in the
// spanner. The result is a valid decomposition of g whose bags are covered
// by width(td_of_h)+1 disks of radius at most ceil(t/2).
TreeDecomposition lift(const Graph& g, const Graph& spanner_h,
                       const TreeDecomposition& td_of_h, std::uint32_t t);

// PACE-style text format: "s td <#bags> <max-bag-size> <n>", one
// "b <id> <v...>" line per bag, then one "i j" line per tree link; ids and
// vertices are 1-based in the file, comments start with 'c'.
TreeDecomposition read_tree_decomposition(std::istream& in);
TreeDecomposition read_tree_decomposition_file(const std::string& path);
void write_tree_decomposition(const TreeDecomposition& td, std::ostream& out);

}  // namespace spannerweave
