#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace spannerweave {

using Vertex = std::uint32_t;

// Sentinels. Distances and ids never legitimately reach these values.
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;
inline constexpr Vertex kNoVertex = 0xffffffffu;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes to u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Fixed-universe bitset over vertex ids [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint32_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::uint32_t universe);

  std::uint32_t universe() const { return n_; }
  bool empty() const;
  std::uint32_t count() const;

  bool contains(Vertex v) const {
    return v < n_ && (words_[v >> 6] >> (v & 63)) & 1;
  }
  void insert(Vertex v) { words_[v >> 6] |= 1ull << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(1ull << (v & 63)); }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& subtract(const VertexSet& o);

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  // Member ids in ascending order.
  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        f(static_cast<Vertex>((w << 6) + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph in CSR form. Adjacency lists are sorted
// ascending, which every deterministic tie-break downstream relies on.
class Graph {
 public:
  Graph() = default;

  // Deduplicates edges; rejects self-loops and out-of-range endpoints.
  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges);

  std::uint32_t n() const { return n_; }
  std::uint64_t m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as normalized pairs in ascending (u, v) order.
  std::vector<Edge> edges() const;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adj_;
};

// ---- Traversals ------------------------------------------------------

// Distances from a source set (kUnreachable where unreached). Empty source
// set is a contract violation.
std::vector<std::uint32_t> bfs_distances(const Graph& g, const VertexSet& sources);
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

struct BfsTree {
  std::vector<std::uint32_t> dist;
  // parent[v] = smallest-id neighbor of v in the previous BFS layer
  // (kNoVertex for the root and unreached vertices). Independent of queue
  // order, so every build produces the same tree.
  std::vector<Vertex> parent;
};
BfsTree bfs_tree(const Graph& g, Vertex root);

// All vertices within distance r of v / of a set.
VertexSet disk(const Graph& g, Vertex v, std::uint32_t r);
VertexSet disk(const Graph& g, const VertexSet& sources, std::uint32_t r);

// Connected components of g minus `removed`, ordered by smallest member id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Largest component size of g minus `removed` (0 if nothing remains).
std::uint32_t max_component_size(const Graph& g, const VertexSet& removed);

// ---- Surgery ---------------------------------------------------------

struct InducedGraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // local id -> id in the source graph
  std::vector<Vertex> from_parent;  // source id -> local id or kNoVertex
};
InducedGraph induced(const Graph& g, const VertexSet& keep);

// Contracts edge uv keeping the smaller endpoint's id; the larger endpoint
// disappears and ids above it shift down by one. Parallel edges collapse.
// vertex_map[old id] = new id.
struct ContractedGraph {
  Graph graph;
  std::vector<Vertex> vertex_map;
};
ContractedGraph contract_edge(const Graph& g, Vertex u, Vertex v);

// ---- Vertex provenance through the hierarchy --------------------------

enum class VertexKind : std::uint8_t { kOriginal, kMeta };

// Original vertices carry their input-graph id in `origin`. Meta vertices
// (contracted separator disks) carry the creating hierarchy node in `origin`
// and the disk index in `disk`.
struct VertexTag {
  VertexKind kind = VertexKind::kOriginal;
  std::uint32_t origin = 0;
  std::uint32_t disk = 0;
  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

struct AnnotatedGraph {
  Graph graph;
  std::vector<VertexTag> tags;

  static AnnotatedGraph wrap(Graph g);

  bool is_meta(Vertex v) const { return tags[v].kind == VertexKind::kMeta; }
  VertexSet original_vertices() const;
};

// ---- Text formats ------------------------------------------------------

// Plain edge lists are one "u v" pair per line, 0-based, '#' comments.
// DIMACS-style input ("c" comments, "p ..." header, "e u v" lines, 1-based)
// is detected by the header and accepted on ingest.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace spannerweave
