#include "spannerweave/generate.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "spannerweave/error.hpp"
#include "spannerweave/rng.hpp"

namespace spannerweave {

namespace {

// Chordality by repeated simplicial elimination: a graph is chordal exactly
// when some vertex whose neighborhood is a clique can always be removed.
bool simplicially_reducible(const Graph& g) {
  const std::uint32_t n = g.n();
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<VertexSet> mask(n, VertexSet(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[v]) mask[v].insert(w);
  std::vector<char> gone(n, 0);
  for (std::uint32_t round = 0; round < n; ++round) {
    Vertex found = kNoVertex;
    for (Vertex v = 0; v < n && found == kNoVertex; ++v) {
      if (gone[v]) continue;
      bool clique = true;
      for (std::size_t i = 0; i < adj[v].size() && clique; ++i) {
        if (gone[adj[v][i]]) continue;
        for (std::size_t j = i + 1; j < adj[v].size() && clique; ++j)
          if (!gone[adj[v][j]] && !mask[adj[v][i]].contains(adj[v][j]))
            clique = false;
      }
      if (clique) found = v;
    }
    if (found == kNoVertex) return false;
    gone[found] = 1;
  }
  return true;
}

// Every edge of `host` must sit within distance `t` of its endpoints in
// `sub`; one BFS per vertex of the subgraph.
void recheck_stretch(const Graph& host, const Graph& sub, std::uint32_t t,
                     const char* kind) {
  for (Vertex v = 0; v < host.n(); ++v) {
    const auto dist = bfs_distances(sub, v);
    for (Vertex w : host.neighbors(v))
      if (w > v && dist[w] > t)
        throw ContractViolation(std::string(kind) +
                                " failed its own stretch certificate on edge (" +
                                std::to_string(v) + ", " + std::to_string(w) + ")");
  }
}

// Pairs (u < v) at subgraph distance in [2, t]; the legal chords to plant.
std::vector<Edge> chord_pool(const Graph& sub, std::uint32_t t) {
  std::vector<Edge> pool;
  for (Vertex u = 0; u < sub.n(); ++u) {
    const auto dist = bfs_distances(sub, u);
    for (Vertex v = u + 1; v < sub.n(); ++v)
      if (dist[v] >= 2 && dist[v] <= t) pool.push_back({u, v});
  }
  return pool;
}

}  // namespace

GenResult gen_cycle(std::uint32_t length) {
  if (length == 0 || length % 3 != 0)
    throw ContractViolation("cycle length must be a positive multiple of 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < length; ++v) edges.push_back({static_cast<Vertex>(v - 1), v});
  edges.push_back({0, static_cast<Vertex>(length - 1)});
  GenResult out;
  out.graph = Graph::from_edges(length, edges);
  out.certificate.tree_breadth = length / 3;
  out.certificate.breadth_bound = length / 3;
  return out;
}

GenResult gen_chordal(std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw ContractViolation("at least one vertex is required");
  SplitRng rng(seed);
  std::vector<std::vector<Vertex>> bag(n);
  bag[0] = {0};
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto& anchor = bag[rng.below(v)];
    std::vector<Vertex> attach;
    for (Vertex w : anchor)
      if (rng.below(2) == 0) attach.push_back(w);
    if (attach.empty()) attach.push_back(anchor[rng.below(anchor.size())]);
    for (Vertex w : attach) edges.push_back(make_edge(v, w));
    attach.push_back(v);
    bag[v] = std::move(attach);
  }
  GenResult out;
  out.graph = Graph::from_edges(n, edges);
  if (!is_connected(out.graph) || !simplicially_reducible(out.graph))
    throw ContractViolation("chordal generator failed its own certificate");
  out.certificate.tree_breadth = n >= 2 ? 1 : 0;
  out.certificate.breadth_bound = out.certificate.tree_breadth;
  return out;
}

GenResult gen_planted_tree_spanner(std::uint32_t n, std::uint32_t t,
                                   std::uint64_t extra, std::uint64_t seed) {
  if (n == 0) throw ContractViolation("at least one vertex is required");
  if (t == 0) throw ContractViolation("stretch must be at least 1");
  SplitRng rng(seed);
  std::vector<Edge> tree_edges;
  for (Vertex v = 1; v < n; ++v)
    tree_edges.push_back(make_edge(v, static_cast<Vertex>(rng.below(v))));
  Graph tree = Graph::from_edges(n, tree_edges);
  auto pool = chord_pool(tree, t);
  if (extra > pool.size())
    throw ContractViolation("only " + std::to_string(pool.size()) +
                            " pairs sit within tree distance " + std::to_string(t) +
                            "; cannot plant " + std::to_string(extra) + " chords");
  std::vector<Edge> edges = tree_edges;
  for (std::uint64_t i = 0; i < extra; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    edges.push_back(pool[i]);
  }
  GenResult out;
  out.graph = Graph::from_edges(n, edges);
  recheck_stretch(out.graph, tree, t, "tree spanner generator");
  std::sort(tree_edges.begin(), tree_edges.end());
  out.certificate.planted = std::move(tree_edges);
  out.certificate.stretch = t;
  out.certificate.breadth_bound = (t + 1) / 2;
  return out;
}

GenResult gen_planted_tw_spanner(std::uint32_t n, std::uint32_t k,
                                 std::uint32_t t, std::uint64_t seed) {
  if (k == 0) throw ContractViolation("width must be at least 1");
  if (t == 0) throw ContractViolation("stretch must be at least 1");
  if (n < k + 1)
    throw ContractViolation("a width-" + std::to_string(k) + " backbone needs at least " +
                            std::to_string(k + 1) + " vertices");
  SplitRng rng(seed);

  // Full k-tree first: a (k+1)-clique, then each vertex glued to a random
  // k-subset of an existing bag. The bags and their links are the width-k
  // decomposition handed out with the instance.
  TreeDecomposition td;
  td.host_n = n;
  std::vector<std::vector<Vertex>> bags;
  std::vector<Vertex> base;
  for (Vertex v = 0; v <= k; ++v) base.push_back(v);
  bags.push_back(base);
  std::vector<Edge> skeleton;
  for (Vertex u = 0; u <= k; ++u)
    for (Vertex v = u + 1; v <= k; ++v) skeleton.push_back({u, v});
  for (Vertex v = k + 1; v < n; ++v) {
    std::uint32_t anchor = std::uint32_t(rng.below(bags.size()));
    std::vector<Vertex> sub = bags[anchor];
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(rng.below(sub.size())));
    for (Vertex w : sub) skeleton.push_back(make_edge(v, w));
    sub.push_back(v);
    bags.push_back(sub);
    td.tree.emplace_back(std::uint32_t(bags.size()) - 1, anchor);
  }
  for (const auto& members : bags) {
    VertexSet bag(n);
    for (Vertex v : members) bag.insert(v);
    td.bags.push_back(bag);
  }

  // Thin the k-tree to a partial one, keeping a spanning tree so the
  // backbone stays connected.
  Graph full = Graph::from_edges(n, skeleton);
  const auto walk = bfs_tree(full, 0);
  std::vector<Edge> trunk;
  for (Vertex v = 1; v < n; ++v) trunk.push_back(make_edge(v, walk.parent[v]));
  std::sort(trunk.begin(), trunk.end());
  std::vector<Edge> kept = trunk;
  for (const Edge& e : skeleton)
    if (!std::binary_search(trunk.begin(), trunk.end(), e) && rng.below(2) == 0)
      kept.push_back(e);
  Graph backbone = Graph::from_edges(n, kept);

  std::vector<Edge> edges = kept;
  for (const Edge& chord : chord_pool(backbone, t)) edges.push_back(chord);
  GenResult out;
  out.graph = Graph::from_edges(n, edges);

  recheck_stretch(out.graph, backbone, t, "treewidth spanner generator");
  if (!validate(backbone, td).empty())
    throw ContractViolation("treewidth spanner generator produced a bad decomposition");
  for (const VertexSet& bag : td.bags)
    if (bag.count() != k + 1)
      throw ContractViolation("treewidth spanner generator broke its width certificate");

  out.certificate.planted = backbone.edges();
  out.certificate.stretch = t;
  out.certificate.breadth_bound = (t + 1) / 2;
  out.certificate.bound_disks = k + 1;
  out.certificate.decomposition = std::move(td);
  return out;
}

GenResult gen_grid(std::uint32_t rows, std::uint32_t cols) {
  if (rows == 0 || cols == 0)
    throw ContractViolation("grid sides must be positive");
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      Vertex v = r * cols + c;
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, v + cols});
    }
  GenResult out;
  out.graph = Graph::from_edges(rows * cols, edges);
  return out;
}

}  // namespace spannerweave
