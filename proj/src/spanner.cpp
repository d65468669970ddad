#include "spannerweave/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "spannerweave/error.hpp"

namespace spannerweave {

namespace {

// Union-find over input-graph ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// BFS tree of the component of `ind` containing `root_local`, reported as
// input-graph edges via the node's tags.
std::vector<Edge> component_bfs_edges(const AnnotatedGraph& minor,
                                      const InducedGraph& ind,
                                      Vertex root_local) {
  BfsTree bt = bfs_tree(ind.graph, root_local);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < ind.graph.n(); ++v) {
    if (bt.parent[v] == kNoVertex) continue;
    Vertex a = minor.tags[ind.to_parent[v]].origin;
    Vertex b = minor.tags[ind.to_parent[bt.parent[v]]].origin;
    edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::vector<LocalSubtree> local_subtrees(const HierTree& h) {
  std::vector<LocalSubtree> out;
  for (const HierNode& node : h.nodes) {
    const AnnotatedGraph& minor = node.minor;
    InducedGraph ind = induced(minor.graph, minor.original_vertices());

    if (h.k == 1 && node.kind == NodeKind::kLeaf) {
      LocalSubtree st;
      st.level = node.depth;
      st.node = node.id;
      st.source = SubtreeSource::kOptimalLeafSpanner;
      for (const VertexSet& comp : components(ind.graph)) {
        InducedGraph sub = induced(ind.graph, comp);
        auto [tree, surplus] = optimal_tree_spanner_small(sub.graph);
        (void)surplus;
        for (Edge e : tree) {
          Vertex a = minor.tags[ind.to_parent[sub.to_parent[e.u]]].origin;
          Vertex b = minor.tags[ind.to_parent[sub.to_parent[e.v]]].origin;
          st.edges.push_back(make_edge(a, b));
        }
      }
      std::sort(st.edges.begin(), st.edges.end());
      out.push_back(std::move(st));
      continue;
    }

    for (std::uint32_t l = 0; l < node.centers.size(); ++l) {
      Vertex c = node.centers[l];
      if (minor.is_meta(c)) continue;
      LocalSubtree st;
      st.level = node.depth;
      st.node = node.id;
      st.center_index = l;
      st.root = minor.tags[c].origin;
      st.edges = component_bfs_edges(minor, ind, ind.from_parent[c]);
      st.source = node.kind == NodeKind::kLeaf ? SubtreeSource::kDominatingBfs
                                               : SubtreeSource::kBfsTree;
      out.push_back(std::move(st));
    }
  }
  return out;
}

SpannerSystem sparse_spanner(const HierTree& h) {
  SpannerSystem system;
  system.mode = SystemMode::kSparseUnion;
  for (const LocalSubtree& st : local_subtrees(h))
    system.union_edges.insert(system.union_edges.end(), st.edges.begin(),
                              st.edges.end());
  std::sort(system.union_edges.begin(), system.union_edges.end());
  system.union_edges.erase(
      std::unique(system.union_edges.begin(), system.union_edges.end()),
      system.union_edges.end());
  return system;
}

SpannerSystem collective_system(const HierTree& h) {
  const Graph& g = h.nodes[h.root].minor.graph;
  const std::uint32_t n = h.original_n;
  const std::uint32_t slots_per_level = h.k;
  const std::uint32_t levels = h.depth() + 1;

  std::vector<std::vector<Edge>> forests(
      static_cast<std::size_t>(levels) * slots_per_level);
  for (LocalSubtree& st : local_subtrees(h)) {
    auto slot = static_cast<std::size_t>(st.level) * slots_per_level +
                st.center_index;
    forests[slot].insert(forests[slot].end(), st.edges.begin(),
                         st.edges.end());
  }

  const std::vector<Edge> all_edges = g.edges();
  SpannerSystem system;
  system.mode = SystemMode::kCollective;
  for (std::uint32_t i = 0; i < levels; ++i)
    for (std::uint32_t l = 0; l < slots_per_level; ++l) {
      std::vector<Edge>& forest = forests[i * slots_per_level + l];
      std::sort(forest.begin(), forest.end());
      forest.erase(std::unique(forest.begin(), forest.end()), forest.end());
      DisjointSets ds(n);
      for (Edge e : forest)
        if (!ds.unite(e.u, e.v))
          throw ContractViolation(
              "collective_system: level forest is not vertex-disjoint");
      std::vector<Edge> tree = std::move(forest);
      for (Edge e : all_edges)
        if (ds.unite(e.u, e.v)) tree.push_back(e);
      if (tree.size() + 1 != n)
        throw ContractViolation(
            "collective_system: completed tree does not span the graph");
      std::sort(tree.begin(), tree.end());
      system.trees.push_back(TaggedTree{i, l, std::move(tree)});
    }
  return system;
}

std::pair<std::vector<Edge>, std::uint32_t> optimal_tree_spanner_small(
    const Graph& g, std::uint32_t cap) {
  const std::uint32_t n = g.n();
  if (n > cap)
    throw ContractViolation(
        "optimal_tree_spanner_small: graph exceeds the size cap");
  if (!is_connected(g))
    throw ContractViolation(
        "optimal_tree_spanner_small: graph must be connected");
  if (n <= 1) return {{}, 0};

  const std::vector<Edge> all = g.edges();
  const auto m = static_cast<std::uint32_t>(all.size());
  const std::uint32_t need = n - 1;

  // exact pair distances in g
  std::vector<std::vector<std::uint32_t>> dist_g;
  dist_g.reserve(n);
  for (Vertex v = 0; v < n; ++v) dist_g.push_back(bfs_distances(g, v));

  std::vector<Edge> best_tree;
  std::uint32_t best_surplus = kUnreachable;

  std::vector<std::uint32_t> combo(need);
  std::iota(combo.begin(), combo.end(), 0);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::uint32_t> dist_t(n);
  std::vector<Vertex> queue;
  while (true) {
    DisjointSets ds(n);
    bool tree = true;
    for (std::uint32_t idx : combo)
      if (!ds.unite(all[idx].u, all[idx].v)) {
        tree = false;
        break;
      }
    if (tree) {
      for (auto& a : adj) a.clear();
      for (std::uint32_t idx : combo) {
        adj[all[idx].u].push_back(all[idx].v);
        adj[all[idx].v].push_back(all[idx].u);
      }
      std::uint32_t surplus = 0;
      for (Vertex s = 0; s < n && surplus < best_surplus; ++s) {
        std::fill(dist_t.begin(), dist_t.end(), kUnreachable);
        queue.clear();
        queue.push_back(s);
        dist_t[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          Vertex u = queue[head];
          for (Vertex w : adj[u])
            if (dist_t[w] == kUnreachable) {
              dist_t[w] = dist_t[u] + 1;
              queue.push_back(w);
            }
        }
        for (Vertex v = 0; v < n; ++v)
          surplus = std::max(surplus, dist_t[v] - dist_g[s][v]);
      }
      if (surplus < best_surplus) {
        best_surplus = surplus;
        best_tree.clear();
        for (std::uint32_t idx : combo) best_tree.push_back(all[idx]);
        if (best_surplus == 0) break;
      }
    }
    // next lexicographic combination
    std::int64_t i = need - 1;
    while (i >= 0 && combo[i] == m - need + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < need; ++j)
      combo[j] = combo[j - 1] + 1;
  }
  return {std::move(best_tree), best_surplus};
}

double surplus_bound(SystemMode mode, std::uint32_t n, std::uint32_t k,
                     std::uint32_t r_max) {
  const double rho = std::max(1u, r_max);
  const double lg = std::log2(static_cast<double>(n));
  if (k == 1)
    return mode == SystemMode::kSparseUnion ? 2 * rho * lg - 1 : 2 * rho * lg;
  return 2 * rho * (1 + lg);
}

}  // namespace spannerweave
