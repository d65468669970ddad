#include "spannerweave/hierarchy.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "spannerweave/error.hpp"

namespace spannerweave {

std::vector<Vertex> HierNode::bag_originals() const {
  std::vector<Vertex> out;
  bag.for_each([&](Vertex v) {
    if (!minor.is_meta(v)) out.push_back(minor.tags[v].origin);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t HierTree::depth() const {
  std::uint32_t d = 0;
  for (const HierNode& node : nodes) d = std::max(d, node.depth);
  return d;
}

namespace {

struct MetaSpec {
  std::uint32_t disk = 0;
  std::vector<Vertex> attach;  // parent-local neighbors of the removed piece
};

// Child graph for one component: the component's vertices relabeled to
// 0..|comp|-1 in ascending parent order, one meta vertex per spec appended
// after them, meta-to-component edges from `attach`, and meta-to-meta edges
// between the given ranks.
AnnotatedGraph make_child(
    const AnnotatedGraph& g, const std::vector<Vertex>& comp,
    const std::vector<MetaSpec>& metas,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& meta_edges,
    std::uint32_t node_id) {
  const auto base = static_cast<std::uint32_t>(comp.size());
  const auto n_child = base + static_cast<std::uint32_t>(metas.size());
  std::vector<Vertex> to_child(g.graph.n(), kNoVertex);
  for (std::uint32_t i = 0; i < base; ++i) to_child[comp[i]] = i;

  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < base; ++i)
    for (Vertex w : g.graph.neighbors(comp[i]))
      if (to_child[w] != kNoVertex && to_child[w] > i)
        edges.push_back(Edge{i, to_child[w]});
  for (std::uint32_t rank = 0; rank < metas.size(); ++rank)
    for (Vertex x : metas[rank].attach)
      edges.push_back(make_edge(base + rank, to_child[x]));
  for (auto [a, b] : meta_edges) edges.push_back(make_edge(base + a, base + b));

  AnnotatedGraph child;
  child.graph = Graph::from_edges(n_child, edges);
  child.tags.resize(n_child);
  for (std::uint32_t i = 0; i < base; ++i) child.tags[i] = g.tags[comp[i]];
  for (std::uint32_t rank = 0; rank < metas.size(); ++rank)
    child.tags[base + rank] =
        VertexTag{VertexKind::kMeta, node_id, metas[rank].disk};
  return child;
}

}  // namespace

std::vector<AnnotatedGraph> split_k1(const AnnotatedGraph& g,
                                     const DiskSeparator& sep,
                                     std::uint32_t node_id) {
  const std::uint32_t n = g.graph.n();
  if (sep.centers.size() != 1)
    throw ContractViolation("split_k1: expected exactly one disk");
  if (sep.cover.universe() != n)
    throw ContractViolation("split_k1: cover universe mismatch");
  if (max_component_size(g.graph, sep.cover) > n / 2)
    throw ContractViolation("split_k1: disk is not balanced");

  std::vector<AnnotatedGraph> out;
  for (const VertexSet& comp_set : components(g.graph, sep.cover)) {
    std::vector<Vertex> comp = comp_set.members();
    MetaSpec meta;
    for (Vertex x : comp)
      for (Vertex w : g.graph.neighbors(x))
        if (sep.cover.contains(w)) {
          meta.attach.push_back(x);
          break;
        }
    out.push_back(make_child(g, comp, {meta}, {}, node_id));
  }
  return out;
}

std::vector<VertexSet> partition_disks(const Graph& g,
                                       std::span<const Vertex> centers,
                                       std::uint32_t r) {
  const std::uint32_t n = g.n();
  if (centers.empty()) throw ContractViolation("partition_disks: no centers");
  std::vector<std::uint32_t> owner(n, kNoVertex);
  std::vector<std::uint32_t> dist(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (std::uint32_t j = 0; j < centers.size(); ++j) {
    Vertex c = centers[j];
    if (c >= n) throw ContractViolation("partition_disks: center out of range");
    if (owner[c] != kNoVertex)
      throw ContractViolation("partition_disks: duplicate center");
    owner[c] = j;
    queue.push_back(c);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] == r) break;  // queue distances never decrease
    for (Vertex w : g.neighbors(u)) {
      if (owner[w] != kNoVertex) continue;
      owner[w] = owner[u];
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  std::vector<VertexSet> parts(centers.size(), VertexSet(n));
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] != kNoVertex) parts[owner[v]].insert(v);
  return parts;
}

std::vector<AnnotatedGraph> split_general(const AnnotatedGraph& g,
                                          std::span<const VertexSet> parts,
                                          std::uint32_t node_id) {
  const std::uint32_t n = g.graph.n();
  if (parts.empty()) throw ContractViolation("split_general: no parts");
  VertexSet all(n);
  std::vector<std::uint32_t> part_of(n, kNoVertex);
  std::vector<Vertex> first_of(parts.size());
  for (std::uint32_t j = 0; j < parts.size(); ++j) {
    const VertexSet& p = parts[j];
    if (p.universe() != n)
      throw ContractViolation("split_general: part universe mismatch");
    if (p.empty()) throw ContractViolation("split_general: empty part");
    if (p.intersects(all))
      throw ContractViolation("split_general: parts overlap");
    all |= p;
    p.for_each([&](Vertex v) { part_of[v] = j; });
    first_of[j] = p.members().front();
  }
  if (max_component_size(g.graph, all) > n / 2)
    throw ContractViolation("split_general: parts do not balance the graph");

  std::vector<AnnotatedGraph> out;
  for (const VertexSet& comp_set : components(g.graph, all)) {
    std::vector<Vertex> comp = comp_set.members();
    std::vector<std::vector<Vertex>> attach(parts.size());
    for (Vertex x : comp)
      for (Vertex w : g.graph.neighbors(x)) {
        std::uint32_t j = part_of[w];
        if (j == kNoVertex) continue;
        if (attach[j].empty() || attach[j].back() != x) attach[j].push_back(x);
      }

    std::vector<MetaSpec> metas;
    std::vector<std::uint32_t> rank_of(parts.size(), kNoVertex);
    for (std::uint32_t j = 0; j < parts.size(); ++j)
      if (!attach[j].empty()) {
        rank_of[j] = static_cast<std::uint32_t>(metas.size());
        metas.push_back(MetaSpec{j, std::move(attach[j])});
      }

    // Two metas are adjacent when their pieces share a component of the
    // graph minus this child's vertices (the rest of the graph glues them).
    std::vector<VertexSet> rest = components(g.graph, comp_set);
    std::vector<std::uint32_t> rest_label(parts.size(), kNoVertex);
    for (std::uint32_t j = 0; j < parts.size(); ++j)
      for (std::uint32_t ri = 0; ri < rest.size(); ++ri)
        if (rest[ri].contains(first_of[j])) {
          rest_label[j] = ri;
          break;
        }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> meta_edges;
    for (std::uint32_t a = 0; a < parts.size(); ++a)
      for (std::uint32_t b = a + 1; b < parts.size(); ++b)
        if (rank_of[a] != kNoVertex && rank_of[b] != kNoVertex &&
            rest_label[a] == rest_label[b])
          meta_edges.emplace_back(rank_of[a], rank_of[b]);

    out.push_back(make_child(g, comp, metas, meta_edges, node_id));
  }
  return out;
}

namespace {

// Smallest dominating set of size at most max_size, preferring fewer
// vertices and then lexicographic order. Only used on tiny leaf graphs.
std::vector<Vertex> smallest_dominating_set(const Graph& g,
                                            std::uint32_t max_size) {
  const std::uint32_t n = g.n();
  if (n > 63)
    throw ContractViolation("dominating set search is capped at 63 vertices");
  std::vector<std::uint64_t> nb(n);
  for (Vertex v = 0; v < n; ++v) {
    nb[v] = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint32_t s = 1; s <= max_size && s <= n; ++s) {
    std::vector<Vertex> combo(s);
    for (std::uint32_t i = 0; i < s; ++i) combo[i] = i;
    while (true) {
      std::uint64_t covered = 0;
      for (Vertex v : combo) covered |= nb[v];
      if (covered == full) return combo;
      std::int64_t i = s - 1;
      while (i >= 0 && combo[i] == n - s + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < s; ++j)
        combo[j] = combo[j - 1] + 1;
    }
  }
  throw ContractViolation("no dominating set within the size cap");
}

struct Builder {
  std::uint32_t k;
  const HierarchyOptions& options;
  std::vector<HierNode> nodes;
  std::vector<std::uint32_t> pre_to_post;  // creation order -> final id

  std::uint32_t build(AnnotatedGraph g, std::uint32_t depth) {
    const auto pre_id = static_cast<std::uint32_t>(pre_to_post.size());
    pre_to_post.push_back(kNoNode);
    const std::uint32_t n = g.graph.n();
    const std::uint32_t leaf_cap = k == 1 ? 5 : 2 * k + 1;

    HierNode node;
    node.depth = depth;
    std::vector<std::uint32_t> kids;
    if (n <= leaf_cap) {
      node.kind = NodeKind::kLeaf;
      node.bag = VertexSet::full(n);
      if (k > 1) {
        node.centers = smallest_dominating_set(g.graph, k);
        node.radius = 1;
      }
    } else {
      node.kind = NodeKind::kInternal;
      DiskSeparator sep = k == 1
                              ? best_disk_separator(g.graph)
                              : best_k_disk_separator(g.graph, k, options.separator);
      node.bag = sep.cover;
      node.centers = sep.centers;
      node.radius = sep.radius;
      std::vector<AnnotatedGraph> grafts;
      if (k == 1) {
        grafts = split_k1(g, sep, pre_id);
      } else {
        auto parts = partition_disks(g.graph, sep.centers, sep.radius);
        grafts = split_general(g, parts, pre_id);
      }
      kids.reserve(grafts.size());
      for (AnnotatedGraph& kid : grafts)
        kids.push_back(build(std::move(kid), depth + 1));
    }

    node.minor = std::move(g);
    node.children = std::move(kids);
    const auto final_id = static_cast<std::uint32_t>(nodes.size());
    node.id = final_id;
    for (std::uint32_t c : node.children) nodes[c].parent = final_id;
    pre_to_post[pre_id] = final_id;
    nodes.push_back(std::move(node));
    return final_id;
  }
};

}  // namespace

HierTree build_hierarchy(const Graph& g, std::uint32_t k,
                         const HierarchyOptions& options) {
  const std::uint32_t n = g.n();
  if (n == 0) throw ContractViolation("build_hierarchy: empty graph");
  if (k == 0) throw ContractViolation("build_hierarchy: k must be at least 1");
  if (k > options.separator.k_cap)
    throw ContractViolation("build_hierarchy: k exceeds the configured cap");
  if (!is_connected(g))
    throw ContractViolation("build_hierarchy: graph must be connected");

  Builder b{k, options, {}, {}};
  const std::uint32_t root = b.build(AnnotatedGraph::wrap(g), 0);

  HierTree tree;
  tree.k = k;
  tree.root = root;
  tree.original_n = n;
  tree.original_m = g.m();
  tree.nodes = std::move(b.nodes);
  for (HierNode& node : tree.nodes)
    for (VertexTag& tag : node.minor.tags)
      if (tag.kind == VertexKind::kMeta) tag.origin = b.pre_to_post[tag.origin];

  tree.node_of_vertex.assign(n, kNoNode);
  for (const HierNode& node : tree.nodes)
    node.bag.for_each([&](Vertex v) {
      if (node.minor.is_meta(v)) return;
      Vertex origin = node.minor.tags[v].origin;
      if (tree.node_of_vertex[origin] != kNoNode)
        throw ContractViolation("build_hierarchy: bags overlap");
      tree.node_of_vertex[origin] = node.id;
    });
  for (Vertex v = 0; v < n; ++v)
    if (tree.node_of_vertex[v] == kNoNode)
      throw ContractViolation("build_hierarchy: vertex missing from all bags");
  return tree;
}

}  // namespace spannerweave
