#pragma once

#include <cstdint>
#include <vector>

#include "spannerweave/graph.hpp"
#include "spannerweave/rng.hpp"
#include "spannerweave/treedec.hpp"

namespace swtest {

using spannerweave::Edge;
using spannerweave::Graph;
using spannerweave::make_edge;
using spannerweave::SplitRng;
using spannerweave::Vertex;

inline Graph path_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), v});
  if (n >= 3) edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

// Star with the hub at vertex 0 and `leaves` leaves.
inline Graph star_graph(std::uint32_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

// a rows by b columns, row-major vertex ids.
inline Graph grid_graph(std::uint32_t a, std::uint32_t b) {
  std::vector<Edge> edges;
  for (std::uint32_t r = 0; r < a; ++r)
    for (std::uint32_t c = 0; c < b; ++c) {
      Vertex v = r * b + c;
      if (c + 1 < b) edges.push_back({v, v + 1});
      if (r + 1 < a) edges.push_back({v, v + b});
    }
  return Graph::from_edges(a * b, edges);
}

// Random attachment tree plus a sprinkle of extra edges; always connected.
inline Graph random_connected(SplitRng& rng, std::uint32_t n,
                              std::uint32_t edge_pct = 30) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    edges.push_back(make_edge(v, static_cast<Vertex>(rng.below(v))));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(100) < edge_pct) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

// Two 5-cliques joined through a 5-vertex path: clique A on {0..4}, clique B
// on {5..9}, path 10-11-12-13-14, bridges 0-10 and 14-5.
inline Graph two_cliques_with_path() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) edges.push_back({u, v});
  for (Vertex u = 5; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) edges.push_back({u, v});
  for (Vertex v = 11; v < 15; ++v) edges.push_back({static_cast<Vertex>(v - 1), v});
  edges.push_back({0, 10});
  edges.push_back({5, 14});
  return Graph::from_edges(15, edges);
}

// Tree decomposition from an elimination order: bag i holds order[i] plus its
// not-yet-eliminated neighbors (with fill edges added as elimination goes),
// linked to the bag of the earliest-eliminated other member. For a connected
// graph this yields a valid decomposition of whatever width the order gives.
inline spannerweave::TreeDecomposition elimination_td(
    const Graph& g, const std::vector<Vertex>& order) {
  const std::uint32_t n = g.n();
  std::vector<std::uint32_t> position(n);
  for (std::uint32_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<spannerweave::VertexSet> work(n, spannerweave::VertexSet(n));
  for (const Edge& e : g.edges()) {
    work[e.u].insert(e.v);
    work[e.v].insert(e.u);
  }
  spannerweave::TreeDecomposition td;
  td.host_n = n;
  for (std::uint32_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    work[v].for_each([&](Vertex w) {
      if (position[w] > i) later.push_back(w);
    });
    spannerweave::VertexSet bag(n);
    bag.insert(v);
    Vertex parent = spannerweave::kNoVertex;
    for (Vertex w : later) {
      bag.insert(w);
      if (parent == spannerweave::kNoVertex || position[w] < position[parent])
        parent = w;
    }
    for (Vertex a : later)
      for (Vertex b : later)
        if (a != b) work[a].insert(b);
    td.bags.push_back(bag);
    if (parent != spannerweave::kNoVertex) td.tree.emplace_back(i, position[parent]);
  }
  return td;
}

}  // namespace swtest
