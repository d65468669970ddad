#include "spannerweave/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "spannerweave/error.hpp"

namespace spannerweave {

// ---- VertexSet ---------------------------------------------------------

VertexSet VertexSet::full(std::uint32_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~0ull;
  if (universe & 63) s.words_.back() = (1ull << (universe & 63)) - 1;
  return s;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::uint32_t VertexSet::count() const {
  std::uint32_t c = 0;
  for (auto w : words_) c += static_cast<std::uint32_t>(__builtin_popcountll(w));
  return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

// ---- Graph -------------------------------------------------------------

Graph Graph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v)
      throw ContractViolation("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= n || e.v >= n)
      throw ContractViolation("edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") out of range for n=" +
                              std::to_string(n));
    norm.push_back(make_edge(e.u, e.v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = n;
  g.m_ = norm.size();
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : norm) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adj_.resize(2 * norm.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : norm) {
    g.adj_[cursor[e.u]++] = e.v;
    g.adj_[cursor[e.v]++] = e.u;
  }
  for (std::uint32_t v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

// ---- Traversals --------------------------------------------------------

std::vector<std::uint32_t> bfs_distances(const Graph& g, const VertexSet& sources) {
  if (sources.empty()) throw ContractViolation("BFS from an empty source set");
  std::vector<std::uint32_t> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  sources.for_each([&](Vertex v) {
    dist[v] = 0;
    queue.push_back(v);
  });
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  VertexSet s(g.n());
  s.insert(source);
  return bfs_distances(g, s);
}

BfsTree bfs_tree(const Graph& g, Vertex root) {
  BfsTree t;
  t.dist = bfs_distances(g, root);
  t.parent.assign(g.n(), kNoVertex);
  // Adjacency is sorted, so the first neighbor one layer up is the smallest.
  for (Vertex v = 0; v < g.n(); ++v) {
    if (t.dist[v] == kUnreachable || v == root) continue;
    for (Vertex w : g.neighbors(v)) {
      if (t.dist[w] + 1 == t.dist[v]) {
        t.parent[v] = w;
        break;
      }
    }
  }
  return t;
}

VertexSet disk(const Graph& g, Vertex v, std::uint32_t r) {
  VertexSet s(g.n());
  s.insert(v);
  return disk(g, s, r);
}

VertexSet disk(const Graph& g, const VertexSet& sources, std::uint32_t r) {
  auto dist = bfs_distances(g, sources);
  VertexSet out(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (dist[v] != kUnreachable && dist[v] <= r) out.insert(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s] || removed.contains(s)) continue;
    VertexSet comp(g.n());
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w] && !removed.contains(w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, VertexSet(g.n()));
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return false;
  auto dist = bfs_distances(g, Vertex{0});
  for (Vertex v = 0; v < g.n(); ++v)
    if (dist[v] == kUnreachable) return false;
  return true;
}

std::uint32_t max_component_size(const Graph& g, const VertexSet& removed) {
  std::uint32_t best = 0;
  for (const VertexSet& c : components(g, removed)) best = std::max(best, c.count());
  return best;
}

// ---- Surgery -----------------------------------------------------------

InducedGraph induced(const Graph& g, const VertexSet& keep) {
  InducedGraph out;
  out.from_parent.assign(g.n(), kNoVertex);
  out.to_parent = keep.members();
  for (std::uint32_t i = 0; i < out.to_parent.size(); ++i)
    out.from_parent[out.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (Vertex u : out.to_parent)
    for (Vertex w : g.neighbors(u))
      if (u < w && keep.contains(w))
        edges.push_back({out.from_parent[u], out.from_parent[w]});
  out.graph = Graph::from_edges(static_cast<std::uint32_t>(out.to_parent.size()), edges);
  return out;
}

ContractedGraph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v))
    throw ContractViolation("contract_edge: (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") is not an edge");
  Vertex keep = std::min(u, v);
  Vertex drop = std::max(u, v);
  ContractedGraph out;
  out.vertex_map.resize(g.n());
  for (Vertex x = 0; x < g.n(); ++x)
    out.vertex_map[x] = x == drop ? keep : (x > drop ? x - 1 : x);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.vertex_map[e.u];
    Vertex b = out.vertex_map[e.v];
    if (a != b) edges.push_back(make_edge(a, b));
  }
  out.graph = Graph::from_edges(g.n() - 1, edges);
  return out;
}

// ---- AnnotatedGraph ----------------------------------------------------

AnnotatedGraph AnnotatedGraph::wrap(Graph g) {
  AnnotatedGraph ag;
  ag.tags.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) ag.tags[v] = {VertexKind::kOriginal, v, 0};
  ag.graph = std::move(g);
  return ag;
}

VertexSet AnnotatedGraph::original_vertices() const {
  VertexSet s(graph.n());
  for (Vertex v = 0; v < graph.n(); ++v)
    if (tags[v].kind == VertexKind::kOriginal) s.insert(v);
  return s;
}

// ---- Text formats ------------------------------------------------------

namespace {

bool parse_u32(const std::string& tok, std::uint32_t& out) {
  if (tok.empty()) return false;
  std::uint64_t acc = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    acc = acc * 10 + static_cast<std::uint64_t>(c - '0');
    if (acc > 0xffffffffull) return false;
  }
  out = static_cast<std::uint32_t>(acc);
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::uint32_t declared_n = 0;
  bool dimacs = false;
  bool saw_header = false;
  std::uint32_t max_id = 0;
  bool any_vertex = false;

  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#' || tok == "c") continue;
    if (tok == "p") {
      std::string kind;
      std::uint32_t n = 0, m = 0;
      std::string ntok, mtok;
      if (!(ls >> kind >> ntok >> mtok) || !parse_u32(ntok, n) || !parse_u32(mtok, m))
        throw ParseError("malformed problem header", lineno);
      declared_n = n;
      dimacs = true;
      saw_header = true;
      continue;
    }
    std::string utok, vtok;
    if (tok == "e") {
      if (!(ls >> utok >> vtok)) throw ParseError("malformed edge line", lineno);
    } else {
      utok = tok;
      if (!(ls >> vtok)) throw ParseError("expected two vertex ids", lineno);
    }
    std::string extra;
    if (ls >> extra && extra[0] != '#')
      throw ParseError("trailing token '" + extra + "'", lineno);
    std::uint32_t u = 0, v = 0;
    if (!parse_u32(utok, u) || !parse_u32(vtok, v))
      throw ParseError("vertex ids must be nonnegative integers", lineno);
    if (dimacs || tok == "e") {
      if (u == 0 || v == 0) throw ParseError("DIMACS vertex ids are 1-based", lineno);
      --u;
      --v;
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
    edges.push_back(make_edge(u, v));
    max_id = std::max(max_id, std::max(u, v));
    any_vertex = true;
  }

  std::uint32_t n = saw_header ? declared_n : (any_vertex ? max_id + 1 : 0);
  return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace spannerweave
