#include "spannerweave/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "spannerweave/error.hpp"
#include "spannerweave/parallel.hpp"

namespace spannerweave {

DistanceMatrix apsp(const Graph& g) {
  if (!is_connected(g)) throw ContractViolation("distances need a connected graph");
  const std::uint32_t n = g.n();
  DistanceMatrix d(n);
  run_chunked(n, thread_count(), [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Vertex> queue(n);
    for (std::uint64_t s = lo; s < hi; ++s) {
      for (Vertex v = 0; v < n; ++v) d.at(Vertex(s), v) = kUnreachable;
      d.at(Vertex(s), Vertex(s)) = 0;
      queue[0] = Vertex(s);
      for (std::size_t head = 0, tail = 1; head < tail; ++head) {
        Vertex at = queue[head];
        for (Vertex nb : g.neighbors(at))
          if (d.at(Vertex(s), nb) == kUnreachable) {
            d.at(Vertex(s), nb) = d.at(Vertex(s), at) + 1;
            queue[tail++] = nb;
          }
      }
    }
  });
  return d;
}

namespace {

// Running maximum of a fraction num/den with den >= 1; ties keep the first.
struct MaxFraction {
  std::uint64_t num = 1, den = 1;
  void offer(std::uint64_t n, std::uint64_t d) {
    if (n * den > num * d) {
      num = n;
      den = d;
    }
  }
  void store(SurplusReport& report) const {
    std::uint64_t g = std::gcd(num, den);
    report.stretch_num = std::uint32_t(num / g);
    report.stretch_den = std::uint32_t(den / g);
  }
};

void require_same_vertices(const Graph& g, const Graph& h, const char* what) {
  if (h.n() != g.n())
    throw ContractViolation(std::string(what) + " must keep all " +
                            std::to_string(g.n()) + " vertices");
}

void require_subgraph(const Graph& g, const Graph& h, const char* what) {
  for (const Edge& e : h.edges())
    if (!g.has_edge(e.u, e.v))
      throw ContractViolation(std::string(what) + " edge (" +
                              std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") is not a host edge");
}

}  // namespace

SurplusReport surplus(const Graph& g, const Graph& h) {
  require_same_vertices(g, h, "the subgraph");
  require_subgraph(g, h, "subgraph");
  if (!is_connected(h))
    throw ContractViolation("the subgraph does not span: it is disconnected");
  const DistanceMatrix dg = apsp(g);
  const DistanceMatrix dh = apsp(h);
  SurplusReport report;
  MaxFraction stretch;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      std::uint32_t extra = dh.at(u, v) - dg.at(u, v);
      if (report.argmax.u == kNoVertex || extra > report.max_surplus) {
        report.max_surplus = extra;
        report.argmax = Edge{u, v};
      }
      stretch.offer(dh.at(u, v), dg.at(u, v));
    }
  stretch.store(report);
  return report;
}

SurplusReport collective_surplus(const Graph& g, const std::vector<Graph>& trees) {
  if (trees.empty())
    throw ContractViolation("collective surplus needs at least one tree");
  if (!is_connected(g)) throw ContractViolation("distances need a connected graph");
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string name = "tree " + std::to_string(i);
    require_same_vertices(g, trees[i], name.c_str());
    require_subgraph(g, trees[i], name.c_str());
    if (trees[i].m() != g.n() - 1 || !is_connected(trees[i]))
      throw ContractViolation(name + " is not a spanning tree");
  }
  const std::uint32_t n = g.n();
  SurplusReport report;
  report.coverage.assign(trees.size(), 0);
  MaxFraction stretch;
  std::vector<std::vector<std::uint32_t>> rows(trees.size());
  for (Vertex u = 0; u < n; ++u) {
    const auto dg = bfs_distances(g, u);
    for (std::size_t i = 0; i < trees.size(); ++i)
      rows[i] = bfs_distances(trees[i], u);
    for (Vertex v = u + 1; v < n; ++v) {
      std::uint32_t best = kUnreachable;
      for (const auto& row : rows) best = std::min(best, row[v]);
      for (std::size_t i = 0; i < trees.size(); ++i)
        if (rows[i][v] == best) ++report.coverage[i];
      std::uint32_t extra = best - dg[v];
      if (report.argmax.u == kNoVertex || extra > report.max_surplus) {
        report.max_surplus = extra;
        report.argmax = Edge{u, v};
      }
      stretch.offer(best, dg[v]);
    }
  }
  stretch.store(report);
  return report;
}

namespace {

// Covering radius of the vertices in `mask` by at most k disks of g, centers
// anywhere. Memoized per mask; n is capped so masks fit a flat table.
struct RadiusTable {
  const DistanceMatrix& dist;
  std::uint32_t n, k;
  std::vector<std::uint32_t> memo;
  std::vector<std::uint32_t> center_sets;  // all center masks with <= k bits

  RadiusTable(const DistanceMatrix& d, std::uint32_t n_, std::uint32_t k_)
      : dist(d), n(n_), k(k_), memo(std::size_t(1) << n, kUnreachable) {
    for (std::uint32_t cm = 1; cm < (1u << n); ++cm)
      if (std::uint32_t(std::popcount(cm)) <= k) center_sets.push_back(cm);
  }

  std::uint32_t radius(std::uint32_t mask) {
    std::uint32_t& slot = memo[mask];
    if (slot != kUnreachable) return slot;
    if (std::uint32_t(std::popcount(mask)) <= k) return slot = 0;
    std::uint32_t best = kUnreachable;
    for (std::uint32_t cm : center_sets) {
      std::uint32_t worst = 0;
      for (std::uint32_t rest = mask; rest && worst < best;) {
        std::uint32_t u = std::uint32_t(std::countr_zero(rest));
        rest &= rest - 1;
        std::uint32_t nearest = kUnreachable;
        for (std::uint32_t cs = cm; cs;) {
          std::uint32_t c = std::uint32_t(std::countr_zero(cs));
          cs &= cs - 1;
          nearest = std::min(nearest, dist.at(c, u));
        }
        worst = std::max(worst, nearest);
      }
      best = std::min(best, worst);
    }
    return slot = best;
  }
};

// Shared elimination-order sweep: for every vertex order, eliminate in turn,
// scoring each clique {v} + later-neighbors (with fill), and minimize the
// worst clique score across orders. `score` must be monotone under mask
// inclusion for the minimal-triangulation argument to apply.
template <typename Score>
std::uint32_t best_elimination(std::uint32_t n, const std::vector<std::uint32_t>& adj,
                               std::uint32_t start, std::uint32_t floor, Score score) {
  std::uint32_t best = start;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::uint32_t> work(n);
  do {
    if (best <= floor) break;
    std::copy(adj.begin(), adj.end(), work.begin());
    std::uint32_t remaining = n == 32 ? ~0u : (1u << n) - 1;
    std::uint32_t value = 0;
    for (Vertex v : order) {
      remaining &= ~(1u << v);
      std::uint32_t later = work[v] & remaining;
      value = std::max(value, score(later | (1u << v)));
      if (value >= best) break;
      for (std::uint32_t rest = later; rest;) {
        std::uint32_t a = std::uint32_t(std::countr_zero(rest));
        rest &= rest - 1;
        work[a] |= later;
      }
    }
    best = std::min(best, value);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

}  // namespace

std::uint32_t brute_tree_breadth(const Graph& g, std::uint32_t k) {
  if (k == 0) throw ContractViolation("at least one disk per bag is required");
  const std::uint32_t cap = k == 1 ? 9 : 6;
  if (g.n() > cap)
    throw ContractViolation("exact tree-breadth is capped at " +
                            std::to_string(cap) + " vertices for k=" +
                            std::to_string(k));
  if (g.n() <= 1) return 0;
  if (!is_connected(g))
    throw ContractViolation("exact tree-breadth needs a connected graph");
  const DistanceMatrix dist = apsp(g);
  RadiusTable radii(dist, g.n(), k);
  const std::uint32_t full = (1u << g.n()) - 1;
  const std::uint32_t floor = (g.m() > 0 && k == 1) ? 1 : 0;
  return best_elimination(g.n(), adjacency_masks(g), radii.radius(full), floor,
                          [&](std::uint32_t mask) { return radii.radius(mask); });
}

std::uint32_t brute_treewidth(const Graph& g) {
  if (g.n() > 9)
    throw ContractViolation("exact treewidth is capped at 9 vertices");
  if (g.n() <= 1) return 0;
  const std::uint32_t floor = g.m() > 0 ? 1 : 0;
  return best_elimination(
      g.n(), adjacency_masks(g), g.n() - 1, floor,
      [](std::uint32_t mask) { return std::uint32_t(std::popcount(mask)) - 1; });
}

}  // namespace spannerweave
