#include "spannerweave/treedec.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "spannerweave/error.hpp"

namespace spannerweave {

namespace {

// Container sanity shared by validate/metrics/expand. Anything wrong here is
// a malformed object, not a failed decomposition condition, so it throws.
void check_shape(const Graph& g, const TreeDecomposition& td) {
  if (td.host_n != g.n())
    throw ContractViolation("decomposition host size " +
                            std::to_string(td.host_n) + " does not match the graph's " +
                            std::to_string(g.n()));
  for (const VertexSet& bag : td.bags)
    if (bag.universe() != td.host_n)
      throw ContractViolation("bag universe does not match the decomposition host");
  for (auto [a, b] : td.tree)
    if (a >= td.bags.size() || b >= td.bags.size())
      throw ContractViolation("bag link (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") is out of range");
}

std::vector<std::vector<std::uint32_t>> bag_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<std::uint32_t>> adj(td.bags.size());
  for (auto [a, b] : td.tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::string vertex_pair(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// One tree-shape complaint is enough; later conditions are still checked so
// the caller sees the full picture.
bool tree_shape_problem(const TreeDecomposition& td, std::string& why) {
  const std::size_t b = td.bags.size();
  if (b == 0) return false;  // vertex coverage reports the real issue
  auto links = td.tree;
  for (auto& [x, y] : links) {
    if (x == y) {
      why = "bag link " + vertex_pair(x, y) + " joins a bag to itself";
      return true;
    }
    if (x > y) std::swap(x, y);
  }
  std::sort(links.begin(), links.end());
  if (auto it = std::adjacent_find(links.begin(), links.end()); it != links.end()) {
    why = "bag link " + vertex_pair(it->first, it->second) + " repeats";
    return true;
  }
  if (links.size() != b - 1) {
    why = std::to_string(b) + " bags need " + std::to_string(b - 1) +
          " links, got " + std::to_string(links.size());
    return true;
  }
  // right count and no repeats: connected iff acyclic, one BFS settles it
  auto adj = bag_adjacency(td);
  std::vector<char> seen(b, 0);
  std::queue<std::uint32_t> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::uint32_t at = queue.front();
    queue.pop();
    for (std::uint32_t nb : adj[at])
      if (!seen[nb]) {
        seen[nb] = 1;
        ++reached;
        queue.push(nb);
      }
  }
  if (reached != b) {
    why = "bag tree is disconnected";
    return true;
  }
  return false;
}

}  // namespace

std::vector<TdViolation> validate(const Graph& g, const TreeDecomposition& td) {
  check_shape(g, td);
  std::vector<TdViolation> out;

  std::string why;
  if (tree_shape_problem(td, why))
    out.push_back({TdViolation::Kind::kTreeShape, kNoVertex,
                   Edge{kNoVertex, kNoVertex}, why});

  // which bags hold each vertex (ascending bag index)
  std::vector<std::vector<std::uint32_t>> bags_of(g.n());
  for (std::uint32_t i = 0; i < td.bags.size(); ++i)
    td.bags[i].for_each([&](Vertex v) { bags_of[v].push_back(i); });

  for (Vertex v = 0; v < g.n(); ++v)
    if (bags_of[v].empty())
      out.push_back({TdViolation::Kind::kVertexUncovered, v,
                     Edge{kNoVertex, kNoVertex},
                     "vertex " + std::to_string(v) + " appears in no bag"});

  for (const Edge& e : g.edges()) {
    const auto& bu = bags_of[e.u];
    const auto& bv = bags_of[e.v];
    bool shared = false;
    for (std::size_t i = 0, j = 0; i < bu.size() && j < bv.size();) {
      if (bu[i] == bv[j]) {
        shared = true;
        break;
      }
      bu[i] < bv[j] ? ++i : ++j;
    }
    if (!shared)
      out.push_back({TdViolation::Kind::kEdgeUncovered, kNoVertex, e,
                     "edge " + vertex_pair(e.u, e.v) +
                         " has no bag containing both endpoints"});
  }

  auto adj = bag_adjacency(td);
  std::vector<char> seen(td.bags.size(), 0);
  std::vector<std::uint32_t> stack;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (bags_of[v].size() < 2) continue;
    for (std::uint32_t i : bags_of[v]) seen[i] = 0;
    stack.assign(1, bags_of[v].front());
    seen[stack.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::uint32_t at = stack.back();
      stack.pop_back();
      for (std::uint32_t nb : adj[at])
        if (!seen[nb] && td.bags[nb].contains(v)) {
          seen[nb] = 1;
          ++reached;
          stack.push_back(nb);
        }
    }
    if (reached != bags_of[v].size())
      out.push_back({TdViolation::Kind::kVertexSubtreeDisconnected, v,
                     Edge{kNoVertex, kNoVertex},
                     "the bags holding vertex " + std::to_string(v) +
                         " do not form a connected subtree"});
    for (std::uint32_t i : bags_of[v]) seen[i] = 0;
  }
  return out;
}

namespace {

// Can `full` be covered by at most k of the candidate masks? Candidates are
// deduplicated and dominance-pruned, then searched by always branching on the
// lowest uncovered member.
bool coverable(const std::vector<std::uint64_t>& masks, std::uint64_t covered,
               std::uint64_t full, std::uint32_t k) {
  if (covered == full) return true;
  if (k == 0) return false;
  const std::uint64_t missing = (~covered) & full;
  const std::uint64_t lowest = missing & (~missing + 1);
  for (std::uint64_t mask : masks)
    if ((mask & lowest) && coverable(masks, covered | mask, full, k - 1))
      return true;
  return false;
}

// Smallest r such that k centers (any vertices) cover every bag member within
// distance r. rows[i] is the distance table of member i; hi is a radius
// already known feasible (the bag's 1-center value).
std::uint32_t exact_k_center(const std::vector<std::vector<std::uint32_t>>& rows,
                             std::uint32_t n, std::uint32_t k, std::uint32_t hi) {
  const std::size_t size = rows.size();
  const std::uint64_t full =
      size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  auto feasible = [&](std::uint32_t r) {
    std::vector<std::uint64_t> masks;
    masks.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < size; ++i)
        if (rows[i][v] <= r) mask |= std::uint64_t{1} << i;
      if (mask) masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end(),
              [](std::uint64_t a, std::uint64_t b) {
                auto pa = std::popcount(a), pb = std::popcount(b);
                return pa != pb ? pa > pb : a < b;
              });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> kept;
    for (std::uint64_t mask : masks) {
      bool dominated = false;
      for (std::uint64_t big : kept)
        if ((mask & big) == mask) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(mask);
    }
    return coverable(kept, 0, full, k);
  };
  std::uint32_t lo = 0;
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    feasible(mid) ? hi = mid : lo = mid + 1;
  }
  return lo;
}

// Upper bound on the bag's k-center radius: repeatedly add the single center
// that lowers the worst member distance the most (smallest vertex on ties).
std::uint32_t greedy_k_center(const std::vector<std::vector<std::uint32_t>>& rows,
                              std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> best(rows.size(), kUnreachable);
  for (std::uint32_t step = 0; step < k; ++step) {
    Vertex pick = kNoVertex;
    std::uint32_t pick_score = kUnreachable;
    for (Vertex v = 0; v < n; ++v) {
      std::uint32_t score = 0;
      for (std::size_t i = 0; i < rows.size(); ++i)
        score = std::max(score, std::min(best[i], rows[i][v]));
      if (score < pick_score) {
        pick_score = score;
        pick = v;
      }
    }
    if (pick == kNoVertex) break;
    for (std::size_t i = 0; i < rows.size(); ++i)
      best[i] = std::min(best[i], rows[i][pick]);
  }
  std::uint32_t radius = 0;
  for (std::uint32_t d : best) radius = std::max(radius, d);
  return radius;
}

}  // namespace

TdMetrics metrics(const Graph& g, const TreeDecomposition& td, std::uint32_t k,
                  const KBreadthOptions& options) {
  check_shape(g, td);
  if (k == 0) throw ContractViolation("k-breadth needs at least one center per bag");
  TdMetrics out;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const VertexSet& bag : td.bags) {
    const auto members = bag.members();
    if (members.empty()) continue;
    out.width = std::max<std::uint32_t>(out.width,
                                        std::uint32_t(members.size()) - 1);
    rows.clear();
    rows.reserve(members.size());
    for (Vertex x : members) rows.push_back(bfs_distances(g, x));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        std::uint32_t d = rows[i][members[j]];
        if (d == kUnreachable)
          throw ContractViolation("bag vertices " +
                                  vertex_pair(members[i], members[j]) +
                                  " have no connecting path, so length is undefined");
        out.length = std::max(out.length, d);
      }
    std::uint32_t one_center = kUnreachable;
    for (Vertex v = 0; v < g.n(); ++v) {
      std::uint32_t worst = 0;
      for (const auto& row : rows) worst = std::max(worst, row[v]);
      one_center = std::min(one_center, worst);
    }
    out.breadth = std::max(out.breadth, one_center);

    std::uint32_t bag_k;
    if (k >= members.size()) {
      bag_k = 0;  // one center per member
    } else if (members.size() <= options.bag_cap && members.size() <= 64 &&
               k <= options.k_cap) {
      bag_k = exact_k_center(rows, g.n(), k, one_center);
    } else if (options.allow_greedy) {
      bag_k = greedy_k_center(rows, g.n(), k);
      out.k_breadth_exact = false;
    } else {
      throw ContractViolation(
          "bag of size " + std::to_string(members.size()) + " with k=" +
          std::to_string(k) +
          " is over the exact k-breadth caps; enable the greedy bound to proceed");
    }
    out.k_breadth = std::max(out.k_breadth, bag_k);
  }
  return out;
}

TreeDecomposition expand(const Graph& h, const TreeDecomposition& td,
                         std::uint32_t r) {
  check_shape(h, td);
  TreeDecomposition out;
  out.host_n = td.host_n;
  out.tree = td.tree;
  out.bags.reserve(td.bags.size());
  for (const VertexSet& bag : td.bags)
    out.bags.push_back(bag.empty() ? bag : disk(h, bag, r));
  return out;
}

TreeDecomposition lift(const Graph& g, const Graph& spanner_h,
                       const TreeDecomposition& td_of_h, std::uint32_t t) {
  if (t == 0) throw ContractViolation("stretch bound must be at least 1");
  if (spanner_h.n() != g.n())
    throw ContractViolation("spanner must keep the host's vertex set");
  for (const Edge& e : spanner_h.edges())
    if (!g.has_edge(e.u, e.v))
      throw ContractViolation("spanner edge " + vertex_pair(e.u, e.v) +
                              " is not a host edge");
  // Checking each host edge inside the spanner is enough: concatenating the
  // per-edge detours along a shortest host path bounds every pair by t times
  // its distance.
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto dist = bfs_distances(spanner_h, v);
    for (Vertex w : g.neighbors(v)) {
      if (w < v) continue;
      if (dist[w] == kUnreachable)
        throw BoundViolation("spanner has no path for edge " + vertex_pair(v, w));
      if (dist[w] > t)
        throw BoundViolation("spanner stretches edge " + vertex_pair(v, w) +
                             " to " + std::to_string(dist[w]) +
                             ", over the promised " + std::to_string(t));
    }
  }
  if (auto bad = validate(spanner_h, td_of_h); !bad.empty())
    throw ContractViolation("decomposition is not valid for the spanner: " +
                            bad.front().detail);
  TreeDecomposition lifted = expand(spanner_h, td_of_h, (t + 1) / 2);
  if (auto bad = validate(g, lifted); !bad.empty())
    throw ContractViolation("expanded decomposition failed for the host: " +
                            bad.front().detail);
  return lifted;
}

namespace {

std::uint32_t parse_u32(const std::string& token, std::uint64_t line) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("expected a number, got '" + token + "'", line);
  return value;
}

}  // namespace

TreeDecomposition read_tree_decomposition(std::istream& in) {
  TreeDecomposition td;
  std::vector<char> declared;
  bool have_header = false;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front() == "c") continue;
    if (tokens.front() == "s") {
      if (have_header) throw ParseError("repeated header", lineno);
      if (tokens.size() != 5 || tokens[1] != "td")
        throw ParseError("header must read 's td <bags> <max-bag-size> <n>'", lineno);
      std::uint32_t bags = parse_u32(tokens[2], lineno);
      parse_u32(tokens[3], lineno);  // declared max bag size; recomputed on write
      td.host_n = parse_u32(tokens[4], lineno);
      td.bags.assign(bags, VertexSet(td.host_n));
      declared.assign(bags, 0);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError("content before the 's td' header", lineno);
    if (tokens.front() == "b") {
      if (tokens.size() < 2) throw ParseError("bag line without a bag id", lineno);
      std::uint32_t id = parse_u32(tokens[1], lineno);
      if (id == 0 || id > td.bags.size())
        throw ParseError("bag id " + tokens[1] + " is out of range", lineno);
      if (declared[id - 1])
        throw ParseError("bag " + tokens[1] + " declared twice", lineno);
      declared[id - 1] = 1;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        std::uint32_t v = parse_u32(tokens[i], lineno);
        if (v == 0 || v > td.host_n)
          throw ParseError("vertex " + tokens[i] + " is out of range", lineno);
        td.bags[id - 1].insert(v - 1);
      }
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError("expected a tree link with two bag ids", lineno);
    std::uint32_t a = parse_u32(tokens[0], lineno);
    std::uint32_t b = parse_u32(tokens[1], lineno);
    if (a == 0 || a > td.bags.size() || b == 0 || b > td.bags.size())
      throw ParseError("tree link endpoint out of range", lineno);
    td.tree.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
  }
  if (!have_header) throw ParseError("missing 's td' header", 0);
  return td;
}

TreeDecomposition read_tree_decomposition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open '" + path + "' for reading");
  return read_tree_decomposition(in);
}

void write_tree_decomposition(const TreeDecomposition& td, std::ostream& out) {
  std::uint32_t largest = 0;
  for (const VertexSet& bag : td.bags)
    largest = std::max(largest, bag.count());
  out << "s td " << td.bags.size() << ' ' << largest << ' ' << td.host_n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    td.bags[i].for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
  }
  auto links = td.tree;
  for (auto& [a, b] : links)
    if (a > b) std::swap(a, b);
  std::sort(links.begin(), links.end());
  for (auto [a, b] : links) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace spannerweave
