#include "spannerweave/separator.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "spannerweave/error.hpp"
#include "spannerweave/parallel.hpp"

namespace spannerweave {

namespace {

constexpr const char* kDisconnected =
    "separator search requires a connected graph";

// Core sweep shared by every radius query. `dist` holds BFS distances from
// the (multi-)source; we absorb layers from the outside in, maintaining the
// largest component among the not-yet-absorbed vertices with a union-find.
// The answer is the smallest r whose outside is balanced.
std::uint32_t layered_radius(const Graph& g,
                             const std::vector<std::uint32_t>& dist) {
  const std::uint32_t n = g.n();
  const std::uint32_t tau = n / 2;
  std::uint32_t ecc = 0;
  for (std::uint32_t d : dist) {
    if (d == kUnreachable) throw ContractViolation(kDisconnected);
    ecc = std::max(ecc, d);
  }
  if (ecc == 0) return 0;

  // Counting sort by layer.
  std::vector<std::uint32_t> start(ecc + 2, 0);
  for (std::uint32_t d : dist) ++start[d + 1];
  for (std::uint32_t d = 0; d <= ecc; ++d) start[d + 1] += start[d];
  std::vector<Vertex> order(n);
  {
    std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
    for (Vertex v = 0; v < n; ++v) order[cursor[dist[v]]++] = v;
  }

  std::vector<Vertex> parent(n);
  std::vector<std::uint32_t> size(n, 0);  // 0 doubles as "not absorbed yet"
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::uint32_t largest = 0;
  // outside_max[r] = largest component among layers > r, for r < ecc; the
  // outside of r = ecc is empty.
  std::vector<std::uint32_t> outside_max(ecc, 0);
  for (std::uint32_t d = ecc; d >= 1; --d) {
    for (std::uint32_t i = start[d]; i < start[d + 1]; ++i) {
      Vertex u = order[i];
      parent[u] = u;
      size[u] = 1;
      largest = std::max(largest, 1u);
      for (Vertex w : g.neighbors(u)) {
        if (size[w] == 0) continue;  // not absorbed yet
        Vertex ru = find(u), rw = find(w);
        if (ru == rw) continue;
        if (size[ru] < size[rw]) std::swap(ru, rw);
        parent[rw] = ru;
        size[ru] += size[rw];
        largest = std::max(largest, size[ru]);
      }
    }
    outside_max[d - 1] = largest;
  }

  for (std::uint32_t r = 0; r < ecc; ++r)
    if (outside_max[r] <= tau) return r;
  return ecc;
}

DiskSeparator finish(const Graph& g, std::vector<Vertex> centers,
                     std::uint32_t radius) {
  VertexSet sources(g.n());
  for (Vertex c : centers) sources.insert(c);
  DiskSeparator sep;
  sep.centers = std::move(centers);
  sep.radius = radius;
  sep.cover = disk(g, sources, radius);
  sep.max_component = max_component_size(g, sep.cover);
  return sep;
}

}  // namespace

std::uint32_t min_radius_at(const Graph& g, Vertex v) {
  if (v >= g.n())
    throw ContractViolation("min_radius_at: vertex " + std::to_string(v) +
                            " out of range");
  return layered_radius(g, bfs_distances(g, v));
}

namespace detail {

std::uint32_t k_subset_radius(const Graph& g, std::span<const Vertex> centers) {
  if (centers.empty())
    throw ContractViolation("k_subset_radius: empty center set");
  VertexSet sources(g.n());
  for (Vertex c : centers) {
    if (c >= g.n())
      throw ContractViolation("k_subset_radius: vertex " + std::to_string(c) +
                              " out of range");
    if (sources.contains(c))
      throw ContractViolation("k_subset_radius: duplicate center " +
                              std::to_string(c));
    sources.insert(c);
  }
  return layered_radius(g, bfs_distances(g, sources));
}

}  // namespace detail

namespace {

// Whole-graph BFS spanning tree in preorder coordinates. Deleting a vertex
// set splits the tree into parts that refine the graph's components, so an
// oversized part proves the graph cut is oversized too — a cheap rejection
// test for "can this disk possibly balance the graph".
class GlobalTreeTester {
 public:
  explicit GlobalTreeTester(const Graph& g) {
    const std::uint32_t n = g.n();
    std::vector<Vertex> par(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex u = order[head];
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = true;
        par[w] = u;
        order.push_back(w);
      }
    }
    // children CSR over vertex ids, then preorder via an explicit stack
    std::vector<std::uint32_t> off(n + 1, 0);
    for (Vertex v : order)
      if (v != 0) ++off[par[v] + 1];
    for (std::uint32_t v = 0; v < n; ++v) off[v + 1] += off[v];
    std::vector<Vertex> child(n ? n - 1 : 0);
    {
      std::vector<std::uint32_t> cur(off.begin(), off.end() - 1);
      for (Vertex v : order)
        if (v != 0) child[cur[par[v]]++] = v;
    }
    pre_of_.assign(n, 0);
    std::vector<Vertex> vert_of_pre(n);
    std::vector<Vertex> stack{0};
    std::uint32_t timer = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      pre_of_[u] = timer;
      vert_of_pre[timer] = u;
      ++timer;
      for (std::uint32_t c = off[u]; c < off[u + 1]; ++c)
        stack.push_back(child[c]);
    }
    sub_.assign(n, 1);
    par_pre_.assign(n, 0);
    for (std::uint32_t t = 1; t < n; ++t)
      par_pre_[t] = pre_of_[par[vert_of_pre[t]]];
    for (std::uint32_t t = n - 1; t >= 1; --t) sub_[par_pre_[t]] += sub_[t];
    child_off_.assign(n + 1, 0);
    for (std::uint32_t t = 1; t < n; ++t) ++child_off_[par_pre_[t] + 1];
    for (std::uint32_t t = 0; t < n; ++t) child_off_[t + 1] += child_off_[t];
    child_.assign(n ? n - 1 : 0, 0);
    std::vector<std::uint32_t> cur(child_off_.begin(), child_off_.end() - 1);
    for (std::uint32_t t = 1; t < n; ++t) child_[cur[par_pre_[t]]++] = t;
  }

  std::uint32_t pre_of(Vertex v) const { return pre_of_[v]; }

  // Largest tree part after deleting `removed` (sorted preorder times).
  std::uint32_t max_part(const std::vector<std::uint32_t>& removed) const {
    auto is_removed = [&](std::uint32_t t) {
      return std::binary_search(removed.begin(), removed.end(), t);
    };
    auto part_size = [&](std::uint32_t top) {
      std::uint32_t total = sub_[top];
      std::uint32_t hi = top + sub_[top];
      auto it = std::lower_bound(removed.begin(), removed.end(), top + 1);
      while (it != removed.end() && *it < hi) {
        total -= sub_[*it];
        it = std::lower_bound(it + 1, removed.end(), *it + sub_[*it]);
      }
      return total;
    };
    std::uint32_t best = 0;
    if (!is_removed(0)) best = part_size(0);
    for (std::uint32_t t : removed)
      for (std::uint32_t c = child_off_[t]; c < child_off_[t + 1]; ++c) {
        std::uint32_t ct = child_[c];
        if (!is_removed(ct)) best = std::max(best, part_size(ct));
      }
    return best;
  }

 private:
  std::vector<std::uint32_t> pre_of_, par_pre_, sub_, child_off_, child_;
};

}  // namespace

DiskSeparator best_disk_separator(const Graph& g) {
  const std::uint32_t n = g.n();
  if (n == 0) throw ContractViolation("best_disk_separator: empty graph");

  Vertex best_v = kNoVertex;
  std::uint32_t best_r = kUnreachable;
  if (thread_count() <= 1) {
    // Improving scan: seed with vertex 0, then judge every later vertex at
    // threshold r*-1 with a truncated disk plus the spanning-tree rejection
    // test; survivors get an exact component check. Each exact pass tightens
    // r*, so full sweeps happen at most r(0)+1 times. Vertex 0 starts as the
    // witness, so the final witness is the smallest achiever of the final
    // radius: an earlier achiever would have passed under a looser threshold
    // (the tests never reject a truly balanced disk) and set it first.
    best_v = 0;
    best_r = min_radius_at(g, 0);
    if (best_r > 0) {
      GlobalTreeTester tester(g);
      const std::uint32_t tau = n / 2;
      std::vector<std::uint32_t> seen(n, 0), dist(n, 0), visit(n, 0);
      std::uint32_t gen = 0;
      std::vector<Vertex> ball, queue;
      std::vector<std::uint32_t> removed;
      for (Vertex v = 1; v < n && best_r > 0; ++v) {
        const std::uint32_t rho = best_r - 1;
        // truncated BFS to depth rho
        ++gen;
        ball.clear();
        ball.push_back(v);
        seen[v] = gen;
        dist[v] = 0;
        for (std::size_t head = 0; head < ball.size(); ++head) {
          Vertex u = ball[head];
          if (dist[u] == rho) break;
          for (Vertex w : g.neighbors(u)) {
            if (seen[w] == gen) continue;
            seen[w] = gen;
            dist[w] = dist[u] + 1;
            ball.push_back(w);
          }
        }
        removed.clear();
        for (Vertex u : ball) removed.push_back(tester.pre_of(u));
        std::sort(removed.begin(), removed.end());
        if (tester.max_part(removed) > tau) continue;
        // exact component check with early abort (seen still marks the ball)
        bool balanced = true;
        for (Vertex s = 0; s < n && balanced; ++s) {
          if (seen[s] == gen || visit[s] == gen) continue;
          std::uint32_t count = 0;
          queue.clear();
          queue.push_back(s);
          visit[s] = gen;
          while (!queue.empty() && balanced) {
            Vertex u = queue.back();
            queue.pop_back();
            if (++count > tau) balanced = false;
            for (Vertex w : g.neighbors(u)) {
              if (seen[w] == gen || visit[w] == gen) continue;
              visit[w] = gen;
              queue.push_back(w);
            }
          }
        }
        if (!balanced) continue;
        best_r = layered_radius(g, bfs_distances(g, v));
        best_v = v;
      }
    }
  } else {
    const unsigned chunks = thread_count() * 4;
    std::vector<std::pair<std::uint32_t, Vertex>> chunk_best(
        chunks, {kUnreachable, kNoVertex});
    run_chunked(n, chunks, [&](unsigned ci, std::uint64_t lo, std::uint64_t hi) {
      std::uint32_t r_min = kUnreachable;
      Vertex v_min = kNoVertex;
      for (std::uint64_t v = lo; v < hi; ++v) {
        std::uint32_t r = min_radius_at(g, static_cast<Vertex>(v));
        if (r < r_min) {
          r_min = r;
          v_min = static_cast<Vertex>(v);
          if (r == 0) break;  // nothing in this chunk can beat it
        }
      }
      chunk_best[ci] = {r_min, v_min};
    });
    // Chunks cover ascending vertex ranges, so taking the first strict
    // minimum keeps the smallest-center tie-break.
    for (const auto& [r, v] : chunk_best) {
      if (r < best_r) {
        best_r = r;
        best_v = v;
      }
    }
  }
  return finish(g, {best_v}, best_r);
}

namespace {

// Lexicographic scan over k-subsets of centers. The first center of the
// current block gets a materialized "frame": the unique oversized component
// left after deleting its disk, a spanning tree of that component in
// preorder coordinates, and lazily built per-vertex disk restrictions. Each
// remaining subset is then judged inside the frame: a subtree-interval test
// on the spanning tree rejects almost everything (tree components refine
// graph components, so an oversized tree part is proof), and survivors get
// an exact component check.
class SubsetScan {
 public:
  SubsetScan(const Graph& g, std::uint32_t k,
             const std::vector<std::uint32_t>& rad1)
      : g_(g),
        n_(g.n()),
        k_(k),
        tau_(g.n() / 2),
        rad1_(rad1),
        ball_(n_),
        ball_epoch_(n_, 0),
        seen_(n_, 0),
        dist_(n_, 0),
        region_pos_(n_, 0),
        region_stamp_(n_, 0),
        cover_stamp_(n_, 0),
        par_loc_(n_, 0),
        child_off_(n_ + 1, 0),
        child_(n_, 0),
        pre_of_loc_(n_, 0),
        loc_of_pre_(n_, 0),
        par_pre_(n_, 0),
        sub_pre_(n_, 0),
        glob_of_pre_(n_, 0),
        f_stamp_(n_, 0),
        f_off_(n_, 0),
        f_len_(n_, 0),
        removed_pre_stamp_(n_, 0),
        removed_glob_stamp_(n_, 0),
        visit_stamp_(n_, 0),
        combo_(k) {}

  struct Outcome {
    std::uint32_t radius;
    std::vector<Vertex> centers;  // empty when nothing beat the seed
  };

  // Tests every subset at threshold r_best - 1, tightening r_best on each
  // hit. The first subset to set the final value is the lexicographically
  // smallest one achieving it: any earlier achiever would have been scanned
  // under a looser threshold, passed, and set the value first.
  Outcome run_improving(std::uint32_t seed_radius) {
    std::uint32_t r_best = seed_radius;
    std::vector<Vertex> witness;
    set_radius(r_best - 1);
    for (Vertex a = 0; a + k_ <= n_; ++a) {
      build_frame(a);
      init_block(a);
      while (true) {
        if (subset_passes()) {
          std::uint32_t r_s = detail::k_subset_radius(g_, combo_);
          assert(r_s <= rho_);
          r_best = r_s;
          witness = combo_;
          if (r_best == 0) return {0, std::move(witness)};
          set_radius(r_best - 1);
          build_frame(a);
        }
        if (!advance()) break;
      }
    }
    return {r_best, std::move(witness)};
  }

  // First subset (lex order) balanced at the given radius. The caller
  // guarantees one exists (padding the best single center always works).
  std::vector<Vertex> first_balanced(std::uint32_t radius) {
    set_radius(radius);
    for (Vertex a = 0; a + k_ <= n_; ++a) {
      build_frame(a);
      init_block(a);
      while (true) {
        if (subset_passes()) return combo_;
        if (!advance()) break;
      }
    }
    throw ContractViolation(
        "internal: no balanced k-subset found at the optimal radius");
  }

 private:
  void set_radius(std::uint32_t rho) {
    rho_ = rho;
    ++epoch_;
  }

  // Disk of the current radius around v, BFS order, cached per radius epoch.
  const std::vector<Vertex>& ball(Vertex v) {
    if (ball_epoch_[v] != epoch_) {
      ball_epoch_[v] = epoch_;
      auto& out = ball_[v];
      out.clear();
      ++bfs_gen_;
      seen_[v] = bfs_gen_;
      dist_[v] = 0;
      out.push_back(v);
      for (std::size_t head = 0; head < out.size(); ++head) {
        Vertex u = out[head];
        if (dist_[u] == rho_) break;  // BFS order: all later are at rho_ too
        for (Vertex w : g_.neighbors(u)) {
          if (seen_[w] == bfs_gen_) continue;
          seen_[w] = bfs_gen_;
          dist_[w] = dist_[u] + 1;
          out.push_back(w);
        }
      }
    }
    return ball_[v];
  }

  void build_frame(Vertex a) {
    ++frame_gen_;
    f_arena_.clear();
    frame_a_ = a;
    frame_center_balanced_ = rad1_[a] <= rho_;
    if (frame_center_balanced_) return;

    for (Vertex u : ball(a)) cover_stamp_[u] = frame_gen_;

    // Find the unique component of g minus the disk that exceeds tau; the
    // others are automatically small enough (they fit in what is left).
    ++bfs_gen_;
    region_.clear();
    for (Vertex s = 0; s < n_ && region_.empty(); ++s) {
      if (cover_stamp_[s] == frame_gen_ || seen_[s] == bfs_gen_) continue;
      comp_buf_.clear();
      comp_buf_.push_back(s);
      seen_[s] = bfs_gen_;
      for (std::size_t head = 0; head < comp_buf_.size(); ++head) {
        Vertex u = comp_buf_[head];
        for (Vertex w : g_.neighbors(u)) {
          if (cover_stamp_[w] == frame_gen_ || seen_[w] == bfs_gen_) continue;
          seen_[w] = bfs_gen_;
          comp_buf_.push_back(w);
        }
      }
      if (comp_buf_.size() > tau_) region_.swap(comp_buf_);
    }
    if (region_.empty())
      throw ContractViolation(
          "internal: missing oversized component in subset scan");

    const std::uint32_t sz = static_cast<std::uint32_t>(region_.size());
    for (std::uint32_t i = 0; i < sz; ++i) {
      region_stamp_[region_[i]] = frame_gen_;
      region_pos_[region_[i]] = i;
    }
    // Spanning tree of the region: parent = earliest-discovered neighbor.
    // Every non-root vertex has one (its BFS discoverer), and the edges point
    // strictly backward in discovery order, so this is acyclic and spanning.
    par_loc_[0] = 0;
    for (std::uint32_t i = 1; i < sz; ++i) {
      Vertex u = region_[i];
      std::uint32_t best = kUnreachable;
      for (Vertex w : g_.neighbors(u)) {
        if (region_stamp_[w] == frame_gen_ && region_pos_[w] < i)
          best = std::min(best, region_pos_[w]);
      }
      assert(best != kUnreachable);
      par_loc_[i] = best;
    }

    // Children counts -> CSR (local indices).
    std::fill(child_off_.begin(), child_off_.begin() + sz + 1, 0u);
    for (std::uint32_t i = 1; i < sz; ++i) ++child_off_[par_loc_[i] + 1];
    for (std::uint32_t i = 0; i < sz; ++i) child_off_[i + 1] += child_off_[i];
    {
      std::vector<std::uint32_t>& cursor = scratch_;
      cursor.assign(child_off_.begin(), child_off_.begin() + sz);
      for (std::uint32_t i = 1; i < sz; ++i) child_[cursor[par_loc_[i]]++] = i;
    }

    // Preorder numbering via an explicit DFS stack.
    std::vector<Vertex>& stack = dfs_stack_;
    stack.clear();
    stack.push_back(0);
    std::uint32_t timer = 0;
    while (!stack.empty()) {
      std::uint32_t loc = stack.back();
      stack.pop_back();
      pre_of_loc_[loc] = timer;
      loc_of_pre_[timer] = loc;
      ++timer;
      for (std::uint32_t c = child_off_[loc]; c < child_off_[loc + 1]; ++c)
        stack.push_back(child_[c]);
    }
    assert(timer == sz);
    for (std::uint32_t t = 0; t < sz; ++t) {
      std::uint32_t loc = loc_of_pre_[t];
      par_pre_[t] = pre_of_loc_[par_loc_[loc]];
      glob_of_pre_[t] = region_[loc];
      sub_pre_[t] = 1;
    }
    for (std::uint32_t t = sz - 1; t >= 1; --t) sub_pre_[par_pre_[t]] += sub_pre_[t];
  }

  // Disk of v restricted to the frame region, as sorted preorder times.
  std::span<const Vertex> restricted(Vertex v) {
    if (f_stamp_[v] != frame_gen_) {
      f_stamp_[v] = frame_gen_;
      std::uint32_t off = static_cast<std::uint32_t>(f_arena_.size());
      for (Vertex u : ball(v))
        if (region_stamp_[u] == frame_gen_)
          f_arena_.push_back(pre_of_loc_[region_pos_[u]]);
      f_off_[v] = off;
      f_len_[v] = static_cast<std::uint32_t>(f_arena_.size()) - off;
      std::sort(f_arena_.begin() + off, f_arena_.end());
    }
    return {f_arena_.data() + f_off_[v], f_len_[v]};
  }

  // Merge the restricted disks of combo_[1..k-1] into removed_pre_ (sorted,
  // unique) and stamp membership in preorder and global coordinates.
  void merge_removed() {
    ++subset_gen_;
    removed_pre_.clear();
    if (k_ == 2) {
      auto f = restricted(combo_[1]);
      removed_pre_.assign(f.begin(), f.end());
    } else {
      merge_buf_.clear();
      auto f = restricted(combo_[1]);
      removed_pre_.assign(f.begin(), f.end());
      for (std::uint32_t j = 2; j < k_; ++j) {
        auto fj = restricted(combo_[j]);
        merge_buf_.resize(removed_pre_.size() + fj.size());
        auto end = std::set_union(removed_pre_.begin(), removed_pre_.end(),
                                  fj.begin(), fj.end(), merge_buf_.begin());
        merge_buf_.resize(static_cast<std::size_t>(end - merge_buf_.begin()));
        std::swap(removed_pre_, merge_buf_);
      }
    }
    for (std::uint32_t t : removed_pre_) {
      removed_pre_stamp_[t] = subset_gen_;
      removed_glob_stamp_[glob_of_pre_[t]] = subset_gen_;
    }
  }

  // Largest part of the frame's spanning tree after deleting removed_pre_.
  // Parts are rooted at the tree root and at surviving children of removed
  // vertices; each part's size is its subtree minus the subtrees of the
  // removed vertices found first along each downward direction.
  std::uint32_t max_tree_part() {
    std::uint32_t best = 0;
    auto part_size = [&](std::uint32_t top) {
      std::uint32_t total = sub_pre_[top];
      std::uint32_t hi = top + sub_pre_[top];  // exclusive interval end
      auto it = std::lower_bound(removed_pre_.begin(), removed_pre_.end(),
                                 top + 1);
      while (it != removed_pre_.end() && *it < hi) {
        total -= sub_pre_[*it];
        it = std::lower_bound(it + 1, removed_pre_.end(), *it + sub_pre_[*it]);
      }
      return total;
    };
    if (removed_pre_stamp_[0] != subset_gen_) {
      best = part_size(0);
      if (best > tau_) return best;
    }
    for (std::uint32_t t : removed_pre_) {
      std::uint32_t loc = loc_of_pre_[t];
      for (std::uint32_t c = child_off_[loc]; c < child_off_[loc + 1]; ++c) {
        std::uint32_t ct = pre_of_loc_[child_[c]];
        if (removed_pre_stamp_[ct] == subset_gen_) continue;
        std::uint32_t p = part_size(ct);
        if (p > best) {
          best = p;
          if (best > tau_) return best;
        }
      }
    }
    return best;
  }

  // Exact component check of the frame region minus the removed set.
  bool exact_balanced() {
    ++visit_gen_;
    std::vector<Vertex>& queue = dfs_stack_;
    for (Vertex s : region_) {
      if (removed_glob_stamp_[s] == subset_gen_ || visit_stamp_[s] == visit_gen_)
        continue;
      std::uint32_t count = 0;
      queue.clear();
      queue.push_back(s);
      visit_stamp_[s] = visit_gen_;
      while (!queue.empty()) {
        Vertex u = queue.back();
        queue.pop_back();
        if (++count > tau_) return false;
        for (Vertex w : g_.neighbors(u)) {
          if (region_stamp_[w] != frame_gen_ ||
              removed_glob_stamp_[w] == subset_gen_ ||
              visit_stamp_[w] == visit_gen_)
            continue;
          visit_stamp_[w] = visit_gen_;
          queue.push_back(w);
        }
      }
    }
    return true;
  }

  bool subset_passes() {
    if (frame_center_balanced_) return true;
    merge_removed();
    if (removed_pre_.empty()) return false;  // heavy component untouched
    if (max_tree_part() > tau_) return false;
    return exact_balanced();
  }

  void init_block(Vertex a) {
    combo_[0] = a;
    for (std::uint32_t j = 1; j < k_; ++j) combo_[j] = a + j;
  }

  bool advance() {
    std::uint32_t j = k_ - 1;
    while (j >= 1 && combo_[j] == n_ - k_ + j) --j;
    if (j == 0) return false;
    ++combo_[j];
    for (std::uint32_t l = j + 1; l < k_; ++l) combo_[l] = combo_[l - 1] + 1;
    return true;
  }

  const Graph& g_;
  const std::uint32_t n_, k_, tau_;
  const std::vector<std::uint32_t>& rad1_;

  std::uint32_t rho_ = 0;
  std::uint32_t epoch_ = 0;

  std::vector<std::vector<Vertex>> ball_;
  std::vector<std::uint32_t> ball_epoch_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t bfs_gen_ = 0;

  Vertex frame_a_ = kNoVertex;
  bool frame_center_balanced_ = false;
  std::uint32_t frame_gen_ = 0;
  std::vector<Vertex> region_;
  std::vector<std::uint32_t> region_pos_, region_stamp_, cover_stamp_;
  std::vector<std::uint32_t> par_loc_, child_off_;
  std::vector<Vertex> child_;
  std::vector<std::uint32_t> pre_of_loc_, loc_of_pre_, par_pre_, sub_pre_;
  std::vector<Vertex> glob_of_pre_;
  std::vector<std::uint32_t> scratch_;
  std::vector<Vertex> dfs_stack_;
  std::vector<Vertex> comp_buf_;

  std::vector<std::uint32_t> f_stamp_, f_off_, f_len_;
  std::vector<Vertex> f_arena_;

  std::uint32_t subset_gen_ = 0;
  std::vector<Vertex> removed_pre_;
  std::vector<Vertex> merge_buf_;
  std::vector<std::uint32_t> removed_pre_stamp_, removed_glob_stamp_;
  std::uint32_t visit_gen_ = 0;
  std::vector<std::uint32_t> visit_stamp_;

  std::vector<Vertex> combo_;
};

}  // namespace

DiskSeparator best_k_disk_separator(const Graph& g, std::uint32_t k,
                                    const KDiskOptions& options) {
  const std::uint32_t n = g.n();
  if (k == 0) throw ContractViolation("best_k_disk_separator: k must be >= 1");
  if (k > options.k_cap)
    throw ContractViolation(
        "best_k_disk_separator: k=" + std::to_string(k) +
        " exceeds the configured cap of " + std::to_string(options.k_cap) +
        " (the subset scan is Theta(n^k); raise the cap to override)");
  if (k > n)
    throw ContractViolation("best_k_disk_separator: k=" + std::to_string(k) +
                            " exceeds the vertex count " + std::to_string(n));
  if (k == 1) return best_disk_separator(g);

  // Single-center radii: the scan's seed, its per-block shortcut, and the
  // connectivity check all come from this pass.
  std::vector<std::uint32_t> rad1(n);
  const unsigned chunks = thread_count() <= 1 ? 1 : thread_count() * 4;
  run_chunked(n, chunks, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t v = lo; v < hi; ++v)
      rad1[v] = min_radius_at(g, static_cast<Vertex>(v));
  });
  std::uint32_t seed = kUnreachable;
  for (Vertex v = 0; v < n; ++v) seed = std::min(seed, rad1[v]);

  SubsetScan scan(g, k, rad1);
  std::uint32_t r_best = seed;
  std::vector<Vertex> witness;
  if (seed > 0) {
    auto outcome = scan.run_improving(seed);
    r_best = outcome.radius;
    witness = std::move(outcome.centers);
  }
  if (witness.empty()) witness = scan.first_balanced(r_best);
  return finish(g, std::move(witness), r_best);
}

}  // namespace spannerweave
