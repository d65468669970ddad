#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spannerweave/error.hpp"
#include "spannerweave/generate.hpp"
#include "spannerweave/graph.hpp"
#include "spannerweave/hierarchy.hpp"
#include "spannerweave/oracle.hpp"
#include "spannerweave/parallel.hpp"
#include "spannerweave/separator.hpp"
#include "spannerweave/spanner.hpp"
#include "spannerweave/treedec.hpp"

namespace sw = spannerweave;
using nlohmann::json;

namespace {

sw::Graph load_graph(const std::string& path) {
  if (path.empty() || path == "-") return sw::read_edge_list(std::cin);
  return sw::read_edge_list_file(path);
}

sw::TreeDecomposition load_td(const std::string& path) {
  if (path.empty() || path == "-") return sw::read_tree_decomposition(std::cin);
  return sw::read_tree_decomposition_file(path);
}

// Rebuild a companion graph (spanner, tree) over the host's vertex count so
// a file that never mentions the last vertex still lines up.
sw::Graph load_over(const std::string& path, std::uint32_t n) {
  auto raw = load_graph(path);
  if (raw.n() > n)
    throw sw::ContractViolation("'" + path + "' has vertex ids beyond the host graph");
  return sw::Graph::from_edges(n, raw.edges());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sw::ContractViolation("cannot open '" + path + "' for writing");
  out << text;
}

std::string edge_list_text(const sw::Graph& g) {
  std::ostringstream out;
  sw::write_edge_list(g, out);
  return out.str();
}

json edge_array(const std::vector<sw::Edge>& edges) {
  json a = json::array();
  for (const sw::Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

json set_array(const sw::VertexSet& s) {
  json a = json::array();
  s.for_each([&](sw::Vertex v) { a.push_back(v); });
  return a;
}

json report_json(const sw::SurplusReport& rep) {
  json j;
  j["max_surplus"] = rep.max_surplus;
  j["stretch"] = {{"num", rep.stretch_num}, {"den", rep.stretch_den}};
  if (rep.argmax.u != sw::kNoVertex) j["argmax"] = {rep.argmax.u, rep.argmax.v};
  if (!rep.coverage.empty()) j["coverage"] = rep.coverage;
  return j;
}

json separator_json(const sw::Graph& g, std::uint32_t k, const sw::DiskSeparator& sep) {
  json j;
  j["n"] = g.n();
  j["k"] = k;
  j["centers"] = sep.centers;
  j["radius"] = sep.radius;
  j["cover"] = set_array(sep.cover);
  j["cover_size"] = sep.cover.count();
  j["max_component"] = sep.max_component;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::uint32_t max_radius(const sw::HierTree& h) {
  std::uint32_t r = 0;
  for (const sw::HierNode& node : h.nodes) r = std::max(r, node.radius);
  return r;
}

void guard_apsp(const sw::Graph& g, std::uint32_t limit) {
  if (g.n() > limit)
    throw sw::ContractViolation("verification is capped at " + std::to_string(limit) +
                                " vertices (raise --apsp-limit to override)");
}

json hierarchy_json(const sw::HierTree& h) {
  json nodes = json::array();
  for (const sw::HierNode& node : h.nodes) {
    json nj;
    nj["id"] = node.id;
    nj["depth"] = node.depth;
    nj["kind"] = node.kind == sw::NodeKind::kLeaf ? "leaf" : "internal";
    if (node.parent != sw::kNoNode) nj["parent"] = node.parent;
    nj["children"] = node.children;
    nj["centers"] = node.centers;  // minor-local vertex ids
    nj["radius"] = node.radius;
    nj["bag_original"] = node.bag_originals();
    nj["minor_n"] = node.minor.graph.n();
    nj["minor_m"] = node.minor.graph.m();
    nodes.push_back(nj);
  }
  json j;
  j["k"] = h.k;
  j["original_n"] = h.original_n;
  j["original_m"] = h.original_m;
  j["root"] = h.root;
  j["depth"] = h.depth();
  j["nodes"] = nodes;
  return j;
}

std::string hierarchy_dot(const sw::HierTree& h) {
  std::ostringstream out;
  out << "digraph hierarchy {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const sw::HierNode& node : h.nodes)
    out << "  n" << node.id << " [label=\"" << node.id
        << (node.kind == sw::NodeKind::kLeaf ? " leaf" : " internal")
        << "\\nr=" << node.radius << " bag=" << node.bag_originals().size()
        << "\\nminor=" << node.minor.graph.n() << "\"];\n";
  for (const sw::HierNode& node : h.nodes)
    for (std::uint32_t c : node.children)
      out << "  n" << node.id << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

json certificate_json(const sw::GenCertificate& cert) {
  json j;
  if (cert.tree_breadth) j["tree_breadth"] = *cert.tree_breadth;
  if (cert.breadth_bound) {
    j["breadth_bound"] = *cert.breadth_bound;
    j["bound_disks"] = cert.bound_disks;
  }
  if (cert.stretch) j["stretch"] = *cert.stretch;
  if (!cert.planted.empty()) j["planted"] = edge_array(cert.planted);
  if (cert.decomposition) {
    json bags = json::array();
    for (const sw::VertexSet& bag : cert.decomposition->bags) bags.push_back(set_array(bag));
    json links = json::array();
    for (auto [a, b] : cert.decomposition->tree) links.push_back({a, b});
    j["decomposition"] = {{"bags", bags}, {"tree", links}};
  }
  return j;
}

const char* violation_name(sw::TdViolation::Kind kind) {
  switch (kind) {
    case sw::TdViolation::Kind::kTreeShape: return "tree-shape";
    case sw::TdViolation::Kind::kVertexUncovered: return "vertex-uncovered";
    case sw::TdViolation::Kind::kEdgeUncovered: return "edge-uncovered";
    case sw::TdViolation::Kind::kVertexSubtreeDisconnected:
      return "vertex-subtree-disconnected";
  }
  return "unknown";
}

int run(int argc, char** argv) {
  CLI::App app{"additive spanners and tree decompositions via balanced disk separators"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker thread cap")
      ->envname("SPANNERWEAVE_THREADS");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate certified instances");
  gen->require_subcommand(1);
  std::string gen_out, gen_cert;
  std::uint64_t gen_seed = 0;
  std::uint32_t a1 = 0, a2 = 0, a3 = 0;
  std::uint64_t gen_extra = 0;
  auto* gen_cycle_cmd = gen->add_subcommand("cycle", "cycle with pinned tree-breadth");
  gen_cycle_cmd->add_option("length", a1, "multiple of 3")->required();
  auto* gen_chordal_cmd = gen->add_subcommand("chordal", "random connected chordal graph");
  gen_chordal_cmd->add_option("n", a1)->required();
  gen_chordal_cmd->add_option("--seed", gen_seed)->required();
  auto* gen_tree_cmd =
      gen->add_subcommand("tree-spanner", "tree plus chords within stretch t");
  gen_tree_cmd->add_option("n", a1)->required();
  gen_tree_cmd->add_option("t", a2)->required();
  gen_tree_cmd->add_option("extra", gen_extra)->required();
  gen_tree_cmd->add_option("--seed", gen_seed)->required();
  auto* gen_tw_cmd =
      gen->add_subcommand("tw-spanner", "partial k-tree plus chords within stretch t");
  gen_tw_cmd->add_option("n", a1)->required();
  gen_tw_cmd->add_option("k", a2)->required();
  gen_tw_cmd->add_option("t", a3)->required();
  gen_tw_cmd->add_option("--seed", gen_seed)->required();
  auto* gen_grid_cmd = gen->add_subcommand("grid", "rows x cols grid");
  gen_grid_cmd->add_option("rows", a1)->required();
  gen_grid_cmd->add_option("cols", a2)->required();
  for (auto* cmd : {gen_cycle_cmd, gen_chordal_cmd, gen_tree_cmd, gen_tw_cmd, gen_grid_cmd}) {
    cmd->add_option("-o,--output", gen_out, "edge-list file (default stdout)");
    cmd->add_option("--cert", gen_cert, "certificate JSON side-file");
  }

  // ---- separator ----
  auto* sep_cmd = app.add_subcommand("separator", "best balanced disk separator");
  std::string sep_input = "-";
  std::uint32_t sep_k = 1, sep_kcap = 3;
  sep_cmd->add_option("input", sep_input, "edge list (default stdin)");
  sep_cmd->add_option("-k,--k", sep_k, "number of disks (default 1)");
  sep_cmd->add_option("--k-cap", sep_kcap, "raise the exact k-subset scan cap");

  // ---- decompose ----
  auto* dec_cmd = app.add_subcommand("decompose", "build the separator hierarchy");
  std::string dec_input = "-";
  std::uint32_t dec_k = 1, dec_kcap = 3;
  bool dec_dot = false;
  dec_cmd->add_option("input", dec_input, "edge list (default stdin)");
  dec_cmd->add_option("-k,--k", dec_k, "disks per separator (default 1)");
  dec_cmd->add_option("--k-cap", dec_kcap, "raise the exact k-subset scan cap");
  dec_cmd->add_flag("--dot", dec_dot, "emit graphviz instead of JSON");

  // ---- spanner ----
  auto* spa_cmd = app.add_subcommand("spanner", "build a spanner from the hierarchy");
  std::string spa_input = "-", spa_mode = "sparse", spa_out;
  std::uint32_t spa_k = 1, spa_kcap = 3, spa_apsp = 5000;
  bool spa_verify = false, spa_json = false;
  spa_cmd->add_option("input", spa_input, "edge list (default stdin)");
  spa_cmd->add_option("-m,--mode", spa_mode, "sparse | collective")
      ->check(CLI::IsMember({"sparse", "collective"}));
  spa_cmd->add_option("-k,--k", spa_k, "disks per separator (default 1)");
  spa_cmd->add_option("--k-cap", spa_kcap, "raise the exact k-subset scan cap");
  spa_cmd->add_flag("--verify", spa_verify, "measure the surplus against the bound");
  spa_cmd->add_flag("--json", spa_json, "JSON output for sparse mode too");
  spa_cmd->add_option("-o,--output", spa_out, "output file (default stdout)");
  spa_cmd->add_option("--apsp-limit", spa_apsp, "verification size guard (default 5000)");

  // ---- verify ----
  auto* ver_cmd = app.add_subcommand("verify", "measure surplus and stretch");
  std::string ver_input = "-", ver_spanner;
  std::vector<std::string> ver_trees;
  std::uint32_t ver_apsp = 5000;
  std::int64_t ver_bound = -1;
  ver_cmd->add_option("input", ver_input, "host edge list (default stdin)");
  ver_cmd->add_option("--spanner", ver_spanner, "spanning subgraph edge list");
  ver_cmd->add_option("--trees", ver_trees, "spanning tree edge lists")->expected(-1);
  ver_cmd->add_option("--bound", ver_bound, "fail (exit 4) if surplus exceeds this");
  ver_cmd->add_option("--apsp-limit", ver_apsp, "verification size guard (default 5000)");

  // ---- td-* ----
  auto* tdv_cmd = app.add_subcommand("td-validate", "check decomposition conditions");
  std::string tdv_graph, tdv_td;
  tdv_cmd->add_option("graph", tdv_graph, "edge list")->required();
  tdv_cmd->add_option("td", tdv_td, "decomposition file")->required();

  auto* tdm_cmd = app.add_subcommand("td-metrics", "width, length, breadth, k-breadth");
  std::string tdm_graph, tdm_td;
  std::uint32_t tdm_k = 1, tdm_kcap = 3, tdm_bagcap = 24;
  bool tdm_greedy = false;
  tdm_cmd->add_option("graph", tdm_graph, "edge list")->required();
  tdm_cmd->add_option("td", tdm_td, "decomposition file")->required();
  tdm_cmd->add_option("-k,--k", tdm_k, "disks per bag (default 1)");
  tdm_cmd->add_option("--k-cap", tdm_kcap, "exact k-center cap on k (default 3)");
  tdm_cmd->add_option("--bag-cap", tdm_bagcap, "exact k-center cap on bag size (default 24)");
  tdm_cmd->add_flag("--greedy", tdm_greedy, "greedy bound past the caps instead of refusing");

  auto* tde_cmd = app.add_subcommand("td-expand", "grow every bag by a radius");
  std::string tde_graph, tde_td, tde_out;
  std::uint32_t tde_r = 0;
  tde_cmd->add_option("graph", tde_graph, "edge list")->required();
  tde_cmd->add_option("td", tde_td, "decomposition file")->required();
  tde_cmd->add_option("radius", tde_r)->required();
  tde_cmd->add_option("-o,--output", tde_out, "output file (default stdout)");

  auto* tdl_cmd = app.add_subcommand(
      "td-lift", "turn a spanner's decomposition into one for the host");
  std::string tdl_graph, tdl_spanner, tdl_td, tdl_out;
  std::uint32_t tdl_t = 0;
  tdl_cmd->add_option("graph", tdl_graph, "host edge list")->required();
  tdl_cmd->add_option("spanner", tdl_spanner, "spanner edge list")->required();
  tdl_cmd->add_option("td", tdl_td, "spanner decomposition file")->required();
  tdl_cmd->add_option("stretch", tdl_t)->required();
  tdl_cmd->add_option("-o,--output", tdl_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (threads > 0) sw::set_thread_count(threads);

  if (gen->parsed()) {
    sw::GenResult made;
    json params;
    if (gen_cycle_cmd->parsed()) {
      made = sw::gen_cycle(a1);
      params = {{"kind", "cycle"}, {"length", a1}};
    } else if (gen_chordal_cmd->parsed()) {
      made = sw::gen_chordal(a1, gen_seed);
      params = {{"kind", "chordal"}, {"n", a1}, {"seed", gen_seed}};
    } else if (gen_tree_cmd->parsed()) {
      made = sw::gen_planted_tree_spanner(a1, a2, gen_extra, gen_seed);
      params = {{"kind", "tree-spanner"}, {"n", a1}, {"t", a2},
                {"extra", gen_extra}, {"seed", gen_seed}};
    } else if (gen_tw_cmd->parsed()) {
      made = sw::gen_planted_tw_spanner(a1, a2, a3, gen_seed);
      params = {{"kind", "tw-spanner"}, {"n", a1}, {"k", a2}, {"t", a3},
                {"seed", gen_seed}};
    } else {
      made = sw::gen_grid(a1, a2);
      params = {{"kind", "grid"}, {"rows", a1}, {"cols", a2}};
    }
    write_text(gen_out, edge_list_text(made.graph));
    std::string cert_path = gen_cert;
    if (cert_path.empty() && !gen_out.empty() && gen_out != "-")
      cert_path = gen_out + ".cert.json";
    if (!cert_path.empty()) {
      json cert = certificate_json(made.certificate);
      cert["instance"] = params;
      write_text(cert_path, cert.dump(2) + "\n");
    }
    return 0;
  }

  if (sep_cmd->parsed()) {
    auto g = load_graph(sep_input);
    sw::KDiskOptions opts;
    opts.k_cap = sep_kcap;
    auto sep = sep_k == 1 ? sw::best_disk_separator(g)
                          : sw::best_k_disk_separator(g, sep_k, opts);
    emit(separator_json(g, sep_k, sep));
    return 0;
  }

  if (dec_cmd->parsed()) {
    auto g = load_graph(dec_input);
    sw::HierarchyOptions opts;
    opts.separator.k_cap = dec_kcap;
    auto h = sw::build_hierarchy(g, dec_k, opts);
    if (dec_dot)
      std::cout << hierarchy_dot(h);
    else
      emit(hierarchy_json(h));
    return 0;
  }

  if (spa_cmd->parsed()) {
    auto g = load_graph(spa_input);
    sw::HierarchyOptions opts;
    opts.separator.k_cap = spa_kcap;
    auto h = sw::build_hierarchy(g, spa_k, opts);
    const std::uint32_t r_max = max_radius(h);
    json j;
    j["n"] = g.n();
    j["k"] = spa_k;
    j["r_max"] = r_max;
    if (spa_mode == "sparse") {
      auto edges = sw::sparse_spanner(h).union_edges;
      const double bound =
          sw::surplus_bound(sw::SystemMode::kSparseUnion, g.n(), spa_k, r_max);
      j["mode"] = "sparse";
      j["edge_count"] = edges.size();
      j["surplus_bound"] = bound;
      if (spa_verify) {
        guard_apsp(g, spa_apsp);
        auto rep = sw::surplus(g, sw::Graph::from_edges(g.n(), edges));
        j["report"] = report_json(rep);
        if (spa_json) emit(j);
        else write_text(spa_out, edge_list_text(sw::Graph::from_edges(g.n(), edges)));
        if (rep.max_surplus > bound)
          throw sw::BoundViolation("sparse spanner surplus " +
                                   std::to_string(rep.max_surplus) +
                                   " exceeds the guaranteed " + std::to_string(bound));
        return 0;
      }
      if (spa_json) {
        j["edges"] = edge_array(edges);
        emit(j);
      } else {
        write_text(spa_out, edge_list_text(sw::Graph::from_edges(g.n(), edges)));
      }
      return 0;
    }
    auto system = sw::collective_system(h);
    j["mode"] = "collective";
    j["tree_count"] = system.trees.size();
    json trees = json::array();
    std::vector<sw::Graph> tree_graphs;
    for (const sw::TaggedTree& tree : system.trees) {
      trees.push_back({{"level", tree.level},
                       {"center_index", tree.center_index},
                       {"edges", edge_array(tree.edges)}});
      tree_graphs.push_back(sw::Graph::from_edges(g.n(), tree.edges));
    }
    j["trees"] = trees;
    const double bound =
        sw::surplus_bound(sw::SystemMode::kCollective, g.n(), spa_k, r_max);
    j["surplus_bound"] = bound;
    if (spa_verify) {
      guard_apsp(g, spa_apsp);
      auto rep = sw::collective_surplus(g, tree_graphs);
      j["report"] = report_json(rep);
      emit(j);
      if (rep.max_surplus > bound)
        throw sw::BoundViolation("collective surplus " +
                                 std::to_string(rep.max_surplus) +
                                 " exceeds the guaranteed " + std::to_string(bound));
      return 0;
    }
    emit(j);
    return 0;
  }

  if (ver_cmd->parsed()) {
    if (ver_spanner.empty() == ver_trees.empty())
      throw sw::ParseError("pass exactly one of --spanner or --trees", 0);
    auto g = load_graph(ver_input);
    guard_apsp(g, ver_apsp);
    sw::SurplusReport rep;
    if (!ver_spanner.empty()) {
      rep = sw::surplus(g, load_over(ver_spanner, g.n()));
    } else {
      std::vector<sw::Graph> trees;
      for (const std::string& path : ver_trees) trees.push_back(load_over(path, g.n()));
      rep = sw::collective_surplus(g, trees);
    }
    emit(report_json(rep));
    if (ver_bound >= 0 && rep.max_surplus > std::uint64_t(ver_bound))
      throw sw::BoundViolation("surplus " + std::to_string(rep.max_surplus) +
                               " exceeds the required " + std::to_string(ver_bound));
    return 0;
  }

  if (tdv_cmd->parsed()) {
    auto g = load_graph(tdv_graph);
    auto td = load_td(tdv_td);
    auto bad = sw::validate(g, td);
    json j;
    j["valid"] = bad.empty();
    json list = json::array();
    for (const sw::TdViolation& v : bad) {
      json vj;
      vj["kind"] = violation_name(v.kind);
      if (v.vertex != sw::kNoVertex) vj["vertex"] = v.vertex;
      if (v.edge.u != sw::kNoVertex) vj["edge"] = {v.edge.u, v.edge.v};
      vj["detail"] = v.detail;
      list.push_back(vj);
    }
    j["violations"] = list;
    emit(j);
    if (!bad.empty())
      throw sw::ContractViolation("decomposition is invalid (" +
                                  std::to_string(bad.size()) + " violations)");
    return 0;
  }

  if (tdm_cmd->parsed()) {
    auto g = load_graph(tdm_graph);
    auto td = load_td(tdm_td);
    sw::KBreadthOptions opts;
    opts.k_cap = tdm_kcap;
    opts.bag_cap = tdm_bagcap;
    opts.allow_greedy = tdm_greedy;
    auto got = sw::metrics(g, td, tdm_k, opts);
    json j;
    j["width"] = got.width;
    j["length"] = got.length;
    j["breadth"] = got.breadth;
    j["k"] = tdm_k;
    j["k_breadth"] = got.k_breadth;
    j["k_breadth_exact"] = got.k_breadth_exact;
    emit(j);
    return 0;
  }

  if (tde_cmd->parsed()) {
    auto g = load_graph(tde_graph);
    auto td = load_td(tde_td);
    auto grown = sw::expand(g, td, tde_r);
    std::ostringstream out;
    sw::write_tree_decomposition(grown, out);
    write_text(tde_out, out.str());
    return 0;
  }

  if (tdl_cmd->parsed()) {
    auto g = load_graph(tdl_graph);
    auto h = load_over(tdl_spanner, g.n());
    auto td = load_td(tdl_td);
    auto lifted = sw::lift(g, h, td, tdl_t);
    std::ostringstream out;
    sw::write_tree_decomposition(lifted, out);
    write_text(tdl_out, out.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const sw::BoundViolation& e) {
    std::cerr << "bound violation: " << e.what() << '\n';
    return 4;
  } catch (const sw::Error& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 3;
  }
}
