#include "endgrid/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace endgrid {

using nlohmann::json;

namespace {

void require_kind(const json& j, const std::string& kind) {
  if (!j.is_object()) throw InvalidArgument("schema: top level must be an object");
  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
    throw InvalidArgument("schema: missing schema_version");
  if (j.value("kind", "") != kind)
    throw InvalidArgument("schema: expected kind \"" + kind + "\", found \"" +
                          j.value("kind", "") + "\"");
}

json tree_json_impl(const OrderTree& tree, const SparseTGraph* sparse) {
  json nodes = json::array();
  for (NodeId v = 0; v < tree.size(); ++v) {
    json node;
    node["name"] = tree.name(v);
    node["seq"] = tree.node(v).seq;
    if (v != tree.root()) node["parent"] = tree.name(tree.parent(v));
    if (tree.is_top(v))
      node["height"] = "TOP";
    else
      node["height"] = tree.height_of(v);
    nodes.push_back(std::move(node));
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "tree";
  j["branching_profile"] = tree.branching_profile();
  j["nodes"] = std::move(nodes);
  if (!tree.cardinal_label().empty()) j["cardinal_label"] = tree.cardinal_label();
  if (tree.has_antichains()) {
    json antichains = json::array();
    for (const auto& chain : tree.antichains()) {
      json names = json::array();
      for (NodeId v : chain) names.push_back(tree.name(v));
      antichains.push_back(std::move(names));
    }
    j["antichains"] = std::move(antichains);
  }
  if (sparse != nullptr) {
    json ladders = json::object();
    for (NodeId top : tree.tops()) {
      json entries = json::array();
      for (NodeId e : sparse->ladder(top)) entries.push_back(tree.name(e));
      ladders[tree.name(top)] = std::move(entries);
    }
    j["ladders"] = std::move(ladders);
  }
  return j;
}

}  // namespace

json tree_to_json(const OrderTree& tree) { return tree_json_impl(tree, nullptr); }

json sparse_to_json(const SparseTGraph& g) { return tree_json_impl(g.tree(), &g); }

OrderTree tree_from_json(const json& j) {
  require_kind(j, "tree");
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw InvalidArgument("tree schema: missing nodes array");

  std::map<std::string, NodeId> ids;
  std::vector<OrderTree::Node> nodes;
  for (const auto& entry : j["nodes"]) {
    OrderTree::Node node;
    const std::string name = entry.value("name", "");
    if (name.empty()) throw InvalidArgument("tree schema: node without a name");
    if (ids.count(name)) throw InvalidArgument("tree schema: duplicate node name " + name);
    node.seq = entry.value("seq", std::vector<int>{});
    if (entry.contains("parent")) {
      const std::string parent = entry["parent"].get<std::string>();
      if (!ids.count(parent))
        throw InvalidArgument("tree schema: node " + name + " references unknown parent " + parent);
      node.parent = ids.at(parent);
    }
    if (entry.contains("height") && entry["height"].is_string()) {
      if (entry["height"].get<std::string>() != "TOP")
        throw InvalidArgument("tree schema: height must be an integer or \"TOP\"");
      node.is_top = true;
      node.height = node.parent == kNoNode ? 0 : nodes[node.parent].height + 1;
    } else {
      node.height = entry.value("height", 0);
    }
    ids[name] = static_cast<NodeId>(nodes.size());
    nodes.push_back(std::move(node));
  }
  OrderTree tree =
      OrderTree::from_nodes(std::move(nodes), j.value("branching_profile", std::vector<int>{}));
  tree.set_cardinal_label(j.value("cardinal_label", ""));
  if (j.contains("antichains")) {
    std::vector<std::vector<NodeId>> antichains;
    for (const auto& chain : j["antichains"]) {
      std::vector<NodeId> members;
      for (const auto& name : chain) {
        const auto found = ids.find(name.get<std::string>());
        if (found == ids.end())
          throw InvalidArgument("tree schema: antichain references unknown node");
        members.push_back(found->second);
      }
      antichains.push_back(std::move(members));
    }
    tree.set_antichains(std::move(antichains));
  }
  return tree;
}

bool has_ladders(const json& j) { return j.contains("ladders"); }

SparseTGraph sparse_from_json(const json& j) {
  OrderTree tree = tree_from_json(j);
  if (!j.contains("ladders"))
    throw InvalidArgument("tree schema: sparse T-graph requires a ladders object");
  std::vector<std::vector<NodeId>> ladders;
  for (NodeId top : tree.tops()) {
    const std::string name = tree.name(top);
    if (!j["ladders"].contains(name))
      throw InvalidArgument("tree schema: missing ladder for top " + name);
    std::vector<NodeId> ladder;
    for (const auto& entry : j["ladders"][name]) {
      const auto found = tree.find(entry.get<std::string>());
      if (!found) throw InvalidArgument("tree schema: ladder references unknown node");
      ladder.push_back(*found);
    }
    ladders.push_back(std::move(ladder));
  }
  return SparseTGraph(std::move(tree), ladders);
}

json graph_to_json(const TruncatedGraph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json vertex;
    vertex["id"] = v;
    vertex["depth"] = g.depth(v);
    if (!g.owner(v).empty()) {
      vertex["owner"] = g.owner(v);
      vertex["pos"] = g.pos(v);
    }
    vertices.push_back(std::move(vertex));
  }
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "graph";
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

TruncatedGraph graph_from_json(const json& j) {
  require_kind(j, "graph");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw InvalidArgument("graph schema: missing vertices array");
  GraphBuilder builder;
  int expected = 0;
  for (const auto& vertex : j["vertices"]) {
    if (vertex.value("id", -1) != expected)
      throw InvalidArgument("graph schema: vertex ids must run 0..n-1 in order");
    ++expected;
    const int depth = vertex.value("depth", 0);
    if (vertex.contains("owner"))
      builder.add_vertex(vertex["owner"].get<std::string>(), vertex.value("pos", 0), depth);
    else
      builder.add_vertex(depth);
  }
  for (const auto& edge : j.value("edges", json::array())) {
    if (!edge.is_array() || edge.size() != 2)
      throw InvalidArgument("graph schema: edges must be pairs");
    const int u = edge[0].get<int>();
    const int v = edge[1].get<int>();
    if (u < 0 || u >= expected || v < 0 || v >= expected)
      throw InvalidArgument("graph schema: edge [" + std::to_string(u) + "," + std::to_string(v) +
                            "] references a missing vertex");
    builder.add_edge(u, v);
  }
  return builder.build();
}

json scale_to_json(const ScaleFamily& s) {
  json ideal = json::array();
  for (std::uint32_t mask : s.ideal.members()) {
    json indices = json::array();
    for (int n = 0; n < s.index_length(); ++n)
      if (mask & (1u << n)) indices.push_back(n);
    ideal.push_back(std::move(indices));
  }
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "scale";
  j["bounds"] = s.bounds;
  j["functions"] = s.functions;
  j["ideal"] = std::move(ideal);
  return j;
}

ScaleFamily scale_from_json(const json& j) {
  require_kind(j, "scale");
  ScaleFamily s;
  s.bounds = j.value("bounds", std::vector<int>{});
  s.functions = j.value("functions", std::vector<std::vector<int>>{});
  std::vector<std::uint32_t> masks;
  for (const auto& member : j.value("ideal", json::array())) {
    std::uint32_t mask = 0;
    for (const auto& index : member) {
      const int n = index.get<int>();
      if (n < 0 || n >= static_cast<int>(s.bounds.size()))
        throw InvalidArgument("scale schema: ideal index out of range");
      mask |= 1u << n;
    }
    masks.push_back(mask);
  }
  s.ideal = Ideal(static_cast<int>(s.bounds.size()), masks);
  s.validate();
  return s;
}

std::string export_dot(const TruncatedGraph& g) {
  const auto label = [&g](int v) {
    if (g.owner(v).empty()) return "(" + std::to_string(v) + ")";
    return "(" + g.owner(v) + "|" + std::to_string(g.pos(v)) + ")";
  };
  std::ostringstream out;
  out << "graph endgrid {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (int pos = 0; pos <= g.max_depth(); ++pos) {
    std::vector<int> rank;
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((g.owner(v).empty() ? g.depth(v) : g.pos(v)) == pos) rank.push_back(v);
    if (rank.empty()) continue;
    out << "  { rank=same;";
    for (int v : rank) out << " \"" << label(v) << "\";";
    out << " }\n";
  }
  for (const auto& [u, v] : g.edges())
    out << "  \"" << label(u) << "\" -- \"" << label(v) << "\";\n";
  out << "}\n";
  return out.str();
}

json ray_to_json(const Ray& ray) {
  json j;
  j["owner"] = ray.owner;
  j["vertices"] = ray.vertices;
  return j;
}

json comb_to_json(const Comb& comb) {
  json j;
  j["spine"] = ray_to_json(comb.spine);
  j["paths"] = comb.paths;
  j["teeth"] = comb.teeth();
  return j;
}

json star_to_json(const StarOfRays& star) {
  json leaves = json::array();
  for (const Ray& leaf : star.leaves) leaves.push_back(ray_to_json(leaf));
  json j;
  j["centre"] = ray_to_json(star.centre);
  j["leaves"] = std::move(leaves);
  j["families"] = star.families;
  return j;
}

namespace {

json certificate_envelope(const std::string& kind, const std::string& verdict, json parameters,
                          json witnesses) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "certificate";
  j["certificate"] = kind;
  j["verdict"] = verdict;
  j["parameters"] = std::move(parameters);
  j["witnesses"] = std::move(witnesses);
  return j;
}

}  // namespace

json certificate_json(const AttachmentBoundReport& report) {
  json components = json::array();
  for (const auto& entry : report.components) {
    json component;
    component["level_node"] = entry.level_node;
    component["component"] = entry.component_index;
    component["bound"] = entry.bound;
    component["flow"] = entry.flow;
    if (!entry.witness_paths.empty()) component["witness_paths"] = entry.witness_paths;
    components.push_back(std::move(component));
  }
  return certificate_envelope(
      "attachment-bound", report.pass ? "pass" : "fail",
      {{"sigma", report.sigma},
       {"depth", report.depth},
       {"max_attachment", report.max_attachment},
       {"star_budget", report.star_budget},
       {"star_budget_m", report.star_budget_m}},
      {{"components", std::move(components)}});
}

json certificate_json(const StarSearchResult& result) {
  std::string kind = "star-not-found";
  std::string verdict = "not-found";
  if (result.verdict == StarSearchResult::Verdict::Found) {
    kind = "star-found";
    verdict = "pass";
  } else if (result.verdict == StarSearchResult::Verdict::Inconclusive) {
    kind = "star-not-found";
    verdict = "inconclusive";
  }
  json witnesses = json::object();
  if (result.verdict == StarSearchResult::Verdict::Found)
    witnesses["star"] = star_to_json(result.star);
  return certificate_envelope(kind, verdict,
                              {{"k", result.k},
                               {"m", result.m},
                               {"explored", result.explored},
                               {"centres_tried", result.centres_tried}},
                              std::move(witnesses));
}

json certificate_json(const ScaleObstructionReport& report) {
  json witnesses;
  witnesses["witness_subtree"] = report.witness_subtree;
  witnesses["graph_recount_ok"] = report.graph_recount_ok;
  witnesses["oracle_checked"] = report.oracle_checked;
  witnesses["oracle_agrees"] = report.oracle_agrees;
  if (report.search_ran) {
    witnesses["search_k"] = report.search_k;
    witnesses["search_verdict"] =
        report.search_verdict == StarSearchResult::Verdict::Found
            ? "found"
            : (report.search_verdict == StarSearchResult::Verdict::NotFound ? "not-found"
                                                                            : "inconclusive");
  }
  std::string verdict = report.obstructed ? "pass" : "fail";
  if (report.degenerate_single_top) verdict = "degenerate";
  return certificate_envelope("scale-obstruction", verdict,
                              {{"b_min", report.b_min},
                               {"d", report.d},
                               {"depth", report.depth},
                               {"max_captured", report.max_captured},
                               {"subtrees_checked", report.subtrees_checked}},
                              std::move(witnesses));
}

json certificate_json(const PipelineResult& result) {
  json witnesses = json::object();
  witnesses["rounds"] = result.greedy.round_sizes;
  if (result.ok) witnesses["star"] = star_to_json(result.star);
  json parameters;
  parameters["failed_stage"] = result.failed_stage;
  parameters["combs_packed"] = static_cast<int>(result.greedy.combs.size());
  parameters["core_size"] = static_cast<int>(result.core.core_a.size());
  return certificate_envelope("pipeline-star", result.ok ? "pass" : "fail", std::move(parameters),
                              std::move(witnesses));
}

json report_json(const NoCoreReport& report) {
  json j;
  j["no_core"] = report.no_core;
  j["b_min"] = report.b_min;
  j["max_captured"] = report.max_captured;
  j["witness_subtree"] = report.witness_subtree;
  j["subtrees_checked"] = report.subtrees_checked;
  j["exhaustive"] = report.exhaustive;
  j["degenerate_single_top"] = report.degenerate_single_top;
  j["oracle_checked"] = report.oracle_checked;
  j["oracle_agrees"] = report.oracle_agrees;
  return j;
}

json report_json(const GreedyCoreResult& result) {
  json combs = json::array();
  for (std::size_t i = 0; i < result.combs.size(); ++i) {
    json comb = comb_to_json(result.combs[i]);
    comb["round"] = result.comb_round[i];
    combs.push_back(std::move(comb));
  }
  json j;
  j["core"] = result.core;
  j["round_sizes"] = result.round_sizes;
  j["stabilized"] = result.stabilized;
  j["combs"] = std::move(combs);
  return j;
}

json report_json(const RayGraphResult& result) {
  json edges = json::array();
  for (const auto& edge : result.edges) {
    json entry;
    entry["a"] = edge.a;
    entry["b"] = edge.b;
    entry["multiplicity"] = edge.multiplicity;
    entry["witnesses"] = edge.witnesses;
    edges.push_back(std::move(entry));
  }
  const char* classification = nullptr;
  switch (result.classification) {
    case RayGraphResult::Classification::Star: classification = "star"; break;
    case RayGraphResult::Classification::FrayedStarLike: classification = "frayed-star"; break;
    case RayGraphResult::Classification::FrayedCombLike: classification = "frayed-comb"; break;
    case RayGraphResult::Classification::ConnectedOther: classification = "connected-other"; break;
    case RayGraphResult::Classification::Disconnected: classification = "disconnected"; break;
  }
  json j;
  j["ray_ids"] = result.ray_ids;
  j["edges"] = std::move(edges);
  j["classification"] = classification;
  if (result.centre_ray >= 0) j["centre_ray"] = result.centre_ray;
  j["components"] = result.components;
  return j;
}

json report_json(const DisjointPathsResult& result) {
  json j;
  j["paths"] = result.paths;
  j["count"] = static_cast<int>(result.paths.size());
  j["reached_request"] = result.reached_request;
  if (!result.reached_request) j["cut"] = result.cut;
  return j;
}

json report_json(const FrayedDecomposition& decomposition) {
  const char* kind = nullptr;
  switch (decomposition.kind) {
    case FrayedDecomposition::Kind::Star: kind = "star"; break;
    case FrayedDecomposition::Kind::FrayedStar: kind = "frayed-star"; break;
    case FrayedDecomposition::Kind::FrayedComb: kind = "frayed-comb"; break;
    case FrayedDecomposition::Kind::Undecomposable: kind = "undecomposable"; break;
  }
  json j;
  j["kind"] = kind;
  j["count"] = decomposition.count;
  if (decomposition.centre >= 0) j["centre"] = decomposition.centre;
  if (!decomposition.leaves.empty()) j["leaves"] = decomposition.leaves;
  if (!decomposition.distributors.empty()) j["distributors"] = decomposition.distributors;
  if (!decomposition.ray.empty()) j["ray"] = decomposition.ray;
  if (!decomposition.stars.empty()) {
    json stars = json::array();
    for (const auto& [vertex, teeth] : decomposition.stars)
      stars.push_back({{"on_ray", vertex}, {"teeth", teeth}});
    j["stars"] = std::move(stars);
  }
  return j;
}

json report_json(const ScaleReport& report) {
  json j;
  j["increasing"] = report.increasing;
  j["increasing_violations"] = report.increasing_violations;
  j["cofinal_on_tests"] = report.cofinal_on_tests;
  j["undominated_tests"] = report.undominated_tests;
  j["tests_checked"] = report.tests_checked;
  j["relativized"] = report.relativized;
  return j;
}

json report_json(const StarPropertyReport& report, const OrderTree& tree) {
  json sets = json::object();
  for (NodeId v = 0; v < tree.size(); ++v) {
    json names = json::array();
    for (NodeId s : report.attachment.at(v)) names.push_back(tree.name(s));
    sets[tree.name(v)] = std::move(names);
  }
  json j;
  j["attachment_sets"] = std::move(sets);
  j["compared"] = report.compared;
  if (report.compared) {
    j["all_stable"] = report.all_stable;
    json unstable = json::array();
    for (NodeId v = 0; v < tree.size(); ++v)
      if (!report.stable[v]) unstable.push_back(tree.name(v));
    j["unstable"] = std::move(unstable);
  }
  return j;
}

json report_json(const DoubleStarReport& report, const OrderTree& tree) {
  json violations = json::array();
  for (const auto& violation : report.violations)
    violations.push_back({{"t", tree.name(violation.t)},
                          {"vertex", violation.vertex},
                          {"neighbor", violation.neighbor}});
  json j;
  j["all_pass"] = report.all_pass;
  j["violations"] = std::move(violations);
  return j;
}

json load_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw InvalidArgument("parse error in " + path + ": " + err.what());
  }
}

void save_json(const std::string& path, const json& j) {
  save_text(path, j.dump(2) + "\n");
}

void save_text(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace endgrid
