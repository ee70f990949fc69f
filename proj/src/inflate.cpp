#include "endgrid/inflate.hpp"

#include <algorithm>
#include <set>

namespace endgrid {

bool TruncatedGraph::adjacent(int u, int v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<int> TruncatedGraph::frontier() const {
  std::vector<int> result;
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].depth == max_depth_) result.push_back(v);
  return result;
}

int TruncatedGraph::vertex_of(const std::string& owner, int pos) const {
  auto it = columns_.find(owner);
  if (it == columns_.end()) return -1;
  for (int v : it->second)
    if (vertices_[v].pos == pos) return v;
  return -1;
}

std::vector<int> TruncatedGraph::column(const std::string& owner) const {
  auto it = columns_.find(owner);
  if (it == columns_.end()) return {};
  return it->second;
}

bool operator==(const TruncatedGraph& a, const TruncatedGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges_ != b.edges_) return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const auto& va = a.vertices_[v];
    const auto& vb = b.vertices_[v];
    if (va.owner != vb.owner || va.pos != vb.pos || va.depth != vb.depth) return false;
  }
  return true;
}

int GraphBuilder::add_vertex(int depth) {
  if (depth < 0) throw InvalidArgument("graph: depth must be nonnegative");
  vertices_.push_back({"", 0, depth});
  all_provenance_ = false;
  return static_cast<int>(vertices_.size()) - 1;
}

int GraphBuilder::add_vertex(std::string owner, int pos, int depth) {
  if (depth < 0) throw InvalidArgument("graph: depth must be nonnegative");
  if (owner.empty()) throw InvalidArgument("graph: provenance owner must be nonempty");
  vertices_.push_back({std::move(owner), pos, depth});
  any_provenance_ = true;
  return static_cast<int>(vertices_.size()) - 1;
}

void GraphBuilder::add_edge(int u, int v) {
  const int n = static_cast<int>(vertices_.size());
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw InvalidArgument("graph: edge endpoint does not exist");
  if (u == v) throw InvalidArgument("graph: loops are not allowed");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

TruncatedGraph GraphBuilder::build() {
  TruncatedGraph g;
  g.vertices_ = std::move(vertices_);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  g.edges_ = std::move(edges_);
  g.adjacency_.assign(g.vertices_.size(), {});
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  g.max_depth_ = 0;
  for (const auto& vert : g.vertices_) g.max_depth_ = std::max(g.max_depth_, vert.depth);
  g.has_provenance_ = any_provenance_ && all_provenance_;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.vertices_[v].owner.empty()) g.columns_[g.vertices_[v].owner].push_back(v);
  for (auto& [owner, vs] : g.columns_)
    std::sort(vs.begin(), vs.end(),
              [&g](int a, int b) { return g.vertices_[a].pos < g.vertices_[b].pos; });
  vertices_.clear();
  edges_.clear();
  return g;
}

void validate_ray(const TruncatedGraph& g, const Ray& ray) {
  if (ray.vertices.empty()) throw InvalidArgument("ray: must be nonempty");
  std::set<int> seen;
  for (std::size_t i = 0; i < ray.vertices.size(); ++i) {
    const int v = ray.vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw InvalidArgument("ray: unknown vertex");
    if (!seen.insert(v).second) throw InvalidArgument("ray: vertices must be distinct");
    if (i > 0 && !g.adjacent(ray.vertices[i - 1], v))
      throw InvalidArgument("ray: consecutive vertices must be adjacent");
  }
}

bool reaches_frontier(const TruncatedGraph& g, const Ray& ray) {
  for (int v : ray.vertices)
    if (g.depth(v) == g.max_depth()) return true;
  return false;
}

InflationStats inflation_stats(const SparseTGraph& g, int depth) {
  const OrderTree& tree = g.tree();
  InflationStats stats;
  stats.vertices = static_cast<long long>(tree.size()) * (depth + 1);
  stats.horizontal_edges = static_cast<long long>(tree.size()) * depth;
  for (NodeId v = 0; v < tree.size(); ++v) {
    switch (tree.classify(v)) {
      case OrderTree::Kind::Successor:
        stats.matching_edges += depth + 1;
        break;
      case OrderTree::Kind::Top: {
        const long long len = static_cast<long long>(g.ladder(v).size());
        stats.ladder_edges += std::min<long long>(len, depth + 1);
        stats.omitted_ladder_edges += std::max<long long>(0, depth + 1 - len);
        break;
      }
      case OrderTree::Kind::Root:
        break;
    }
  }
  return stats;
}

TruncatedGraph inflate(const SparseTGraph& g, int depth) {
  if (depth < 0) throw InvalidArgument("inflate: depth must be nonnegative");
  const OrderTree& tree = g.tree();
  GraphBuilder builder;
  const auto id = [depth](NodeId t, int n) { return t * (depth + 1) + n; };

  for (NodeId t = 0; t < tree.size(); ++t)
    for (int n = 0; n <= depth; ++n) builder.add_vertex(tree.name(t), n, n);

  for (NodeId t = 0; t < tree.size(); ++t) {
    for (int n = 0; n < depth; ++n) builder.add_edge(id(t, n), id(t, n + 1));
    switch (tree.classify(t)) {
      case OrderTree::Kind::Successor:
        for (int n = 0; n <= depth; ++n) builder.add_edge(id(t, n), id(tree.parent(t), n));
        break;
      case OrderTree::Kind::Top: {
        const auto& ladder = g.ladder(t);
        for (int n = 0; n <= depth && n < static_cast<int>(ladder.size()); ++n)
          builder.add_edge(id(t, n), id(ladder[n], n));
        break;
      }
      case OrderTree::Kind::Root:
        break;
    }
  }
  const InflationStats stats = inflation_stats(g, depth);
  if (stats.omitted_ladder_edges > 0)
    log_info("inflate: " + std::to_string(stats.omitted_ladder_edges) +
             " ladder rung(s) beyond the truncated ladder length omitted");
  return builder.build();
}

Ray horizontal_ray(const TruncatedGraph& h, const OrderTree& tree, NodeId t) {
  if (t < 0 || t >= tree.size()) throw InvalidArgument("horizontal_ray: unknown node");
  return horizontal_ray(h, tree.name(t));
}

Ray horizontal_ray(const TruncatedGraph& h, const std::string& owner) {
  Ray ray;
  ray.owner = owner;
  ray.vertices = h.column(owner);
  if (ray.vertices.empty()) throw InvalidArgument("horizontal_ray: unknown owner " + owner);
  return ray;
}

std::vector<Ray> horizontal_rays(const TruncatedGraph& h, const OrderTree& tree) {
  std::vector<Ray> rays;
  for (NodeId t = 0; t < tree.size(); ++t) rays.push_back(horizontal_ray(h, tree, t));
  return rays;
}

std::vector<LabelledComponent> components_above(const OrderTree& tree, const TruncatedGraph& h,
                                                int level) {
  if (level < 0 || level > tree.top_level())
    throw InvalidArgument("components_above: level out of range");
  if (!h.has_provenance())
    throw InvalidArgument("components_above: graph carries no provenance");

  const auto node_level = [&tree](NodeId t) {
    return tree.is_top(t) ? tree.top_level() : tree.height_of(t);
  };

  // Vertices surviving the deletion of all columns below the level.
  std::vector<NodeId> owner_of(h.vertex_count(), kNoNode);
  std::vector<bool> alive(h.vertex_count(), false);
  for (NodeId t = 0; t < tree.size(); ++t) {
    for (int v : h.column(tree.name(t))) {
      owner_of[v] = t;
      alive[v] = node_level(t) >= level;
    }
  }

  std::vector<int> component(h.vertex_count(), -1);
  std::vector<LabelledComponent> components;
  for (int start = 0; start < h.vertex_count(); ++start) {
    if (!alive[start] || component[start] != -1) continue;
    const int idx = static_cast<int>(components.size());
    components.push_back({});
    std::vector<int> stack = {start};
    component[start] = idx;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      components[idx].vertices.push_back(v);
      for (int w : h.neighbors(v)) {
        if (alive[w] && component[w] == -1) {
          component[w] = idx;
          stack.push_back(w);
        }
      }
    }
    std::sort(components[idx].vertices.begin(), components[idx].vertices.end());
  }

  const std::vector<NodeId> level_nodes = tree.level(level);
  if (components.size() != level_nodes.size())
    throw CertificationError("components_above: expected " + std::to_string(level_nodes.size()) +
                             " components at level " + std::to_string(level) + ", found " +
                             std::to_string(components.size()));

  for (auto& comp : components) {
    // The unique level node below every vertex of the component.
    NodeId label = kNoNode;
    for (NodeId t : level_nodes) {
      bool covers_all = true;
      for (int v : comp.vertices)
        if (!tree.leq(t, owner_of[v])) covers_all = false;
      if (covers_all) {
        if (label != kNoNode)
          throw CertificationError("components_above: component labelled twice");
        label = t;
      }
    }
    if (label == kNoNode)
      throw CertificationError("components_above: component of size " +
                               std::to_string(comp.vertices.size()) + " has no level-" +
                               std::to_string(level) + " label");
    comp.label = label;

    // The component must exhaust the up-closure columns of its label.
    std::size_t expected = 0;
    for (NodeId t : tree.up_closure(label)) expected += h.column(tree.name(t)).size();
    if (comp.vertices.size() != expected)
      throw CertificationError("components_above: component of " + tree.name(label) +
                               " misses part of the up-closure (got " +
                               std::to_string(comp.vertices.size()) + ", expected " +
                               std::to_string(expected) + ")");
  }

  std::set<NodeId> labels;
  for (const auto& comp : components) labels.insert(comp.label);
  if (labels.size() != components.size())
    throw CertificationError("components_above: labels are not distinct");

  std::sort(components.begin(), components.end(),
            [](const LabelledComponent& a, const LabelledComponent& b) { return a.label < b.label; });
  return components;
}

DoubleStarReport check_doublestar_property(const OrderTree& tree, const TruncatedGraph& h,
                                           const AttachmentMap& s) {
  if (!h.has_provenance())
    throw InvalidArgument("check_doublestar_property: graph carries no provenance");
  if (static_cast<int>(s.sets.size()) != tree.size())
    throw InvalidArgument("check_doublestar_property: attachment map does not cover the tree");

  std::vector<NodeId> owner_of(h.vertex_count(), kNoNode);
  for (NodeId t = 0; t < tree.size(); ++t)
    for (int v : h.column(tree.name(t))) owner_of[v] = t;

  DoubleStarReport report;
  report.pass.assign(tree.size(), true);
  for (NodeId t = 0; t < tree.size(); ++t) {
    const auto& st = s.at(t);
    const int bound = static_cast<int>(st.size());
    for (int v = 0; v < h.vertex_count(); ++v) {
      if (!tree.less(t, owner_of[v])) continue;
      for (int w : h.neighbors(v)) {
        if (!tree.less(owner_of[w], t)) continue;  // only neighbours strictly below t
        const bool inside = std::binary_search(st.begin(), st.end(), owner_of[w]) &&
                            h.pos(w) < bound;
        if (!inside) {
          report.pass[t] = false;
          report.all_pass = false;
          report.violations.push_back({t, v, w});
        }
      }
    }
  }
  return report;
}

LiftResult lift_with_stars(const TruncatedGraph& g, const std::vector<Ray>& rays,
                           const std::vector<int>& sizes) {
  if (rays.size() != sizes.size())
    throw InvalidArgument("lift_with_stars: one size per ray required");
  std::set<int> used;
  for (const Ray& ray : rays) {
    validate_ray(g, ray);
    for (int v : ray.vertices)
      if (!used.insert(v).second) throw InvalidArgument("lift_with_stars: rays overlap");
  }
  for (int size : sizes)
    if (size < 1) throw InvalidArgument("lift_with_stars: sizes must be positive");

  GraphBuilder builder;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vert = g.vertex(v);
    if (vert.owner.empty())
      builder.add_vertex(vert.depth);
    else
      builder.add_vertex(vert.owner, vert.pos, vert.depth);
  }
  for (const auto& [u, v] : g.edges()) builder.add_edge(u, v);

  LiftResult result;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Ray& base = rays[i];
    const std::string base_name = base.owner.empty() ? ("ray" + std::to_string(i)) : base.owner;
    for (int l = 0; l < sizes[i]; ++l) {
      Ray fresh;
      fresh.owner = "lift:" + base_name + ":" + std::to_string(l);
      for (std::size_t k = 0; k < base.vertices.size(); ++k) {
        const int v = builder.add_vertex(fresh.owner, static_cast<int>(k), g.depth(base.vertices[k]));
        fresh.vertices.push_back(v);
        if (k > 0) builder.add_edge(fresh.vertices[k - 1], v);
        builder.add_edge(v, base.vertices[k]);
      }
      result.new_rays.push_back(std::move(fresh));
    }
  }
  result.graph = builder.build();
  return result;
}

}  // namespace endgrid
