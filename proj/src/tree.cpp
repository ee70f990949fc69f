#include "endgrid/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace endgrid {

namespace {

std::string join_seq(const std::vector<int>& seq) {
  if (seq.empty()) return "r";
  std::ostringstream out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out << '.';
    out << seq[i];
  }
  return out.str();
}

}  // namespace

OrderTree OrderTree::from_nodes(std::vector<Node> nodes, std::vector<int> branching_profile) {
  if (nodes.empty()) throw InvalidArgument("tree: must have at least a root");
  if (nodes[0].parent != kNoNode || !nodes[0].seq.empty() || nodes[0].height != 0 || nodes[0].is_top)
    throw InvalidArgument("tree: node 0 must be the root");

  OrderTree t;
  t.nodes_ = std::move(nodes);
  t.branching_profile_ = std::move(branching_profile);
  t.children_.assign(t.nodes_.size(), {});
  const int n = static_cast<int>(t.nodes_.size());
  for (NodeId v = 1; v < n; ++v) {
    const Node& node = t.nodes_[v];
    if (node.parent < 0 || node.parent >= n || node.parent == v)
      throw InvalidArgument("tree: node " + std::to_string(v) + " has an invalid parent");
    const Node& par = t.nodes_[node.parent];
    if (par.is_top) throw InvalidArgument("tree: tops must not have children");
    if (node.is_top) {
      if (node.height != par.height + 1)
        throw InvalidArgument("tree: top level must sit directly above its branch leaf");
    } else {
      if (node.height != par.height + 1)
        throw InvalidArgument("tree: height(child) must be height(parent)+1");
      t.children_[node.parent].push_back(v);
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    const Node& node = t.nodes_[v];
    if (node.is_top) {
      ++t.top_count_;
    } else {
      t.finite_height_ = std::max(t.finite_height_, node.height);
    }
  }
  // Every top must sit above a full branch: its parent must be a leaf of the
  // finite part at max height.
  for (NodeId v = 0; v < n; ++v) {
    if (!t.nodes_[v].is_top) continue;
    const NodeId leaf = t.nodes_[v].parent;
    if (t.nodes_[leaf].height != t.finite_height_)
      throw InvalidArgument("tree: top " + t.name(v) + " does not cap a maximal branch");
  }
  return t;
}

std::vector<NodeId> OrderTree::tops() const {
  std::vector<NodeId> result;
  for (NodeId v = 0; v < size(); ++v)
    if (nodes_[v].is_top) result.push_back(v);
  return result;
}

std::vector<NodeId> OrderTree::finite_nodes() const {
  std::vector<NodeId> result;
  for (NodeId v = 0; v < size(); ++v)
    if (!nodes_[v].is_top) result.push_back(v);
  return result;
}

std::string OrderTree::name(NodeId v) const {
  const Node& node = nodes_.at(v);
  if (node.is_top) return "t:" + join_seq(node.seq);
  return join_seq(node.seq);
}

std::optional<NodeId> OrderTree::find(const std::string& name) const {
  for (NodeId v = 0; v < size(); ++v)
    if (this->name(v) == name) return v;
  return std::nullopt;
}

bool OrderTree::leq(NodeId a, NodeId b) const {
  NodeId cur = b;
  while (cur != kNoNode) {
    if (cur == a) return true;
    cur = nodes_.at(cur).parent;
  }
  return false;
}

OrderTree::Kind OrderTree::classify(NodeId v) const {
  if (nodes_.at(v).is_top) return Kind::Top;
  if (v == root()) return Kind::Root;
  return Kind::Successor;
}

std::vector<NodeId> OrderTree::down_closure(NodeId v) const {
  std::vector<NodeId> chain;
  for (NodeId cur = v; cur != kNoNode; cur = nodes_.at(cur).parent) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<NodeId> OrderTree::strict_down_closure(NodeId v) const {
  std::vector<NodeId> chain = down_closure(v);
  chain.pop_back();
  return chain;
}

std::vector<NodeId> OrderTree::up_closure(NodeId v) const {
  std::vector<NodeId> result;
  for (NodeId u = 0; u < size(); ++u)
    if (leq(v, u)) result.push_back(u);
  return result;
}

std::vector<NodeId> OrderTree::interval(NodeId a, NodeId b) const {
  if (!less(a, b)) throw InvalidArgument("interval: endpoints must satisfy a < b");
  std::vector<NodeId> result;
  for (NodeId cur = nodes_.at(b).parent; cur != a; cur = nodes_.at(cur).parent) result.push_back(cur);
  std::reverse(result.begin(), result.end());
  return result;
}

std::vector<NodeId> OrderTree::level(int i) const {
  std::vector<NodeId> result;
  if (i == top_level()) return tops();
  for (NodeId v = 0; v < size(); ++v)
    if (!nodes_[v].is_top && nodes_[v].height == i) result.push_back(v);
  return result;
}

void OrderTree::set_antichains(std::vector<std::vector<NodeId>> antichains) {
  std::set<NodeId> seen;
  for (auto& chain : antichains) {
    std::sort(chain.begin(), chain.end());
    for (NodeId v : chain) {
      if (v < 0 || v >= size()) throw InvalidArgument("antichains: unknown node");
      if (nodes_[v].is_top) throw InvalidArgument("antichains: tops cannot be antichain members");
      if (!seen.insert(v).second) throw InvalidArgument("antichains: sets must be pairwise disjoint");
    }
  }
  antichains_ = std::move(antichains);
}

OrderTree build_regular_tree(const std::vector<int>& branching_profile, int height) {
  if (height < 0) throw InvalidArgument("build_regular_tree: height must be nonnegative");
  if (height > 0 && branching_profile.empty())
    throw InvalidArgument("build_regular_tree: empty profile with positive height");
  if (static_cast<int>(branching_profile.size()) < height)
    throw InvalidArgument("build_regular_tree: profile shorter than height");
  for (int b : branching_profile)
    if (b < 1) throw InvalidArgument("build_regular_tree: branching must be >= 1");

  std::vector<OrderTree::Node> nodes;
  nodes.push_back({});
  std::vector<NodeId> frontier = {0};
  for (int lvl = 0; lvl < height; ++lvl) {
    std::vector<NodeId> next;
    for (NodeId p : frontier) {
      for (int c = 0; c < branching_profile[lvl]; ++c) {
        OrderTree::Node node;
        node.seq = nodes[p].seq;
        node.seq.push_back(c);
        node.parent = p;
        node.height = lvl + 1;
        next.push_back(static_cast<NodeId>(nodes.size()));
        nodes.push_back(std::move(node));
      }
    }
    frontier = std::move(next);
  }
  std::vector<int> profile(branching_profile.begin(), branching_profile.begin() + height);
  return OrderTree::from_nodes(std::move(nodes), std::move(profile));
}

OrderTree attach_tops(const OrderTree& tree, const std::vector<std::vector<int>>& branch_selectors) {
  if (tree.top_count() > 0) throw InvalidArgument("attach_tops: tree already has tops");

  std::map<std::vector<int>, NodeId> leaves;
  for (NodeId v : tree.level(tree.finite_height())) leaves[tree.node(v).seq] = v;

  std::set<std::vector<int>> seen;
  std::vector<OrderTree::Node> nodes;
  for (NodeId v = 0; v < tree.size(); ++v) nodes.push_back(tree.node(v));
  for (const auto& selector : branch_selectors) {
    if (!seen.insert(selector).second) throw InvalidArgument("attach_tops: duplicate branch selector");
    auto it = leaves.find(selector);
    if (it == leaves.end()) throw InvalidArgument("attach_tops: selector is not a maximal branch");
    OrderTree::Node top;
    top.seq = selector;
    top.parent = it->second;
    top.height = tree.finite_height() + 1;
    top.is_top = true;
    nodes.push_back(std::move(top));
  }
  OrderTree result = OrderTree::from_nodes(std::move(nodes), tree.branching_profile());
  result.set_cardinal_label(tree.cardinal_label());
  if (tree.has_antichains()) result.set_antichains(tree.antichains());
  return result;
}

void set_level_antichains(OrderTree& tree) {
  std::vector<std::vector<NodeId>> antichains;
  for (int i = 0; i <= tree.finite_height(); ++i) antichains.push_back(tree.level(i));
  tree.set_antichains(std::move(antichains));
}

SparseTGraph::SparseTGraph(OrderTree tree, const std::vector<std::vector<NodeId>>& top_ladders)
    : tree_(std::move(tree)) {
  const std::vector<NodeId> tops = tree_.tops();
  if (top_ladders.size() != tops.size())
    throw InvalidArgument("sparse t-graph: one ladder per top required");

  ladders_.assign(tree_.size(), {});
  for (NodeId v = 0; v < tree_.size(); ++v) {
    if (tree_.classify(v) == OrderTree::Kind::Successor) ladders_[v] = {tree_.parent(v)};
  }
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const NodeId top = tops[i];
    const std::vector<NodeId>& ladder = top_ladders[i];
    for (std::size_t j = 0; j < ladder.size(); ++j) {
      if (!tree_.less(ladder[j], top))
        throw InvalidArgument("sparse t-graph: ladder entry not strictly below its top");
      if (j > 0 && !tree_.less(ladder[j - 1], ladder[j]))
        throw InvalidArgument("sparse t-graph: ladder must be strictly increasing");
    }
    ladders_[top] = ladder;
  }
}

SparseTGraph SparseTGraph::truncate_ladders(int max_len) const {
  if (max_len < 0) throw InvalidArgument("truncate_ladders: length must be nonnegative");
  std::vector<std::vector<NodeId>> cut;
  for (NodeId top : tree_.tops()) {
    std::vector<NodeId> ladder = ladders_[top];
    if (static_cast<int>(ladder.size()) > max_len) ladder.resize(max_len);
    cut.push_back(std::move(ladder));
  }
  return SparseTGraph(tree_, cut);
}

SparseTGraph select_ladders(const OrderTree& tree) {
  if (!tree.has_antichains()) throw InvalidArgument("select_ladders: tree carries no antichains");

  const auto& antichains = tree.antichains();
  std::vector<std::vector<NodeId>> top_ladders;
  for (NodeId top : tree.tops()) {
    bool member_below = false;
    for (const auto& chain : antichains)
      for (NodeId u : chain)
        if (tree.less(u, top)) member_below = true;
    if (!member_below)
      throw CertificationError("select_ladders: top " + tree.name(top) +
                               " has no antichain member strictly below it");

    std::vector<NodeId> ladder = {tree.root()};
    while (true) {
      const NodeId prev = ladder.back();
      NodeId next = kNoNode;
      for (std::size_t i = 0; i < antichains.size() && next == kNoNode; ++i) {
        std::vector<NodeId> hits;
        for (NodeId u : antichains[i])
          if (tree.less(prev, u) && tree.less(u, top)) hits.push_back(u);
        if (hits.size() >= 2)
          throw CertificationError("select_ladders: antichain " + std::to_string(i) +
                                   " meets the interval (" + tree.name(prev) + ", " + tree.name(top) +
                                   ") in " + std::to_string(hits.size()) + " points");
        if (hits.size() == 1) next = hits[0];
      }
      if (next == kNoNode) break;
      ladder.push_back(next);
    }
    top_ladders.push_back(std::move(ladder));
  }
  return SparseTGraph(tree, top_ladders);
}

StarPropertyReport check_star_property(const SparseTGraph& g, const SparseTGraph* shallower) {
  const OrderTree& tree = g.tree();
  StarPropertyReport report;
  report.attachment.sets.assign(tree.size(), {});

  for (NodeId above = 0; above < tree.size(); ++above) {
    for (NodeId entry : g.ladder(above)) {
      // entry contributes to S_t for every t with entry < t < above.
      const std::vector<NodeId> between = tree.interval(entry, above);
      for (NodeId t : between) report.attachment.sets[t].push_back(entry);
    }
  }
  for (auto& set : report.attachment.sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }

  report.stable.assign(tree.size(), true);
  if (shallower != nullptr) {
    report.compared = true;
    const StarPropertyReport base = check_star_property(*shallower, nullptr);
    if (base.attachment.sets.size() != report.attachment.sets.size())
      throw InvalidArgument("check_star_property: truncations come from different generators");
    for (NodeId v = 0; v < tree.size(); ++v) {
      report.stable[v] = report.attachment.sets[v] == base.attachment.sets[v];
      report.all_stable = report.all_stable && report.stable[v];
    }
  }
  return report;
}

}  // namespace endgrid
