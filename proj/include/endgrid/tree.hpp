#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endgrid/common.hpp"

namespace endgrid {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

/// Rooted order tree of height <= omega+1 surrogate: a finite-height part in
/// which node identity is the sequence of child indices from the root, plus
/// optional "tops" sitting above full branches of the finite part.
///
/// Immutable after construction; cheap to copy and safe to share across
/// threads.
class OrderTree {
 public:
  enum class Kind { Root, Successor, Top };

  struct Node {
    std::vector<int> seq;  // child indices from the root; tops carry their identifying sequence
    NodeId parent = kNoNode;
    int height = 0;  // finite height; for tops this is the surrogate level (finite height + 1)
    bool is_top = false;
  };

  OrderTree() = default;

  int size() const { return static_cast<int>(nodes_.size()); }
  NodeId root() const { return 0; }
  const Node& node(NodeId v) const { return nodes_.at(v); }
  NodeId parent(NodeId v) const { return nodes_.at(v).parent; }
  int height_of(NodeId v) const { return nodes_.at(v).height; }
  bool is_top(NodeId v) const { return nodes_.at(v).is_top; }
  const std::vector<NodeId>& children(NodeId v) const { return children_.at(v); }

  /// Height of the finite part (max finite level index).
  int finite_height() const { return finite_height_; }
  /// Level index reserved for tops: finite_height() + 1.
  int top_level() const { return finite_height_ + 1; }

  std::vector<NodeId> tops() const;
  std::vector<NodeId> finite_nodes() const;
  int top_count() const { return top_count_; }

  /// Canonical node name: "r" for the root, "0.1.2" for finite nodes,
  /// "t:..." for tops.
  std::string name(NodeId v) const;
  std::optional<NodeId> find(const std::string& name) const;

  // Tree order. a <= b iff a lies on the parent chain of b.
  bool leq(NodeId a, NodeId b) const;
  bool less(NodeId a, NodeId b) const { return a != b && leq(a, b); }
  bool comparable(NodeId a, NodeId b) const { return leq(a, b) || leq(b, a); }

  Kind classify(NodeId v) const;

  /// All t' <= v, ordered root-first.
  std::vector<NodeId> down_closure(NodeId v) const;
  /// All t' < v, ordered root-first.
  std::vector<NodeId> strict_down_closure(NodeId v) const;
  /// All t' >= v.
  std::vector<NodeId> up_closure(NodeId v) const;
  /// Open interval (a, b); requires a < b.
  std::vector<NodeId> interval(NodeId a, NodeId b) const;
  /// Nodes at level i; i == top_level() yields the tops.
  std::vector<NodeId> level(int i) const;

  const std::vector<int>& branching_profile() const { return branching_profile_; }

  bool has_antichains() const { return !antichains_.empty(); }
  const std::vector<std::vector<NodeId>>& antichains() const { return antichains_; }
  /// Installs an antichain family. Members must be finite-height nodes and the
  /// sets pairwise disjoint. Antichain-ness itself is checked lazily by
  /// select_ladders, which reports violations.
  void set_antichains(std::vector<std::vector<NodeId>> antichains);

  /// Optional display label for the cardinal the branching surrogates.
  const std::string& cardinal_label() const { return cardinal_label_; }
  void set_cardinal_label(std::string label) { cardinal_label_ = std::move(label); }

  // Used by builders and deserialization. Validates the parent/height/top
  // structure and throws InvalidArgument on malformed input.
  static OrderTree from_nodes(std::vector<Node> nodes, std::vector<int> branching_profile);

 private:
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> children_;  // finite-part children only
  std::vector<int> branching_profile_;
  std::vector<std::vector<NodeId>> antichains_;
  std::string cardinal_label_;
  int finite_height_ = 0;
  int top_count_ = 0;
};

/// Order tree plus a down-neighbour list per node: the predecessor for
/// successors, an increasing chain prefix for tops.
class SparseTGraph {
 public:
  SparseTGraph() = default;
  /// top_ladders[i] pairs with tree.tops()[i]. Throws InvalidArgument if a
  /// ladder is not strictly increasing or not strictly below its top.
  SparseTGraph(OrderTree tree, const std::vector<std::vector<NodeId>>& top_ladders);

  const OrderTree& tree() const { return tree_; }
  const std::vector<NodeId>& ladder(NodeId v) const { return ladders_.at(v); }
  const std::vector<std::vector<NodeId>>& ladders() const { return ladders_; }

  /// Copy with every top ladder cut to at most max_len entries (the monotone
  /// truncation of the generated object).
  SparseTGraph truncate_ladders(int max_len) const;

 private:
  OrderTree tree_;
  std::vector<std::vector<NodeId>> ladders_;
};

/// Finite attachment sets: S_t per node.
struct AttachmentMap {
  std::vector<std::vector<NodeId>> sets;  // indexed by NodeId, sorted

  const std::vector<NodeId>& at(NodeId v) const { return sets.at(v); }
  int size_of(NodeId v) const { return static_cast<int>(sets.at(v).size()); }
};

struct StarPropertyReport {
  AttachmentMap attachment;
  std::vector<bool> stable;  // per node; meaningful when a shallower truncation was supplied
  bool compared = false;
  bool all_stable = true;
};

/// Tree in which every node at level n < height has exactly profile[n]
/// children. No tops.
OrderTree build_regular_tree(const std::vector<int>& branching_profile, int height);

/// Adds one top per selector; each selector is the child-index sequence of a
/// full root-to-leaf branch of the finite part.
OrderTree attach_tops(const OrderTree& tree, const std::vector<std::vector<int>>& branch_selectors);

/// Installs the level antichains U_i = level i.
void set_level_antichains(OrderTree& tree);

/// Builds ladders from the tree's antichain family: starting from the root,
/// repeatedly jump to the unique point of the least-index antichain meeting
/// the remaining interval below the top. Successors get their predecessor.
///
/// Throws CertificationError if an antichain meets an interval twice, or if a
/// top has no antichain member strictly below it.
SparseTGraph select_ladders(const OrderTree& tree);

/// Computes S_t = union over t' > t of ladder(t') restricted below t, plus a
/// per-node stabilization flag against a shallower truncation of the same
/// generator when one is supplied.
StarPropertyReport check_star_property(const SparseTGraph& g, const SparseTGraph* shallower = nullptr);

}  // namespace endgrid
