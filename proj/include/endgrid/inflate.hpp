#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endgrid/tree.hpp"

namespace endgrid {

/// One finite slice of a lazily generated graph: vertices carry a depth label,
/// the frontier is the deepest layer. Immutable after construction.
class TruncatedGraph {
 public:
  struct Vertex {
    std::string owner;  // provenance: generating column/ray id ("" when absent)
    int pos = 0;        // position along the owning ray
    int depth = 0;
  };

  TruncatedGraph() = default;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  bool adjacent(int u, int v) const;

  const Vertex& vertex(int v) const { return vertices_.at(v); }
  int depth(int v) const { return vertices_.at(v).depth; }
  int max_depth() const { return max_depth_; }
  std::vector<int> frontier() const;

  bool has_provenance() const { return has_provenance_; }
  const std::string& owner(int v) const { return vertices_.at(v).owner; }
  int pos(int v) const { return vertices_.at(v).pos; }
  /// Vertex with the given provenance, or -1.
  int vertex_of(const std::string& owner, int pos) const;
  /// All vertices of one owner, ordered by position.
  std::vector<int> column(const std::string& owner) const;

  friend bool operator==(const TruncatedGraph& a, const TruncatedGraph& b);
  friend class GraphBuilder;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;  // sorted pairs (u < v), deduplicated
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::string, std::vector<int>> columns_;
  int max_depth_ = 0;
  bool has_provenance_ = false;
};

class GraphBuilder {
 public:
  int add_vertex(int depth);
  int add_vertex(std::string owner, int pos, int depth);
  void add_edge(int u, int v);
  TruncatedGraph build();

 private:
  std::vector<TruncatedGraph::Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  bool any_provenance_ = false;
  bool all_provenance_ = true;
};

/// Finite truncation of a ray: consecutive vertices are adjacent, all distinct.
struct Ray {
  std::string owner;  // generating column, empty for ad-hoc rays
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Throws InvalidArgument unless ray is a valid path in g.
void validate_ray(const TruncatedGraph& g, const Ray& ray);
bool reaches_frontier(const TruncatedGraph& g, const Ray& ray);

struct InflationStats {
  long long vertices = 0;
  long long horizontal_edges = 0;
  long long matching_edges = 0;  // successor-to-predecessor rungs
  long long ladder_edges = 0;    // top-to-ladder-entry edges present
  long long omitted_ladder_edges = 0;  // ladder rungs lost to truncation
  long long total_edges() const { return horizontal_edges + matching_edges + ladder_edges; }
};

/// Closed-form counts for inflate(g, depth).
InflationStats inflation_stats(const SparseTGraph& g, int depth);

/// The ray inflation at finite depth: every tree node becomes a horizontal ray
/// of depth+1 vertices; successors get a full matching to their predecessor;
/// the nth vertex of a top's ray is joined to the nth vertex of the ray of its
/// nth ladder entry.
TruncatedGraph inflate(const SparseTGraph& g, int depth);

/// The horizontal ray of a tree node inside an inflation.
Ray horizontal_ray(const TruncatedGraph& h, const OrderTree& tree, NodeId t);
Ray horizontal_ray(const TruncatedGraph& h, const std::string& owner);
/// All horizontal rays, in node order.
std::vector<Ray> horizontal_rays(const TruncatedGraph& h, const OrderTree& tree);

struct LabelledComponent {
  NodeId label = kNoNode;       // the level-i node whose up-closure spans it
  std::vector<int> vertices;
};

/// Components of h minus the columns of all nodes below level i, each labelled
/// by the unique level-i node whose up-closure columns it spans. Throws
/// CertificationError when the labelling is not a bijection (possible when the
/// truncation depth is too shallow for the ladders).
std::vector<LabelledComponent> components_above(const OrderTree& tree, const TruncatedGraph& h, int level);

struct DoubleStarViolation {
  NodeId t = kNoNode;
  int vertex = -1;    // the offending (t', n)
  int neighbor = -1;  // its neighbour below t outside S_t x |S_t|
};

struct DoubleStarReport {
  std::vector<bool> pass;  // per tree node
  std::vector<DoubleStarViolation> violations;
  bool all_pass = true;
};

/// Checks that for every node t, every vertex above t has its neighbours below
/// t confined to S_t x {0..|S_t|-1}.
DoubleStarReport check_doublestar_property(const OrderTree& tree, const TruncatedGraph& h,
                                           const AttachmentMap& s);

struct LiftResult {
  TruncatedGraph graph;
  std::vector<Ray> new_rays;
};

/// For each base ray X_i adds sizes[i] fresh disjoint rays of the same length,
/// each joined to X_i by a perfect level matching.
LiftResult lift_with_stars(const TruncatedGraph& g, const std::vector<Ray>& rays,
                           const std::vector<int>& sizes);

}  // namespace endgrid
