#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endgrid/menger.hpp"

namespace endgrid {

/// Spine ray plus pairwise disjoint spine-to-target paths; each path meets the
/// target set exactly in its last vertex (the tooth) and the spine exactly in
/// its first.
struct Comb {
  Ray spine;
  std::vector<std::vector<int>> paths;

  std::vector<int> teeth() const;
  /// Spine and path vertices minus the teeth.
  std::vector<int> interior() const;
};

/// Throws InvalidArgument unless comb is well-formed against target set u.
void validate_comb(const TruncatedGraph& g, const Comb& comb, const std::vector<int>& u);
/// Throws InvalidArgument unless all combs are valid and pairwise internally
/// disjoint.
void validate_comb_family(const TruncatedGraph& g, const std::vector<Comb>& combs,
                          const std::vector<int>& u);

struct StarOfRays {
  Ray centre;
  std::vector<Ray> leaves;
  /// families[i] holds the leaf-i-to-centre paths.
  std::vector<std::vector<std::vector<int>>> families;
};

/// Independent validator: checks every structural invariant of a star of rays
/// directly against the graph. Knows nothing about how the star was built.
/// Throws InvalidArgument with the first violated invariant.
void validate_star(const TruncatedGraph& g, const StarOfRays& star, int min_paths = 1);

struct DisjointPathsResult {
  std::vector<std::vector<int>> paths;
  std::vector<int> cut;  // valid iff reached_request is false
  bool reached_request = false;
};

/// Up to k pairwise vertex-disjoint source-target paths; when fewer exist, the
/// maximum family plus a separating vertex cut of equal size. Shared
/// source/target vertices come back as one-vertex paths.
DisjointPathsResult disjoint_paths(const TruncatedGraph& g, const std::vector<int>& sources,
                                   const std::vector<int>& targets, int k);
DisjointPathsResult disjoint_paths(const TruncatedGraph& g, const Ray& source, const Ray& target,
                                   int k);

/// A lazily generated graph family: nested truncations indexed by depth.
struct EndSurrogate {
  std::function<TruncatedGraph(int depth)> generator;
  std::vector<int> schedule;  // strictly increasing depths

  void validate() const;
};

struct EquivalenceResult {
  bool found = false;
  int depth = -1;  // smallest scheduled depth at which the rays are k-linked
};

/// Smallest scheduled depth at which the two named rays admit k disjoint
/// connecting paths.
EquivalenceResult equivalence_check(const EndSurrogate& e, const std::string& owner1,
                                    const std::string& owner2, int k);

/// Greedily packs internally disjoint combs with at least m teeth against u,
/// using candidate spines in the given order. Maximal for the greedy order.
std::vector<Comb> find_combs(const TruncatedGraph& g, const std::vector<int>& u,
                             const std::vector<Ray>& candidate_spines, int m);

struct GreedyCoreResult {
  std::vector<int> core;          // final U
  std::vector<Comb> combs;        // union of all rounds
  std::vector<int> round_sizes;   // combs packed per round
  std::vector<int> core_sizes;    // |U_0|, then |U_i| after each round
  std::vector<int> comb_round;    // round index per comb
  std::vector<int> last_core;     // U of the last round that packed combs (U_0 if none)
  std::vector<Comb> last_combs;   // that round's comb family
  bool stabilized = false;        // stopped because a round packed nothing
};

/// Iterates U_0 = first ray, U_{i+1} = U_i plus the vertices of a maximal
/// greedy comb family against U_i with spines among the unused rays.
GreedyCoreResult greedy_core(const TruncatedGraph& g, const std::vector<Ray>& rays, int m,
                             int rounds_cap);
GreedyCoreResult greedy_core(const EndSurrogate& e, const std::vector<std::string>& ray_owners,
                             int m, int rounds_cap);

/// Rooted spanning tree of one component, normal in g (every non-tree edge has
/// comparable endpoints): a depth-first search tree.
class NormalTree {
 public:
  NormalTree(const TruncatedGraph& g, const std::vector<int>& u);

  int root() const { return root_; }
  bool in_tree(int v) const { return v == root_ || parent_[v] != -1; }
  int parent(int v) const { return parent_[v]; }
  bool comparable(int a, int b) const;
  bool ancestor_of(int a, int b) const;  // a lies on the root path of b
  std::vector<int> root_path(int v) const;
  const std::vector<int>& spanned() const { return spanned_; }

 private:
  int root_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> spanned_;
};

struct AssembleResult {
  bool ok = false;
  StarOfRays star;
  int discarded_touching = 0;   // combs whose interior met the centre
  int discarded_toothless = 0;  // combs left without a tooth on the centre
  std::string reason;
};

/// Builds a normal tree containing u, takes the frontier-reaching normal
/// branch through the most comb teeth as centre ray, and keeps the combs whose
/// interiors avoid it and that retain a tooth on it.
AssembleResult assemble_star(const TruncatedGraph& g, const std::vector<int>& u,
                             const std::vector<Comb>& combs, int k);

/// Vertices outside r with at least k internally disjoint paths to r.
std::vector<int> dominators(const TruncatedGraph& g, const Ray& r, int k);

/// Plain rooted tree for decomposition (children derived from parent links).
struct SimpleTree {
  int root = 0;
  std::vector<int> parent;  // parent[root] == -1

  int size() const { return static_cast<int>(parent.size()); }
  std::vector<std::vector<int>> children() const;
};

struct FrayedDecomposition {
  enum class Kind { Star, FrayedStar, FrayedComb, Undecomposable };
  Kind kind = Kind::Undecomposable;
  int centre = -1;                                      // Star / FrayedStar
  std::vector<int> leaves;                              // Star leaves or FrayedStar leaves
  std::vector<int> distributors;                        // FrayedStar
  std::vector<int> ray;                                 // FrayedComb spine
  std::vector<std::pair<int, std::vector<int>>> stars;  // FrayedComb: (ray vertex, teeth)
  int count = 0;                                        // leaves/teeth achieved
};

/// Walks down the heaviest components collecting side stars; emits a star,
/// frayed star, or frayed comb meeting the threshold, or reports that the
/// tree admits none (possible for ray-dominated finite trees).
FrayedDecomposition frayed_decompose(const SimpleTree& t, int threshold);

struct RayGraphEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 0;
  std::vector<std::vector<int>> witnesses;
};

struct RayGraphResult {
  std::vector<std::string> ray_ids;
  std::vector<RayGraphEdge> edges;
  enum class Classification { Star, FrayedStarLike, FrayedCombLike, ConnectedOther, Disconnected };
  Classification classification = Classification::Disconnected;
  int centre_ray = -1;  // for Star
  std::vector<std::vector<int>> components;
  std::optional<FrayedDecomposition> decomposition;
};

/// Graph on ray ids with an edge wherever at least m jointly independent
/// connecting paths exist (greedy packing in lexicographic pair order),
/// classified by its shape.
RayGraphResult ray_graph(const TruncatedGraph& g, const std::vector<Ray>& rays, int m);

/// Maximum number of pairwise disjoint frontier-reaching rays, computed as a
/// disjoint path packing from the depth-0 layer to the frontier.
int max_disjoint_frontier_rays(const TruncatedGraph& g);

}  // namespace endgrid
