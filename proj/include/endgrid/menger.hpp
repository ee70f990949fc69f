#pragma once

#include <limits>
#include <vector>

#include "endgrid/inflate.hpp"

namespace endgrid {

struct PathQuery {
  std::vector<int> sources;
  std::vector<int> targets;
  std::vector<int> forbidden;  // vertices deleted for this query
  int max_paths = std::numeric_limits<int>::max();
};

struct PathPacking {
  // Pairwise vertex-disjoint paths, each meeting the sources exactly in its
  // first vertex and the targets exactly in its last. Vertices shared by
  // sources and targets come back as one-vertex paths.
  std::vector<std::vector<int>> paths;
  // Valid when exhausted: a vertex set of size paths.size() whose deletion
  // separates the remaining sources from the targets.
  std::vector<int> cut;
  bool exhausted = false;  // false when the search stopped at max_paths
  int trivial_count = 0;
};

/// Maximum vertex-disjoint source-target path packing with a matching vertex
/// cut, via unit-vertex-capacity augmentation. Deterministic: lowest-id
/// augmenting path first.
PathPacking pack_disjoint_paths(const TruncatedGraph& g, const PathQuery& query);

}  // namespace endgrid
