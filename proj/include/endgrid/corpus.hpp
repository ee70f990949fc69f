#pragma once

#include <random>

#include "endgrid/tree.hpp"
#include "endgrid/inflate.hpp"

namespace endgrid {

/// Cartesian product of an s-leaf star with a finite ray. Columns: "c" for the
/// centre, "l0".."l{s-1}" for the leaves; rungs join each leaf column to the
/// centre column at every position.
TruncatedGraph star_ray_product(int leaves, int depth);

/// Parallel ray columns "w0".."w{n-1}" with rungs between consecutive columns
/// at every position.
TruncatedGraph ray_ladder(int rays, int depth);

/// Path column "p" plus an apex vertex ("a") joined to every path vertex.
TruncatedGraph fan_graph(int path_len);

struct RandomTreeOptions {
  int min_height = 2;
  int max_height = 4;
  int max_branching = 3;
  int max_tops = 10;
  int max_nodes = 0;  // 0 = unbounded; otherwise resample until small enough
};

/// Random tree with level antichains, tops on distinct random branches, and
/// ladders from the antichain selection rule. Deterministic per rng state.
SparseTGraph random_sparse_tgraph(std::mt19937& rng, const RandomTreeOptions& options = {});

/// Random graph without provenance (all depths zero), for path/cut testing.
TruncatedGraph random_graph(std::mt19937& rng, int max_vertices, int edge_percent);

/// Sparse-ladder instances whose attachment sets satisfy |S_t| <= 2: permuted
/// level antichains over thin trees. Deterministic per seed.
std::vector<SparseTGraph> attachment_corpus(unsigned seed, int count);

/// The seeded corpus used by the acceptance suite.
std::vector<SparseTGraph> acceptance_corpus(unsigned seed, int count);

}  // namespace endgrid
