#include "endgrid/corpus.hpp"

#include <algorithm>
#include <set>

namespace endgrid {

TruncatedGraph star_ray_product(int leaves, int depth) {
  if (leaves < 1 || depth < 0) throw InvalidArgument("star_ray_product: bad parameters");
  GraphBuilder builder;
  const auto column = [&](const std::string& owner) {
    std::vector<int> ids;
    for (int n = 0; n <= depth; ++n) ids.push_back(builder.add_vertex(owner, n, n));
    for (int n = 0; n < depth; ++n) builder.add_edge(ids[n], ids[n + 1]);
    return ids;
  };
  const std::vector<int> centre = column("c");
  for (int l = 0; l < leaves; ++l) {
    const std::vector<int> leaf = column("l" + std::to_string(l));
    for (int n = 0; n <= depth; ++n) builder.add_edge(leaf[n], centre[n]);
  }
  return builder.build();
}

TruncatedGraph ray_ladder(int rays, int depth) {
  if (rays < 1 || depth < 0) throw InvalidArgument("ray_ladder: bad parameters");
  GraphBuilder builder;
  std::vector<std::vector<int>> columns;
  for (int r = 0; r < rays; ++r) {
    std::vector<int> ids;
    for (int n = 0; n <= depth; ++n) ids.push_back(builder.add_vertex("w" + std::to_string(r), n, n));
    for (int n = 0; n < depth; ++n) builder.add_edge(ids[n], ids[n + 1]);
    columns.push_back(std::move(ids));
  }
  for (int r = 0; r + 1 < rays; ++r)
    for (int n = 0; n <= depth; ++n) builder.add_edge(columns[r][n], columns[r + 1][n]);
  return builder.build();
}

TruncatedGraph fan_graph(int path_len) {
  if (path_len < 1) throw InvalidArgument("fan_graph: path must be nonempty");
  GraphBuilder builder;
  std::vector<int> path;
  for (int n = 0; n < path_len; ++n) path.push_back(builder.add_vertex("p", n, n));
  for (int n = 0; n + 1 < path_len; ++n) builder.add_edge(path[n], path[n + 1]);
  const int apex = builder.add_vertex("a", 0, 0);
  for (int v : path) builder.add_edge(apex, v);
  return builder.build();
}

SparseTGraph random_sparse_tgraph(std::mt19937& rng, const RandomTreeOptions& options) {
  const int height =
      options.min_height + static_cast<int>(rand_below(rng, options.max_height - options.min_height + 1));
  std::vector<int> profile;
  for (int i = 0; i < height; ++i)
    profile.push_back(1 + static_cast<int>(rand_below(rng, options.max_branching)));

  OrderTree bare = build_regular_tree(profile, height);
  if (options.max_nodes > 0 && bare.size() >= options.max_nodes)
    return random_sparse_tgraph(rng, options);
  const std::vector<NodeId> leaves = bare.level(height);
  int top_limit = std::min<int>(options.max_tops, static_cast<int>(leaves.size()));
  if (options.max_nodes > 0) top_limit = std::min(top_limit, options.max_nodes - bare.size());
  const int top_count = 1 + static_cast<int>(rand_below(rng, top_limit));
  std::vector<NodeId> pool = leaves;
  std::vector<std::vector<int>> selectors;
  for (int i = 0; i < top_count; ++i) {
    const int pick = static_cast<int>(rand_below(rng, static_cast<int>(pool.size())));
    selectors.push_back(bare.node(pool[pick]).seq);
    pool.erase(pool.begin() + pick);
  }
  std::sort(selectors.begin(), selectors.end());
  OrderTree tree = attach_tops(bare, selectors);
  set_level_antichains(tree);
  return select_ladders(tree);
}

TruncatedGraph random_graph(std::mt19937& rng, int max_vertices, int edge_percent) {
  if (max_vertices < 2) throw InvalidArgument("random_graph: need at least two vertices");
  const int n = 2 + static_cast<int>(rand_below(rng, max_vertices - 1));
  GraphBuilder builder;
  for (int v = 0; v < n; ++v) builder.add_vertex("v" + std::to_string(v), 0, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rand_below(rng, 100)) < edge_percent) builder.add_edge(u, v);
  return builder.build();
}

std::vector<SparseTGraph> attachment_corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<SparseTGraph> corpus;
  while (static_cast<int>(corpus.size()) < count) {
    const int height = 2 + static_cast<int>(rand_below(rng, 2));  // 2 or 3
    std::vector<int> profile;
    for (int i = 0; i < height; ++i) profile.push_back(1 + static_cast<int>(rand_below(rng, 2)));
    OrderTree bare = build_regular_tree(profile, height);
    if (bare.size() > 10) continue;  // keep inflations within the 40-vertex regime
    const std::vector<NodeId> leaves = bare.level(height);
    if (leaves.size() < 2) continue;
    const int top_count = 2 + static_cast<int>(rand_below(rng, std::min<int>(3, leaves.size()) - 1));
    std::vector<std::vector<int>> selectors;
    for (int i = 0; i < top_count; ++i) selectors.push_back(bare.node(leaves[i]).seq);
    OrderTree tree = attach_tops(bare, selectors);

    // Antichain order (mid-level, deepest level, the rest): the selection rule
    // then uses at most one ladder stop below the branch leaf, keeping every
    // attachment set at size <= 2.
    std::vector<std::vector<NodeId>> antichains;
    const int mid = 1 + static_cast<int>(rand_below(rng, height - 1));
    antichains.push_back(tree.level(mid));
    antichains.push_back(tree.level(height));
    for (int lvl = 0; lvl < height; ++lvl)
      if (lvl != mid) antichains.push_back(tree.level(lvl));
    tree.set_antichains(antichains);
    corpus.push_back(select_ladders(tree));
  }
  return corpus;
}

std::vector<SparseTGraph> acceptance_corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  RandomTreeOptions options;
  options.max_nodes = 20;  // keeps all-pairs analyses within the time budgets
  std::vector<SparseTGraph> corpus;
  for (int i = 0; i < count; ++i) corpus.push_back(random_sparse_tgraph(rng, options));
  return corpus;
}

}  // namespace endgrid
