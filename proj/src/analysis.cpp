#include "endgrid/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace endgrid {

namespace {

std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

bool intersects(const std::set<int>& set, const std::vector<int>& v) {
  for (int x : v)
    if (set.count(x)) return true;
  return false;
}

}  // namespace

std::vector<int> Comb::teeth() const {
  std::vector<int> result;
  for (const auto& path : paths) result.push_back(path.back());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<int> Comb::interior() const {
  std::vector<int> result = spine.vertices;
  for (const auto& path : paths)
    for (std::size_t i = 0; i + 1 < path.size(); ++i) result.push_back(path[i]);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

void validate_comb(const TruncatedGraph& g, const Comb& comb, const std::vector<int>& u) {
  validate_ray(g, comb.spine);
  const std::set<int> uset = to_set(u);
  const std::set<int> spine = to_set(comb.spine.vertices);
  if (intersects(uset, comb.spine.vertices))
    throw InvalidArgument("comb: spine must be disjoint from the target set");
  std::set<int> seen;
  for (const auto& path : comb.paths) {
    if (path.empty()) throw InvalidArgument("comb: empty path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.adjacent(path[i], path[i + 1]))
        throw InvalidArgument("comb: path is not a path in the graph");
    if (!spine.count(path.front()))
      throw InvalidArgument("comb: path must start on the spine");
    if (!uset.count(path.back())) throw InvalidArgument("comb: path must end in the target set");
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0 && spine.count(path[i]))
        throw InvalidArgument("comb: path meets the spine beyond its first vertex");
      if (i + 1 < path.size() && uset.count(path[i]))
        throw InvalidArgument("comb: path meets the target set beyond its last vertex");
      if (!seen.insert(path[i]).second)
        throw InvalidArgument("comb: paths must be pairwise vertex-disjoint");
    }
  }
}

void validate_comb_family(const TruncatedGraph& g, const std::vector<Comb>& combs,
                          const std::vector<int>& u) {
  std::set<int> interiors;
  for (const auto& comb : combs) {
    validate_comb(g, comb, u);
    for (int v : comb.interior())
      if (!interiors.insert(v).second)
        throw InvalidArgument("comb family: interiors must be pairwise disjoint");
  }
}

void validate_star(const TruncatedGraph& g, const StarOfRays& star, int min_paths) {
  validate_ray(g, star.centre);
  const std::set<int> centre = to_set(star.centre.vertices);
  if (star.families.size() != star.leaves.size())
    throw InvalidArgument("star: one path family per leaf required");

  std::set<int> leaf_union;
  for (const Ray& leaf : star.leaves) {
    validate_ray(g, leaf);
    for (int v : leaf.vertices) {
      if (centre.count(v)) throw InvalidArgument("star: leaf meets the centre ray");
      if (!leaf_union.insert(v).second) throw InvalidArgument("star: leaves are not disjoint");
    }
  }

  // Union of path vertices used outside the centre, to catch cross-family
  // sharing anywhere but on the centre ray.
  std::set<int> off_centre_used;
  for (std::size_t i = 0; i < star.leaves.size(); ++i) {
    const std::set<int> leaf = to_set(star.leaves[i].vertices);
    const auto& family = star.families[i];
    if (static_cast<int>(family.size()) < min_paths)
      throw InvalidArgument("star: family " + std::to_string(i) + " has fewer than " +
                            std::to_string(min_paths) + " paths");
    std::set<int> family_used;
    for (const auto& path : family) {
      if (path.empty()) throw InvalidArgument("star: empty path");
      for (std::size_t j = 0; j + 1 < path.size(); ++j)
        if (!g.adjacent(path[j], path[j + 1]))
          throw InvalidArgument("star: family path is not a path in the graph");
      if (!leaf.count(path.front())) throw InvalidArgument("star: path must start on its leaf");
      if (!centre.count(path.back())) throw InvalidArgument("star: path must end on the centre");
      for (std::size_t j = 0; j < path.size(); ++j) {
        const int v = path[j];
        const bool endpoint = (j == 0 || j + 1 == path.size());
        if (!endpoint && (centre.count(v) || leaf_union.count(v)))
          throw InvalidArgument("star: path has an internal vertex on a ray");
        if (!family_used.insert(v).second)
          throw InvalidArgument("star: paths within a family must be disjoint");
        if (!centre.count(v) && !off_centre_used.insert(v).second)
          throw InvalidArgument("star: paths from distinct families meet outside the centre");
      }
    }
  }
}

DisjointPathsResult disjoint_paths(const TruncatedGraph& g, const std::vector<int>& sources,
                                   const std::vector<int>& targets, int k) {
  if (k < 1) throw InvalidArgument("disjoint_paths: k must be positive");
  if (sources.empty() || targets.empty())
    throw InvalidArgument("disjoint_paths: sources and targets must be nonempty");
  PathQuery query;
  query.sources = sources;
  query.targets = targets;
  query.max_paths = k;
  PathPacking packing = pack_disjoint_paths(g, query);
  DisjointPathsResult result;
  result.paths = std::move(packing.paths);
  result.reached_request = static_cast<int>(result.paths.size()) >= k;
  if (!result.reached_request) result.cut = std::move(packing.cut);
  return result;
}

DisjointPathsResult disjoint_paths(const TruncatedGraph& g, const Ray& source, const Ray& target,
                                   int k) {
  return disjoint_paths(g, source.vertices, target.vertices, k);
}

void EndSurrogate::validate() const {
  if (!generator) throw InvalidArgument("end surrogate: generator required");
  if (schedule.empty()) throw InvalidArgument("end surrogate: schedule must be nonempty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 0) throw InvalidArgument("end surrogate: depths must be nonnegative");
    if (i > 0 && schedule[i] <= schedule[i - 1])
      throw InvalidArgument("end surrogate: schedule must be strictly increasing");
  }
}

EquivalenceResult equivalence_check(const EndSurrogate& e, const std::string& owner1,
                                    const std::string& owner2, int k) {
  e.validate();
  if (k < 1) throw InvalidArgument("equivalence_check: k must be positive");
  for (int depth : e.schedule) {
    const TruncatedGraph h = e.generator(depth);
    const std::vector<int> r1 = h.column(owner1);
    const std::vector<int> r2 = h.column(owner2);
    if (r1.empty() || r2.empty())
      throw InvalidArgument("equivalence_check: ray missing from a scheduled truncation");
    if (disjoint_paths(h, r1, r2, k).reached_request) return {true, depth};
  }
  return {false, -1};
}

std::vector<Comb> find_combs(const TruncatedGraph& g, const std::vector<int>& u,
                             const std::vector<Ray>& candidate_spines, int m) {
  if (m < 1) throw InvalidArgument("find_combs: teeth threshold must be positive");
  const std::set<int> uset = to_set(u);
  for (const Ray& spine : candidate_spines) {
    validate_ray(g, spine);
    if (intersects(uset, spine.vertices))
      throw InvalidArgument("find_combs: spines must be disjoint from the target set");
  }

  std::vector<Comb> combs;
  std::set<int> used;  // interiors of accepted combs
  for (const Ray& spine : candidate_spines) {
    if (intersects(used, spine.vertices)) continue;
    PathQuery query;
    query.sources = spine.vertices;
    query.targets = u;
    query.forbidden.assign(used.begin(), used.end());
    const PathPacking packing = pack_disjoint_paths(g, query);
    if (static_cast<int>(packing.paths.size()) < m) continue;
    Comb comb{spine, packing.paths};
    for (int v : comb.interior()) used.insert(v);
    combs.push_back(std::move(comb));
  }
  return combs;
}

GreedyCoreResult greedy_core(const TruncatedGraph& g, const std::vector<Ray>& rays, int m,
                             int rounds_cap) {
  if (rays.empty()) throw InvalidArgument("greedy_core: at least one ray required");
  if (rounds_cap < 1) throw InvalidArgument("greedy_core: rounds cap must be positive");
  {
    std::set<int> seen;
    for (const Ray& ray : rays) {
      validate_ray(g, ray);
      for (int v : ray.vertices)
        if (!seen.insert(v).second) throw InvalidArgument("greedy_core: rays must be disjoint");
    }
  }

  GreedyCoreResult result;
  std::set<int> core = to_set(rays[0].vertices);
  std::vector<bool> spent(rays.size(), false);
  spent[0] = true;
  result.core_sizes.push_back(static_cast<int>(core.size()));
  result.last_core.assign(core.begin(), core.end());

  for (int round = 0; round < rounds_cap; ++round) {
    std::vector<Ray> candidates;
    std::vector<std::size_t> candidate_index;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (spent[i] || intersects(core, rays[i].vertices)) continue;
      candidates.push_back(rays[i]);
      candidate_index.push_back(i);
    }
    const std::vector<int> core_vec(core.begin(), core.end());
    std::vector<Comb> packed = find_combs(g, core_vec, candidates, m);
    result.round_sizes.push_back(static_cast<int>(packed.size()));
    if (packed.empty()) {
      result.stabilized = true;
      break;
    }
    result.last_core = core_vec;
    result.last_combs = packed;
    for (const Comb& comb : packed) {
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i].vertices == comb.spine.vertices) spent[candidate_index[i]] = true;
      for (int v : comb.interior()) core.insert(v);
      for (int v : comb.teeth()) core.insert(v);
      result.comb_round.push_back(round);
      result.combs.push_back(comb);
    }
    result.core_sizes.push_back(static_cast<int>(core.size()));
  }
  result.core.assign(core.begin(), core.end());
  return result;
}

GreedyCoreResult greedy_core(const EndSurrogate& e, const std::vector<std::string>& ray_owners,
                             int m, int rounds_cap) {
  e.validate();
  const TruncatedGraph g = e.generator(e.schedule.back());
  std::vector<Ray> rays;
  for (const std::string& owner : ray_owners) rays.push_back(horizontal_ray(g, owner));
  return greedy_core(g, rays, m, rounds_cap);
}

NormalTree::NormalTree(const TruncatedGraph& g, const std::vector<int>& u) {
  if (u.empty()) throw InvalidArgument("normal_tree: target set must be nonempty");
  root_ = *std::min_element(u.begin(), u.end());
  parent_.assign(g.vertex_count(), -1);
  depth_.assign(g.vertex_count(), -1);

  // Depth-first search visiting lowest-id neighbours first; DFS trees are
  // normal in finite graphs.
  std::vector<std::size_t> next(g.vertex_count(), 0);
  std::vector<int> stack = {root_};
  depth_[root_] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    const auto& adj = g.neighbors(v);
    if (next[v] >= adj.size()) {
      stack.pop_back();
      continue;
    }
    const int w = adj[next[v]++];
    if (depth_[w] != -1) continue;
    parent_[w] = v;
    depth_[w] = depth_[v] + 1;
    stack.push_back(w);
  }

  for (int v : u)
    if (depth_[v] == -1)
      throw InvalidArgument("normal_tree: target set spans multiple components");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (depth_[v] != -1) spanned_.push_back(v);
}

bool NormalTree::ancestor_of(int a, int b) const {
  if (depth_[a] == -1 || depth_[b] == -1) return false;
  int v = b;
  while (depth_[v] > depth_[a]) v = parent_[v];
  return v == a;
}

bool NormalTree::comparable(int a, int b) const { return ancestor_of(a, b) || ancestor_of(b, a); }

std::vector<int> NormalTree::root_path(int v) const {
  if (depth_[v] == -1) throw InvalidArgument("normal_tree: vertex outside the spanned component");
  std::vector<int> path;
  for (int cur = v; cur != -1; cur = parent_[cur]) path.push_back(cur);
  std::reverse(path.begin(), path.end());
  return path;
}

AssembleResult assemble_star(const TruncatedGraph& g, const std::vector<int>& u,
                             const std::vector<Comb>& combs, int k) {
  if (k < 0) throw InvalidArgument("assemble_star: leaf target must be nonnegative");
  validate_comb_family(g, combs, u);
  const NormalTree tree(g, u);

  AssembleResult result;

  // Candidate centres: root paths of the normal tree ending on the frontier.
  std::vector<int> frontier_hits;
  for (int v : tree.spanned())
    if (g.depth(v) == g.max_depth()) frontier_hits.push_back(v);
  if (frontier_hits.empty()) {
    result.reason = "component containing the core does not reach the frontier";
    return result;
  }

  // Score candidate centres by the combs they keep alive (interior untouched
  // and a tooth retained), then by teeth on the branch, then lexicographically.
  std::vector<int> best_path;
  std::pair<int, int> best_score{-1, -1};
  for (int v : frontier_hits) {
    const std::vector<int> path = tree.root_path(v);
    const std::set<int> path_set = to_set(path);
    int surviving = 0;
    int teeth_on_path = 0;
    for (const Comb& comb : combs) {
      bool touched = false;
      for (int w : comb.interior())
        if (path_set.count(w)) touched = true;
      int retained = 0;
      for (int tooth : comb.teeth())
        if (path_set.count(tooth)) ++retained;
      teeth_on_path += retained;
      if (!touched && retained > 0) ++surviving;
    }
    const std::pair<int, int> score{surviving, teeth_on_path};
    if (score > best_score || (score == best_score && path < best_path)) {
      best_score = score;
      best_path = path;
    }
  }

  StarOfRays star;
  star.centre = Ray{"centre", best_path};
  const std::set<int> centre = to_set(best_path);
  for (const Comb& comb : combs) {
    if (intersects(centre, comb.interior())) {
      ++result.discarded_touching;
      continue;
    }
    std::vector<std::vector<int>> retained;
    for (const auto& path : comb.paths)
      if (centre.count(path.back())) retained.push_back(path);
    if (retained.empty()) {
      ++result.discarded_toothless;
      continue;
    }
    star.leaves.push_back(comb.spine);
    star.families.push_back(std::move(retained));
  }

  if (static_cast<int>(star.leaves.size()) < k) {
    result.reason = "only " + std::to_string(star.leaves.size()) + " of the required " +
                    std::to_string(k) + " combs survive the centre choice";
    result.star = std::move(star);
    return result;
  }
  result.ok = true;
  result.star = std::move(star);
  return result;
}

std::vector<int> dominators(const TruncatedGraph& g, const Ray& r, int k) {
  if (k < 1) throw InvalidArgument("dominators: k must be positive");
  validate_ray(g, r);
  const std::set<int> ray = to_set(r.vertices);
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (ray.count(v)) continue;
    const auto& adj = g.neighbors(v);
    if (static_cast<int>(adj.size()) < k) continue;
    // k internally disjoint v-r paths == k disjoint paths from N(v) to r
    // avoiding v itself.
    PathQuery query;
    query.sources = adj;
    query.targets = r.vertices;
    query.forbidden = {v};
    query.max_paths = k;
    if (static_cast<int>(pack_disjoint_paths(g, query).paths.size()) >= k) result.push_back(v);
  }
  return result;
}

std::vector<std::vector<int>> SimpleTree::children() const {
  std::vector<std::vector<int>> result(parent.size());
  for (int v = 0; v < size(); ++v) {
    if (v == root) {
      if (parent[v] != -1) throw InvalidArgument("tree: root must have no parent");
      continue;
    }
    if (parent[v] < 0 || parent[v] >= size())
      throw InvalidArgument("tree: invalid parent link");
    result[parent[v]].push_back(v);
  }
  for (auto& kids : result) std::sort(kids.begin(), kids.end());
  return result;
}

FrayedDecomposition frayed_decompose(const SimpleTree& t, int threshold) {
  if (threshold < 1) throw InvalidArgument("frayed_decompose: threshold must be positive");
  if (t.size() < threshold)
    throw InvalidArgument("frayed_decompose: tree smaller than the threshold");

  const std::vector<std::vector<int>> children = t.children();
  std::vector<int> subtree(t.size(), 0);
  {
    // Subtree sizes by processing vertices in decreasing depth.
    std::vector<int> order;
    std::vector<int> stack = {t.root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : children[v]) stack.push_back(c);
    }
    if (static_cast<int>(order.size()) != t.size())
      throw InvalidArgument("frayed_decompose: parent links do not form a tree");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      subtree[*it] = 1;
      for (int c : children[*it]) subtree[*it] += subtree[c];
    }
  }

  // Descend along the heaviest child while the stars collected so far plus the
  // children at the current vertex cannot yet reach the threshold, stopping
  // early wherever the current vertex alone already supports a star or a
  // frayed star of the required size.
  const auto star_ready = [&](int v) {
    if (children[v].empty() || static_cast<int>(children[v].size()) < threshold) return false;
    for (int c : children[v])
      if (subtree[c] != 1) return false;
    return true;
  };
  const auto grandchild_count = [&](int v) {
    int count = 0;
    for (int c : children[v]) count += static_cast<int>(children[c].size());
    return count;
  };

  FrayedDecomposition out;
  int v = t.root;
  int teeth = 0;
  std::vector<int> ray;
  std::vector<std::pair<int, std::vector<int>>> stars;
  while (!children[v].empty() && teeth + static_cast<int>(children[v].size()) < threshold &&
         !star_ready(v) && grandchild_count(v) < threshold) {
    int heavy = children[v][0];
    for (int c : children[v])
      if (subtree[c] > subtree[heavy]) heavy = c;
    std::vector<int> others;
    for (int c : children[v])
      if (c != heavy) others.push_back(c);
    teeth += static_cast<int>(others.size());
    ray.push_back(v);
    if (!others.empty()) stars.push_back({v, std::move(others)});
    v = heavy;
  }

  const std::vector<int>& kids = children[v];
  bool all_singleton = !kids.empty();
  for (int c : kids)
    if (subtree[c] != 1) all_singleton = false;
  std::vector<int> grandchildren;
  std::vector<int> distributors;
  for (int c : kids) {
    if (!children[c].empty()) distributors.push_back(c);
    for (int gc : children[c]) grandchildren.push_back(gc);
  }

  if (all_singleton && static_cast<int>(kids.size()) >= threshold) {
    out.kind = FrayedDecomposition::Kind::Star;
    out.centre = v;
    out.leaves = kids;
    out.count = static_cast<int>(kids.size());
    return out;
  }
  if (static_cast<int>(grandchildren.size()) >= threshold) {
    out.kind = FrayedDecomposition::Kind::FrayedStar;
    out.centre = v;
    out.distributors = std::move(distributors);
    out.leaves = std::move(grandchildren);
    out.count = static_cast<int>(out.leaves.size());
    return out;
  }
  if (!ray.empty() && teeth + static_cast<int>(kids.size()) >= threshold) {
    out.kind = FrayedDecomposition::Kind::FrayedComb;
    ray.push_back(v);
    if (!kids.empty()) stars.push_back({v, kids});
    out.ray = std::move(ray);
    out.stars = std::move(stars);
    out.count = teeth + static_cast<int>(kids.size());
    return out;
  }
  if (static_cast<int>(kids.size()) >= threshold) {
    out.kind = FrayedDecomposition::Kind::Star;
    out.centre = v;
    out.leaves = kids;
    out.count = static_cast<int>(kids.size());
    return out;
  }
  out.kind = FrayedDecomposition::Kind::Undecomposable;
  out.count = std::max({teeth + static_cast<int>(kids.size()),
                        static_cast<int>(grandchildren.size()), static_cast<int>(kids.size())});
  return out;
}

RayGraphResult ray_graph(const TruncatedGraph& g, const std::vector<Ray>& rays, int m) {
  if (m < 1) throw InvalidArgument("ray_graph: multiplicity threshold must be positive");
  {
    std::set<int> seen;
    for (const Ray& ray : rays) {
      validate_ray(g, ray);
      for (int v : ray.vertices)
        if (!seen.insert(v).second) throw InvalidArgument("ray_graph: rays must be disjoint");
    }
  }

  RayGraphResult result;
  for (std::size_t i = 0; i < rays.size(); ++i)
    result.ray_ids.push_back(rays[i].owner.empty() ? ("ray" + std::to_string(i)) : rays[i].owner);

  const int n = static_cast<int>(rays.size());
  std::set<int> all_ray_vertices;
  for (const Ray& ray : rays)
    for (int v : ray.vertices) all_ray_vertices.insert(v);

  std::set<int> used_internals;
  std::vector<std::set<int>> ray_sets;
  for (const Ray& ray : rays) ray_sets.push_back(to_set(ray.vertices));
  std::vector<std::vector<int>> adjacency(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PathQuery query;
      query.sources = rays[i].vertices;
      query.targets = rays[j].vertices;
      for (int v : all_ray_vertices)
        if (!ray_sets[i].count(v) && !ray_sets[j].count(v)) query.forbidden.push_back(v);
      for (int v : used_internals) query.forbidden.push_back(v);
      const PathPacking packing = pack_disjoint_paths(g, query);
      if (static_cast<int>(packing.paths.size()) < m) continue;
      RayGraphEdge edge;
      edge.a = i;
      edge.b = j;
      edge.multiplicity = static_cast<int>(packing.paths.size());
      edge.witnesses = packing.paths;
      for (const auto& path : edge.witnesses)
        for (std::size_t p = 1; p + 1 < path.size(); ++p) used_internals.insert(path[p]);
      result.edges.push_back(std::move(edge));
      adjacency[i].push_back(j);
      adjacency[j].push_back(i);
    }
  }

  // Connectivity of the graph on ray ids.
  std::vector<int> component(n, -1);
  for (int start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    const int idx = static_cast<int>(result.components.size());
    result.components.push_back({});
    std::vector<int> stack = {start};
    component[start] = idx;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      result.components[idx].push_back(v);
      for (int w : adjacency[v])
        if (component[w] == -1) {
          component[w] = idx;
          stack.push_back(w);
        }
    }
    std::sort(result.components[idx].begin(), result.components[idx].end());
  }

  if (result.components.size() != 1) {
    result.classification = RayGraphResult::Classification::Disconnected;
    return result;
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(adjacency[v].size()) == n - 1) {
      result.classification = RayGraphResult::Classification::Star;
      result.centre_ray = v;
      return result;
    }
  }

  // Distributor structure: decompose a breadth-first spanning tree rooted at
  // the highest-degree ray.
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (adjacency[v].size() > adjacency[root].size()) root = v;
  SimpleTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  {
    std::vector<bool> seen(n, false);
    std::vector<int> queue = {root};
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      std::vector<int> adj = adjacency[v];
      std::sort(adj.begin(), adj.end());
      for (int w : adj)
        if (!seen[w]) {
          seen[w] = true;
          tree.parent[w] = v;
          queue.push_back(w);
        }
    }
  }
  const int threshold = std::max(1, n - 1);
  FrayedDecomposition decomposition = frayed_decompose(tree, threshold);
  result.decomposition = decomposition;
  switch (decomposition.kind) {
    case FrayedDecomposition::Kind::Star:
      result.classification = RayGraphResult::Classification::Star;
      result.centre_ray = decomposition.centre;
      break;
    case FrayedDecomposition::Kind::FrayedStar:
      result.classification = RayGraphResult::Classification::FrayedStarLike;
      break;
    case FrayedDecomposition::Kind::FrayedComb:
      result.classification = RayGraphResult::Classification::FrayedCombLike;
      break;
    case FrayedDecomposition::Kind::Undecomposable:
      result.classification = RayGraphResult::Classification::ConnectedOther;
      break;
  }
  return result;
}

int max_disjoint_frontier_rays(const TruncatedGraph& g) {
  if (g.vertex_count() == 0) return 0;
  PathQuery query;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.depth(v) == 0) query.sources.push_back(v);
    if (g.depth(v) == g.max_depth()) query.targets.push_back(v);
  }
  return static_cast<int>(pack_disjoint_paths(g, query).paths.size());
}

}  // namespace endgrid
