#include "endgrid/certify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace endgrid {

namespace {

std::set<int> to_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

AttachmentBoundReport certify_attachment_bound(const SparseTGraph& g, int depth,
                                               const AttachmentMap& s, int sigma) {
  const OrderTree& tree = g.tree();
  if (sigma < 0 || sigma > tree.finite_height())
    throw InvalidArgument("certify_attachment_bound: sigma must be a finite level");
  if (depth < sigma)
    throw InvalidArgument("certify_attachment_bound: truncation depth below sigma");
  if (static_cast<int>(s.sets.size()) != tree.size())
    throw InvalidArgument("certify_attachment_bound: attachment map does not cover the tree");

  const TruncatedGraph h = inflate(g, depth);

  AttachmentBoundReport report;
  report.sigma = sigma;
  report.depth = depth;

  for (NodeId t : tree.level(sigma)) {
    const int st = s.size_of(t);
    report.max_attachment = std::max(report.max_attachment, st);
    const int bound = st * st;

    // Region strictly above t (its own ray removed) and the region below it.
    std::set<int> above;
    for (NodeId u : tree.up_closure(t))
      if (u != t)
        for (int v : h.column(tree.name(u))) above.insert(v);
    std::set<int> below;
    for (NodeId u : tree.strict_down_closure(t))
      for (int v : h.column(tree.name(u))) below.insert(v);

    // Components of the above-region.
    std::map<int, int> component;
    int component_count = 0;
    for (int start : above) {
      if (component.count(start)) continue;
      const int idx = component_count++;
      std::vector<int> stack = {start};
      component[start] = idx;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : h.neighbors(v))
          if (above.count(w) && !component.count(w)) {
            component[w] = idx;
            stack.push_back(w);
          }
      }
    }
    std::vector<std::vector<int>> members(component_count);
    for (const auto& [v, idx] : component) members[idx].push_back(v);

    for (int idx = 0; idx < component_count; ++idx) {
      ComponentBound entry;
      entry.level_node = t;
      entry.component_index = idx;
      entry.bound = bound;
      if (!below.empty()) {
        // Paths live inside the component plus the below-region: everything
        // else is removed from the query.
        PathQuery query;
        query.sources = members[idx];
        std::sort(query.sources.begin(), query.sources.end());
        query.targets.assign(below.begin(), below.end());
        const std::set<int> allowed = [&] {
          std::set<int> result(members[idx].begin(), members[idx].end());
          result.insert(below.begin(), below.end());
          return result;
        }();
        for (int v = 0; v < h.vertex_count(); ++v)
          if (!allowed.count(v)) query.forbidden.push_back(v);
        const PathPacking packing = pack_disjoint_paths(h, query);
        entry.flow = static_cast<int>(packing.paths.size());
        if (entry.flow > entry.bound) {
          entry.witness_paths = packing.paths;
          report.pass = false;
        }
      }
      report.components.push_back(std::move(entry));
    }
  }

  // Leaf budget for stars centred strictly below sigma: columns below sigma,
  // the level-sigma rays themselves, and per level-sigma node the number of
  // path families that fit through the finite crossing capacity when every
  // family carries more than max |S_t|^2 paths.
  report.star_budget_m = report.max_attachment * report.max_attachment + 1;
  long long budget = 0;
  for (int lvl = 0; lvl < sigma; ++lvl) budget += static_cast<long long>(tree.level(lvl).size());
  if (budget > 0) budget -= 1;  // the centre occupies at least one column below sigma
  budget += static_cast<long long>(tree.level(sigma).size());
  for (NodeId t : tree.level(sigma)) {
    const int st = s.size_of(t);
    const int exclusive = st * st + depth + 1;
    budget += exclusive / (report.star_budget_m - st * st);
  }
  report.star_budget = budget;
  return report;
}

namespace {

struct StarSearchState {
  const TruncatedGraph& h;
  const std::vector<Ray>& leaves_pool;
  int k;
  int m;
  long long budget;
  long long explored = 0;
  bool out_of_budget = false;
};

// Backtracking over leaf subsets; per leaf one greedy maximal path packing
// against the current exclusions.
bool assign_leaves(StarSearchState& state, const Ray& centre, const std::set<int>& centre_set,
                   std::size_t from, std::vector<int>& chosen, std::set<int>& used_off_centre,
                   StarOfRays& star) {
  if (static_cast<int>(chosen.size()) == state.k) return true;
  if (++state.explored > state.budget) {
    state.out_of_budget = true;
    return false;
  }
  const int remaining = static_cast<int>(state.leaves_pool.size() - from);
  if (static_cast<int>(chosen.size()) + remaining < state.k) return false;

  for (std::size_t i = from; i < state.leaves_pool.size(); ++i) {
    const Ray& leaf = state.leaves_pool[i];
    bool clash = false;
    for (int v : leaf.vertices)
      if (centre_set.count(v) || used_off_centre.count(v)) clash = true;
    if (clash) continue;

    PathQuery query;
    query.sources = leaf.vertices;
    query.targets = centre.vertices;
    query.forbidden.assign(used_off_centre.begin(), used_off_centre.end());
    query.max_paths = state.m;
    const PathPacking packing = pack_disjoint_paths(state.h, query);
    if (static_cast<int>(packing.paths.size()) < state.m) continue;

    std::vector<int> added;
    for (const auto& path : packing.paths)
      for (std::size_t p = 0; p + 1 < path.size(); ++p) {
        if (used_off_centre.insert(path[p]).second) added.push_back(path[p]);
      }
    for (int v : leaf.vertices)
      if (used_off_centre.insert(v).second) added.push_back(v);
    chosen.push_back(static_cast<int>(i));
    star.leaves.push_back(leaf);
    star.families.push_back(packing.paths);

    if (assign_leaves(state, centre, centre_set, i + 1, chosen, used_off_centre, star)) return true;

    chosen.pop_back();
    star.leaves.pop_back();
    star.families.pop_back();
    for (int v : added) used_off_centre.erase(v);
    if (state.out_of_budget) return false;
  }
  return false;
}

}  // namespace

StarSearchResult search_star(const TruncatedGraph& h, const std::vector<Ray>& rays, int leaves_min,
                             int paths_min, const StarSearchOptions& options) {
  if (leaves_min < 1) throw InvalidArgument("search_star: leaf target must be positive");
  if (paths_min < 1) throw InvalidArgument("search_star: path threshold must be positive");
  {
    std::set<int> seen;
    for (const Ray& ray : rays) {
      validate_ray(h, ray);
      for (int v : ray.vertices)
        if (!seen.insert(v).second) throw InvalidArgument("search_star: rays must be disjoint");
    }
  }

  StarSearchResult result;
  result.k = leaves_min;
  result.m = paths_min;

  std::vector<std::pair<Ray, int>> centres;  // candidate centre + excluded ray index (-1 none)
  for (std::size_t i = 0; i < rays.size(); ++i) centres.push_back({rays[i], static_cast<int>(i)});
  if (options.include_normal_branches) {
    // Normal branches through each ray's start, capped, as extra centres.
    int taken = 0;
    for (const Ray& ray : rays) {
      if (taken >= options.max_normal_branches) break;
      const NormalTree tree(h, {ray.vertices.front()});
      std::vector<int> frontier_hits;
      for (int v : tree.spanned())
        if (h.depth(v) == h.max_depth()) frontier_hits.push_back(v);
      if (frontier_hits.empty()) continue;
      centres.push_back({Ray{"branch", tree.root_path(frontier_hits.front())}, -1});
      ++taken;
    }
  }

  StarSearchState state{h, rays, leaves_min, paths_min, options.budget};
  for (const auto& [centre, skip_index] : centres) {
    ++result.centres_tried;
    const std::set<int> centre_set = to_set(centre.vertices);

    std::vector<Ray> pool;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (static_cast<int>(i) == skip_index) continue;
      bool disjoint = true;
      for (int v : rays[i].vertices)
        if (centre_set.count(v)) disjoint = false;
      if (disjoint) pool.push_back(rays[i]);
    }
    if (static_cast<int>(pool.size()) < leaves_min) continue;

    StarSearchState attempt{h, pool, leaves_min, paths_min, state.budget - state.explored};
    StarOfRays star;
    star.centre = centre;
    std::vector<int> chosen;
    std::set<int> used;
    const bool found = assign_leaves(attempt, centre, centre_set, 0, chosen, used, star);
    state.explored += attempt.explored;
    if (found) {
      validate_star(h, star, paths_min);
      result.verdict = StarSearchResult::Verdict::Found;
      result.star = std::move(star);
      result.explored = state.explored;
      return result;
    }
    if (attempt.out_of_budget) {
      result.verdict = StarSearchResult::Verdict::Inconclusive;
      result.explored = state.explored;
      return result;
    }
  }
  result.verdict = StarSearchResult::Verdict::NotFound;
  result.explored = state.explored;
  return result;
}

ScaleObstructionReport certify_scale_obstruction(const ScaleFamily& s, int core_budget, int d,
                                                 SearchMode mode, unsigned seed) {
  const NoCoreReport core_report = certify_no_core(s, core_budget, d, mode, seed);

  ScaleObstructionReport report;
  report.obstructed = core_report.no_core;
  report.b_min = core_report.b_min;
  report.d = d;
  report.depth = d;
  report.max_captured = core_report.max_captured;
  report.witness_subtree = core_report.witness_subtree;
  report.subtrees_checked = core_report.subtrees_checked;
  report.degenerate_single_top = core_report.degenerate_single_top;
  report.oracle_checked = core_report.oracle_checked;
  report.oracle_agrees = core_report.oracle_agrees;

  // Recount ladder entries from the inflation's actual edge set and compare
  // with the tree-side lists used by the certification.
  const SparseTGraph sparse = build_scale_tree(s, d);
  const OrderTree& tree = sparse.tree();
  const TruncatedGraph h = inflate(sparse, d);
  const BipartiteLK bip = to_bipartite(sparse, d);
  const std::vector<NodeId> a_to_node = tree.finite_nodes();
  for (int b = 0; b < bip.b_size(); ++b) {
    const NodeId top = tree.tops()[b];
    std::set<std::string> from_edges;
    for (int v : h.column(tree.name(top)))
      for (int w : h.neighbors(v)) {
        if (h.owner(w) == tree.name(top)) continue;  // horizontal edge
        if (h.owner(w) == tree.name(tree.root())) continue;  // the omitted root
        if (h.pos(w) == h.pos(v)) from_edges.insert(h.owner(w));
      }
    std::set<std::string> from_lists;
    for (int a : bip.nbrs[b]) from_lists.insert(tree.name(a_to_node[a]));
    if (from_edges != from_lists) {
      report.graph_recount_ok = false;
      throw InternalError("certify_scale_obstruction: inflation edges disagree with the "
                          "tree-side ladder of " + bip.b_names[b]);
    }
  }

  // Bounded star search on oracle-sized instances, reported with its
  // parameters; centres restricted to finite-node rays keeps the search space
  // aligned with the certified projections.
  if (h.vertex_count() <= 60) {
    report.search_ran = true;
    report.search_k = report.max_captured + 1;
    std::vector<Ray> rays = horizontal_rays(h, tree);
    StarSearchOptions options;
    options.include_normal_branches = false;
    const StarSearchResult search =
        search_star(h, rays, report.search_k, d, options);
    report.search_verdict = search.verdict;
  }
  return report;
}

PipelineResult affirmative_pipeline(const TruncatedGraph& g, const std::vector<Ray>& rays, int m,
                                    int core_budget, int k) {
  if (k < 1) throw InvalidArgument("affirmative_pipeline: k must be positive");
  if (static_cast<int>(rays.size()) < k)
    throw InvalidArgument("affirmative_pipeline: fewer candidate rays than requested leaves");

  PipelineResult result;
  result.greedy = greedy_core(g, rays, m, static_cast<int>(rays.size()) + 1);
  if (result.greedy.last_combs.empty()) {
    // Degenerate run: no combs at all, so the star can only be a bare centre.
    result.assembly = assemble_star(g, result.greedy.last_core, {}, k);
    if (!result.assembly.ok) {
      result.failed_stage = "assemble-star";
      return result;
    }
    result.ok = true;
    result.star = result.assembly.star;
    return result;
  }

  // Contract comb interiors: combs become large-side vertices over their
  // teeth. The small side is ordered teeth-first so that the layered prefix
  // sweep walks the contraction's natural increasing union.
  std::vector<int> u;
  {
    std::set<int> seen;
    for (const Comb& comb : result.greedy.last_combs)
      for (int tooth : comb.teeth())
        if (seen.insert(tooth).second) u.push_back(tooth);
    for (int v : result.greedy.last_core)
      if (seen.insert(v).second) u.push_back(v);
  }
  std::map<int, int> a_index;
  BipartiteLK contracted;
  contracted.d = m;
  for (int v : u) {
    a_index[v] = contracted.a_size();
    contracted.a_names.push_back(std::to_string(v));
  }
  for (std::size_t c = 0; c < result.greedy.last_combs.size(); ++c) {
    contracted.b_names.push_back("comb" + std::to_string(c));
    std::vector<int> nbr;
    for (int tooth : result.greedy.last_combs[c].teeth()) nbr.push_back(a_index.at(tooth));
    contracted.nbrs.push_back(std::move(nbr));
  }

  result.core = small_core(contracted, core_budget, k);
  if (!result.core.found) {
    result.failed_stage = "small-core";
    return result;
  }

  // Uncontract the surviving combs and assemble around the reduced core.
  std::vector<int> reduced_u;
  for (int a : result.core.core_a) reduced_u.push_back(u[a]);
  std::vector<Comb> survivors;
  for (int b : result.core.core_b) survivors.push_back(result.greedy.last_combs[b]);

  result.assembly = assemble_star(g, reduced_u, survivors, k);
  if (!result.assembly.ok) {
    result.failed_stage = "assemble-star";
    return result;
  }
  validate_star(g, result.assembly.star, 1);
  result.ok = true;
  result.star = result.assembly.star;
  return result;
}

PipelineResult affirmative_pipeline(const EndSurrogate& e, const std::vector<std::string>& owners,
                                    int m, int core_budget, int k) {
  e.validate();
  const TruncatedGraph g = e.generator(e.schedule.back());
  std::vector<Ray> rays;
  for (const std::string& owner : owners) rays.push_back(horizontal_ray(g, owner));
  return affirmative_pipeline(g, rays, m, core_budget, k);
}

}  // namespace endgrid
