// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run via ctest or directly; every tolerance is pinned here.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "endgrid/certify.hpp"
#include "endgrid/corpus.hpp"
#include "endgrid/io.hpp"

using namespace endgrid;
using Clock = std::chrono::steady_clock;

namespace {

constexpr unsigned kSeed = 20250810;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Ray> product_rays(const TruncatedGraph& g, int leaves) {
  std::vector<Ray> rays = {horizontal_ray(g, "c")};
  for (int l = 0; l < leaves; ++l) rays.push_back(horizontal_ray(g, "l" + std::to_string(l)));
  return rays;
}

// ---------------------------------------------------------------- criterion 1
Outcome inflation_counting() {
  Outcome out;
  const auto start = Clock::now();
  const auto corpus = acceptance_corpus(kSeed, 25);
  long long checked = 0;
  for (const SparseTGraph& g : corpus) {
    const OrderTree& tree = g.tree();
    for (int depth = 0; depth <= 6; ++depth) {
      const TruncatedGraph h = inflate(g, depth);
      // Closed-form rule counts, recomputed here from the tree structure.
      long long vertices = static_cast<long long>(tree.size()) * (depth + 1);
      long long horizontal = static_cast<long long>(tree.size()) * depth;
      long long matching = 0;
      long long rungs = 0;
      for (NodeId t = 0; t < tree.size(); ++t) {
        if (tree.classify(t) == OrderTree::Kind::Successor) matching += depth + 1;
        if (tree.is_top(t)) rungs += std::min<long long>(g.ladder(t).size(), depth + 1);
      }
      const InflationStats stats = inflation_stats(g, depth);
      if (h.vertex_count() != vertices || h.edge_count() != horizontal + matching + rungs ||
          stats.vertices != vertices || stats.total_edges() != horizontal + matching + rungs) {
        out.pass = false;
        out.detail << "count mismatch at depth " << depth << "; ";
        return out;
      }
      ++checked;
    }
  }
  const double elapsed = ms_since(start);
  out.pass = out.pass && elapsed < 5000.0;
  out.detail << corpus.size() << " trees x 7 depths (" << checked << " checks), "
             << static_cast<int>(elapsed) << " ms (< 5000)";
  if (elapsed >= 5000.0) out.pass = false;
  return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome component_bijection() {
  Outcome out;
  const auto start = Clock::now();
  const auto corpus = acceptance_corpus(kSeed, 25);
  long long checked = 0;
  for (const SparseTGraph& g : corpus) {
    const OrderTree& tree = g.tree();
    for (int level = 0; level <= tree.top_level(); ++level) {
      for (int depth = std::max(level, 1); depth <= 6; ++depth) {
        const TruncatedGraph h = inflate(g, depth);
        try {
          const auto components = components_above(tree, h, level);
          if (static_cast<int>(components.size()) != static_cast<int>(tree.level(level).size())) {
            out.pass = false;
            out.detail << "wrong component count at level " << level << "; ";
            return out;
          }
        } catch (const CertificationError& err) {
          out.pass = false;
          out.detail << "bijection failure at level " << level << " depth " << depth << "; ";
          return out;
        }
        ++checked;
      }
    }
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 10000.0) out.pass = false;
  out.detail << checked << " labelled partitions, zero failures, " << static_cast<int>(elapsed)
             << " ms (< 10000)";
  return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome one_endedness() {
  Outcome out;
  const auto start = Clock::now();
  const auto corpus = acceptance_corpus(kSeed, 25);
  long long pairs = 0;
  for (const SparseTGraph& g : corpus) {
    EndSurrogate e;
    e.generator = [&g](int depth) { return inflate(g, depth); };
    e.schedule = {2, 4, 8};
    const OrderTree& tree = g.tree();
    for (NodeId s = 0; s < tree.size(); ++s) {
      for (NodeId t = s + 1; t < tree.size(); ++t) {
        const EquivalenceResult linked = equivalence_check(e, tree.name(s), tree.name(t), 3);
        if (!linked.found || linked.depth > 8) {
          out.pass = false;
          out.detail << "rays " << tree.name(s) << " and " << tree.name(t)
                     << " not 3-linked by depth 8; ";
          return out;
        }
        ++pairs;
      }
    }
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 60000.0) out.pass = false;
  out.detail << pairs << " ray pairs 3-linked within depth 8, " << static_cast<int>(elapsed)
             << " ms (< 60000)";
  return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome star_implies_doublestar() {
  Outcome out;
  const auto start = Clock::now();
  const auto corpus = acceptance_corpus(kSeed, 25);
  long long checked = 0;
  for (const SparseTGraph& g : corpus) {
    const StarPropertyReport star = check_star_property(g, nullptr);
    for (int depth = 0; depth <= 6; ++depth) {
      const DoubleStarReport report =
          check_doublestar_property(g.tree(), inflate(g, depth), star.attachment);
      if (!report.all_pass) {
        out.pass = false;
        out.detail << "double-star violation at depth " << depth << "; ";
        return out;
      }
      ++checked;
    }
  }
  out.detail << checked << " inflation checks, zero failures, " << static_cast<int>(ms_since(start))
             << " ms";
  return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome attachment_obstruction() {
  Outcome out;
  const auto start = Clock::now();
  const auto corpus = attachment_corpus(kSeed, 20);
  int agreements = 0;
  int nonvacuous = 0;  // instances where the budget leaves room below the ray count
  for (const SparseTGraph& g : corpus) {
    const OrderTree& tree = g.tree();
    const StarPropertyReport star = check_star_property(g);
    int max_attachment = 0;
    for (NodeId t = 0; t < tree.size(); ++t)
      max_attachment = std::max(max_attachment, star.attachment.size_of(t));
    if (max_attachment > 2) {
      out.pass = false;
      out.detail << "corpus instance exceeds |S_t| <= 2; ";
      return out;
    }

    const int columns = tree.size();
    const int depth = std::min(4, std::max(2, 40 / columns - 1));
    const TruncatedGraph h = inflate(g, depth);
    if (h.vertex_count() > 40) {
      out.pass = false;
      out.detail << "instance exceeds 40 vertices; ";
      return out;
    }
    const int sigma = std::max(1, tree.finite_height() / 2);
    const AttachmentBoundReport report = certify_attachment_bound(g, depth, star.attachment, sigma);
    bool bounds_ok = report.pass;
    for (const auto& component : report.components)
      if (component.bound > 4) bounds_ok = false;
    if (!bounds_ok) {
      out.pass = false;
      out.detail << "attachment certificate failed or exceeded the bound 4; ";
      return out;
    }

    StarSearchOptions options;
    options.include_normal_branches = false;
    const int k = static_cast<int>(report.star_budget) + 1;
    if (k <= tree.size() - 1) ++nonvacuous;
    const StarSearchResult search =
        search_star(h, horizontal_rays(h, tree), k, report.star_budget_m, options);
    if (search.verdict != StarSearchResult::Verdict::NotFound) {
      out.pass = false;
      out.detail << "star search disagreed with budget " << report.star_budget << "; ";
      return out;
    }
    ++agreements;
  }
  out.detail << agreements << "/20 instances: certificate pass and beyond-budget search not-found ("
             << nonvacuous << " with budget below the ray count), "
             << static_cast<int>(ms_since(start)) << " ms";
  return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome countable_core_assembly() {
  Outcome out;
  const auto start = Clock::now();
  for (int s = 3; s <= 8; ++s) {
    const auto instance_start = Clock::now();
    const TruncatedGraph g = star_ray_product(s, 10);
    const PipelineResult result = affirmative_pipeline(g, product_rays(g, s), 3, 11, s);
    const double instance_ms = ms_since(instance_start);
    if (!result.ok || static_cast<int>(result.star.leaves.size()) < s) {
      out.pass = false;
      out.detail << "pipeline failed for s = " << s << " at stage " << result.failed_stage << "; ";
      return out;
    }
    try {
      validate_star(g, result.star, 1);
    } catch (const InvalidArgument& err) {
      out.pass = false;
      out.detail << "star for s = " << s << " failed validation: " << err.what() << "; ";
      return out;
    }
    if (instance_ms >= 5000.0) {
      out.pass = false;
      out.detail << "s = " << s << " took " << instance_ms << " ms (>= 5000); ";
      return out;
    }
  }
  out.detail << "s in {3..8} at depth 10, validated stars, " << static_cast<int>(ms_since(start))
             << " ms total (< 5000 each)";
  return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome greedy_core_growth() {
  Outcome out;
  const auto start = Clock::now();
  for (const SparseTGraph& g : acceptance_corpus(kSeed, 25)) {
    const TruncatedGraph h = inflate(g, 6);
    const GreedyCoreResult result = greedy_core(h, horizontal_rays(h, g.tree()), 2, 16);
    if (!result.stabilized) {
      out.pass = false;
      out.detail << "greedy core hit the rounds cap; ";
      return out;
    }
    for (std::size_t i = 1; i < result.core_sizes.size(); ++i) {
      const bool last = i + 1 == result.core_sizes.size();
      if (!last && result.core_sizes[i] <= result.core_sizes[i - 1]) {
        out.pass = false;
        out.detail << "core failed to grow strictly; ";
        return out;
      }
    }
  }
  // Height <= 2 trees: every non-root ray is packed within three rounds.
  for (const std::vector<int>& profile :
       {std::vector<int>{2, 2}, {3, 2}, {2, 3}, {1, 3}, {3, 1}}) {
    const OrderTree tree = build_regular_tree(profile, 2);
    const SparseTGraph g(tree, {});
    const TruncatedGraph h = inflate(g, 6);
    const GreedyCoreResult result = greedy_core(h, horizontal_rays(h, tree), 2, 16);
    if (!result.stabilized || static_cast<int>(result.combs.size()) != tree.size() - 1 ||
        result.round_sizes.size() > 3) {
      out.pass = false;
      out.detail << "height-2 tree not fully packed within 3 rounds; ";
      return out;
    }
  }
  out.detail << "strict growth on 25 instances; full packing on height-2 trees, "
             << static_cast<int>(ms_since(start)) << " ms";
  return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome menger_certification() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const TruncatedGraph g = random_graph(rng, 60, 15 + static_cast<int>(rand_below(rng, 20)));
    const int n = g.vertex_count();
    std::vector<int> sources, targets;
    for (int v = 0; v < n; ++v) {
      if (rand_below(rng, 4) == 0) sources.push_back(v);
      if (rand_below(rng, 4) == 0) targets.push_back(v);
    }
    if (sources.empty()) sources.push_back(0);
    if (targets.empty()) targets.push_back(n - 1);

    const DisjointPathsResult result = disjoint_paths(g, sources, targets, n + 1);
    if (result.reached_request || result.paths.size() != result.cut.size()) {
      out.pass = false;
      out.detail << "trial " << trial << ": count/cut mismatch; ";
      return out;
    }
    // Disjointness and validity of the paths.
    std::set<int> used;
    for (const auto& path : result.paths) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0 && !g.adjacent(path[i - 1], path[i])) out.pass = false;
        if (!used.insert(path[i]).second) out.pass = false;
      }
    }
    // Separation by deletion.
    const std::set<int> cut(result.cut.begin(), result.cut.end());
    const std::set<int> target_set(targets.begin(), targets.end());
    std::set<int> seen;
    std::vector<int> stack;
    for (int s : sources)
      if (!cut.count(s) && seen.insert(s).second) stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (target_set.count(v)) out.pass = false;
      for (int w : g.neighbors(v))
        if (!cut.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    if (!out.pass) {
      out.detail << "trial " << trial << ": certificate failed; ";
      return out;
    }
  }
  out.detail << "100/100 certificates valid, " << static_cast<int>(ms_since(start)) << " ms";
  return out;
}

// ---------------------------------------------------------------- criterion 9
Outcome small_core_equivalence() {
  Outcome out;
  const auto start = Clock::now();
  long long instances = 0;
  long long runs = 0;
  for (int a_size = 2; a_size <= 6; ++a_size) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < a_size; ++x)
      for (int y = x + 1; y < a_size; ++y) pairs.push_back({x, y});
    const std::uint32_t limit = 1u << pairs.size();
    for (std::uint32_t choice = 1; choice < limit; ++choice) {
      const int b_size = __builtin_popcount(choice);
      if (b_size > 6) continue;
      BipartiteLK g;
      g.d = 2;
      for (int a = 0; a < a_size; ++a) g.a_names.push_back("a" + std::to_string(a));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!(choice & (1u << p))) continue;
        g.b_names.push_back("b" + std::to_string(p));
        g.nbrs.push_back({pairs[p].first, pairs[p].second});
      }
      ++instances;
      for (int budget : {2, 3}) {
        for (int target : {1, 2, b_size}) {
          const SmallCoreResult fast = small_core(g, budget, target, SearchMode::Exact);
          const SmallCoreResult oracle = small_core_oracle(g, budget, target);
          ++runs;
          if (fast.found != oracle.found) {
            out.pass = false;
            out.detail << "existence disagreement on instance " << choice << "; ";
            return out;
          }
          if (fast.found) {
            try {
              validate_core(g, fast, budget, target);
              validate_core(g, oracle, budget, target);
            } catch (const InvalidArgument& err) {
              out.pass = false;
              out.detail << "invalid core returned: " << err.what() << "; ";
              return out;
            }
          }
        }
      }
    }
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 120000.0) out.pass = false;
  out.detail << instances << " instances, " << runs << " oracle comparisons, 100% agreement, "
             << static_cast<int>(elapsed) << " ms (< 120000)";
  return out;
}

// --------------------------------------------------------------- criterion 10
Outcome scale_mechanics() {
  Outcome out;
  const auto start = Clock::now();

  // The worked dominance triple over the ideal {{}, {0}}.
  const Ideal ideal(2, {0b01});
  const auto exceptional = [](const std::vector<int>& f, const std::vector<int>& g) {
    std::uint32_t mask = 0;
    for (std::size_t n = 0; n < f.size(); ++n)
      if (f[n] >= g[n]) mask |= 1u << n;
    return mask;
  };
  if (exceptional({2, 1}, {1, 2}) != 0b01 || exceptional({1, 2}, {0, 0}) != 0b11 ||
      exceptional({0, 0}, {2, 1}) != 0b00 || !dominance({2, 1}, {1, 2}, ideal) ||
      dominance({1, 2}, {0, 0}, ideal) || !dominance({0, 0}, {2, 1}, ideal)) {
    out.pass = false;
    out.detail << "worked dominance example mismatch; ";
    return out;
  }

  // Constructed families: chains over the trivial ideal, chains modulo {0},
  // a core-admitting wide family, and a degenerate singleton.
  std::vector<ScaleFamily> families;
  for (int count : {3, 4, 5}) {
    for (int length : {2, 3}) {
      ScaleFamily s;
      for (int n = 0; n < length; ++n) s.bounds.push_back(count + n + 1);
      for (int alpha = 0; alpha < count; ++alpha)
        s.functions.push_back(std::vector<int>(length, alpha));
      s.ideal = Ideal(length, {});
      families.push_back(std::move(s));
    }
  }
  for (int count : {3, 4}) {
    ScaleFamily s;
    s.bounds = {2, count + 2, count + 3};
    for (int alpha = 0; alpha < count; ++alpha)
      s.functions.push_back({alpha % 2, alpha + 1, alpha + 2});
    s.ideal = Ideal(3, {0b001});
    families.push_back(std::move(s));
  }
  {
    ScaleFamily wide;
    wide.bounds = {2, 9};
    wide.functions = {{0, 1}, {0, 3}, {0, 5}};
    wide.ideal = Ideal(2, {0b01});
    families.push_back(std::move(wide));
    ScaleFamily single;
    single.bounds = {3, 4};
    single.functions = {{1, 2}};
    single.ideal = Ideal(2, {});
    families.push_back(std::move(single));
  }

  int agreed = 0;
  for (const ScaleFamily& s : families) {
    const ScaleReport scale_report = verify_scale(s, {});
    if (!scale_report.increasing) {
      out.pass = false;
      out.detail << "constructed family fails the increasing axiom; ";
      return out;
    }
    const int d = 2;
    for (int budget : {2, 3}) {
      try {
        const NoCoreReport report = certify_no_core(s, budget, d);
        if (!report.oracle_checked || !report.oracle_agrees) {
          out.pass = false;
          out.detail << "oracle did not confirm a verdict; ";
          return out;
        }
        ++agreed;
      } catch (const InternalError& err) {
        out.pass = false;
        out.detail << "certification bug: " << err.what() << "; ";
        return out;
      }
    }
  }
  out.detail << families.size() << " families, " << agreed
             << " certified verdicts all oracle-confirmed, " << static_cast<int>(ms_since(start))
             << " ms";
  return out;
}

// --------------------------------------------------------------- criterion 11
Outcome lifting_accounting() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937 rng(kSeed);
  RandomTreeOptions options;
  options.max_nodes = 10;
  for (int trial = 0; trial < 10; ++trial) {
    const SparseTGraph sparse = random_sparse_tgraph(rng, options);
    const TruncatedGraph base = inflate(sparse, 3 + static_cast<int>(rand_below(rng, 3)));
    const int before = max_disjoint_frontier_rays(base);

    const std::vector<Ray> all = horizontal_rays(base, sparse.tree());
    const int ray_count = 1 + static_cast<int>(rand_below(rng, std::min<std::size_t>(3, all.size())));
    std::vector<Ray> picked(all.begin(), all.begin() + ray_count);
    std::vector<int> sizes;
    int total = 0;
    for (int i = 0; i < ray_count; ++i) {
      sizes.push_back(1 + static_cast<int>(rand_below(rng, 3)));
      total += sizes.back();
    }

    const LiftResult lifted = lift_with_stars(base, picked, sizes);
    const int after = max_disjoint_frontier_rays(lifted.graph);
    if (after != before + total) {
      out.pass = false;
      out.detail << "trial " << trial << ": " << after << " != " << before << " + " << total
                 << "; ";
      return out;
    }
  }
  out.detail << "10 lifted bases, packing count equals base + sum of star sizes, "
             << static_cast<int>(ms_since(start)) << " ms";
  return out;
}

// --------------------------------------------------------------- criterion 12
Outcome determinism() {
  Outcome out;
  const auto start = Clock::now();

  const auto run_once = [] {
    std::ostringstream bytes;
    for (const SparseTGraph& g : attachment_corpus(kSeed, 5)) {
      const StarPropertyReport star = check_star_property(g);
      const int sigma = std::max(1, g.tree().finite_height() / 2);
      bytes << certificate_json(certify_attachment_bound(g, 3, star.attachment, sigma)).dump();
      bytes << sparse_to_json(g).dump();
    }
    const TruncatedGraph g = star_ray_product(4, 8);
    bytes << certificate_json(affirmative_pipeline(g, product_rays(g, 4), 3, 9, 4)).dump();
    ScaleFamily s;
    s.bounds = {4, 5};
    s.functions = {{0, 0}, {1, 1}, {2, 2}};
    s.ideal = Ideal(2, {});
    bytes << certificate_json(certify_scale_obstruction(s, 2, 2)).dump();
    std::mt19937 rng(kSeed);
    const TruncatedGraph random = random_graph(rng, 40, 20);
    bytes << graph_to_json(random).dump();
    bytes << export_dot(random);
    return bytes.str();
  };

  const std::string first = run_once();
  const std::string second = run_once();
  if (first != second) {
    out.pass = false;
    out.detail << "re-run bytes differ; ";
    return out;
  }
  out.detail << "certificates, graphs and DOT byte-identical across re-runs ("
             << first.size() << " bytes), " << static_cast<int>(ms_since(start)) << " ms";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"inflation-counting", inflation_counting},
      {"component-bijection", component_bijection},
      {"one-endedness", one_endedness},
      {"star-implies-doublestar", star_implies_doublestar},
      {"attachment-obstruction", attachment_obstruction},
      {"countable-core-assembly", countable_core_assembly},
      {"greedy-core-growth", greedy_core_growth},
      {"menger-certification", menger_certification},
      {"small-core-equivalence", small_core_equivalence},
      {"scale-mechanics", scale_mechanics},
      {"lifting-accounting", lifting_accounting},
      {"determinism", determinism},
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& err) {
      outcome.pass = false;
      outcome.detail << "exception: " << err.what();
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " - " << outcome.detail.str()
              << '\n';
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
