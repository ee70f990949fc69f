#include "endgrid/bipartite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace endgrid {

void BipartiteLK::validate() const {
  if (d < 1) throw InvalidArgument("bipartite: d must be positive");
  if (nbrs.size() != b_names.size())
    throw InvalidArgument("bipartite: one neighbour list per large-side vertex required");
  for (std::size_t b = 0; b < nbrs.size(); ++b) {
    if (static_cast<int>(nbrs[b].size()) < d)
      throw InvalidArgument("bipartite: " + b_names[b] + " has fewer than d = " +
                            std::to_string(d) + " neighbours");
    std::set<int> seen;
    for (int a : nbrs[b]) {
      if (a < 0 || a >= a_size()) throw InvalidArgument("bipartite: neighbour out of range");
      if (!seen.insert(a).second) throw InvalidArgument("bipartite: duplicate neighbour entry");
    }
  }
}

Ideal::Ideal(int index_length, std::vector<std::uint32_t> members) : index_length_(index_length) {
  if (index_length < 1 || index_length > 31)
    throw InvalidArgument("ideal: index length must be in 1..31");
  const std::uint32_t full = (1u << index_length) - 1;
  std::set<std::uint32_t> set(members.begin(), members.end());
  set.insert(0);
  for (std::uint32_t mask : set) {
    if (mask > full) throw InvalidArgument("ideal: member outside the index set");
    if (mask == full) throw InvalidArgument("ideal: proper ideals exclude the full index set");
    // Downward closure: every subset of a member is a member.
    for (std::uint32_t sub = mask; sub > 0; sub = (sub - 1) & mask) {
      if (!set.count(sub))
        throw InvalidArgument("ideal: not downward closed (missing subset of a member)");
    }
  }
  members_.assign(set.begin(), set.end());
}

bool Ideal::contains(std::uint32_t mask) const {
  return std::binary_search(members_.begin(), members_.end(), mask);
}

void ScaleFamily::validate() const {
  if (bounds.empty()) throw InvalidArgument("scale: bounds must be nonempty");
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] < 1) throw InvalidArgument("scale: bounds must be positive");
    if (i > 0 && bounds[i] <= bounds[i - 1])
      throw InvalidArgument("scale: bounds must be strictly increasing");
  }
  if (ideal.index_length() != index_length())
    throw InvalidArgument("scale: ideal index length does not match the bounds");
  for (const auto& f : functions) {
    if (static_cast<int>(f.size()) != index_length())
      throw InvalidArgument("scale: function length does not match the bounds");
    for (int n = 0; n < index_length(); ++n)
      if (f[n] < 0 || f[n] >= bounds[n])
        throw InvalidArgument("scale: function value out of bounds");
  }
}

bool dominance(const std::vector<int>& f, const std::vector<int>& g, const Ideal& ideal) {
  if (f.size() != g.size() || static_cast<int>(f.size()) != ideal.index_length())
    throw InvalidArgument("dominance: index lengths do not match");
  std::uint32_t exceptional = 0;
  for (std::size_t n = 0; n < f.size(); ++n)
    if (f[n] >= g[n]) exceptional |= 1u << n;
  return ideal.contains(exceptional);
}

ScaleReport verify_scale(const ScaleFamily& s, const std::vector<std::vector<int>>& test_functions) {
  s.validate();
  ScaleReport report;
  for (int a = 0; a < s.function_count(); ++a) {
    for (int b = a + 1; b < s.function_count(); ++b) {
      if (!dominance(s.functions[a], s.functions[b], s.ideal)) {
        report.increasing = false;
        report.increasing_violations.push_back({a, b});
      }
    }
  }
  report.tests_checked = static_cast<int>(test_functions.size());
  for (std::size_t t = 0; t < test_functions.size(); ++t) {
    const auto& g = test_functions[t];
    if (static_cast<int>(g.size()) != s.index_length())
      throw InvalidArgument("verify_scale: test function length mismatch");
    for (int n = 0; n < s.index_length(); ++n)
      if (g[n] < 0 || g[n] >= s.bounds[n])
        throw InvalidArgument("verify_scale: test function out of bounds");
    bool dominated = false;
    for (const auto& f : s.functions)
      if (dominance(g, f, s.ideal)) dominated = true;
    if (!dominated) {
      report.cofinal_on_tests = false;
      report.undominated_tests.push_back(static_cast<int>(t));
    }
  }
  return report;
}

namespace {

BipartiteLK bipartite_from_lists(const OrderTree& tree,
                                 const std::vector<std::vector<NodeId>>& lists, int d) {
  if (d < 1) throw InvalidArgument("to_bipartite: d must be positive");
  const std::vector<NodeId> tops = tree.tops();
  if (tops.empty()) throw InvalidArgument("to_bipartite: tree has no tops (empty large side)");

  BipartiteLK result;
  result.d = d;
  std::map<NodeId, int> a_index;
  for (NodeId v : tree.finite_nodes()) {
    a_index[v] = result.a_size();
    result.a_names.push_back(tree.name(v));
  }
  for (std::size_t i = 0; i < tops.size(); ++i) {
    result.b_names.push_back(tree.name(tops[i]));
    std::vector<int> nbr;
    for (NodeId entry : lists[i]) {
      if (entry == tree.root()) continue;  // the root lies below every top
      nbr.push_back(a_index.at(entry));
    }
    if (static_cast<int>(nbr.size()) < d)
      throw InvalidArgument("to_bipartite: top " + tree.name(tops[i]) + " has fewer than d = " +
                            std::to_string(d) + " non-root neighbours");
    result.nbrs.push_back(std::move(nbr));
  }
  result.validate();
  return result;
}

}  // namespace

BipartiteLK to_bipartite(const OrderTree& tree, int d) {
  std::vector<std::vector<NodeId>> lists;
  for (NodeId top : tree.tops()) lists.push_back(tree.strict_down_closure(top));
  return bipartite_from_lists(tree, lists, d);
}

BipartiteLK to_bipartite(const SparseTGraph& g, int d) {
  std::vector<std::vector<NodeId>> lists;
  for (NodeId top : g.tree().tops()) lists.push_back(g.ladder(top));
  return bipartite_from_lists(g.tree(), lists, d);
}

namespace {

std::vector<int> captured_by(const BipartiteLK& g, const std::set<int>& core) {
  std::vector<int> result;
  for (int b = 0; b < g.b_size(); ++b) {
    bool inside = true;
    for (int a : g.nbrs[b])
      if (!core.count(a)) inside = false;
    if (inside) result.push_back(b);
  }
  return result;
}

}  // namespace

void validate_core(const BipartiteLK& g, const SmallCoreResult& result, int core_budget,
                   int target) {
  if (!result.found) throw InvalidArgument("validate_core: no core present");
  if (static_cast<int>(result.core_a.size()) > core_budget)
    throw InvalidArgument("validate_core: core exceeds the budget");
  if (static_cast<int>(result.core_b.size()) < target)
    throw InvalidArgument("validate_core: too few captured vertices");
  const std::set<int> core(result.core_a.begin(), result.core_a.end());
  for (int b : result.core_b) {
    if (b < 0 || b >= g.b_size()) throw InvalidArgument("validate_core: unknown b vertex");
    for (int a : g.nbrs[b])
      if (!core.count(a))
        throw InvalidArgument("validate_core: " + g.b_names[b] + " has a neighbour outside the core");
  }
}

SmallCoreResult small_core(const BipartiteLK& g, int core_budget, int target, SearchMode mode) {
  g.validate();
  if (core_budget < g.d && target > 0)
    throw InvalidArgument("small_core: budget below d cannot capture anything");
  if (target < 0) throw InvalidArgument("small_core: target must be nonnegative");

  if (mode == SearchMode::Auto)
    mode = g.a_size() <= 20 ? SearchMode::Exact : SearchMode::Greedy;

  SmallCoreResult result;
  result.used = mode;
  if (mode == SearchMode::Exact) {
    if (g.a_size() > 25) throw InvalidArgument("small_core: instance too large for exact mode");
    result.exhaustive = true;
    const std::uint32_t limit = 1u << g.a_size();
    std::vector<std::uint32_t> nbr_masks(g.b_size(), 0);
    for (int b = 0; b < g.b_size(); ++b)
      for (int a : g.nbrs[b]) nbr_masks[b] |= 1u << a;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (__builtin_popcount(mask) > core_budget) continue;
      std::vector<int> captured;
      for (int b = 0; b < g.b_size(); ++b)
        if ((nbr_masks[b] & mask) == nbr_masks[b]) captured.push_back(b);
      if (static_cast<int>(captured.size()) >= target) {
        result.found = true;
        for (int a = 0; a < g.a_size(); ++a)
          if (mask & (1u << a)) result.core_a.push_back(a);
        result.core_b = std::move(captured);
        return result;
      }
    }
    return result;
  }

  // Layered sweep over prefixes of the a side in insertion order: the best
  // feasible prefix wins.
  std::set<int> prefix;
  std::vector<int> best_b;
  int best_len = -1;
  for (int len = 0; len <= std::min(core_budget, g.a_size()); ++len) {
    if (len > 0) prefix.insert(len - 1);
    std::vector<int> captured = captured_by(g, prefix);
    if (static_cast<int>(captured.size()) > static_cast<int>(best_b.size()) ||
        (best_len == -1 && len == 0)) {
      best_b = std::move(captured);
      best_len = len;
    }
  }
  if (static_cast<int>(best_b.size()) >= target) {
    result.found = true;
    for (int a = 0; a < best_len; ++a) result.core_a.push_back(a);
    result.core_b = std::move(best_b);
  }
  return result;
}

namespace {

bool oracle_search(const BipartiteLK& g, int core_budget, int target, int from,
                   std::vector<int>& chosen, SmallCoreResult& out) {
  std::set<int> core(chosen.begin(), chosen.end());
  std::vector<int> captured = captured_by(g, core);
  if (static_cast<int>(captured.size()) >= target) {
    out.found = true;
    out.core_a = chosen;
    out.core_b = std::move(captured);
    return true;
  }
  if (static_cast<int>(chosen.size()) == core_budget) return false;
  for (int a = from; a < g.a_size(); ++a) {
    chosen.push_back(a);
    if (oracle_search(g, core_budget, target, a + 1, chosen, out)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

SmallCoreResult small_core_oracle(const BipartiteLK& g, int core_budget, int target) {
  g.validate();
  if (g.a_size() > 20 || g.b_size() > 20)
    throw InvalidArgument("small_core_oracle: instance too large");
  if (target < 0) throw InvalidArgument("small_core_oracle: target must be nonnegative");
  SmallCoreResult result;
  result.used = SearchMode::Exact;
  result.exhaustive = true;
  std::vector<int> chosen;
  oracle_search(g, std::max(core_budget, 0), target, 0, chosen, result);
  return result;
}

SparseTGraph build_scale_tree(const ScaleFamily& s, int depth) {
  s.validate();
  if (depth < 0 || depth > s.index_length())
    throw InvalidArgument("build_scale_tree: depth must lie in 0..index_length");
  {
    std::set<std::vector<int>> seen;
    for (const auto& f : s.functions)
      if (!seen.insert(f).second) throw InvalidArgument("build_scale_tree: duplicate functions");
  }
  if (s.functions.empty()) throw InvalidArgument("build_scale_tree: family must be nonempty");

  // Finite part: all prefixes up to the depth, level by level, lexicographic.
  std::map<std::vector<int>, NodeId> index;
  std::vector<OrderTree::Node> nodes;
  nodes.push_back({});
  index[{}] = 0;
  for (int len = 1; len <= depth; ++len) {
    std::set<std::vector<int>> level;
    for (const auto& f : s.functions)
      level.insert(std::vector<int>(f.begin(), f.begin() + len));
    for (const auto& prefix : level) {
      OrderTree::Node node;
      node.seq = prefix;
      node.parent = index.at(std::vector<int>(prefix.begin(), prefix.end() - 1));
      node.height = len;
      index[prefix] = static_cast<NodeId>(nodes.size());
      nodes.push_back(std::move(node));
    }
  }
  for (const auto& f : s.functions) {
    OrderTree::Node top;
    top.seq = f;  // the full function identifies the top even past the depth cut
    top.parent = index.at(std::vector<int>(f.begin(), f.begin() + depth));
    top.height = depth + 1;
    top.is_top = true;
    nodes.push_back(std::move(top));
  }
  std::vector<int> profile(s.bounds.begin(), s.bounds.begin() + depth);
  OrderTree tree = OrderTree::from_nodes(std::move(nodes), std::move(profile));

  std::vector<std::vector<NodeId>> ladders;
  for (const auto& f : s.functions) {
    std::vector<NodeId> ladder = {0};
    for (int len = 1; len <= depth; ++len)
      ladder.push_back(index.at(std::vector<int>(f.begin(), f.begin() + len)));
    ladders.push_back(std::move(ladder));
  }
  return SparseTGraph(std::move(tree), ladders);
}

std::vector<SmallCoreResult> iterated_small_core(const BipartiteLK& g, int core_budget, int target,
                                                 int rounds) {
  g.validate();
  if (rounds < 1) throw InvalidArgument("iterated_small_core: rounds must be positive");

  std::vector<SmallCoreResult> result;
  std::set<int> used_a, used_b;
  for (int round = 0; round < rounds; ++round) {
    // Restrict to untouched small-side vertices and the large-side vertices
    // that still keep d neighbours among them.
    BipartiteLK rest;
    rest.d = g.d;
    std::vector<int> a_map;  // rest index -> original index
    std::map<int, int> a_inv;
    for (int a = 0; a < g.a_size(); ++a) {
      if (used_a.count(a)) continue;
      a_inv[a] = rest.a_size();
      a_map.push_back(a);
      rest.a_names.push_back(g.a_names[a]);
    }
    std::vector<int> b_map;
    for (int b = 0; b < g.b_size(); ++b) {
      if (used_b.count(b)) continue;
      std::vector<int> nbr;
      for (int a : g.nbrs[b])
        if (a_inv.count(a)) nbr.push_back(a_inv.at(a));
      if (static_cast<int>(nbr.size()) < g.d) continue;
      b_map.push_back(b);
      rest.b_names.push_back(g.b_names[b]);
      rest.nbrs.push_back(std::move(nbr));
    }
    if (rest.b_size() == 0 && target > 0) break;

    SmallCoreResult core = small_core(rest, core_budget, target);
    if (!core.found) break;
    for (int& a : core.core_a) {
      used_a.insert(a_map[a]);
      a = a_map[a];
    }
    for (int& b : core.core_b) {
      used_b.insert(b_map[b]);
      b = b_map[b];
    }
    result.push_back(std::move(core));
  }
  return result;
}

NoCoreReport certify_no_core(const ScaleFamily& s, int subtree_budget, int d, SearchMode mode,
                             unsigned seed, int samples) {
  const ScaleReport scale_report = verify_scale(s, {});
  if (!scale_report.increasing)
    throw InvalidArgument("certify_no_core: family fails the increasing axiom");
  if (d < 1 || d > s.index_length())
    throw InvalidArgument("certify_no_core: d must lie in 1..index_length");
  if (subtree_budget < 0) throw InvalidArgument("certify_no_core: budget must be nonnegative");

  const SparseTGraph sparse = build_scale_tree(s, d);
  const BipartiteLK bip = to_bipartite(sparse, d);

  // Non-root finite nodes, with parent links for the down-closure test.
  const OrderTree& tree = sparse.tree();
  const std::vector<NodeId> a_to_node = tree.finite_nodes();  // bip a-index -> tree node
  std::vector<NodeId> a_nodes;
  for (NodeId v : a_to_node)
    if (v != tree.root()) a_nodes.push_back(v);
  const int n = static_cast<int>(a_nodes.size());
  std::map<NodeId, int> a_pos;
  for (int i = 0; i < n; ++i) a_pos[a_nodes[i]] = i;

  if (mode == SearchMode::Auto) mode = n <= 22 ? SearchMode::Exact : SearchMode::Sampled;
  if (mode == SearchMode::Greedy) mode = SearchMode::Sampled;
  if (mode == SearchMode::Exact && n > 22)
    throw InvalidArgument("certify_no_core: prefix tree too large for exhaustive certification");
  if (n > 63) throw InvalidArgument("certify_no_core: prefix tree exceeds the mask width");

  NoCoreReport report;
  report.b_min = std::min(2, s.function_count());
  report.degenerate_single_top = s.function_count() < 2;
  report.exhaustive = mode == SearchMode::Exact;

  // Candidate down-closed subtrees as bitmasks over the non-root nodes.
  std::vector<std::uint64_t> candidates;
  if (mode == SearchMode::Exact) {
    const std::uint64_t limit = 1ull << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (__builtin_popcountll(mask) > subtree_budget) continue;
      bool down_closed = true;
      for (int i = 0; i < n && down_closed; ++i) {
        if (!(mask & (1ull << i))) continue;
        const NodeId parent = tree.parent(a_nodes[i]);
        if (parent != tree.root() && !(mask & (1ull << a_pos.at(parent)))) down_closed = false;
      }
      if (down_closed) candidates.push_back(mask);
    }
  } else {
    // Random down-closed growths: repeatedly add a node whose parent is
    // already inside (or the root).
    std::mt19937 rng(seed);
    std::set<std::uint64_t> seen = {0};
    candidates.push_back(0);
    for (int trial = 0; trial < samples; ++trial) {
      std::uint64_t mask = 0;
      const int want = 1 + static_cast<int>(rand_below(rng, std::max(1, subtree_budget)));
      for (int step = 0; step < want; ++step) {
        std::vector<int> frontier;
        for (int i = 0; i < n; ++i) {
          if (mask & (1ull << i)) continue;
          const NodeId parent = tree.parent(a_nodes[i]);
          if (parent == tree.root() || (mask & (1ull << a_pos.at(parent)))) frontier.push_back(i);
        }
        if (frontier.empty()) break;
        mask |= 1ull << frontier[rand_below(rng, static_cast<std::uint32_t>(frontier.size()))];
      }
      if (seen.insert(mask).second) candidates.push_back(mask);
    }
  }

  for (const std::uint64_t mask : candidates) {
    ++report.subtrees_checked;

    SubtreeWitness witness;
    std::vector<int> bound(s.index_length(), 0);
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1ull << i))) continue;
      witness.nodes.push_back(i);
      const auto& seq = tree.node(a_nodes[i]).seq;
      for (std::size_t c = 0; c < seq.size(); ++c)
        bound[c] = std::max(bound[c], seq[c] + 1);
    }
    witness.pointwise_bound = bound;

    for (int f = 0; f < s.function_count(); ++f) {
      if (dominance(bound, s.functions[f], s.ideal)) {
        witness.dominated.push_back(f);
        // First coordinate where the function clears the bound: no longer
        // prefix of the subtree beyond it.
        int clear = s.index_length();
        for (int c = 0; c < s.index_length(); ++c)
          if (s.functions[f][c] >= bound[c]) {
            clear = c;
            break;
          }
        witness.capture_bound.push_back(clear);
      } else {
        witness.capture_bound.push_back(d);
      }
    }

    // Direct count against the bipartite lists, then the soundness check of
    // the domination argument.
    for (int b = 0; b < bip.b_size(); ++b) {
      int inside = 0;
      for (int a : bip.nbrs[b]) {
        const auto it = a_pos.find(a_to_node[a]);
        if (it != a_pos.end() && (mask & (1ull << it->second))) ++inside;
      }
      if (inside >= d) {
        witness.captured.push_back(b);
        if (witness.capture_bound[b] < d)
          throw InternalError("certify_no_core: " + bip.b_names[b] +
                              " captured despite a domination bound of " +
                              std::to_string(witness.capture_bound[b]));
      }
    }

    if (static_cast<int>(witness.captured.size()) > report.max_captured) {
      report.max_captured = static_cast<int>(witness.captured.size());
      report.witness_subtree = witness.nodes;
    }
    if (report.table.size() < 64) report.table.push_back(std::move(witness));
  }

  report.no_core = report.max_captured < report.b_min;

  if (report.exhaustive && bip.a_size() <= 20 && bip.b_size() <= 20) {
    report.oracle_checked = true;
    const SmallCoreResult oracle = small_core_oracle(bip, subtree_budget, report.b_min);
    report.oracle_agrees = oracle.found == !report.no_core;
    if (!report.oracle_agrees)
      throw InternalError("certify_no_core: oracle disagrees with the subtree certification");
  }
  return report;
}

}  // namespace endgrid
