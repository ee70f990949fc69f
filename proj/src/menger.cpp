#include "endgrid/menger.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace endgrid {

namespace {

// Unit-capacity flow network over the vertex-split graph. Node 2v is the
// in-copy of vertex v, 2v+1 the out-copy; the last two nodes are the super
// source and sink. Connector edges between distinct vertices get a large
// capacity so that minimum cuts cross only capacity-one edges, all of which
// map back to graph vertices.
class SplitNetwork {
 public:
  SplitNetwork(int node_count) : head_(node_count, -1) {}

  void add_edge(int from, int to, int capacity) {
    edges_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  // One BFS augmentation along a shortest path, preferring lower node ids.
  bool augment(int source, int sink) {
    std::vector<int> via(head_.size(), -1);
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> queue;
    queue.push(source);
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      const int v = queue.front();
      queue.pop();
      // Collect candidate edges and visit by ascending head node for
      // deterministic parent choice.
      std::vector<std::pair<int, int>> outs;
      for (int e = head_[v]; e != -1; e = edges_[e].next)
        if (edges_[e].capacity > 0 && !seen[edges_[e].to]) outs.push_back({edges_[e].to, e});
      std::sort(outs.begin(), outs.end());
      for (const auto& [to, e] : outs) {
        if (seen[to]) continue;
        seen[to] = true;
        via[to] = e;
        queue.push(to);
      }
    }
    if (!seen[sink]) return false;
    for (int v = sink; v != source;) {
      const int e = via[v];
      edges_[e].capacity -= 1;
      edges_[e ^ 1].capacity += 1;
      v = edges_[e ^ 1].to;
    }
    return true;
  }

  std::vector<bool> residual_reachable(int source) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack = {source};
    seen[source] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e = head_[v]; e != -1; e = edges_[e].next) {
        if (edges_[e].capacity > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = true;
          stack.push_back(edges_[e].to);
        }
      }
    }
    return seen;
  }

  // Flow carried on the forward edge added as the idx-th add_edge call.
  int flow_on(int idx) const { return edges_[2 * idx + 1].capacity; }

 private:
  struct Edge {
    int to;
    int next;
    int capacity;
  };
  std::vector<Edge> edges_;
  std::vector<int> head_;
};

}  // namespace

PathPacking pack_disjoint_paths(const TruncatedGraph& g, const PathQuery& query) {
  PathPacking result;
  if (query.max_paths < 0) throw InvalidArgument("pack_disjoint_paths: negative path bound");

  const std::set<int> forbidden(query.forbidden.begin(), query.forbidden.end());
  std::set<int> sources, targets;
  for (int v : query.sources)
    if (!forbidden.count(v)) sources.insert(v);
  for (int v : query.targets)
    if (!forbidden.count(v)) targets.insert(v);

  // Shared vertices are trivial one-vertex paths; they leave the network.
  std::set<int> shared;
  for (int v : sources)
    if (targets.count(v)) shared.insert(v);
  for (int v : shared) {
    if (static_cast<int>(result.paths.size()) >= query.max_paths) {
      result.exhausted = false;
      return result;
    }
    result.paths.push_back({v});
    result.cut.push_back(v);
    result.trivial_count += 1;
  }

  const int n = g.vertex_count();
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  const int big = n + 2;
  SplitNetwork net(2 * n + 2);

  const auto active = [&](int v) { return !forbidden.count(v) && !shared.count(v); };

  // Per-forward-edge bookkeeping for path extraction and cut mapping.
  struct EdgeRef {
    enum class Kind { VertexSplit, Connector, SourceIn, TargetOut } kind;
    int vertex_or_from;
    int to = -1;
  };
  std::vector<EdgeRef> refs;

  for (int v = 0; v < n; ++v) {
    if (!active(v)) continue;
    net.add_edge(2 * v, 2 * v + 1, 1);
    refs.push_back({EdgeRef::Kind::VertexSplit, v});
  }
  for (const auto& [u, v] : g.edges()) {
    if (!active(u) || !active(v)) continue;
    // Paths may enter a source only as their first vertex and leave a target
    // only as their last, so edges into sources and out of targets are cut.
    if (!sources.count(v) && !targets.count(u)) {
      net.add_edge(2 * u + 1, 2 * v, big);
      refs.push_back({EdgeRef::Kind::Connector, u, v});
    }
    if (!sources.count(u) && !targets.count(v)) {
      net.add_edge(2 * v + 1, 2 * u, big);
      refs.push_back({EdgeRef::Kind::Connector, v, u});
    }
  }
  for (int v : sources) {
    net.add_edge(super_source, 2 * v, 1);
    refs.push_back({EdgeRef::Kind::SourceIn, v});
  }
  for (int v : targets) {
    net.add_edge(2 * v + 1, super_sink, 1);
    refs.push_back({EdgeRef::Kind::TargetOut, v});
  }

  int flow = 0;
  bool hit_bound = false;
  while (true) {
    if (static_cast<int>(result.paths.size()) + flow >= query.max_paths) {
      hit_bound = true;
      break;
    }
    if (!net.augment(super_source, super_sink)) break;
    ++flow;
  }

  // Decompose the flow into paths by walking saturated edges from each source.
  std::vector<std::vector<std::pair<int, int>>> out_flow(n);  // vertex -> (next vertex, edge idx)
  std::vector<int> source_used;
  for (int idx = 0; idx < static_cast<int>(refs.size()); ++idx) {
    if (net.flow_on(idx) <= 0) continue;
    const EdgeRef& ref = refs[idx];
    if (ref.kind == EdgeRef::Kind::Connector) out_flow[ref.vertex_or_from].push_back({ref.to, idx});
    if (ref.kind == EdgeRef::Kind::SourceIn) source_used.push_back(ref.vertex_or_from);
  }
  std::sort(source_used.begin(), source_used.end());
  for (int start : source_used) {
    std::vector<int> path = {start};
    int v = start;
    while (!targets.count(v)) {
      if (out_flow[v].empty())
        throw InternalError("pack_disjoint_paths: flow decomposition stuck at vertex " +
                            std::to_string(v));
      const auto [next, idx] = out_flow[v].back();
      out_flow[v].pop_back();
      path.push_back(next);
      v = next;
    }
    result.paths.push_back(std::move(path));
  }

  if (hit_bound) {
    result.exhausted = false;
    return result;
  }
  result.exhausted = true;

  // Minimum vertex cut from residual reachability; every crossing edge has
  // capacity one and maps to a graph vertex.
  const std::vector<bool> reachable = net.residual_reachable(super_source);
  for (int v = 0; v < n; ++v) {
    if (!active(v)) continue;
    bool in_cut = false;
    if (reachable[2 * v] && !reachable[2 * v + 1]) in_cut = true;
    if (sources.count(v) && !reachable[2 * v]) in_cut = true;
    if (targets.count(v) && reachable[2 * v + 1]) in_cut = true;
    if (in_cut) result.cut.push_back(v);
  }
  std::sort(result.cut.begin(), result.cut.end());
  result.cut.erase(std::unique(result.cut.begin(), result.cut.end()), result.cut.end());
  if (result.cut.size() != result.paths.size())
    throw InternalError("pack_disjoint_paths: cut size " + std::to_string(result.cut.size()) +
                        " does not match path count " + std::to_string(result.paths.size()));

  // Prefer cuts through interior vertices: swap a terminal cut vertex for a
  // non-terminal one whenever separation survives the exchange.
  const auto separates = [&](const std::set<int>& cut_set) {
    std::set<int> seen;
    std::vector<int> stack;
    for (int s : query.sources)
      if (!cut_set.count(s) && !forbidden.count(s) && seen.insert(s).second) stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (targets.count(v) || shared.count(v)) return false;
      for (int w : g.neighbors(v))
        if (!cut_set.count(w) && !forbidden.count(w) && seen.insert(w).second) stack.push_back(w);
    }
    return true;
  };
  std::set<int> cut_set(result.cut.begin(), result.cut.end());
  for (int v : result.cut) {
    const bool terminal = sources.count(v) || targets.count(v) || shared.count(v);
    if (!terminal) continue;
    for (int w = 0; w < n; ++w) {
      if (cut_set.count(w) || !active(w) || sources.count(w) || targets.count(w)) continue;
      cut_set.erase(v);
      cut_set.insert(w);
      if (separates(cut_set)) break;
      cut_set.erase(w);
      cut_set.insert(v);
    }
  }
  result.cut.assign(cut_set.begin(), cut_set.end());
  return result;
}

}  // namespace endgrid
