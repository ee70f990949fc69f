#include "doctest.h"

#include <set>

#include "endgrid/analysis.hpp"
#include "endgrid/corpus.hpp"

using namespace endgrid;

namespace {

std::vector<Ray> product_rays(const TruncatedGraph& g, int leaves) {
  std::vector<Ray> rays = {horizontal_ray(g, "c")};
  for (int l = 0; l < leaves; ++l) rays.push_back(horizontal_ray(g, "l" + std::to_string(l)));
  return rays;
}

// Tiny graph in which two candidate spines can only reach u through one cut
// vertex: a - c - u0 and b - c.
TruncatedGraph cut_vertex_graph() {
  GraphBuilder builder;
  const int a = builder.add_vertex("a", 0, 1);
  const int b = builder.add_vertex("b", 0, 1);
  const int c = builder.add_vertex("c", 0, 1);
  const int u0 = builder.add_vertex("u", 0, 0);
  builder.add_edge(a, c);
  builder.add_edge(b, c);
  builder.add_edge(c, u0);
  return builder.build();
}

TruncatedGraph complete_graph(int n) {
  GraphBuilder builder;
  for (int v = 0; v < n; ++v) builder.add_vertex(0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) builder.add_edge(u, v);
  return builder.build();
}

TruncatedGraph cycle_graph(int n) {
  GraphBuilder builder;
  for (int v = 0; v < n; ++v) builder.add_vertex(0);
  for (int v = 0; v < n; ++v) builder.add_edge(v, (v + 1) % n);
  return builder.build();
}

SimpleTree star_tree(int leaves) {
  SimpleTree t;
  t.root = 0;
  t.parent.assign(leaves + 1, 0);
  t.parent[0] = -1;
  return t;
}

SimpleTree caterpillar_tree(int spine, int pendants) {
  SimpleTree t;
  t.root = 0;
  t.parent.assign(spine * (1 + pendants), -1);
  for (int s = 1; s < spine; ++s) t.parent[s] = s - 1;
  int next = spine;
  for (int s = 0; s < spine; ++s)
    for (int p = 0; p < pendants; ++p) t.parent[next++] = s;
  return t;
}

SimpleTree spider_tree(int legs, int leg_len) {
  SimpleTree t;
  t.root = 0;
  t.parent.assign(1 + legs * leg_len, -1);
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int seg = 0; seg < leg_len; ++seg) {
      t.parent[next] = prev;
      prev = next++;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("comb packing on the star-times-ray prototype") {
  const TruncatedGraph g = star_ray_product(4, 5);
  const std::vector<Ray> rays = product_rays(g, 4);
  std::vector<Ray> spines(rays.begin() + 1, rays.end());
  const std::vector<Comb> combs = find_combs(g, rays[0].vertices, spines, 3);
  CHECK(combs.size() == 4);
  for (const Comb& comb : combs) CHECK(comb.paths.size() >= 3);
  validate_comb_family(g, combs, rays[0].vertices);
}

TEST_CASE("spines forced through one cut vertex pack a single comb") {
  const TruncatedGraph g = cut_vertex_graph();
  const Ray spine_a{"a", {0}};
  const Ray spine_b{"b", {1}};
  const std::vector<Comb> combs = find_combs(g, {3}, {spine_a, spine_b}, 1);
  CHECK(combs.size() == 1);
  CHECK(combs[0].spine.owner == "a");
}

TEST_CASE("comb packing edge cases") {
  const TruncatedGraph g = star_ray_product(2, 3);
  CHECK(find_combs(g, horizontal_ray(g, "c").vertices, {}, 1).empty());
  CHECK_THROWS_AS(find_combs(g, horizontal_ray(g, "c").vertices, {}, 0), InvalidArgument);
  CHECK_THROWS_AS(
      find_combs(g, horizontal_ray(g, "c").vertices, {horizontal_ray(g, "c")}, 1),
      InvalidArgument);
}

TEST_CASE("greedy core packs all leaf rays of the prototype in one round") {
  const TruncatedGraph g = star_ray_product(5, 6);
  const GreedyCoreResult result = greedy_core(g, product_rays(g, 5), 3, 10);
  CHECK(result.stabilized);
  REQUIRE(result.round_sizes.size() >= 1);
  CHECK(result.round_sizes[0] == 5);
  CHECK(result.round_sizes.size() == 2);  // one packing round, one empty round
  for (std::size_t i = 1; i < result.core_sizes.size(); ++i)
    CHECK(result.core_sizes[i] > result.core_sizes[i - 1]);
}

TEST_CASE("greedy core with a single ray stops immediately") {
  const TruncatedGraph g = star_ray_product(2, 3);
  const GreedyCoreResult result = greedy_core(g, {horizontal_ray(g, "c")}, 2, 5);
  CHECK(result.stabilized);
  CHECK(result.combs.empty());
  CHECK(result.round_sizes == std::vector<int>{0});
  CHECK(result.core == horizontal_ray(g, "c").vertices);
}

TEST_CASE("greedy core absorbs a height-two inflation level by level") {
  OrderTree tree = build_regular_tree({2, 2}, 2);
  const SparseTGraph g(tree, {});
  const TruncatedGraph h = inflate(g, 6);
  const std::vector<Ray> rays = horizontal_rays(h, tree);
  const GreedyCoreResult result = greedy_core(h, rays, 2, 10);
  CHECK(result.stabilized);
  CHECK(result.combs.size() == 6);  // every non-root ray becomes a spine
  CHECK(result.round_sizes.size() <= 3);
  CHECK(result.round_sizes[0] == 2);
  CHECK(result.round_sizes[1] == 4);
}

TEST_CASE("normal trees of small graphs") {
  const TruncatedGraph k4 = complete_graph(4);
  const NormalTree nt(k4, {0});
  int max_children = 0;
  std::vector<int> child_count(4, 0);
  for (int v = 0; v < 4; ++v)
    if (v != nt.root() && nt.in_tree(v)) max_children = std::max(max_children, ++child_count[nt.parent(v)]);
  CHECK(max_children == 1);  // any DFS tree of a complete graph is a path
  for (const auto& [u, v] : k4.edges()) CHECK(nt.comparable(u, v));

  const TruncatedGraph c5 = cycle_graph(5);
  const NormalTree cyc(c5, {0});
  for (const auto& [u, v] : c5.edges()) CHECK(cyc.comparable(u, v));

  // A tree is its own normal tree: every edge becomes a tree edge.
  const TruncatedGraph path = inflate(SparseTGraph(build_regular_tree({}, 0), {}), 4);
  const NormalTree pt(path, {2});
  for (const auto& [u, v] : path.edges()) CHECK(pt.comparable(u, v));
}

TEST_CASE("normal tree rejects targets across components") {
  GraphBuilder builder;
  builder.add_vertex(0);
  builder.add_vertex(0);
  const TruncatedGraph g = builder.build();
  CHECK_THROWS_AS(NormalTree(g, {0, 1}), InvalidArgument);
}

TEST_CASE("normality holds on random graphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const TruncatedGraph g = random_graph(rng, 25, 25);
    const NormalTree nt(g, {0});
    for (const auto& [u, v] : g.edges())
      if (nt.in_tree(u) && nt.in_tree(v)) CHECK(nt.comparable(u, v));
  }
}

TEST_CASE("star assembly recovers the prototype star") {
  const TruncatedGraph g = star_ray_product(4, 6);
  const std::vector<Ray> rays = product_rays(g, 4);
  std::vector<Ray> spines(rays.begin() + 1, rays.end());
  const std::vector<Comb> combs = find_combs(g, rays[0].vertices, spines, 3);
  const AssembleResult result = assemble_star(g, rays[0].vertices, combs, 4);
  REQUIRE(result.ok);
  CHECK(result.star.leaves.size() == 4);
  CHECK(result.star.centre.vertices == rays[0].vertices);  // the centre column wins
  validate_star(g, result.star, 1);
}

TEST_CASE("star assembly with zero target yields a bare centre") {
  const TruncatedGraph g = star_ray_product(2, 4);
  const AssembleResult result = assemble_star(g, horizontal_ray(g, "c").vertices, {}, 0);
  REQUIRE(result.ok);
  CHECK(result.star.leaves.empty());
  CHECK(reaches_frontier(g, result.star.centre));
}

TEST_CASE("combs sharing a tooth both survive when the tooth sits on the centre") {
  GraphBuilder builder;
  const int u0 = builder.add_vertex("u", 0, 0);
  const int u1 = builder.add_vertex("u", 1, 1);
  const int a0 = builder.add_vertex("a", 0, 1);
  const int b0 = builder.add_vertex("b", 0, 1);
  builder.add_edge(u0, u1);
  builder.add_edge(a0, u1);
  builder.add_edge(b0, u1);
  const TruncatedGraph g = builder.build();
  const Comb comb_a{Ray{"a", {a0}}, {{a0, u1}}};
  const Comb comb_b{Ray{"b", {b0}}, {{b0, u1}}};
  const AssembleResult result = assemble_star(g, {u0, u1}, {comb_a, comb_b}, 2);
  REQUIRE(result.ok);
  CHECK(result.star.leaves.size() == 2);
  validate_star(g, result.star, 1);
}

TEST_CASE("star validator rejects corrupted stars") {
  const TruncatedGraph g = star_ray_product(3, 5);
  const std::vector<Ray> rays = product_rays(g, 3);
  std::vector<Ray> spines(rays.begin() + 1, rays.end());
  const std::vector<Comb> combs = find_combs(g, rays[0].vertices, spines, 3);
  AssembleResult result = assemble_star(g, rays[0].vertices, combs, 3);
  REQUIRE(result.ok);
  validate_star(g, result.star, 1);

  StarOfRays broken = result.star;
  broken.leaves[0] = broken.leaves[1];  // leaves no longer disjoint
  CHECK_THROWS_AS(validate_star(g, broken, 1), InvalidArgument);

  StarOfRays short_family = result.star;
  short_family.families[0].clear();
  CHECK_THROWS_AS(validate_star(g, short_family, 1), InvalidArgument);
}

TEST_CASE("dominators of a fan and of disjoint unions") {
  const TruncatedGraph fan = fan_graph(6);
  const Ray path = horizontal_ray(fan, "p");
  const int apex = fan.column("a").front();
  CHECK(dominators(fan, path, 3) == std::vector<int>{apex});

  GraphBuilder builder;
  const int p0 = builder.add_vertex("p", 0, 0);
  const int p1 = builder.add_vertex("p", 1, 1);
  builder.add_vertex("q", 0, 1);  // isolated second component
  builder.add_edge(p0, p1);
  const TruncatedGraph g = builder.build();
  CHECK(dominators(g, Ray{"p", {p0, p1}}, 1).empty());
}

TEST_CASE("dominators of the prototype centre ray") {
  const TruncatedGraph g = star_ray_product(3, 6);
  const Ray centre = horizontal_ray(g, "c");
  const std::vector<int> at3 = dominators(g, centre, 3);
  // Interior leaf vertices have degree 3 and reach three distinct rungs.
  std::set<int> expect;
  for (int l = 0; l < 3; ++l) {
    const auto column = g.column("l" + std::to_string(l));
    for (std::size_t i = 1; i + 1 < column.size(); ++i) expect.insert(column[i]);
  }
  CHECK(std::set<int>(at3.begin(), at3.end()) == expect);
  // Degree three caps the fan: no vertex admits four internally disjoint paths.
  CHECK(dominators(g, centre, 4).empty());
}

TEST_CASE("frayed decomposition outcomes") {
  const FrayedDecomposition star = frayed_decompose(star_tree(10), 10);
  CHECK(star.kind == FrayedDecomposition::Kind::Star);
  CHECK(star.count == 10);
  CHECK(star.leaves.size() == 10);

  const FrayedDecomposition comb = frayed_decompose(caterpillar_tree(10, 3), 30);
  CHECK(comb.kind == FrayedDecomposition::Kind::FrayedComb);
  CHECK(comb.count == 30);
  CHECK(comb.ray.size() == 10);
  int teeth = 0;
  for (const auto& [on_ray, members] : comb.stars) teeth += static_cast<int>(members.size());
  CHECK(teeth == 30);

  const FrayedDecomposition frayed = frayed_decompose(spider_tree(5, 2), 5);
  CHECK(frayed.kind == FrayedDecomposition::Kind::FrayedStar);
  CHECK(frayed.count == 5);
  CHECK(frayed.leaves.size() == 5);
  CHECK(frayed.distributors.size() == 5);

  // A bare path admits none of the three shapes.
  SimpleTree path;
  path.root = 0;
  path.parent.assign(30, -1);
  for (int v = 1; v < 30; ++v) path.parent[v] = v - 1;
  CHECK(frayed_decompose(path, 5).kind == FrayedDecomposition::Kind::Undecomposable);

  CHECK_THROWS_AS(frayed_decompose(star_tree(3), 10), InvalidArgument);
}

TEST_CASE("frayed witnesses are subgraphs meeting the threshold") {
  const SimpleTree t = caterpillar_tree(8, 2);
  const FrayedDecomposition result = frayed_decompose(t, 16);
  REQUIRE(result.kind == FrayedDecomposition::Kind::FrayedComb);
  const auto children = t.children();
  for (std::size_t i = 1; i < result.ray.size(); ++i)
    CHECK(t.parent[result.ray[i]] == result.ray[i - 1]);
  for (const auto& [on_ray, teeth] : result.stars)
    for (int tooth : teeth) CHECK(t.parent[tooth] == on_ray);
}

TEST_CASE("ray graph of the prototype is a star") {
  const TruncatedGraph g = star_ray_product(4, 5);
  const RayGraphResult result = ray_graph(g, product_rays(g, 4), 3);
  CHECK(result.classification == RayGraphResult::Classification::Star);
  CHECK(result.centre_ray == 0);
  CHECK(result.edges.size() == 4);
  for (const auto& edge : result.edges) CHECK(edge.multiplicity >= 3);
}

TEST_CASE("unconnected rays give an edgeless ray graph") {
  GraphBuilder builder;
  const int a0 = builder.add_vertex("a", 0, 0);
  const int a1 = builder.add_vertex("a", 1, 1);
  const int b0 = builder.add_vertex("b", 0, 0);
  const int b1 = builder.add_vertex("b", 1, 1);
  builder.add_edge(a0, a1);
  builder.add_edge(b0, b1);
  const TruncatedGraph g = builder.build();
  const RayGraphResult result =
      ray_graph(g, {Ray{"a", {a0, a1}}, Ray{"b", {b0, b1}}}, 1);
  CHECK(result.edges.empty());
  CHECK(result.classification == RayGraphResult::Classification::Disconnected);
  CHECK(result.components.size() == 2);
}

TEST_CASE("ladder of four rays yields a path ray graph") {
  const TruncatedGraph g = ray_ladder(4, 4);
  std::vector<Ray> rays;
  for (int r = 0; r < 4; ++r) rays.push_back(horizontal_ray(g, "w" + std::to_string(r)));
  const RayGraphResult result = ray_graph(g, rays, 3);
  REQUIRE(result.edges.size() == 3);
  std::set<std::pair<int, int>> edges;
  for (const auto& edge : result.edges) edges.insert({edge.a, edge.b});
  CHECK(edges == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(result.classification != RayGraphResult::Classification::Disconnected);

  // Witness independence: all witness paths form one jointly independent
  // system, so internal vertices never repeat across edges.
  std::set<int> internals;
  for (const auto& edge : result.edges)
    for (const auto& path : edge.witnesses)
      for (std::size_t i = 1; i + 1 < path.size(); ++i) CHECK(internals.insert(path[i]).second);
}

TEST_CASE("equivalence of horizontal rays across a depth schedule") {
  OrderTree tree = build_regular_tree({2}, 1);
  const SparseTGraph sparse(tree, {});
  EndSurrogate e;
  e.generator = [sparse](int depth) { return inflate(sparse, depth); };
  e.schedule = {1, 2, 4};
  const EquivalenceResult linked = equivalence_check(e, "0", "1", 1);
  CHECK(linked.found);
  CHECK(linked.depth == 1);

  // Prototype: centre and a leaf become 4-linked once four rungs exist.
  EndSurrogate product;
  product.generator = [](int depth) { return star_ray_product(4, depth); };
  product.schedule = {1, 3, 8};
  const EquivalenceResult four = equivalence_check(product, "c", "l0", 4);
  CHECK(four.found);
  CHECK(four.depth == 3);

  // Disconnected columns never link.
  GraphBuilder builder;
  builder.add_vertex("a", 0, 0);
  builder.add_vertex("b", 0, 0);
  const TruncatedGraph split = builder.build();
  EndSurrogate frozen;
  frozen.generator = [split](int) { return split; };
  frozen.schedule = {1, 2};
  CHECK_FALSE(equivalence_check(frozen, "a", "b", 1).found);
}

TEST_CASE("ray graphs on random graphs keep their witnesses independent") {
  std::mt19937 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const TruncatedGraph g = random_graph(rng, 20, 30);
    std::vector<Ray> rays;
    for (int v = 0; v < std::min(5, g.vertex_count()); ++v)
      rays.push_back(Ray{"v" + std::to_string(v), {v}});
    const RayGraphResult result = ray_graph(g, rays, 1);
    std::set<int> internals;
    for (const auto& edge : result.edges) {
      CHECK(edge.multiplicity >= 1);
      for (const auto& path : edge.witnesses) {
        CHECK(path.front() == edge.a);
        CHECK(path.back() == edge.b);
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          CHECK(internals.insert(path[i]).second);
      }
    }
  }
}
