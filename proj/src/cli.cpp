#include "endgrid/cli.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "endgrid/corpus.hpp"
#include "endgrid/io.hpp"

namespace endgrid {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

std::vector<int> parse_ints(const std::string& text, char sep = ',') {
  std::vector<int> result;
  for (const std::string& part : split(text, sep)) result.push_back(std::stoi(part));
  return result;
}

// Vertex set spec: a column owner name, or "ids:0,1,2".
std::vector<int> vertex_spec(const TruncatedGraph& g, const std::string& spec) {
  if (spec.rfind("ids:", 0) == 0) {
    std::vector<int> ids = parse_ints(spec.substr(4));
    for (int v : ids)
      if (v < 0 || v >= g.vertex_count())
        throw InvalidArgument("vertex spec references missing vertex " + std::to_string(v));
    return ids;
  }
  const std::vector<int> column = g.column(spec);
  if (column.empty()) throw InvalidArgument("unknown column \"" + spec + "\"");
  return column;
}

std::vector<Ray> rays_spec(const TruncatedGraph& g, const std::string& spec) {
  std::vector<std::string> owners;
  if (spec.empty() || spec == "all") {
    std::set<std::string> seen;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!g.owner(v).empty()) seen.insert(g.owner(v));
    owners.assign(seen.begin(), seen.end());
  } else {
    owners = split(spec, ',');
  }
  std::vector<Ray> rays;
  for (const std::string& owner : owners) rays.push_back(horizontal_ray(g, owner));
  return rays;
}

EndSurrogate surrogate_from(const SparseTGraph& sparse, const std::vector<int>& schedule) {
  EndSurrogate e;
  e.generator = [sparse](int depth) { return inflate(sparse, depth); };
  e.schedule = schedule;
  e.validate();
  return e;
}

void summary(const std::string& line) { std::cerr << line << '\n'; }

SearchMode parse_mode(const std::string& mode) {
  if (mode == "exact") return SearchMode::Exact;
  if (mode == "greedy") return SearchMode::Greedy;
  if (mode == "sampled") return SearchMode::Sampled;
  if (mode == "auto") return SearchMode::Auto;
  throw InvalidArgument("unknown mode \"" + mode + "\" (exact | greedy | sampled | auto)");
}

struct Options {
  std::string in;
  std::string out = "-";
  std::string profile;
  std::string tops = "none";
  std::string antichains = "level";
  std::string source, target, u, spines, rays, sizes;
  std::string schedule;
  int height = 0;
  int depth = 3;
  int sigma = -1;
  int m = 2;
  int d = 2;
  int k = 2;
  int core_budget = 8;
  int threshold = 2;
  int rounds_cap = 16;
  unsigned seed = 1;
  std::string mode = "auto";
  std::string format = "json";
  std::string cardinal_label;
};

// Reports honour --format: the JSON artifact by default, the summary line as
// plain text on request.
void emit_report(const Options& opt, const nlohmann::json& j, const std::string& text) {
  if (opt.format == "text")
    save_text(opt.out, text + "\n");
  else
    save_json(opt.out, j);
  summary(text);
}

int cmd_build_tree(const Options& opt) {
  OrderTree tree = build_regular_tree(parse_ints(opt.profile), opt.height);
  if (opt.tops != "none") {
    std::vector<std::vector<int>> selectors;
    const std::vector<NodeId> leaves = tree.level(tree.finite_height());
    if (opt.tops == "all") {
      for (NodeId leaf : leaves) selectors.push_back(tree.node(leaf).seq);
    } else if (opt.tops.rfind("random:", 0) == 0) {
      const int want = std::stoi(opt.tops.substr(7));
      if (want > static_cast<int>(leaves.size()))
        throw InvalidArgument("build-tree: more tops requested than branches");
      std::mt19937 rng(opt.seed);
      std::vector<NodeId> pool = leaves;
      for (int i = 0; i < want; ++i) {
        const int pick = static_cast<int>(rand_below(rng, static_cast<int>(pool.size())));
        selectors.push_back(tree.node(pool[pick]).seq);
        pool.erase(pool.begin() + pick);
      }
      std::sort(selectors.begin(), selectors.end());
    } else {
      for (const std::string& branch : split(opt.tops, ','))
        selectors.push_back(parse_ints(branch, '.'));
    }
    tree = attach_tops(tree, selectors);
  }
  if (!opt.cardinal_label.empty()) tree.set_cardinal_label(opt.cardinal_label);
  if (opt.antichains == "level") set_level_antichains(tree);
  save_json(opt.out, tree_to_json(tree));
  summary("built tree with " + std::to_string(tree.size()) + " nodes (" +
          std::to_string(tree.top_count()) + " tops)");
  return kExitPass;
}

int cmd_select_ladders(const Options& opt) {
  const OrderTree tree = tree_from_json(load_json(opt.in));
  const SparseTGraph sparse = select_ladders(tree);
  save_json(opt.out, sparse_to_json(sparse));
  summary("selected ladders for " + std::to_string(tree.top_count()) + " tops");
  return kExitPass;
}

int cmd_inflate(const Options& opt) {
  const SparseTGraph sparse = sparse_from_json(load_json(opt.in));
  const TruncatedGraph h = inflate(sparse, opt.depth);
  // The file records its generator so deeper truncations stay regenerable.
  nlohmann::json j = graph_to_json(h);
  j["generator"] = sparse_to_json(sparse);
  j["depth"] = opt.depth;
  save_json(opt.out, j);
  const InflationStats stats = inflation_stats(sparse, opt.depth);
  summary("inflated to " + std::to_string(h.vertex_count()) + " vertices, " +
          std::to_string(h.edge_count()) + " edges (" +
          std::to_string(stats.omitted_ladder_edges) + " ladder rungs truncated)");
  return kExitPass;
}

int cmd_lift(const Options& opt) {
  const TruncatedGraph g = graph_from_json(load_json(opt.in));
  const std::vector<Ray> rays = rays_spec(g, opt.rays);
  const LiftResult lifted = lift_with_stars(g, rays, parse_ints(opt.sizes));
  nlohmann::json j = graph_to_json(lifted.graph);
  j["lift"] = {{"rays", split(opt.rays, ',')}, {"sizes", parse_ints(opt.sizes)}};
  save_json(opt.out, j);
  summary("lifted " + std::to_string(rays.size()) + " rays with " +
          std::to_string(lifted.new_rays.size()) + " fresh rays");
  return kExitPass;
}

int cmd_disjoint_paths(const Options& opt) {
  const TruncatedGraph g = graph_from_json(load_json(opt.in));
  const DisjointPathsResult result =
      disjoint_paths(g, vertex_spec(g, opt.source), vertex_spec(g, opt.target), opt.k);
  emit_report(opt, report_json(result),
              std::to_string(result.paths.size()) + " disjoint paths" +
                  (result.reached_request ? "" : ", cut of size " + std::to_string(result.cut.size())));
  return result.reached_request ? kExitPass : kExitFail;
}

int cmd_combs(const Options& opt) {
  const TruncatedGraph g = graph_from_json(load_json(opt.in));
  std::vector<Ray> spines;
  for (const std::string& owner : split(opt.spines, ',')) spines.push_back(horizontal_ray(g, owner));
  const std::vector<Comb> combs = find_combs(g, vertex_spec(g, opt.u), spines, opt.m);
  nlohmann::json j;
  j["combs"] = nlohmann::json::array();
  for (const Comb& comb : combs) j["combs"].push_back(comb_to_json(comb));
  emit_report(opt, j, "packed " + std::to_string(combs.size()) + " combs");
  return kExitPass;
}

int cmd_greedy_core(const Options& opt) {
  const SparseTGraph sparse = sparse_from_json(load_json(opt.in));
  const EndSurrogate e = surrogate_from(sparse, parse_ints(opt.schedule));
  std::vector<std::string> owners;
  for (NodeId t = 0; t < sparse.tree().size(); ++t) owners.push_back(sparse.tree().name(t));
  const GreedyCoreResult result = greedy_core(e, owners, opt.m, opt.rounds_cap);
  emit_report(opt, report_json(result),
              "core of " + std::to_string(result.core.size()) + " vertices after " +
                  std::to_string(result.round_sizes.size()) + " rounds");
  return result.stabilized ? kExitPass : kExitFail;
}

int cmd_ray_graph(const Options& opt) {
  const TruncatedGraph g = graph_from_json(load_json(opt.in));
  const RayGraphResult result = ray_graph(g, rays_spec(g, opt.rays), opt.m);
  emit_report(opt, report_json(result),
              "ray graph with " + std::to_string(result.edges.size()) + " edges");
  return kExitPass;
}

int cmd_frayed(const Options& opt) {
  const OrderTree tree = tree_from_json(load_json(opt.in));
  SimpleTree simple;
  simple.root = tree.root();
  for (NodeId v = 0; v < tree.size(); ++v) simple.parent.push_back(tree.parent(v));
  const FrayedDecomposition result = frayed_decompose(simple, opt.threshold);
  emit_report(opt, report_json(result), "decomposition count " + std::to_string(result.count));
  return result.kind == FrayedDecomposition::Kind::Undecomposable ? kExitFail : kExitPass;
}

int cmd_certify_attachment(const Options& opt) {
  const SparseTGraph sparse = sparse_from_json(load_json(opt.in));
  const StarPropertyReport star = check_star_property(sparse);
  const int sigma = opt.sigma >= 0 ? opt.sigma : sparse.tree().finite_height() / 2;
  const AttachmentBoundReport report =
      certify_attachment_bound(sparse, opt.depth, star.attachment, sigma);
  emit_report(opt, certificate_json(report),
              std::string("attachment bound ") + (report.pass ? "pass" : "fail") + " at sigma " +
                  std::to_string(sigma));
  return report.pass ? kExitPass : kExitFail;
}

int cmd_certify_scale(const Options& opt) {
  const ScaleFamily s = scale_from_json(load_json(opt.in));
  const ScaleObstructionReport report =
      certify_scale_obstruction(s, opt.core_budget, opt.d, parse_mode(opt.mode), opt.seed);
  emit_report(opt, certificate_json(report),
              std::string("scale obstruction ") +
                  (report.degenerate_single_top ? "degenerate"
                                                : (report.obstructed ? "pass" : "fail")));
  if (report.degenerate_single_top) return kExitPass;
  return report.obstructed ? kExitPass : kExitFail;
}

int cmd_star_search(const Options& opt) {
  const TruncatedGraph g = graph_from_json(load_json(opt.in));
  const StarSearchResult result = search_star(g, rays_spec(g, opt.rays), opt.k, opt.m);
  emit_report(opt, certificate_json(result),
              result.verdict == StarSearchResult::Verdict::Found
                  ? "star found"
                  : (result.verdict == StarSearchResult::Verdict::NotFound ? "star not found"
                                                                           : "inconclusive"));
  return result.verdict == StarSearchResult::Verdict::Found ? kExitPass : kExitFail;
}

int cmd_pipeline(const Options& opt) {
  const SparseTGraph sparse = sparse_from_json(load_json(opt.in));
  const EndSurrogate e = surrogate_from(sparse, parse_ints(opt.schedule));
  std::vector<std::string> owners;
  for (NodeId t = 0; t < sparse.tree().size(); ++t) owners.push_back(sparse.tree().name(t));
  const PipelineResult result = affirmative_pipeline(e, owners, opt.m, opt.core_budget, opt.k);
  emit_report(opt, certificate_json(result),
              result.ok ? "pipeline star with " + std::to_string(result.star.leaves.size()) + " leaves"
                        : "pipeline failed at " + result.failed_stage);
  return result.ok ? kExitPass : kExitFail;
}

int cmd_export_dot(const Options& opt) {
  const TruncatedGraph g = graph_from_json(load_json(opt.in));
  save_text(opt.out, export_dot(g));
  summary("exported " + std::to_string(g.vertex_count()) + " vertices to DOT");
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"endgrid: lazily generated ray-inflation families and their end-structure "
               "analyses at finite truncation"};
  app.require_subcommand(1);
  Options opt;

  auto* build = app.add_subcommand("build-tree", "Build a regular order tree, optionally with tops");
  build->add_option("--profile", opt.profile, "Per-level branching, e.g. 2,2,3")->required();
  build->add_option("--height", opt.height, "Levels of the finite part")->required();
  build->add_option("--tops", opt.tops, "none | all | random:N | branch list like 0.0,1.1");
  build->add_option("--antichains", opt.antichains, "level | none");
  build->add_option("--seed", opt.seed, "Seed for random tops");
  build->add_option("--cardinal-label", opt.cardinal_label, "Display label for the surrogate cardinal");
  build->add_option("--out", opt.out, "Output path (- for stdout)");

  auto* ladders = app.add_subcommand("select-ladders", "Build ladders from the antichain rule");
  ladders->add_option("--in", opt.in)->required();
  ladders->add_option("--out", opt.out);

  auto* inflate_cmd = app.add_subcommand("inflate", "Ray inflation at a truncation depth");
  inflate_cmd->add_option("--in", opt.in)->required();
  inflate_cmd->add_option("--depth", opt.depth)->required();
  inflate_cmd->add_option("--out", opt.out);

  auto* lift = app.add_subcommand("lift", "Attach fresh matched rays along base rays");
  lift->add_option("--in", opt.in)->required();
  lift->add_option("--rays", opt.rays, "Comma-separated ray owners")->required();
  lift->add_option("--sizes", opt.sizes, "Comma-separated star sizes")->required();
  lift->add_option("--out", opt.out);

  auto* analyze = app.add_subcommand("analyze", "End-structure analyses");
  analyze->require_subcommand(1);
  auto* paths = analyze->add_subcommand("disjoint-paths", "Menger path packing with cut");
  paths->add_option("--in", opt.in)->required();
  paths->add_option("--source", opt.source, "Column owner or ids:0,1,2")->required();
  paths->add_option("--target", opt.target)->required();
  paths->add_option("--k", opt.k);
  paths->add_option("--format", opt.format, "json | text");
  paths->add_option("--out", opt.out);
  auto* combs = analyze->add_subcommand("combs", "Greedy comb packing");
  combs->add_option("--in", opt.in)->required();
  combs->add_option("--u", opt.u, "Target set")->required();
  combs->add_option("--spines", opt.spines, "Candidate spine owners")->required();
  combs->add_option("--m", opt.m);
  combs->add_option("--format", opt.format, "json | text");
  combs->add_option("--out", opt.out);
  auto* core = analyze->add_subcommand("greedy-core", "Iterated comb absorption");
  core->add_option("--in", opt.in)->required();
  core->add_option("--schedule", opt.schedule, "Depth schedule, e.g. 2,4,6")->required();
  core->add_option("--m", opt.m);
  core->add_option("--rounds-cap", opt.rounds_cap);
  core->add_option("--format", opt.format, "json | text");
  core->add_option("--out", opt.out);
  auto* rg = analyze->add_subcommand("ray-graph", "Witnessed graph on ray ids");
  rg->add_option("--in", opt.in)->required();
  rg->add_option("--rays", opt.rays, "Ray owners (default: all columns)");
  rg->add_option("--m", opt.m);
  rg->add_option("--format", opt.format, "json | text");
  rg->add_option("--out", opt.out);
  auto* frayed = analyze->add_subcommand("frayed", "Star / frayed star / frayed comb decomposition");
  frayed->add_option("--in", opt.in)->required();
  frayed->add_option("--threshold", opt.threshold)->required();
  frayed->add_option("--format", opt.format, "json | text");
  frayed->add_option("--out", opt.out);

  auto* certify = app.add_subcommand("certify", "Certificates");
  certify->require_subcommand(1);
  auto* attachment = certify->add_subcommand("attachment", "Attachment bounds above a level");
  attachment->add_option("--in", opt.in)->required();
  attachment->add_option("--depth", opt.depth)->required();
  attachment->add_option("--sigma", opt.sigma, "Cut level (default: half the height)");
  attachment->add_option("--format", opt.format, "json | text");
  attachment->add_option("--out", opt.out);
  auto* scale = certify->add_subcommand("scale", "No-small-core certification for a scale family");
  scale->add_option("--in", opt.in)->required();
  scale->add_option("--core-budget", opt.core_budget)->required();
  scale->add_option("--d", opt.d);
  scale->add_option("--mode", opt.mode, "auto | exact | sampled");
  scale->add_option("--seed", opt.seed, "Seed for sampled mode");
  scale->add_option("--format", opt.format, "json | text");
  scale->add_option("--out", opt.out);
  auto* star = certify->add_subcommand("star-search", "Bounded exhaustive star search");
  star->add_option("--in", opt.in)->required();
  star->add_option("--rays", opt.rays);
  star->add_option("--k", opt.k);
  star->add_option("--m", opt.m);
  star->add_option("--format", opt.format, "json | text");
  star->add_option("--out", opt.out);
  auto* pipeline = certify->add_subcommand("pipeline", "Greedy core, small core, star assembly");
  pipeline->add_option("--in", opt.in)->required();
  pipeline->add_option("--schedule", opt.schedule)->required();
  pipeline->add_option("--m", opt.m);
  pipeline->add_option("--core-budget", opt.core_budget);
  pipeline->add_option("--k", opt.k);
  pipeline->add_option("--format", opt.format, "json | text");
  pipeline->add_option("--out", opt.out);

  auto* dot = app.add_subcommand("export-dot", "DOT rendering of a graph file");
  dot->add_option("--in", opt.in)->required();
  dot->add_option("--out", opt.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    std::cout << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& err) {
    std::cerr << err.what() << '\n';
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build_tree(opt);
    if (ladders->parsed()) return cmd_select_ladders(opt);
    if (inflate_cmd->parsed()) return cmd_inflate(opt);
    if (lift->parsed()) return cmd_lift(opt);
    if (analyze->parsed()) {
      if (paths->parsed()) return cmd_disjoint_paths(opt);
      if (combs->parsed()) return cmd_combs(opt);
      if (core->parsed()) return cmd_greedy_core(opt);
      if (rg->parsed()) return cmd_ray_graph(opt);
      if (frayed->parsed()) return cmd_frayed(opt);
    }
    if (certify->parsed()) {
      if (attachment->parsed()) return cmd_certify_attachment(opt);
      if (scale->parsed()) return cmd_certify_scale(opt);
      if (star->parsed()) return cmd_star_search(opt);
      if (pipeline->parsed()) return cmd_pipeline(opt);
    }
    if (dot->parsed()) return cmd_export_dot(opt);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const InternalError& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kExitInternal;
  } catch (const CertificationError& err) {
    std::cerr << "certification failure: " << err.what() << '\n';
    return kExitFail;
  } catch (const InvalidArgument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace endgrid
