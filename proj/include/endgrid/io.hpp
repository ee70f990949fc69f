#pragma once

#include <string>

#include "json.hpp"

#include "endgrid/certify.hpp"

namespace endgrid {

inline constexpr int kSchemaVersion = 1;

// Tree files. Ladders are emitted when the object is a sparse T-graph and
// required when parsing one.
nlohmann::json tree_to_json(const OrderTree& tree);
nlohmann::json sparse_to_json(const SparseTGraph& g);
OrderTree tree_from_json(const nlohmann::json& j);
SparseTGraph sparse_from_json(const nlohmann::json& j);
bool has_ladders(const nlohmann::json& j);

// Graph files: lossless round trip including provenance and depth labels.
nlohmann::json graph_to_json(const TruncatedGraph& g);
TruncatedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json scale_to_json(const ScaleFamily& s);
ScaleFamily scale_from_json(const nlohmann::json& j);

/// DOT rendering with nodes labelled "(owner|pos)" and ranked by position.
std::string export_dot(const TruncatedGraph& g);

nlohmann::json ray_to_json(const Ray& ray);
nlohmann::json star_to_json(const StarOfRays& star);
nlohmann::json comb_to_json(const Comb& comb);

// Certificates: uniform envelope with kind, parameters, witnesses, verdict.
nlohmann::json certificate_json(const AttachmentBoundReport& report);
nlohmann::json certificate_json(const StarSearchResult& result);
nlohmann::json certificate_json(const ScaleObstructionReport& report);
nlohmann::json certificate_json(const PipelineResult& result);
nlohmann::json report_json(const NoCoreReport& report);
nlohmann::json report_json(const GreedyCoreResult& result);
nlohmann::json report_json(const RayGraphResult& result);
nlohmann::json report_json(const DisjointPathsResult& result);
nlohmann::json report_json(const FrayedDecomposition& decomposition);
nlohmann::json report_json(const ScaleReport& report);
nlohmann::json report_json(const StarPropertyReport& report, const OrderTree& tree);
nlohmann::json report_json(const DoubleStarReport& report, const OrderTree& tree);

nlohmann::json load_json(const std::string& path);  // "-" reads stdin
void save_json(const std::string& path, const nlohmann::json& j);  // "-" writes stdout
void save_text(const std::string& path, const std::string& text);

}  // namespace endgrid
