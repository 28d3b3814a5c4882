#pragma once

#include <string>

#include "mwnet/conditions.hpp"
#include "mwnet/dynamics.hpp"
#include "mwnet/generator.hpp"

namespace mwnet {

/// Parses the graph document: {"d": int, "nodes": [ids], "edges": [{"u","v","w"}]}
/// with w a row-major d x d array. Unknown keys are rejected
/// (Error{InvalidDocument}).
RawGraph parse_graph_document(const std::string& text);

/// Serializes a graph back to the document format (stable key order).
std::string graph_document(const MatrixWeightedGraph& g);

/// Condition report as JSON with the fixed external key set
/// (verdict_theorem_3_8, verdict_corollary_3_11, verdict_theorem_3_12, nbs,
/// continents, pairs, ...). `config` is embedded verbatim.
std::string report_json(const ConditionReport& report, const MatrixWeightedGraph& g,
                        const std::string& config_json);

/// Simulation outcome document: label, terminal state, spectral prediction and
/// agreement residual.
std::string outcome_json(const OutcomeLabel& outcome, const Vector& terminal,
                         const Vector& predicted_limit, double agreement_residual,
                         std::uint64_t seed, const std::string& config_json);

/// Expectation document emitted alongside generated graphs.
std::string expectation_json(const SynthesizedInstance& inst, const std::string& config_json);

}  // namespace mwnet
