#include "mwnet/io.hpp"

#include <json.hpp>

namespace mwnet {

using Json = nlohmann::ordered_json;

namespace {

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed) ok |= it.key() == key;
        if (!ok)
            throw Error(ErrorCode::InvalidDocument,
                        "unknown key \"" + it.key() + "\" in " + where);
    }
}

Matrix parse_weight(const Json& w, int d) {
    Matrix m(d, d);
    if (!w.is_array()) throw Error(ErrorCode::InvalidDocument, "edge weight must be an array");
    if (!w.empty() && w.front().is_array()) {  // nested rows
        if (static_cast<int>(w.size()) != d)
            throw Error(ErrorCode::InvalidDocument, "weight must have d rows");
        for (int i = 0; i < d; ++i) {
            if (static_cast<int>(w[i].size()) != d)
                throw Error(ErrorCode::InvalidDocument, "weight row must have d entries");
            for (int j = 0; j < d; ++j) m(i, j) = w[i][j].get<double>();
        }
        return m;
    }
    if (static_cast<int>(w.size()) != d * d)
        throw Error(ErrorCode::InvalidDocument, "weight must hold d*d numbers (row-major)");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = w[i * d + j].get<double>();
    return m;
}

Json flat(const Matrix& m) {  // row-major
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

Json flat(const Vector& v) {
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json parse_config(const std::string& config_json) {
    return config_json.empty() ? Json::object() : Json::parse(config_json);
}

}  // namespace

RawGraph parse_graph_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidDocument, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::InvalidDocument, "document must be an object");
    reject_unknown(doc, {"d", "nodes", "edges"}, "graph document");
    if (!doc.contains("d") || !doc.contains("nodes") || !doc.contains("edges"))
        throw Error(ErrorCode::InvalidDocument, "graph document needs d, nodes, edges");

    RawGraph raw;
    if (!doc["d"].is_number_integer())
        throw Error(ErrorCode::InvalidDocument, "d must be an integer");
    raw.dim = doc["d"].get<int>();
    for (const Json& id : doc["nodes"]) {
        if (!id.is_string()) throw Error(ErrorCode::InvalidDocument, "node ids must be strings");
        raw.nodes.push_back(id.get<std::string>());
    }
    for (const Json& e : doc["edges"]) {
        if (!e.is_object()) throw Error(ErrorCode::InvalidDocument, "edges must be objects");
        reject_unknown(e, {"u", "v", "w"}, "edge");
        if (!e.contains("u") || !e.contains("v") || !e.contains("w"))
            throw Error(ErrorCode::InvalidDocument, "edge needs u, v, w");
        raw.edges.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(),
                             parse_weight(e["w"], raw.dim)});
    }
    return raw;
}

std::string graph_document(const MatrixWeightedGraph& g) {
    Json doc;
    doc["d"] = g.dim;
    doc["nodes"] = g.node_ids;
    doc["edges"] = Json::array();
    for (const Edge& e : g.edges) {
        Json edge;
        edge["u"] = g.node_ids[e.u];
        edge["v"] = g.node_ids[e.v];
        edge["w"] = flat(e.weight);
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

std::string report_json(const ConditionReport& report, const MatrixWeightedGraph& g,
                        const std::string& config_json) {
    Json doc;
    doc["config"] = parse_config(config_json);
    doc["connected"] = report.connected;

    doc["continents"] = Json::array();
    for (const Continent& k : report.continents) {
        Json item;
        Json ids = Json::array();
        for (int v : k.nodes) ids.push_back(g.node_ids[v]);
        item["nodes"] = std::move(ids);
        item["gauge"] = k.gauge;
        item["gauge_consistent"] = k.gauge_consistent;
        item["has_definite_edge"] = k.has_definite_edge;
        doc["continents"].push_back(std::move(item));
    }

    Json nbs;
    nbs["unique"] = report.nbs.unique;
    nbs["count"] = report.nbs.sets.size();
    nbs["partitions_enumerated"] = report.nbs.partitions_enumerated;
    nbs["sets"] = Json::array();
    for (const BalancingSet& set : report.nbs.sets) {
        Json item;
        Json v1 = Json::array(), v2 = Json::array();
        for (int v : set.partition.v1()) v1.push_back(g.node_ids[v]);
        for (int v : set.partition.v2()) v2.push_back(g.node_ids[v]);
        item["v1"] = std::move(v1);
        item["v2"] = std::move(v2);
        Json edges = Json::array();
        for (int ei : set.edge_indices)
            edges.push_back(Json::array({g.node_ids[g.edges[ei].u], g.node_ids[g.edges[ei].v]}));
        item["edges"] = std::move(edges);
        item["null_dimension"] = set.null_basis.cols();
        item["null_basis"] = flat(set.null_basis);
        nbs["sets"].push_back(std::move(item));
    }
    doc["nbs"] = std::move(nbs);

    doc["pairs"] = Json::array();
    for (const PairReport& pair : report.pairs) {
        Json item;
        item["continents"] = Json::array({pair.l, pair.m});
        Json paths = Json::array();
        for (const PathDescriptor& p : pair.paths) {
            Json pd;
            Json seq = Json::array();
            for (int v : p.node_sequence) seq.push_back(g.node_ids[v]);
            pd["nodes"] = std::move(seq);
            pd["sign"] = p.sign;
            pd["effective_sign"] = p.effective_sign;
            pd["null_span_dimension"] = p.null_span.cols();
            pd["union_equals_span"] = p.union_equals_span;
            pd["primary"] = p.primary;
            pd["nbs_edge_positions"] = p.nbs_edge_positions;
            paths.push_back(std::move(pd));
        }
        item["paths"] = std::move(paths);
        item["group_positive"] = pair.groups.group_pos;
        item["group_negative"] = pair.groups.group_neg;
        item["s_positive_dimension"] = pair.groups.s_pos.cols();
        item["s_negative_dimension"] = pair.groups.s_neg.cols();
        item["grouping_holds"] = pair.groups.grouping_holds;
        item["forced_relation"] = pair.groups.forced_relation;
        item["node_independent"] = pair.node_independent;
        item["primary_coverage"] = pair.primary_coverage;
        item["all_length_one"] = pair.all_length_one;
        item["null_independence"] = pair.null_independence;
        item["nbs_path_condition"] = pair.nbs_path_condition;
        doc["pairs"].push_back(std::move(item));
    }

    Json conds;
    conds["unique_nbs"] = report.cond1_unique_nbs;
    conds["pair_grouping"] = report.cond2_grouping;
    conds["node_independent_paths"] = report.cond3_node_independent;
    conds["primary_path_coverage"] = report.cond3_primary_coverage;
    conds["all_paths_length_one"] = report.cond3_all_length_one;
    conds["edge_null_independence"] = report.cond4_null_independence;
    conds["nbs_path_condition"] = report.cond5_nbs_paths;
    conds["coverage"] = report.coverage;
    doc["conditions"] = std::move(conds);

    doc["verdict_theorem_3_8"] = to_string(report.theorem_3_8);
    doc["verdict_corollary_3_11"] = to_string(report.corollary_3_11);
    doc["verdict_theorem_3_12"] = to_string(report.theorem_3_12);
    doc["theorem_3_12_necessary_and_sufficient"] = report.theorem_3_12_biconditional;

    doc["predicted"] = report.predicted ? Json(to_string(*report.predicted)) : Json(nullptr);
    if (report.predicted_gauge)
        doc["predicted_gauge"] = report.predicted_gauge->sigma;
    else
        doc["predicted_gauge"] = nullptr;
    doc["predicted_psi"] = flat(report.predicted_psi);
    doc["witnesses"] = report.witness.size() ? Json::array({flat(report.witness)}) : Json::array();
    return doc.dump(2) + "\n";
}

std::string outcome_json(const OutcomeLabel& outcome, const Vector& terminal,
                         const Vector& predicted_limit, double agreement_residual,
                         std::uint64_t seed, const std::string& config_json) {
    Json doc;
    doc["config"] = parse_config(config_json);
    doc["seed"] = seed;
    doc["label"] = to_string(outcome.kind);
    doc["signs"] = outcome.signs;
    doc["terminal_residual"] = outcome.terminal_residual;
    doc["agree_tolerance"] = outcome.agree_tolerance;
    doc["terminal"] = flat(terminal);
    doc["predicted_limit"] = flat(predicted_limit);
    doc["agreement_residual"] = agreement_residual;
    return doc.dump(2) + "\n";
}

std::string expectation_json(const SynthesizedInstance& inst, const std::string& config_json) {
    Json doc;
    doc["config"] = parse_config(config_json);
    doc["expected"] = to_string(inst.expected);
    doc["violation"] = to_string(inst.violation);
    if (inst.expected_gauge)
        doc["expected_gauge"] = inst.expected_gauge->sigma;
    else
        doc["expected_gauge"] = nullptr;
    doc["expected_psi"] = flat(inst.expected_psi);
    doc["witness"] = flat(inst.witness);
    return doc.dump(2) + "\n";
}

}  // namespace mwnet
