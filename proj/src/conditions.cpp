#include "mwnet/conditions.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <set>

#include "mwnet/linalg.hpp"

namespace mwnet {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

PathGroups group_paths_by_sign(const std::vector<PathDescriptor>& paths, const Matrix& b_l,
                               const Matrix& b_m, int dim, const Tolerances& tol) {
    PathGroups out;
    const Matrix base = sum_subspaces({b_l, b_m}, dim, tol);

    std::vector<Matrix> pos_spaces{base}, neg_spaces{base};
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].effective_sign > 0) {
            out.group_pos.push_back(static_cast<int>(i));
            pos_spaces.push_back(paths[i].null_span);
        } else {
            out.group_neg.push_back(static_cast<int>(i));
            neg_spaces.push_back(paths[i].null_span);
        }
    }
    out.s_pos = intersect_subspaces(pos_spaces, dim, tol);
    out.s_neg = intersect_subspaces(neg_spaces, dim, tol);

    const bool pos_trivial = out.s_pos.cols() == 0;
    const bool neg_trivial = out.s_neg.cols() == 0;
    out.grouping_holds = pos_trivial != neg_trivial;
    if (out.grouping_holds) out.forced_relation = pos_trivial ? +1 : -1;
    return out;
}

bool check_null_independence(const PathDescriptor& path, const Tolerances& tol) {
    int cols = 0;
    for (const Matrix& b : path.edge_null_bases) cols += static_cast<int>(b.cols());
    if (cols == 0) return true;
    const int dim = static_cast<int>(path.edge_null_bases.front().rows());
    Matrix stacked(dim, cols);
    int at = 0;
    for (const Matrix& b : path.edge_null_bases) {
        stacked.middleCols(at, b.cols()) = b;
        at += static_cast<int>(b.cols());
    }
    return numerical_rank(stacked, tol) == cols;
}

bool check_nbs_path_condition(const PathDescriptor& path, const Matrix& b_l, const Matrix& b_m,
                              const Tolerances& tol) {
    if (path.nbs_edge_positions.size() > 1)
        throw Error(ErrorCode::MultipleNbsEdgesOnPath,
                    "path carries more than one balancing-set edge");
    if (path.nbs_edge_positions.empty()) return true;
    const int n = path.nbs_edge_positions.front();
    const int dim = static_cast<int>(b_l.rows());
    const Matrix shared = intersect_subspaces({b_l, b_m}, dim, tol);
    for (int k = 0; k < path.length(); ++k) {
        if (k == n) continue;
        const Matrix hit = intersect_subspaces({shared, path.edge_null_bases[k]}, dim, tol);
        if (hit.cols() > 0) return false;
    }
    return true;
}

ConstraintSystem build_path_constraint(const MatrixWeightedGraph& g, const PathDescriptor& path,
                                       const Matrix& a_bar, int relation, const Tolerances& tol) {
    ConstraintSystem cs;
    const int d = g.dim;
    const int rho = path.length();
    cs.rho = rho;
    cs.dim = d;
    cs.relation = relation;
    cs.a_bar = a_bar;

    std::vector<Matrix> abs_w;
    cs.alphas.assign(rho + 1, 1);
    for (int k = 0; k < rho; ++k) {
        const Edge& e = g.edges[path.edge_indices[k]];
        cs.edge_signs.push_back(e.sign_class.sign);
        cs.alphas[k + 1] = cs.alphas[k] * e.sign_class.sign;
        abs_w.push_back(e.sign_class.sign * e.weight);
    }
    const int path_sign = cs.alphas[rho];

    // Raw block system in the node variables x_{tau_1} .. x_{tau_{rho+1}}:
    // endpoint constraint, relation row, one row per edge.
    cs.gamma0 = Matrix::Zero((rho + 2) * d, (rho + 1) * d);
    cs.gamma0.block(0, 0, d, d) = a_bar;
    cs.gamma0.block(d, 0, d, d) = Matrix::Identity(d, d);
    cs.gamma0.block(d, rho * d, d, d) = -relation * Matrix::Identity(d, d);
    for (int k = 0; k < rho; ++k) {
        cs.gamma0.block((k + 2) * d, k * d, d, d) = abs_w[k];
        cs.gamma0.block((k + 2) * d, (k + 1) * d, d, d) = -cs.edge_signs[k] * abs_w[k];
    }

    // Change of variables (x_1, w_k = x_{k+1} - s_k x_k) decouples the system.
    if (relation == path_sign) {
        cs.r_block = Matrix::Zero(d, rho * d);
        cs.q_block = Matrix::Zero(rho * d, rho * d);
        for (int k = 0; k < rho; ++k) {
            cs.r_block.block(0, k * d, d, d) = -cs.alphas[k + 1] * Matrix::Identity(d, d);
            cs.q_block.block(k * d, k * d, d, d) = -cs.edge_signs[k] * abs_w[k];
        }
        const Matrix r_pinv = cs.r_block.completeOrthogonalDecomposition().pseudoInverse();
        cs.gamma_bar =
            cs.q_block * (Matrix::Identity(rho * d, rho * d) - r_pinv * cs.r_block);
    } else {
        // Relation opposite to the path sign: the relation row couples x_1 to
        // the w variables, so the whole reduced system is kept.
        cs.gamma_bar0 = Matrix::Zero((rho + 2) * d, (rho + 1) * d);
        cs.gamma_bar0.block(0, 0, d, d) = 2.0 * Matrix::Identity(d, d);
        for (int k = 1; k <= rho; ++k)
            cs.gamma_bar0.block(0, k * d, d, d) = cs.alphas[k] * Matrix::Identity(d, d);
        cs.gamma_bar0.block(d, 0, d, d) = a_bar;
        for (int k = 0; k < rho; ++k)
            cs.gamma_bar0.block((k + 2) * d, (k + 1) * d, d, d) = -cs.edge_signs[k] * abs_w[k];

        if (path.nbs_edge_positions.size() == 1) {
            cs.nbs_position = path.nbs_edge_positions.front();
            cs.a_hat = Matrix::Zero(2 * d, d);
            cs.a_hat.topRows(d) = a_bar;
            cs.a_hat.bottomRows(d) = abs_w[cs.nbs_position];
        } else {
            cs.a_hat = a_bar;
        }
    }
    return cs;
}

RankSplit rank_split(const Matrix& r_block, const Matrix& q_block, const Tolerances& tol) {
    RankSplit out;
    out.rank_r = numerical_rank(r_block, tol);
    const Matrix r_pinv = r_block.completeOrthogonalDecomposition().pseudoInverse();
    out.rank_q_compressed = numerical_rank(q_block - q_block * r_pinv * r_block, tol);
    Matrix stacked(r_block.rows() + q_block.rows(), r_block.cols());
    stacked.topRows(r_block.rows()) = r_block;
    stacked.bottomRows(q_block.rows()) = q_block;
    out.rank_stacked = numerical_rank(stacked, tol);
    out.identity_holds = out.rank_stacked == out.rank_r + out.rank_q_compressed;
    return out;
}

namespace {

// Common null space of a continent's internally inconsistent induced edges
// (its own balancing set). {0} under a gauge conflict; I_d for a lone node.
Matrix continent_null_basis(const MatrixWeightedGraph& g, const Continent& k,
                            const Tolerances& tol) {
    if (!k.gauge_consistent) return Matrix(g.dim, 0);
    std::vector<Matrix> nulls;
    for (int ei : k.edge_indices) {
        const Edge& e = g.edges[ei];
        if (e.sign_class.sign != k.gauge_of(e.u) * k.gauge_of(e.v))
            nulls.push_back(null_space(e.sign_class.sign * e.weight, tol));
    }
    return intersect_subspaces(nulls, g.dim, tol);
}

Vector first_common_direction(const Matrix& a, const Matrix& b, int dim, const Tolerances& tol) {
    const Matrix hit = intersect_subspaces({a, b}, dim, tol);
    if (hit.cols() == 0) return Vector();
    return hit.col(0);
}

// Exact null vector exposing dependent edge nulls on a path: supported on the
// interior stretch between the two edges sharing a null direction.
Vector dependence_witness(const MatrixWeightedGraph& g, const PathDescriptor& path, int i, int j,
                          const Vector& v) {
    Vector x = Vector::Zero(g.num_nodes() * g.dim);
    Vector cur = v;
    x.segment(path.node_sequence[i + 1] * g.dim, g.dim) = cur;
    for (int k = i + 1; k < j; ++k) {
        cur *= static_cast<double>(g.edges[path.edge_indices[k]].sign_class.sign);
        x.segment(path.node_sequence[k + 1] * g.dim, g.dim) = cur;
    }
    return x;
}

// Gauge-form null vector over a second partition: the balancing partition with
// the stretch of path nodes between the balancing edge and edge i flipped.
Vector second_gauge_witness(const MatrixWeightedGraph& g, const PathDescriptor& path,
                            const Partition& partition, int i, const Vector& v) {
    GaugeAssignment gauge = gauge_from_partition(partition);
    const int n = path.nbs_edge_positions.front();
    const int lo = std::min(n, i);
    const int hi = std::max(n, i);
    for (int k = lo + 1; k <= hi; ++k) gauge.sigma[path.node_sequence[k]] *= -1;
    Vector x(g.num_nodes() * g.dim);
    for (int node = 0; node < g.num_nodes(); ++node)
        x.segment(node * g.dim, g.dim) = static_cast<double>(gauge.sigma[node]) * v;
    return x;
}

bool attach_if_null(const MatrixWeightedGraph& g, const Vector& candidate,
                    ConditionReport& report) {
    if (candidate.size() == 0) return false;
    if (!verify_null_vector(g, candidate, 1e-10).passes) return false;
    report.witness = candidate;
    return true;
}

}  // namespace

ConditionReport full_verdict(const MatrixWeightedGraph& g, const AnalysisOptions& opts) {
    ConditionReport report;
    const Tolerances& tol = opts.tol;
    report.connected = g.connected;
    report.continents = detect_continents(g);

    // Pair analysis runs over the continents that carry a definite edge; when
    // none does, every (singleton) continent takes part.
    bool any_definite = false;
    for (const Continent& k : report.continents) any_definite |= k.has_definite_edge;
    for (std::size_t c = 0; c < report.continents.size(); ++c)
        if (!any_definite || report.continents[c].has_definite_edge)
            report.effective_continents.push_back(static_cast<int>(c));

    report.nbs = enumerate_nbs(g, report.continents, opts.partition_cap, tol);
    report.cond1_unique_nbs = report.nbs.unique;
    const BalancingSet* unique_nbs = report.nbs.unique ? &report.nbs.sets.front() : nullptr;
    if (unique_nbs) report.nbs_null = nbs_null_basis(g, *unique_nbs, report.continents, tol);

    for (int c : report.effective_continents)
        report.continent_null.push_back(continent_null_basis(g, report.continents[c], tol));

    std::set<int> nbs_edges;
    if (unique_nbs) nbs_edges.insert(unique_nbs->edge_indices.begin(), unique_nbs->edge_indices.end());

    std::vector<char> covered(g.num_nodes(), 0);
    for (int c : report.effective_continents)
        for (int v : report.continents[c].nodes) covered[v] = 1;

    const int pairs_n = static_cast<int>(report.effective_continents.size());
    for (int a = 0; a < pairs_n; ++a) {
        for (int b = a + 1; b < pairs_n; ++b) {
            PairReport pair;
            pair.l = report.effective_continents[a];
            pair.m = report.effective_continents[b];
            PathEnumeration en = enumerate_connecting_paths(g, report.continents, pair.l, pair.m,
                                                            opts.path_cap, tol);
            pair.paths = std::move(en.paths);
            pair.node_independent = en.node_independent;

            std::set<int> pair_edges, primary_edges;
            for (PathDescriptor& p : pair.paths) {
                for (std::size_t k = 0; k < p.edge_indices.size(); ++k)
                    if (nbs_edges.count(p.edge_indices[k]))
                        p.nbs_edge_positions.push_back(static_cast<int>(k));
                p.primary = p.nbs_edge_positions.size() <= 1;
                for (int v : p.node_sequence) covered[v] = 1;
                pair_edges.insert(p.edge_indices.begin(), p.edge_indices.end());
                if (p.primary) primary_edges.insert(p.edge_indices.begin(), p.edge_indices.end());
                pair.all_length_one &= p.length() == 1;
                pair.null_independence &= check_null_independence(p, tol);
            }
            pair.bridge_edges.assign(pair_edges.begin(), pair_edges.end());
            pair.primary_coverage = std::all_of(pair_edges.begin(), pair_edges.end(),
                                                [&](int e) { return primary_edges.count(e) > 0; });

            const Matrix& b_l = report.continent_null[a];
            const Matrix& b_m = report.continent_null[b];
            if (!pair.paths.empty())
                pair.groups = group_paths_by_sign(pair.paths, b_l, b_m, g.dim, tol);
            else
                pair.groups.grouping_holds = true;  // pair connects only through other continents

            for (const PathDescriptor& p : pair.paths) {
                if (p.nbs_edge_positions.size() == 1)
                    pair.nbs_path_condition &= check_nbs_path_condition(p, b_l, b_m, tol);
                else if (p.nbs_edge_positions.size() > 1)
                    pair.nbs_path_condition = false;
            }

            report.cond2_grouping &= pair.paths.empty() || pair.groups.grouping_holds;
            report.cond3_node_independent &= pair.node_independent;
            report.cond3_primary_coverage &= pair.primary_coverage;
            report.cond3_all_length_one &= pair.all_length_one;
            report.cond4_null_independence &= pair.null_independence;
            report.cond5_nbs_paths &= pair.nbs_path_condition;
            report.pairs.push_back(std::move(pair));
        }
    }

    report.coverage = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });

    const bool core = report.connected && report.cond1_unique_nbs && report.cond2_grouping &&
                      report.cond4_null_independence && report.cond5_nbs_paths;
    // The first two results are sufficiency-only: a failed topology condition
    // leaves them inconclusive, while a violated core (necessary) condition is
    // a genuine refutation.
    auto settle = [&](bool shape_ok, bool extras_ok) {
        if (!shape_ok) return Verdict::NotApplicable;
        if (!core) return Verdict::Fails;
        if (!extras_ok || !report.coverage) return Verdict::Inconclusive;
        return Verdict::Holds;
    };
    report.theorem_3_8 = settle(true, report.cond3_node_independent);
    report.corollary_3_11 = settle(true, report.cond3_primary_coverage);
    report.theorem_3_12 = settle(report.cond3_all_length_one, true);

    bool all_definite_continents = true;
    for (int c : report.effective_continents)
        all_definite_continents &= report.continents[c].has_definite_edge;
    report.theorem_3_12_biconditional = report.cond3_all_length_one && report.coverage &&
                                        report.connected && all_definite_continents &&
                                        g.num_nodes() > 0;

    const bool certified = report.theorem_3_8 == Verdict::Holds ||
                           report.corollary_3_11 == Verdict::Holds ||
                           report.theorem_3_12 == Verdict::Holds;
    if (certified) {
        report.predicted_gauge = gauge_from_partition(unique_nbs->partition);
        report.predicted_psi = report.nbs_null;
        report.predicted = report.predicted_gauge->is_identity() ? SolutionKind::Consensus
                                                                 : SolutionKind::Bipartite;
        return report;
    }

    if (!core) {
        // A violated necessary condition rules out the gauge form. When every
        // node sits in a gauge-conflicted continent the null space collapses
        // entirely: definite edges pin each continent to zero.
        bool all_conflicted = g.num_nodes() > 0;
        for (const Continent& k : report.continents)
            all_conflicted &= !k.gauge_consistent;
        report.predicted = all_conflicted ? SolutionKind::Trivial : SolutionKind::Cluster;

        // Try to attach an explicit non-gauge null vector for the path-local
        // violations; candidates are verified edge-by-edge before use.
        for (std::size_t pi = 0; pi < report.pairs.size() && report.witness.size() == 0; ++pi) {
            const PairReport& pair = report.pairs[pi];
            for (const PathDescriptor& p : pair.paths) {
                if (report.witness.size() > 0) break;
                // dependent edge nulls along one path
                for (int i = 0; i < p.length() && report.witness.size() == 0; ++i)
                    for (int j = i + 1; j < p.length() && report.witness.size() == 0; ++j) {
                        const Vector v = first_common_direction(p.edge_null_bases[i],
                                                                p.edge_null_bases[j], g.dim, tol);
                        if (v.size())
                            attach_if_null(g, dependence_witness(g, p, i, j, v), report);
                    }
                // balancing-edge path leaking the shared continent null
                if (report.witness.size() == 0 && unique_nbs &&
                    p.nbs_edge_positions.size() == 1) {
                    const Matrix b_lm = intersect_subspaces(
                        {report.continent_null[std::distance(
                             report.effective_continents.begin(),
                             std::find(report.effective_continents.begin(),
                                       report.effective_continents.end(), pair.l))],
                         report.continent_null[std::distance(
                             report.effective_continents.begin(),
                             std::find(report.effective_continents.begin(),
                                       report.effective_continents.end(), pair.m))]},
                        g.dim, tol);
                    for (int i = 0; i < p.length() && report.witness.size() == 0; ++i) {
                        if (i == p.nbs_edge_positions.front()) continue;
                        const Vector v =
                            first_common_direction(b_lm, p.edge_null_bases[i], g.dim, tol);
                        if (v.size())
                            attach_if_null(
                                g, second_gauge_witness(g, p, unique_nbs->partition, i, v),
                                report);
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace mwnet
