#include "mwnet/graph.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <set>
#include <unordered_map>

namespace mwnet {

int MatrixWeightedGraph::find_edge(int u, int v) const {
    for (int i = 0; i < num_edges(); ++i) {
        const Edge& e = edges[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return i;
    }
    return -1;
}

std::vector<int> MatrixWeightedGraph::incident_edges(int node) const {
    std::vector<int> out;
    for (int i = 0; i < num_edges(); ++i)
        if (edges[i].touches(node)) out.push_back(i);
    return out;
}

bool GaugeAssignment::is_identity() const {
    return std::all_of(sigma.begin(), sigma.end(), [](int s) { return s == 1; });
}

Matrix GaugeAssignment::to_matrix(int dim) const {
    const int n = static_cast<int>(sigma.size());
    Matrix d = Matrix::Zero(n * dim, n * dim);
    for (int i = 0; i < n; ++i)
        d.block(i * dim, i * dim, dim, dim) = sigma[i] * Matrix::Identity(dim, dim);
    return d;
}

Vector GaugeAssignment::apply(const Vector& x, int dim) const {
    Vector y = x;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] < 0) y.segment(static_cast<int>(i) * dim, dim) *= -1.0;
    return y;
}

Matrix symmetrize_checked(const Matrix& m, const Tolerances& tol) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol.sym * scale)
        throw Error(ErrorCode::Asymmetric, "weight matrix is not symmetric (deviation " +
                                               std::to_string(asym) + ")");
    return 0.5 * (m + m.transpose());
}

SignClass classify_weight(const Matrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "weight must be square");
    const Matrix sym = symmetrize_checked(m, tol);
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    const Vector ev = es.eigenvalues();
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 0.0);
    const double cut = tol.def * std::max(scale, 1.0);

    const double lo = ev.minCoeff();
    const double hi = ev.maxCoeff();
    if (hi <= cut && lo >= -cut) return {0, Definiteness::Zero};
    if (lo >= -cut) {
        const bool definite = lo > cut;
        return {+1, definite ? Definiteness::Definite : Definiteness::Semidefinite};
    }
    if (hi <= cut) {
        const bool definite = hi < -cut;
        return {-1, definite ? Definiteness::Definite : Definiteness::Semidefinite};
    }
    throw Error(ErrorCode::IndefiniteWeight, "weight matrix has eigenvalues of both signs");
}

namespace {

bool graph_is_connected(int n, const std::vector<Edge>& edges) {
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

}  // namespace

MatrixWeightedGraph validate_graph(const RawGraph& raw, const Tolerances& tol) {
    if (raw.dim <= 0) throw Error(ErrorCode::InvalidDocument, "state dimension must be positive");
    MatrixWeightedGraph g;
    g.dim = raw.dim;
    g.node_ids = raw.nodes;

    std::unordered_map<std::string, int> index;
    for (int i = 0; i < g.num_nodes(); ++i) {
        if (!index.emplace(g.node_ids[i], i).second)
            throw Error(ErrorCode::InvalidDocument, "duplicate node id: " + g.node_ids[i]);
    }

    std::set<std::pair<int, int>> seen;
    for (const RawEdge& re : raw.edges) {
        auto iu = index.find(re.u);
        auto iv = index.find(re.v);
        if (iu == index.end() || iv == index.end())
            throw Error(ErrorCode::InvalidDocument, "edge references unknown node");
        int u = iu->second, v = iv->second;
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at node " + re.u);
        if (re.weight.rows() != g.dim || re.weight.cols() != g.dim)
            throw Error(ErrorCode::DimensionMismatch, "edge weight is not d x d");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + re.u + "-" + re.v);

        Edge e;
        e.u = u;
        e.v = v;
        e.weight = symmetrize_checked(re.weight, tol);
        e.sign_class = classify_weight(e.weight, tol);
        if (e.sign_class.definiteness == Definiteness::Zero) continue;  // zero weight = no edge
        g.edges.push_back(std::move(e));
    }

    g.connected = graph_is_connected(g.num_nodes(), g.edges);
    return g;
}

Laplacian build_laplacian(const MatrixWeightedGraph& g) {
    const int n = g.num_nodes();
    const int d = g.dim;
    Laplacian lap;
    lap.num_nodes = n;
    lap.dim = d;
    lap.blocks = Matrix::Zero(n * d, n * d);
    for (const Edge& e : g.edges) {
        const Matrix abs_w = e.sign_class.sign * e.weight;
        lap.blocks.block(e.u * d, e.u * d, d, d) += abs_w;
        lap.blocks.block(e.v * d, e.v * d, d, d) += abs_w;
        lap.blocks.block(e.u * d, e.v * d, d, d) -= e.weight;
        lap.blocks.block(e.v * d, e.u * d, d, d) -= e.weight;
    }
    return lap;
}

MatrixWeightedGraph lift_unsigned(const RawGraph& raw, const Tolerances& tol) {
    MatrixWeightedGraph g = validate_graph(raw, tol);
    for (const Edge& e : g.edges)
        if (e.sign_class.sign < 0)
            throw Error(ErrorCode::NegativeWeightInUnsignedInput,
                        "unsigned input contains a negative-type weight on edge " +
                            g.node_ids[e.u] + "-" + g.node_ids[e.v]);
    return g;
}

}  // namespace mwnet
