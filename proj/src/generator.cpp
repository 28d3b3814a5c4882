#include "mwnet/generator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace mwnet {

const char* to_string(ViolationTarget v) {
    switch (v) {
        case ViolationTarget::None: return "none";
        case ViolationTarget::Condition2: return "condition2";
        case ViolationTarget::Condition3: return "condition3";
        case ViolationTarget::Condition4: return "condition4";
        case ViolationTarget::Condition5: return "condition5";
        case ViolationTarget::IndefiniteCycle: return "indefinite_cycle";
    }
    return "?";
}

ViolationTarget violation_from_string(const std::string& s) {
    if (s == "none") return ViolationTarget::None;
    if (s == "condition2") return ViolationTarget::Condition2;
    if (s == "condition3") return ViolationTarget::Condition3;
    if (s == "condition4") return ViolationTarget::Condition4;
    if (s == "condition5") return ViolationTarget::Condition5;
    if (s == "indefinite_cycle") return ViolationTarget::IndefiniteCycle;
    throw Error(ErrorCode::InvalidDocument, "unknown violation target: " + s);
}

Vector random_state(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = dist(rng);
    return x;
}

Matrix make_psd(int dim, const Matrix& null_basis, std::mt19937_64& rng) {
    const int k = static_cast<int>(null_basis.cols());
    if (k >= dim) return Matrix::Zero(dim, dim);
    // Orthonormal complement of the prescribed null space.
    const Matrix proj = Matrix::Identity(dim, dim) - null_basis * null_basis.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> es(proj);
    const Matrix range = es.eigenvectors().rightCols(dim - k);

    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Matrix g = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim - k; ++i) {
        const double lambda = 0.1 + dist(rng);  // eigen-gap at least 0.1
        g += lambda * range.col(i) * range.col(i).transpose();
    }
    return 0.5 * (g + g.transpose());
}

MatrixWeightedGraph disjoint_union(const MatrixWeightedGraph& a, const MatrixWeightedGraph& b) {
    if (a.dim != b.dim)
        throw Error(ErrorCode::DimensionMismatch, "disjoint union needs equal block dimension");
    MatrixWeightedGraph g;
    g.dim = a.dim;
    for (const std::string& id : a.node_ids) g.node_ids.push_back("a_" + id);
    for (const std::string& id : b.node_ids) g.node_ids.push_back("b_" + id);
    g.edges = a.edges;
    const int shift = a.num_nodes();
    for (const Edge& e : b.edges) {
        Edge copy = e;
        copy.u += shift;
        copy.v += shift;
        g.edges.push_back(std::move(copy));
    }
    g.connected = false;
    return g;
}

namespace {

struct Builder {
    int dim;
    RawGraph raw;

    int add_node() {
        raw.nodes.push_back("n" + std::to_string(raw.nodes.size()));
        return static_cast<int>(raw.nodes.size()) - 1;
    }
    void add_edge(int u, int v, const Matrix& w) {
        raw.edges.push_back({raw.nodes[u], raw.nodes[v], w});
    }
};

Matrix single(const Vector& v) { return v; }

Matrix pair_cols(const Vector& a, const Vector& b) {
    Matrix m(a.size(), 2);
    m.col(0) = a;
    m.col(1) = b;
    return m;
}

// Orthonormal direction frame; column 0 is the shared consensus direction.
Matrix direction_frame(int dim, bool axis_aligned, std::mt19937_64& rng) {
    if (axis_aligned) return Matrix::Identity(dim, dim);
    Matrix m(dim, dim);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = dist(rng);
    Eigen::HouseholderQR<Matrix> qr(m);
    return Matrix(qr.householderQ());
}

// A continent: star of definite edges around node 0, and for null_cols > 0 a
// negative semidefinite edge between the first two leaves whose null space is
// the leading `null_cols` frame directions. Returns the node indices.
std::vector<int> build_continent(Builder& b, const Matrix& frame, int size, int null_cols,
                                 std::mt19937_64& rng) {
    std::vector<int> nodes;
    for (int i = 0; i < size; ++i) nodes.push_back(b.add_node());
    const Matrix full = Matrix(frame.leftCols(0));
    for (int i = 1; i < size; ++i)
        b.add_edge(nodes[0], nodes[i], make_psd(b.dim, full, rng));
    if (null_cols > 0 && size >= 3)
        b.add_edge(nodes[1], nodes[2], -make_psd(b.dim, frame.leftCols(null_cols), rng));
    return nodes;
}

void require(bool ok, const std::string& why) {
    if (!ok) throw Error(ErrorCode::InfeasibleRecipe, why);
}

}  // namespace

SynthesizedInstance synthesize(const InstanceRecipe& recipe) {
    std::mt19937_64 rng(recipe.seed);
    const int d = recipe.dim;
    require(d >= 2, "block dimension must be at least 2");

    Builder b{d, {d, {}, {}}};
    const Matrix frame = direction_frame(d, recipe.axis_aligned, rng);
    const Vector u = frame.col(0);

    SynthesizedInstance inst;
    inst.violation = recipe.violation;

    auto finish = [&](const Tolerances& tol = {}) {
        inst.graph = validate_graph(b.raw, tol);
    };

    switch (recipe.violation) {
        case ViolationTarget::None: {
            const int w = recipe.continent_count;
            const int npc = recipe.nodes_per_continent;
            require(w >= 1, "need at least one continent");
            require(!recipe.path_lengths.empty() || w == 1, "need at least one path length");
            for (int len : recipe.path_lengths) require(len >= 1, "path length must be positive");

            std::vector<std::vector<int>> continents;
            if (npc >= 3) {
                // Shared one-dimensional internal null keeps a common consensus
                // direction across continents; bridge nulls live in its
                // orthogonal complement.
                for (int len : recipe.path_lengths)
                    require(len <= d - 1, "path length exceeds available directions");
                for (int c = 0; c < w; ++c)
                    continents.push_back(build_continent(b, frame, npc, 1, rng));
                for (int c = 0; c + 1 < w; ++c) {
                    for (std::size_t p = 0; p < recipe.path_lengths.size(); ++p) {
                        const int len = recipe.path_lengths[p];
                        int prev = continents[c][p % continents[c].size()];
                        for (int k = 0; k < len; ++k) {
                            const Vector dir =
                                frame.col(1 + static_cast<int>((p + k) % (d - 1)));
                            int next = k + 1 == len
                                           ? continents[c + 1][p % continents[c + 1].size()]
                                           : b.add_node();
                            b.add_edge(prev, next, make_psd(d, single(dir), rng));
                            prev = next;
                        }
                    }
                }
                inst.expected_psi = u;
            } else if (npc == 2) {
                // Two-node continents have the full space as internal null, so
                // the bridge nulls of each pair must jointly vanish: at least
                // two paths, disjoint direction budgets within the dimension.
                require(recipe.path_lengths.size() >= 2,
                        "two-node continents need at least two paths per pair");
                int budget = 0;
                for (int len : recipe.path_lengths) budget += len;
                require(budget <= d, "total path length exceeds the dimension");
                for (int c = 0; c < w; ++c)
                    continents.push_back(build_continent(b, frame, 2, 0, rng));
                for (int c = 0; c + 1 < w; ++c) {
                    int used = 0;
                    for (std::size_t p = 0; p < recipe.path_lengths.size(); ++p) {
                        const int len = recipe.path_lengths[p];
                        int prev = continents[c][p % 2];
                        for (int k = 0; k < len; ++k) {
                            const Vector dir = frame.col(used++);
                            int next = k + 1 == len ? continents[c + 1][p % 2] : b.add_node();
                            b.add_edge(prev, next, make_psd(d, single(dir), rng));
                            prev = next;
                        }
                    }
                }
                inst.expected_psi = Matrix::Identity(d, d);
            } else {
                require(false, "continents need at least two nodes");
            }
            finish();
            inst.expected = SolutionKind::Consensus;
            inst.expected_gauge = GaugeAssignment{std::vector<int>(inst.graph.num_nodes(), 1)};
            break;
        }

        case ViolationTarget::Condition2: {
            require(d >= 3, "this violation needs dimension at least 3");
            const Vector w1 = frame.col(1), w2 = frame.col(2);
            std::mt19937_64& r = rng;
            auto k1 = build_continent(b, pair_cols(u, w1), 3, 2, r);
            auto k2 = build_continent(b, pair_cols(u, w2), 3, 2, r);
            b.add_edge(k1[1], k2[1], make_psd(d, single(w1), r));
            finish();
            inst.expected = SolutionKind::Cluster;
            // w1 on the first continent, zero elsewhere, slips through the
            // bridge: an exact non-gauge null vector.
            inst.witness = Vector::Zero(inst.graph.num_nodes() * d);
            for (int node : k1) inst.witness.segment(node * d, d) = w1;
            break;
        }

        case ViolationTarget::Condition3: {
            require(d >= 3, "this violation needs dimension at least 3");
            auto k1 = build_continent(b, frame, 3, 1, rng);
            auto k2 = build_continent(b, frame, 3, 1, rng);
            const int f = b.add_node();
            const Vector v1 = frame.col(1), v2 = frame.col(2);
            const Vector v3 = (v1 + v2).normalized(), v4 = (v1 - v2).normalized();
            b.add_edge(k1[1], f, make_psd(d, single(v1), rng));
            b.add_edge(f, k2[1], make_psd(d, single(v2), rng));
            b.add_edge(k1[2], f, make_psd(d, single(v3), rng));
            b.add_edge(f, k2[2], make_psd(d, single(v4), rng));
            finish();
            inst.expected = SolutionKind::Consensus;
            inst.expected_psi = u;
            inst.expected_gauge = GaugeAssignment{std::vector<int>(inst.graph.num_nodes(), 1)};
            break;
        }

        case ViolationTarget::Condition4: {
            const Vector w = frame.col(1);
            auto k1 = build_continent(b, frame, 3, 1, rng);
            auto k2 = build_continent(b, frame, 3, 1, rng);
            const int f = b.add_node();
            b.add_edge(k1[1], f, make_psd(d, single(w), rng));
            b.add_edge(f, k2[1], make_psd(d, single(w), rng));
            finish();
            inst.expected = SolutionKind::Cluster;
            inst.witness = Vector::Zero(inst.graph.num_nodes() * d);
            inst.witness.segment(f * d, d) = w;  // both bridge nulls contain w
            break;
        }

        case ViolationTarget::Condition5: {
            require(d >= 3, "this violation needs dimension at least 3");
            const Vector u2 = frame.col(1), wdir = frame.col(2);
            auto k1 = build_continent(b, frame, 3, 2, rng);
            auto k2 = build_continent(b, frame, 3, 2, rng);
            const int f = b.add_node();
            // Balancing edge on the path (negative), a second edge whose null
            // stays inside the continents' shared null, and an independent
            // direct bridge.
            b.add_edge(k1[1], f, -make_psd(d, single(u), rng));
            b.add_edge(f, k2[1], make_psd(d, single(u2), rng));
            b.add_edge(k1[2], k2[2], make_psd(d, single(wdir), rng));
            finish();
            inst.expected = SolutionKind::Cluster;
            // Second gauge-form null vector: everyone at u2, the interior node
            // flipped.
            inst.witness = Vector(inst.graph.num_nodes() * d);
            for (int node = 0; node < inst.graph.num_nodes(); ++node)
                inst.witness.segment(node * d, d) = node == f ? Vector(-u2) : u2;
            break;
        }

        case ViolationTarget::IndefiniteCycle: {
            const int size = std::max(recipe.nodes_per_continent, 3);
            std::vector<int> nodes;
            for (int i = 0; i < size; ++i) nodes.push_back(b.add_node());
            const Matrix none = Matrix(d, 0);
            b.add_edge(nodes[0], nodes[1], make_psd(d, none, rng));
            b.add_edge(nodes[1], nodes[2], make_psd(d, none, rng));
            b.add_edge(nodes[0], nodes[2], -make_psd(d, none, rng));
            for (int i = 3; i < size; ++i)
                b.add_edge(nodes[i - 1], nodes[i], make_psd(d, none, rng));
            finish();
            inst.expected = SolutionKind::Trivial;
            inst.expected_psi = Matrix(d, 0);
            break;
        }
    }

    if (recipe.random_gauge) {
        std::bernoulli_distribution flip(0.5);
        std::vector<int> sigma(inst.graph.num_nodes(), 1);
        for (std::size_t i = 1; i < sigma.size(); ++i) sigma[i] = flip(rng) ? -1 : 1;
        for (Edge& e : inst.graph.edges) {
            const double s = sigma[e.u] * sigma[e.v];
            e.weight *= s;
            e.sign_class.sign = static_cast<int>(s) * e.sign_class.sign;
        }
        if (inst.witness.size() > 0) {
            for (int node = 0; node < inst.graph.num_nodes(); ++node)
                inst.witness.segment(node * d, d) *= static_cast<double>(sigma[node]);
        }
        if (inst.expected_gauge) {
            for (std::size_t i = 0; i < sigma.size(); ++i)
                inst.expected_gauge->sigma[i] *= sigma[i];
            inst.expected = inst.expected_gauge->is_identity() ? SolutionKind::Consensus
                                                               : SolutionKind::Bipartite;
        }
    }
    return inst;
}

}  // namespace mwnet
