#include "mwnet/topology.hpp"

#include <algorithm>
#include <deque>

#include "mwnet/linalg.hpp"

namespace mwnet {

bool Continent::contains(int node) const {
    return std::binary_search(nodes.begin(), nodes.end(), node);
}

int Continent::gauge_of(int node) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    return gauge[static_cast<std::size_t>(it - nodes.begin())];
}

std::vector<Continent> detect_continents(const MatrixWeightedGraph& g) {
    const int n = g.num_nodes();
    std::vector<std::vector<int>> definite_adj(n);  // edge indices
    for (int i = 0; i < g.num_edges(); ++i) {
        if (!g.edges[i].sign_class.is_definite()) continue;
        definite_adj[g.edges[i].u].push_back(i);
        definite_adj[g.edges[i].v].push_back(i);
    }

    std::vector<int> component(n, -1);
    std::vector<Continent> out;
    for (int root = 0; root < n; ++root) {
        if (component[root] >= 0) continue;
        const int c = static_cast<int>(out.size());
        Continent k;
        std::vector<int> gauge_by_node(n, 0);
        gauge_by_node[root] = 1;
        component[root] = c;
        k.nodes.push_back(root);
        // BFS over definite edges in document order; tree edges define the gauge.
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int ei : definite_adj[u]) {
                const Edge& e = g.edges[ei];
                int v = e.other(u);
                if (component[v] >= 0) continue;
                component[v] = c;
                gauge_by_node[v] = gauge_by_node[u] * e.sign_class.sign;
                k.nodes.push_back(v);
                k.tree_edge_indices.push_back(ei);
                queue.push_back(v);
            }
        }
        std::sort(k.nodes.begin(), k.nodes.end());
        k.gauge.resize(k.nodes.size());
        for (std::size_t i = 0; i < k.nodes.size(); ++i) k.gauge[i] = gauge_by_node[k.nodes[i]];
        // Induced edges: every nonzero weight among the continent's nodes.
        for (int ei = 0; ei < g.num_edges(); ++ei) {
            const Edge& e = g.edges[ei];
            if (component[e.u] == c && component[e.v] == c) {
                k.edge_indices.push_back(ei);
                if (e.sign_class.is_definite()) {
                    k.has_definite_edge = true;
                    // A definite non-tree edge contradicting the gauge closes a
                    // negative definite cycle; no nontrivial balancing set survives it.
                    if (e.sign_class.sign != gauge_by_node[e.u] * gauge_by_node[e.v]) {
                        k.gauge_consistent = false;
                        k.conflict_cycle.push_back(ei);
                    }
                }
            }
        }
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<int> continent_gauge(const MatrixWeightedGraph& g, const Continent& k) {
    if (!k.gauge_consistent) {
        std::string ids;
        for (int ei : k.conflict_cycle)
            ids += " " + g.node_ids[g.edges[ei].u] + "-" + g.node_ids[g.edges[ei].v];
        throw Error(ErrorCode::GaugeConflict, "definite edge contradicts the continent gauge:" + ids);
    }
    return k.gauge;
}

namespace {

struct PathSearch {
    const MatrixWeightedGraph& g;
    const std::vector<char>& interior_ok;
    const std::vector<char>& target;
    std::size_t cap;
    const Tolerances& tol;
    std::vector<std::vector<int>> semi_adj;  // strictly semidefinite edge indices per node
    std::vector<char> on_path;
    std::vector<int> node_seq;
    std::vector<int> edge_seq;
    std::vector<PathDescriptor> found;

    void run(int start) {
        on_path[start] = 1;
        node_seq.push_back(start);
        extend(start);
        node_seq.pop_back();
        on_path[start] = 0;
    }

    void extend(int u) {
        for (int ei : semi_adj[u]) {
            const Edge& e = g.edges[ei];
            int v = e.other(u);
            if (on_path[v]) continue;
            if (target[v]) {
                if (found.size() >= cap)
                    throw Error(ErrorCode::PathBudgetExceeded, "simple-path cap exceeded");
                edge_seq.push_back(ei);
                node_seq.push_back(v);
                emit();
                node_seq.pop_back();
                edge_seq.pop_back();
                continue;
            }
            if (!interior_ok[v]) continue;
            on_path[v] = 1;
            node_seq.push_back(v);
            edge_seq.push_back(ei);
            extend(v);
            edge_seq.pop_back();
            node_seq.pop_back();
            on_path[v] = 0;
        }
    }

    void emit() {
        PathDescriptor p;
        p.node_sequence = node_seq;
        p.edge_indices = edge_seq;
        p.sign = 1;
        for (int ei : edge_seq) {
            p.sign *= g.edges[ei].sign_class.sign;
            p.edge_null_bases.push_back(
                null_space(g.edges[ei].sign_class.sign * g.edges[ei].weight, tol));
        }
        p.null_span = sum_subspaces(p.edge_null_bases, g.dim, tol);
        p.union_equals_span = false;
        for (const Matrix& big : p.edge_null_bases) {
            bool covers = true;
            for (const Matrix& other : p.edge_null_bases)
                if (!subspace_contained(other, big, tol)) {
                    covers = false;
                    break;
                }
            if (covers) {
                p.union_equals_span = true;
                break;
            }
        }
        found.push_back(std::move(p));
    }
};

}  // namespace

PathEnumeration enumerate_connecting_paths(const MatrixWeightedGraph& g,
                                           const std::vector<Continent>& continents, int l, int m,
                                           std::size_t cap, const Tolerances& tol) {
    const int n = g.num_nodes();
    const Continent& kl = continents[l];
    const Continent& km = continents[m];

    // Interior nodes: in no continent that carries a definite edge, and outside
    // both endpoint continents. Paths through a third definite continent are
    // covered by that continent's own pair analyses.
    std::vector<char> interior_ok(n, 1);
    for (const Continent& k : continents)
        if (k.has_definite_edge)
            for (int v : k.nodes) interior_ok[v] = 0;
    for (int v : kl.nodes) interior_ok[v] = 0;
    for (int v : km.nodes) interior_ok[v] = 0;

    std::vector<char> target(n, 0);
    for (int v : km.nodes) target[v] = 1;

    PathSearch search{g, interior_ok, target, cap, tol, {}, {}, {}, {}, {}};
    search.semi_adj.resize(n);
    for (int ei = 0; ei < g.num_edges(); ++ei)
        if (g.edges[ei].sign_class.is_semidefinite_strict()) {
            search.semi_adj[g.edges[ei].u].push_back(ei);
            search.semi_adj[g.edges[ei].v].push_back(ei);
        }
    search.on_path.assign(n, 0);
    for (int v : km.nodes) search.on_path[v] = 0;

    for (int start : kl.nodes) search.run(start);

    PathEnumeration out;
    out.paths = std::move(search.found);
    for (PathDescriptor& p : out.paths) {
        p.effective_sign = p.sign * kl.gauge_of(p.node_sequence.front()) *
                           km.gauge_of(p.node_sequence.back());
    }
    // Pairwise node-independence except endpooints.
    for (std::size_t a = 0; a < out.paths.size() && out.node_independent; ++a) {
        std::vector<char> interior_a(n, 0);
        const auto& seq_a = out.paths[a].node_sequence;
        for (std::size_t i = 1; i + 1 < seq_a.size(); ++i) interior_a[seq_a[i]] = 1;
        for (std::size_t b = a + 1; b < out.paths.size() && out.node_independent; ++b) {
            const auto& seq_b = out.paths[b].node_sequence;
            for (std::size_t i = 1; i + 1 < seq_b.size(); ++i)
                if (interior_a[seq_b[i]]) {
                    out.node_independent = false;
                    break;
                }
        }
    }
    return out;
}

}  // namespace mwnet
