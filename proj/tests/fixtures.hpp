#pragma once

#include <tuple>
#include <vector>

#include "mwnet/graph.hpp"

namespace fixtures {

using mwnet::Matrix;
using mwnet::Vector;

inline Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

inline Matrix ident(int d) { return Matrix::Identity(d, d); }

inline mwnet::MatrixWeightedGraph graph_of(
    int d, int n, const std::vector<std::tuple<int, int, Matrix>>& edges) {
    mwnet::RawGraph raw;
    raw.dim = d;
    for (int i = 0; i < n; ++i) raw.nodes.push_back(std::to_string(i + 1));
    for (const auto& [u, v, w] : edges)
        raw.edges.push_back({std::to_string(u), std::to_string(v), w});
    return mwnet::validate_graph(raw);
}

// Two 2-node definite continents {1,2}, {3,4}, single semidefinite bridge.
inline mwnet::MatrixWeightedGraph g1() {
    return graph_of(2, 4,
                    {{1, 2, ident(2)}, {3, 4, ident(2)}, {2, 3, diag2(1, 0)}});
}

// As g1 plus a second bridge with the complementary null direction.
inline mwnet::MatrixWeightedGraph g3() {
    return graph_of(2, 4,
                    {{1, 2, ident(2)},
                     {3, 4, ident(2)},
                     {2, 3, diag2(1, 0)},
                     {1, 4, diag2(0, 1)}});
}

// As g3 with both bridges negated: the two continents oppose each other.
inline mwnet::MatrixWeightedGraph g4() {
    return graph_of(2, 4,
                    {{1, 2, ident(2)},
                     {3, 4, ident(2)},
                     {2, 3, -diag2(1, 0)},
                     {1, 4, -diag2(0, 1)}});
}

// Length-2 bridge through free node 5 whose two edges share a null direction.
inline mwnet::MatrixWeightedGraph g5() {
    return graph_of(2, 5,
                    {{1, 2, ident(2)},
                     {3, 4, ident(2)},
                     {2, 5, diag2(1, 0)},
                     {5, 3, diag2(1, 0)}});
}

// Triangle with one semidefinite negative edge: a single continent.
inline mwnet::MatrixWeightedGraph semidefinite_triangle() {
    return graph_of(2, 3, {{1, 2, ident(2)}, {2, 3, ident(2)}, {1, 3, -diag2(1, 0)}});
}

// All-definite triangle with signs +, +, -: negative definite cycle.
inline mwnet::MatrixWeightedGraph conflicted_triangle() {
    return graph_of(2, 3, {{1, 2, ident(2)}, {2, 3, ident(2)}, {1, 3, -ident(2)}});
}

inline Vector stack2(const Vector& a, const Vector& b) {
    Vector x(a.size() + b.size());
    x << a, b;
    return x;
}

}  // namespace fixtures
