#pragma once

// Independent brute-force oracles for the test suites. Everything here stays
// off the library's solver path: dipoles come from an explicit spectral
// pseudo-inverse, energies from literal double sums.

#include <cmath>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "energyspace/graph.hpp"
#include "energyspace/graph_function.hpp"
#include "energyspace/numerics.hpp"

namespace oracles {

using energyspace::GraphFunction;
using energyspace::RandomSource;
using energyspace::VertexId;
using energyspace::WeightedGraph;

// Full Laplacian matrix of a finite graph over its sorted vertex list.
inline Eigen::MatrixXd laplacian_matrix(const WeightedGraph& g) {
    const auto verts = g.vertices();
    const auto n = static_cast<Eigen::Index>(verts.size());
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            const double w = g.edge_weight(verts[static_cast<std::size_t>(i)],
                                           verts[static_cast<std::size_t>(j)]);
            if (w != 0.0) {
                L(i, j) = -w;
                L(i, i) += w;
            }
        }
    }
    return L;
}

// Moore-Penrose pseudo-inverse via the spectral decomposition.
inline Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& A, double tol = 1e-11) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    Eigen::VectorXd inv = es.eigenvalues();
    const double scale = inv.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < inv.size(); ++i)
        inv(i) = std::abs(inv(i)) > tol * scale ? 1.0 / inv(i) : 0.0;
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

// Dipole on a finite graph from the pseudo-inverse of the full Laplacian,
// canonicalized to vanish at the base point.
inline GraphFunction pinv_dipole(const WeightedGraph& g, const VertexId& x) {
    const auto verts = g.vertices();
    const auto n = static_cast<Eigen::Index>(verts.size());
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    Eigen::Index xi = -1, oi = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (verts[static_cast<std::size_t>(i)] == x) xi = i;
        if (verts[static_cast<std::size_t>(i)] == g.base_point()) oi = i;
    }
    rhs(xi) += 1.0;
    rhs(oi) -= 1.0;
    Eigen::VectorXd v = pseudo_inverse(laplacian_matrix(g)) * rhs;
    v.array() -= v(oi);
    std::map<VertexId, double> values;
    for (Eigen::Index i = 0; i < n; ++i) values[verts[static_cast<std::size_t>(i)]] = v(i);
    return GraphFunction(std::move(values));
}

// Plain double-sum energy over all edges of a finite graph (functions must
// cover every vertex).
inline double brute_energy(const WeightedGraph& g, const GraphFunction& u,
                           const GraphFunction& v) {
    const auto verts = g.vertices();
    double sum = 0.0;
    for (const auto& a : verts)
        for (const auto& [b, w] : g.neighbors(a)) {
            if (!(a < b)) continue;
            sum += w * (u.at(a) - u.at(b)) * (v.at(a) - v.at(b));
        }
    return sum;
}

// Random connected graph: a random spanning tree plus extra random edges,
// weights uniform in [0.1, 10].
inline WeightedGraph random_connected_graph(RandomSource& rs, int n_vertices, double extra_edges = 0.5) {
    std::vector<energyspace::Edge> edges;
    auto weight = [&] { return 0.1 + 9.9 * rs.uniform(); };
    for (int v = 1; v < n_vertices; ++v) {
        const int parent = static_cast<int>(rs.uniform() * v);
        edges.push_back({VertexId(parent), VertexId(v), weight()});
    }
    const int extras = static_cast<int>(extra_edges * n_vertices);
    for (int e = 0; e < extras; ++e) {
        const int a = static_cast<int>(rs.uniform() * n_vertices);
        const int b = static_cast<int>(rs.uniform() * n_vertices);
        if (a == b) continue;
        bool exists = false;
        for (const auto& edge : edges)
            if ((edge.u == VertexId(a) && edge.v == VertexId(b)) ||
                (edge.u == VertexId(b) && edge.v == VertexId(a)))
                exists = true;
        if (!exists) edges.push_back({VertexId(a), VertexId(b), weight()});
    }
    return WeightedGraph::from_edges(edges, VertexId(0));
}

// Random function over all vertices of a finite graph, values in [-1, 1].
inline GraphFunction random_function(RandomSource& rs, const WeightedGraph& g) {
    GraphFunction f;
    for (const auto& v : g.vertices()) f.set(v, 2.0 * rs.uniform() - 1.0);
    return f;
}

}  // namespace oracles
