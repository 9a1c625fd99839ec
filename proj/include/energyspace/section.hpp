#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "energyspace/graph.hpp"

namespace energyspace {

/// How a finite section relates to the rest of the graph when solving:
///   Grounded: the function is extended by zero on the complement, so the
///             system matrix is the Dirac Gram (ambient degrees on the
///             diagonal). Used for monopole traces and finite-section spectra.
///   Free:     the induced subgraph stands alone and the solve is grounded at
///             the base point. This is the route that reproduces dipoles
///             exactly once the section covers the relevant edges.
enum class BoundaryMode { Grounded, Free };

/// Vertices of F with a neighbor outside F (against the ambient graph).
std::vector<VertexId> section_boundary(const WeightedGraph& g, const std::vector<VertexId>& F);

/// Finite connected vertex window containing the base point.
class FiniteSection {
public:
    FiniteSection(const WeightedGraph& g, std::vector<VertexId> vertices,
                  BoundaryMode mode = BoundaryMode::Free);

    const WeightedGraph& graph() const { return graph_; }
    BoundaryMode mode() const { return mode_; }

    const std::vector<VertexId>& vertices() const { return vertices_; }  // sorted
    const std::vector<VertexId>& boundary() const { return boundary_; }
    const std::vector<VertexId>& interior() const { return interior_; }

    bool contains(const VertexId& x) const { return index_.count(x) != 0; }
    bool is_interior(const VertexId& x) const;
    std::optional<std::size_t> index_of(const VertexId& x) const;

    std::size_t size() const { return vertices_.size(); }

private:
    WeightedGraph graph_;
    BoundaryMode mode_;
    std::vector<VertexId> vertices_;
    std::vector<VertexId> boundary_;
    std::vector<VertexId> interior_;
    std::map<VertexId, std::size_t> index_;
};

/// Box section [-k,k]^d for lattice generators, BFS prefix for finite graphs.
FiniteSection box_section(const WeightedGraph& g, int radius,
                          BoundaryMode mode = BoundaryMode::Free);

/// Strictly nested finite vertex sets, each containing the base point.
class Filtration {
public:
    Filtration(const WeightedGraph& g, std::vector<std::vector<VertexId>> levels);

    std::size_t depth() const { return levels_.size(); }
    const std::vector<VertexId>& level(std::size_t k) const { return levels_.at(k); }
    const std::vector<std::vector<VertexId>>& levels() const { return levels_; }
    const WeightedGraph& graph() const { return graph_; }

    /// Boxes [-k,k]^d, k = 1..kmax, on lattice generators; nested BFS prefixes
    /// on finite graphs (truncated once the whole graph is covered).
    static Filtration boxes(const WeightedGraph& g, int kmax);

private:
    WeightedGraph graph_;
    std::vector<std::vector<VertexId>> levels_;
};

}  // namespace energyspace
