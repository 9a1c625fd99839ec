#pragma once

#include <map>
#include <vector>

#include "energyspace/graph.hpp"

namespace energyspace {

/// Real-valued vertex function on an explicit finite domain. Members of the
/// energy space are classes modulo constants; canonicalized() picks the
/// representative vanishing at the base point. Energy sums run over the edges
/// of the subgraph induced by the (common) domain, so a function meant to be
/// "zero outside its support" should carry its one-edge neighborhood with
/// explicit zeros (dirac() does).
class GraphFunction {
public:
    GraphFunction() = default;
    explicit GraphFunction(std::map<VertexId, double> values) : values_(std::move(values)) {}

    bool defined_at(const VertexId& x) const { return values_.count(x) != 0; }
    double at(const VertexId& x) const;
    void set(const VertexId& x, double value) { values_[x] = value; }

    std::size_t size() const { return values_.size(); }
    const std::map<VertexId, double>& values() const { return values_; }

    /// Representative with value 0 at o. o must be in the domain.
    GraphFunction canonicalized(const VertexId& o) const;

    GraphFunction& add_scaled(double coeff, const GraphFunction& other);
    GraphFunction& scale(double factor);

private:
    std::map<VertexId, double> values_;
};

/// delta_x together with explicit zeros on its one-edge neighborhood.
GraphFunction dirac(const WeightedGraph& g, const VertexId& x);

/// Indicator of F with explicit zeros on the outside neighbors of F.
GraphFunction indicator(const WeightedGraph& g, const std::vector<VertexId>& set);

/// (Delta u)(x) = sum_{y ~ x} c(xy) (u(x) - u(y)). Requires u on x and all
/// of its neighbors.
double laplacian_apply(const WeightedGraph& g, const GraphFunction& u, const VertexId& x);

/// Energy pairing over the subgraph induced by the common domain of u and v:
///   (1/2) sum sum c(xy) (u(x)-u(y)) (v(x)-v(y))
/// with each unordered edge counted once. Compensated summation, deterministic
/// edge order.
double energy_inner(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& v);

inline double energy_norm2(const WeightedGraph& g, const GraphFunction& u) {
    return energy_inner(g, u, u);
}

/// <delta_x, delta_y>_E: c(x) on the diagonal, -c(xy) on edges, 0 otherwise.
double delta_inner(const WeightedGraph& g, const VertexId& x, const VertexId& y);

}  // namespace energyspace
