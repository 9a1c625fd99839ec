#include "energyspace/graph_function.hpp"

#include <stdexcept>

#include "energyspace/numerics.hpp"

namespace energyspace {

double GraphFunction::at(const VertexId& x) const {
    auto it = values_.find(x);
    if (it == values_.end())
        throw std::invalid_argument("function not defined at vertex " + x.to_string());
    return it->second;
}

GraphFunction GraphFunction::canonicalized(const VertexId& o) const {
    const double shift = at(o);
    GraphFunction out(*this);
    if (shift != 0.0)
        for (auto& [_, v] : out.values_) v -= shift;
    return out;
}

GraphFunction& GraphFunction::add_scaled(double coeff, const GraphFunction& other) {
    for (const auto& [x, v] : other.values_) values_[x] += coeff * v;
    return *this;
}

GraphFunction& GraphFunction::scale(double factor) {
    for (auto& [_, v] : values_) v *= factor;
    return *this;
}

GraphFunction dirac(const WeightedGraph& g, const VertexId& x) {
    if (!g.contains(x)) throw std::invalid_argument("vertex not in graph");
    std::map<VertexId, double> values;
    values[x] = 1.0;
    for (const auto& [y, _] : g.neighbors(x)) values.emplace(y, 0.0);
    return GraphFunction(std::move(values));
}

GraphFunction indicator(const WeightedGraph& g, const std::vector<VertexId>& set) {
    std::map<VertexId, double> values;
    for (const auto& x : set) {
        if (!g.contains(x)) throw std::invalid_argument("vertex not in graph");
        values[x] = 1.0;
    }
    for (const auto& x : set)
        for (const auto& [y, _] : g.neighbors(x)) values.emplace(y, 0.0);
    return GraphFunction(std::move(values));
}

double laplacian_apply(const WeightedGraph& g, const GraphFunction& u, const VertexId& x) {
    if (!g.contains(x)) throw std::invalid_argument("vertex not in graph");
    if (!u.defined_at(x))
        throw std::invalid_argument("function not defined on neighborhood of " + x.to_string());
    const double ux = u.at(x);
    CompensatedSum sum;
    for (const auto& [y, w] : g.neighbors(x)) {
        if (!u.defined_at(y))
            throw std::invalid_argument("function not defined on neighborhood of " + x.to_string());
        sum.add(w * (ux - u.at(y)));
    }
    return sum.value();
}

double energy_inner(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& v) {
    const auto& uv = u.values();
    const auto& vv = v.values();
    const bool u_smaller = uv.size() <= vv.size();
    const auto& lead = u_smaller ? uv : vv;
    const auto& other = u_smaller ? v : u;

    CompensatedSum sum;
    for (const auto& [x, _] : lead) {
        if (!other.defined_at(x)) continue;
        const double ux = u.at(x), vx = v.at(x);
        for (const auto& [y, w] : g.neighbors(x)) {
            if (!(x < y)) continue;  // each undirected edge once
            if (!u.defined_at(y) || !v.defined_at(y)) continue;
            sum.add(w * (ux - u.at(y)) * (vx - v.at(y)));
        }
    }
    return sum.value();
}

double delta_inner(const WeightedGraph& g, const VertexId& x, const VertexId& y) {
    if (!g.contains(x) || !g.contains(y)) throw std::invalid_argument("vertex not in graph");
    if (x == y) return g.degree(x);
    const double w = g.edge_weight(x, y);
    return w == 0.0 ? 0.0 : -w;
}

}  // namespace energyspace
