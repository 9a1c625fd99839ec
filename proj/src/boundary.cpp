#include "energyspace/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "energyspace/numerics.hpp"

namespace energyspace {

double normal_derivative(const WeightedGraph& g, const GraphFunction& psi,
                         const std::vector<VertexId>& F, const VertexId& x) {
    std::set<VertexId> members(F.begin(), F.end());
    if (!members.count(x)) throw std::invalid_argument("normal derivative requires x in F");
    if (!psi.defined_at(x))
        throw std::invalid_argument("function not defined at vertex " + x.to_string());
    CompensatedSum sum;
    const double px = psi.at(x);
    for (const auto& [y, w] : g.neighbors(x)) {
        if (members.count(y)) continue;
        if (!psi.defined_at(y))
            throw std::invalid_argument("function not defined at outside neighbor " +
                                        y.to_string());
        sum.add(-w * (px - psi.at(y)));  // coefficient <delta_x, delta_y> = -c(xy)
    }
    return sum.value();
}

BoundarySum boundary_sum_identity(const WeightedGraph& g, const GraphFunction& psi,
                                  const std::vector<VertexId>& F) {
    BoundarySum out;
    CompensatedSum sum;
    for (const auto& x : section_boundary(g, F)) sum.add(normal_derivative(g, psi, F, x));
    out.sum = sum.value();
    // independent route through the generic energy pairing, reported in the
    // orientation of the normal-derivative coefficients
    out.pairing = -energy_inner(g, indicator(g, F), psi);
    return out;
}

WeakNullScan weak_null_scan(const WeightedGraph& g, const Filtration& filtration,
                            const std::vector<GraphFunction>& tests) {
    WeakNullScan out;
    out.pairings.resize(filtration.depth());
    for (std::size_t k = 0; k < filtration.depth(); ++k) {
        out.pairings[k].reserve(tests.size());
        for (const auto& psi : tests)
            out.pairings[k].push_back(boundary_sum_identity(g, psi, filtration.level(k)).sum);
    }
    out.max_tail.assign(tests.size(), 0.0);
    const std::size_t n = filtration.depth();
    const std::size_t tail_start = n - std::max<std::size_t>(1, n / 4);
    for (std::size_t k = tail_start; k < n; ++k)
        for (std::size_t j = 0; j < tests.size(); ++j)
            out.max_tail[j] = std::max(out.max_tail[j], std::abs(out.pairings[k][j]));
    return out;
}

double indicator_energy(const WeightedGraph& g, const std::vector<VertexId>& F) {
    std::set<VertexId> members(F.begin(), F.end());
    CompensatedSum sum;
    for (const auto& x : members)
        for (const auto& [y, w] : g.neighbors(x))
            if (!members.count(y)) sum.add(w);
    return sum.value();
}

BoundaryPointLimit boundary_point_limit(const WeightedGraph& g,
                                        const std::vector<VertexId>& sequence,
                                        const GraphFunction& u) {
    if (sequence.empty()) throw std::invalid_argument("empty vertex sequence");
    BoundaryPointLimit out;
    const double uo = u.at(g.base_point());
    out.values.reserve(sequence.size());
    for (const auto& x : sequence) {
        if (!g.contains(x)) throw std::invalid_argument("vertex not in graph: " + x.to_string());
        out.values.push_back(u.at(x) - uo);
    }
    out.limit = out.values.back();
    const std::size_t n = out.values.size();
    const std::size_t tail_start = n - std::max<std::size_t>(std::min<std::size_t>(n, 3), n / 4);
    for (std::size_t k = tail_start; k < n; ++k)
        out.tail_gap = std::max(out.tail_gap, std::abs(out.values[k] - out.limit));
    out.convergent = out.tail_gap <= 1e-6;
    return out;
}

}  // namespace energyspace
