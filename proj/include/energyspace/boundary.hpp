#pragma once

#include <vector>

#include "energyspace/graph_function.hpp"
#include "energyspace/section.hpp"

namespace energyspace {

/// Normal derivative of psi at x relative to the finite set F:
///   sum over outside neighbors y of <delta_x, delta_y> (psi(x) - psi(y)),
/// i.e. coefficients -c(xy). Zero at interior vertices.
double normal_derivative(const WeightedGraph& g, const GraphFunction& psi,
                         const std::vector<VertexId>& F, const VertexId& x);

struct BoundarySum {
    double sum = 0.0;      // sum over F of the normal derivative
    double pairing = 0.0;  // indicator pairing in the same orientation
};

/// Discrete Green identity: the boundary flux sum equals the pairing of psi
/// against the indicator of F. The pairing is reported in the orientation of
/// the normal-derivative coefficients (-c(xy)), so both entries agree exactly;
/// the raw energy pairing <chi_F, psi>_E is its negative.
BoundarySum boundary_sum_identity(const WeightedGraph& g, const GraphFunction& psi,
                                  const std::vector<VertexId>& F);

struct WeakNullScan {
    /// pairings[k][j]: indicator pairing of level k against test function j.
    std::vector<std::vector<double>> pairings;
    /// max |pairing| over the last quarter of levels, per test function.
    std::vector<double> max_tail;
};

/// Indicator pairings of every filtration level against a family of test
/// functions. For graph energy spaces these tend to zero along the exhaustion.
WeakNullScan weak_null_scan(const WeightedGraph& g, const Filtration& filtration,
                            const std::vector<GraphFunction>& tests);

/// ||chi_F||_E^2: the total conductance of the edges crossing out of F. Exact.
double indicator_energy(const WeightedGraph& g, const std::vector<VertexId>& F);

struct BoundaryPointLimit {
    std::vector<double> values;  // u(x_n) - u(o)
    double limit = 0.0;          // last value
    double tail_gap = 0.0;       // max deviation from the last value, last quarter
    bool convergent = false;     // tail_gap <= 1e-6
};

/// Values of u along a vertex sequence, relative to the base point, with a
/// Cauchy-style limit estimate. A convergent sequence realizes a boundary
/// point as the limit functional u -> lim (u(x_n) - u(o)).
BoundaryPointLimit boundary_point_limit(const WeightedGraph& g, const std::vector<VertexId>& sequence,
                                        const GraphFunction& u);

}  // namespace energyspace
