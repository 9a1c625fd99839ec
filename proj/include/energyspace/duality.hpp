#pragma once

#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "energyspace/dipole.hpp"

namespace energyspace {

/// Dirac-mass Gram matrix G(x,y) = <delta_x, delta_y>_E over an ordered
/// window (base point included). For a graph window this is the degree on the
/// diagonal, minus the conductance on edges, zero otherwise; a matrix is
/// "graph-compatible" when its off-diagonals are nonpositive and every row
/// sums to zero, which is exactly what the reconstruction below consumes.
struct DiracGram {
    std::vector<VertexId> window;
    Eigen::MatrixXd entries;

    static DiracGram from_json_file(const std::string& path);
    void to_json_file(const std::string& path) const;
};

/// Rebuild the weighted graph whose Dirac masses have this Gram: edges where
/// the entry is nonzero, weights c(xy) = -G(x,y). Rows listed in
/// `boundary_rows` may carry extra diagonal mass (conductance leaving the
/// window) and are exempt from the row-sum identity; all other rows must sum
/// to zero within tol.
WeightedGraph kernel_to_graph(const DiracGram& gram, const VertexId& base, double tol = 1e-9,
                              const std::set<VertexId>& boundary_rows = {});

struct KernelPair {
    KernelMatrix kernel;  // dipole Gram over the window
    DiracGram dirac;      // Dirac Gram over window + base
};

/// Both sides of the graph <-> kernel correspondence over one window.
KernelPair graph_to_kernel(const WeightedGraph& g, const std::vector<VertexId>& window,
                           const FiniteSection& section);

/// graph -> Dirac Gram -> graph over the section; returns the max relative
/// edge-weight error over the reconstructed window edges.
double roundtrip_check(const WeightedGraph& g, const FiniteSection& section, double tol = 1e-9);

/// Finite-energy harmonic function candidate from a filtration scan.
struct HarmonicCandidate {
    GraphFunction h;  // canonicalized, unit flux across its boundary cut
    double energy = 0.0;
    double max_interior_laplacian = 0.0;
    std::vector<double> level_energies;
};

/// Scan for nonconstant finite-energy harmonic functions: per level one
/// Dirichlet solve per boundary-component indicator (components classified
/// against the top level as horizon), unit-flux normalization, and retention
/// of directions whose energies are Cauchy across levels. An empty result
/// means no such function became visible in the exhaustion.
std::vector<HarmonicCandidate> harmonic_defect(const WeightedGraph& g, const Filtration& filtration);

/// max_x |<delta_x, h>_E| over the interior of the section; values at solver
/// tolerance certify orthogonality to every Dirac mass on the window.
double duality_pair_check(const WeightedGraph& g, const GraphFunction& h,
                          const FiniteSection& section);

}  // namespace energyspace
