#pragma once

#include <string>
#include <vector>

#include "energyspace/section.hpp"

namespace energyspace {

// Numerical indicators for the defect equation Delta* psi = lambda psi with a
// semibounded probe (lambda < 0). Finite sections cannot prove essential
// selfadjointness; the verdicts below report evidence, never theorems.
//
// On a Dirac-basis section the matrix is the Dirac Gram, and section vectors
// stay inside the closed span of the Dirac masses. Relative to that span the
// harmonic-defect component is absent by construction, so one scan probes the
// restricted operator on the Dirac span and its extension by the defect
// subspace simultaneously; their defect equations agree for lambda != 0.

enum class DefectVerdict { NoDefectDetected, DefectSuspected, Undecided };

std::string to_string(DefectVerdict v);

struct DefectIndicator {
    double lambda = 0.0;
    struct Level {
        std::size_t level = 0;
        /// scan: sigma_min(A_k - lambda I) on the Dirac basis of F_k.
        /// shoot: smallest eigenvalue of the partial two-sided l^2 Gram of the
        /// fundamental solutions.
        double value = 0.0;
        double growth_ratio = 0.0;
        /// shoot only: smallest eigenvalue of the partial energy Gram.
        double energy_value = 0.0;
    };
    std::vector<Level> levels;
    DefectVerdict verdict = DefectVerdict::Undecided;
};

/// Integrate the three-term recursion
///   c_{n-1}(psi(n) - psi(n-1)) + c_n(psi(n) - psi(n+1)) = lambda psi(n)
/// outward from two independent initial conditions on a two-sided chain.
/// Every combination escaping l^2 supports "no defect detected"; a Cauchy
/// minimal combination is only ever reported as "suspected".
DefectIndicator defect_shoot_chain(const WeightedGraph& g, double lambda, std::size_t span);

/// Per level, sigma_min(A_k - lambda I) with A_k the Dirac Gram of F_k. A_k is
/// positive semidefinite, so with lambda < 0 the values stay >= |lambda|; flat
/// sequences bounded away from zero support "no defect detected".
DefectIndicator finite_section_scan(const WeightedGraph& g, const Filtration& filtration,
                                    double lambda);

/// Smallest eigenvalue of the Dirac Gram over the section window.
double semibounded_check(const WeightedGraph& g, const std::vector<VertexId>& window);

}  // namespace energyspace
