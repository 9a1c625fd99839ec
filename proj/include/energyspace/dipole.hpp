#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "energyspace/graph_function.hpp"
#include "energyspace/section.hpp"

namespace energyspace {

/// Gram matrix k(x,y) = <v_x, v_y>_E over an ordered vertex window.
struct KernelMatrix {
    std::vector<VertexId> window;
    Eigen::MatrixXd entries;
};

enum class TraceVerdict { Convergent, Divergent, Undecided };

std::string to_string(TraceVerdict v);

/// Per-level energies of a sequence of section solves.
struct EnergyTrace {
    struct Level {
        std::size_t index = 0;  // 1-based level number
        std::size_t size = 0;   // section vertex count
        double energy = 0.0;
    };
    std::vector<Level> levels;
    TraceVerdict verdict = TraceVerdict::Undecided;
};

/// Dipole v_x: the section solution of Delta v = delta_x - delta_o with
/// v(o) = 0, handled per the section's boundary mode. In Free mode the solve
/// is exact for every edge configuration the section covers; the reproducing
/// identity <v_x, f>_E = f(x) - f(o) holds for f supported strictly inside.
GraphFunction dipole(const WeightedGraph& g, const VertexId& x, const FiniteSection& section);

/// w_{x,y} = v_x - v_y (v_o = 0), pairing to f(x) - f(y).
GraphFunction bipole(const WeightedGraph& g, const VertexId& x, const VertexId& y,
                     const FiniteSection& section);

/// Dipole Gram over a window of interior non-base vertices. Symmetric PSD.
KernelMatrix gram(const WeightedGraph& g, const std::vector<VertexId>& window,
                  const FiniteSection& section);

struct DeltaReconstruction {
    std::vector<std::pair<VertexId, double>> coefficients;  // on v_x and its neighbors
    double residual = 0.0;                                  // energy norm
};

/// delta_x = c(x) v_x - sum_{y ~ x} c(xy) v_y, with the base-point term
/// dropped (v_o = 0). Returns the coefficients and the energy-norm residual.
DeltaReconstruction reconstruct_delta(const WeightedGraph& g, const VertexId& x,
                                      const FiniteSection& section);

/// Coefficients of a finite dipole combination, read back as xi_x = (Delta u)(x)
/// at every non-base domain vertex whose neighborhood u covers.
std::map<VertexId, double> coefficient_readout(const WeightedGraph& g, const GraphFunction& u);

/// Grounded solves of Delta w = delta_x per filtration level, with the energy
/// per level and a convergence verdict. Divergent energies mean no monopole at
/// x is visible in the exhaustion; a Cauchy tail means one is.
EnergyTrace monopole_trace(const WeightedGraph& g, const VertexId& x, const Filtration& filtration);

struct EmbeddingCheck {
    double lhs = 0.0;    // sum_x |xi_x (Delta u)(x)|
    double bound = 0.0;  // ||xi||_{l2(c)} ||u||_E
};

/// Contractive-embedding inequality with weight c(x) = max(||delta_x||^2,
/// sum_{y != x} |<delta_x, delta_y>|).
EmbeddingCheck l2c_embedding_check(const WeightedGraph& g, const std::map<VertexId, double>& xi,
                                   const GraphFunction& u);

struct QuadraticIdentity {
    double lhs = 0.0;  // <u, Delta u>_E with u = sum xi_x v_x
    double rhs = 0.0;  // sum |xi_x|^2 + |sum xi_x|^2
};

/// Energy-side evaluation of <u, Delta u> for a dipole combination against the
/// closed form in the coefficients. xi lives on non-base vertices whose
/// one-edge neighborhood the section covers.
QuadraticIdentity quadratic_identity_check(const WeightedGraph& g,
                                           const std::map<VertexId, std::complex<double>>& xi,
                                           const FiniteSection& section);

}  // namespace energyspace
