#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "energyspace/graph_function.hpp"

namespace energyspace {

// Fourier-side checks for the unit-weight integer chain. A finitely supported
// u has the trigonometric symbol u~(theta) = sum u(x) e^{i x theta}, and the
// chain energy has the closed form (2/pi) integral of sin^2(theta/2) |u~|^2.

/// Adaptive Gauss-Kronrod (7-15) quadrature to absolute tolerance.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-10);

/// Chain energy of a finitely supported function, evaluated on the Fourier
/// side. Matches the direct difference sum to quadrature accuracy.
double fourier_energy(const std::map<std::int64_t, std::complex<double>>& u);

/// Direct difference sum, the Parseval cross-check.
double chain_energy_direct(const std::map<std::int64_t, std::complex<double>>& u);

/// Exterior integrals of the would-be monopole symbol e^{i x theta} /
/// (4 sin^2(theta/2)) against the energy weight, one per cutoff. They grow
/// like const/eps, which is the quantitative form of "no monopole".
std::vector<double> monopole_symbol_divergence(std::int64_t x, const std::vector<double>& eps_grid);

struct ChainClosedForms {
    GraphFunction printed;    // symmetric-in-|n| formula
    GraphFunction corrected;  // one-sided bipole v_x - v_y
    /// max |<corrected, f> - (f(x)-f(y))| over the probe family
    double corrected_max_error = 0.0;
    /// max |<printed, f> - (f(x)-f(y))| over the probes: the printed formula
    /// does not reproduce differences
    double printed_max_error = 0.0;
    /// max |<printed, f> - (f(x)-f(y)+f(-x)-f(-y))|: the pairing it does satisfy
    double printed_pattern_error = 0.0;
};

/// Both closed-form bipole candidates for the unit chain, with their measured
/// pairings. Requires 0 <= y < x.
ChainClosedForms chain_closed_forms(std::int64_t x, std::int64_t y);

}  // namespace energyspace
