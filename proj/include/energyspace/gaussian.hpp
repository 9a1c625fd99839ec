#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "energyspace/dipole.hpp"
#include "energyspace/numerics.hpp"

namespace energyspace {

/// Hermite family from H_0 = 1, H_{n+1} = H_n' - x H_n (so H_1 = -x,
/// H_2 = x^2 - 1, ...), satisfying (d/dx)^n e^{-x^2/2} = H_n(x) e^{-x^2/2}.
struct HermiteFamily {
    /// coeffs[n][k] = coefficient of x^k in H_n.
    std::vector<std::vector<double>> coeffs;

    double eval(std::size_t n, double x) const;
    std::size_t degree(std::size_t n) const { return coeffs.at(n).size() - 1; }
};

HermiteFamily hermite(std::size_t n_max);

/// Centered Gaussian field over a dipole window: the sampled vector has the
/// kernel Gram as covariance, which realizes the energy inner product as a
/// second moment. Sampling is a pure function of (seed, sample index).
class GaussianModel {
public:
    static GaussianModel from_gram(const KernelMatrix& gram, std::uint64_t seed);

    const std::vector<VertexId>& window() const { return window_; }
    const Eigen::MatrixXd& covariance() const { return covariance_; }
    const Eigen::MatrixXd& factor() const { return factor_; }
    std::uint64_t seed() const { return seed_; }

    Eigen::VectorXd coefficient_vector(const std::map<VertexId, double>& coeffs) const;

    /// ||u||^2 and <f,u> for dipole combinations, from the Gram.
    double norm2(const Eigen::VectorXd& coeffs) const;
    double inner(const Eigen::VectorXd& f, const Eigen::VectorXd& u) const;
    /// u(x) - u(o) for x in the window (0 at the base point).
    double value_at(const Eigen::VectorXd& coeffs, const VertexId& x) const;

    Eigen::VectorXd sample(std::uint64_t index) const;

private:
    GaussianModel() = default;
    std::vector<VertexId> window_;
    Eigen::MatrixXd covariance_;
    Eigen::MatrixXd factor_;
    std::uint64_t seed_ = 0;
};

struct MonteCarloEstimate {
    std::complex<double> estimate;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// E[e^{i u~}], target e^{-||u||^2 / 2}.
MonteCarloEstimate mc_characteristic(const GaussianModel& model, const Eigen::VectorXd& u,
                                     std::size_t samples);

/// E[f~^n e^{i u~}] for n <= 3.
MonteCarloEstimate mc_moment(const GaussianModel& model, const Eigen::VectorXd& f,
                             const Eigen::VectorXd& u, int order, std::size_t samples);

/// Analytic value of E[f~^n e^{i u~}]: with a = <f,u>, b = ||f||^2 and
/// E = e^{-||u||^2/2}, the first orders are E, iaE, (b - a^2)E, i(3ab - a^3)E.
std::complex<double> moment_target(const GaussianModel& model, const Eigen::VectorXd& f,
                                   const Eigen::VectorXd& u, int order);

/// E[(v~_x - v~_y) e^{i u~}], target i (u(x) - u(y)) e^{-||u||^2/2}.
/// x or y may be the base point.
MonteCarloEstimate mc_dipole_transform(const GaussianModel& model, const VertexId& x,
                                       const VertexId& y, const Eigen::VectorXd& u,
                                       std::size_t samples);

}  // namespace energyspace
