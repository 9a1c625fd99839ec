#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace energyspace {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Compensated (Neumaier) accumulator for the energy sums.
class CompensatedSum {
public:
    void add(double v);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Solve A x = b for symmetric positive definite A via Cholesky, with one
/// refinement pass. Deterministic. Throws if the factorization fails.
Vector solve_spd(const DenseMatrix& A, const Vector& b);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigen_spd(const DenseMatrix& A);

double rayleigh(const DenseMatrix& A, const Vector& x);

/// Deterministic counter-based stream of uniforms and standard normals.
/// The variate at a given counter position is a pure function of (seed,
/// position), so identical seeds give identical streams on every platform and
/// batching cannot change totals. fork() offsets the counter into a disjoint
/// lane for parallel use.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    /// Uniform in [0,1) at an absolute counter position, without advancing.
    double uniform_at(std::uint64_t position) const;
    /// Standard normal at an absolute counter position, without advancing.
    double normal_at(std::uint64_t position) const;

    double uniform() { return uniform_at(counter_++); }
    double normal() { return normal_at(counter_++); }
    std::vector<double> normals(std::size_t n);

    RandomSource fork(std::uint64_t lane) const;

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

/// Inverse standard normal CDF (Wichura's PPND16), |error| ~ 1e-15.
double inverse_normal_cdf(double p);

}  // namespace energyspace
