#include "energyspace/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace energyspace {

void CompensatedSum::add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
        comp_ += (sum_ - t) + v;
    else
        comp_ += (v - t) + sum_;
    sum_ = t;
}

Vector solve_spd(const DenseMatrix& A, const Vector& b) {
    if (A.rows() != A.cols() || A.rows() != b.size())
        throw std::invalid_argument("solve_spd: dimension mismatch");
    Eigen::LLT<DenseMatrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("matrix not positive definite");
    Vector x = llt.solve(b);
    x += llt.solve(b - A * x);  // one refinement pass
    return x;
}

double min_eigen_spd(const DenseMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("min_eigen_spd: matrix must be square");
    const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    if (asym > 1e-12 * scale)
        throw std::invalid_argument("min_eigen_spd: matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(A, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration failed");
    return es.eigenvalues()(0);
}

double rayleigh(const DenseMatrix& A, const Vector& x) {
    const double nx = x.squaredNorm();
    if (nx == 0.0) throw std::invalid_argument("rayleigh: zero probe vector");
    return x.dot(A * x) / nx;
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t position) {
    return splitmix64(splitmix64(seed) ^ splitmix64(position * 0xD1342543DE82EF95ull + 1));
}

}  // namespace

double RandomSource::uniform_at(std::uint64_t position) const {
    // 53 mantissa bits, uniform on [0,1)
    return static_cast<double>(mix(seed_, position) >> 11) * 0x1.0p-53;
}

double RandomSource::normal_at(std::uint64_t position) const {
    // shift to (0,1): is never 0 or 1
    const double u = uniform_at(position) + 0x1.0p-54;
    return inverse_normal_cdf(u);
}

std::vector<double> RandomSource::normals(std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = normal();
    return out;
}

RandomSource RandomSource::fork(std::uint64_t lane) const {
    return RandomSource(seed_, counter_ + (lane + 1) * (1ull << 40));
}

double inverse_normal_cdf(double p) {
    // Wichura, algorithm AS 241 (PPND16)
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("inverse_normal_cdf: p in (0,1) required");
    const double q = p - 0.5;
    double r;
    if (std::abs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) *
                        r +
                    4.5921953931549871457e4) *
                       r +
                   1.3731693765509461125e4) *
                      r +
                  1.9715909503065514427e3) *
                     r +
                 1.3314166789178437745e2) *
                    r +
                3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) *
                        r +
                    2.1213794301586595867e4) *
                       r +
                   5.3941960214247511077e3) *
                      r +
                  6.8718700749205790830e2) *
                     r +
                 4.2313330701600911252e1) *
                    r +
                1.0);
    }
    r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) *
                         r +
                     1.27045825245236838258e0) *
                        r +
                    3.64784832476320460504e0) *
                       r +
                   5.76949722146069140550e0) *
                      r +
                  4.63033784615654529590e0) *
                     r +
                 1.42343711074968357734e0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) *
                         r +
                     1.48103976427480074590e-1) *
                        r +
                    6.89767334985100004550e-1) *
                       r +
                   1.67638483018380384940e0) *
                      r +
                  2.05319162663775882187e0) *
                     r +
                 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) *
                         r +
                     2.65321895265761230930e-2) *
                        r +
                    2.96560571828504891230e-1) *
                       r +
                   1.78482653991729133580e0) *
                      r +
                  5.46378491116411436990e0) *
                     r +
                 6.65790464350110377720e0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) *
                         r +
                     7.86869131145613259100e-4) *
                        r +
                    1.48753612908506148525e-2) *
                       r +
                   1.36929880922735805310e-1) *
                      r +
                  5.99832206555887937690e-1) *
                     r +
                 1.0);
    }
    return q < 0.0 ? -value : value;
}

}  // namespace energyspace
