#include "energyspace/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace energyspace {

double HermiteFamily::eval(std::size_t n, double x) const {
    const auto& c = coeffs.at(n);
    double value = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) value = value * x + c[k];
    return value;
}

HermiteFamily hermite(std::size_t n_max) {
    HermiteFamily family;
    family.coeffs.reserve(n_max + 1);
    family.coeffs.push_back({1.0});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& h = family.coeffs[n];
        std::vector<double> next(h.size() + 1, 0.0);
        for (std::size_t k = 1; k < h.size(); ++k) next[k - 1] += static_cast<double>(k) * h[k];
        for (std::size_t k = 0; k < h.size(); ++k) next[k + 1] -= h[k];
        family.coeffs.push_back(std::move(next));
    }
    return family;
}

GaussianModel GaussianModel::from_gram(const KernelMatrix& gram, std::uint64_t seed) {
    GaussianModel model;
    model.window_ = gram.window;
    model.seed_ = seed;
    const auto n = gram.entries.rows();
    if (n != gram.entries.cols()) throw std::invalid_argument("gram matrix must be square");
    const double scale = n > 0 ? std::max(1.0, gram.entries.cwiseAbs().maxCoeff()) : 1.0;
    if (n > 0 && (gram.entries - gram.entries.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument("gram matrix must be symmetric");
    model.covariance_ = 0.5 * (gram.entries + gram.entries.transpose());

    // lower-triangular root when definite, clamped spectral root otherwise
    Eigen::LLT<Eigen::MatrixXd> llt(model.covariance_);
    if (llt.info() == Eigen::Success) {
        model.factor_ = llt.matrixL();
        return model;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(model.covariance_);
    if (es.info() != Eigen::Success) throw std::runtime_error("covariance factorization failed");
    Eigen::VectorXd evals = es.eigenvalues();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (evals(i) < -1e-9 * scale)
            throw std::invalid_argument("gram matrix is not positive semidefinite");
        evals(i) = std::max(evals(i), 0.0);
    }
    model.factor_ = es.eigenvectors() * evals.cwiseSqrt().asDiagonal();
    return model;
}

Eigen::VectorXd GaussianModel::coefficient_vector(const std::map<VertexId, double>& coeffs) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(window_.size()));
    for (const auto& [x, v] : coeffs) {
        auto it = std::find(window_.begin(), window_.end(), x);
        if (it == window_.end())
            throw std::invalid_argument("coefficient vertex not in the model window");
        out(static_cast<Eigen::Index>(it - window_.begin())) = v;
    }
    return out;
}

double GaussianModel::norm2(const Eigen::VectorXd& coeffs) const {
    return coeffs.dot(covariance_ * coeffs);
}

double GaussianModel::inner(const Eigen::VectorXd& f, const Eigen::VectorXd& u) const {
    return f.dot(covariance_ * u);
}

double GaussianModel::value_at(const Eigen::VectorXd& coeffs, const VertexId& x) const {
    auto it = std::find(window_.begin(), window_.end(), x);
    if (it == window_.end()) return 0.0;  // base point and off-window vertices
    return (covariance_ * coeffs)(static_cast<Eigen::Index>(it - window_.begin()));
}

Eigen::VectorXd GaussianModel::sample(std::uint64_t index) const {
    const auto n = static_cast<Eigen::Index>(window_.size());
    RandomSource rs(seed_);
    Eigen::VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i)
        z(i) = rs.normal_at(index * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(i));
    return factor_ * z;
}

namespace {

struct ComplexAccumulator {
    CompensatedSum re, im, sq;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
        sq.add(std::norm(z));
    }
    MonteCarloEstimate finalize(std::size_t n) {
        MonteCarloEstimate out;
        out.samples = n;
        out.estimate = {re.value() / static_cast<double>(n), im.value() / static_cast<double>(n)};
        if (n > 1) {
            const double var =
                std::max(0.0, sq.value() / static_cast<double>(n) - std::norm(out.estimate));
            out.standard_error = std::sqrt(var / static_cast<double>(n - 1));
        }
        return out;
    }
};

}  // namespace

MonteCarloEstimate mc_characteristic(const GaussianModel& model, const Eigen::VectorXd& u,
                                     std::size_t samples) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    ComplexAccumulator acc;
    for (std::size_t s = 0; s < samples; ++s) {
        const double phase = u.dot(model.sample(s));
        acc.add({std::cos(phase), std::sin(phase)});
    }
    return acc.finalize(samples);
}

MonteCarloEstimate mc_moment(const GaussianModel& model, const Eigen::VectorXd& f,
                             const Eigen::VectorXd& u, int order, std::size_t samples) {
    if (order < 0 || order > 3) throw std::invalid_argument("order not supported");
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    ComplexAccumulator acc;
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::VectorXd field = model.sample(s);
        const double phase = u.dot(field);
        double weight = 1.0;
        const double fv = f.dot(field);
        for (int k = 0; k < order; ++k) weight *= fv;
        acc.add(weight * std::complex<double>(std::cos(phase), std::sin(phase)));
    }
    return acc.finalize(samples);
}

std::complex<double> moment_target(const GaussianModel& model, const Eigen::VectorXd& f,
                                   const Eigen::VectorXd& u, int order) {
    const double a = model.inner(f, u);
    const double b = model.norm2(f);
    const double envelope = std::exp(-0.5 * model.norm2(u));
    switch (order) {
        case 0: return {envelope, 0.0};
        case 1: return {0.0, a * envelope};
        case 2: return {(b - a * a) * envelope, 0.0};
        case 3: return {0.0, (3.0 * a * b - a * a * a) * envelope};
        default: throw std::invalid_argument("order not supported");
    }
}

MonteCarloEstimate mc_dipole_transform(const GaussianModel& model, const VertexId& x,
                                       const VertexId& y, const Eigen::VectorXd& u,
                                       std::size_t samples) {
    if (samples == 0) throw std::invalid_argument("sample count must be positive");
    const auto& window = model.window();
    auto slot = [&](const VertexId& v) -> std::ptrdiff_t {
        auto it = std::find(window.begin(), window.end(), v);
        return it == window.end() ? -1 : (it - window.begin());
    };
    const std::ptrdiff_t ix = slot(x), iy = slot(y);
    if (ix < 0 && iy < 0)
        throw std::invalid_argument("dipole transform needs a window vertex");
    ComplexAccumulator acc;
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::VectorXd field = model.sample(s);
        const double wxy = (ix >= 0 ? field(ix) : 0.0) - (iy >= 0 ? field(iy) : 0.0);
        const double phase = u.dot(field);
        acc.add(wxy * std::complex<double>(std::cos(phase), std::sin(phase)));
    }
    return acc.finalize(samples);
}

}  // namespace energyspace
