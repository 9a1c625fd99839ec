#include "energyspace/deficiency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "energyspace/graph_function.hpp"
#include "energyspace/numerics.hpp"

namespace energyspace {

std::string to_string(DefectVerdict v) {
    switch (v) {
        case DefectVerdict::NoDefectDetected: return "no-defect-detected";
        case DefectVerdict::DefectSuspected: return "defect-suspected";
        default: return "undecided";
    }
}

namespace {

double min_eigen_2x2(double a, double b, double c) {
    // symmetric [[a, b], [b, c]]
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(std::max(0.0, 0.25 * (a - c) * (a - c) + b * b));
    return mean - disc;
}

Eigen::MatrixXd dirac_gram_matrix(const WeightedGraph& g, const std::vector<VertexId>& window) {
    const auto n = static_cast<Eigen::Index>(window.size());
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            A(i, j) = delta_inner(g, window[static_cast<std::size_t>(i)],
                                  window[static_cast<std::size_t>(j)]);
    return A;
}

}  // namespace

DefectIndicator defect_shoot_chain(const WeightedGraph& g, double lambda, std::size_t span) {
    if (!(lambda < 0.0)) throw std::invalid_argument("scan defined for semibounded probe only");
    if (span < 4 || span > 250) throw std::invalid_argument("shoot span must be in [4, 250]");
    const VertexId& o = g.base_point();
    if (!o.as_int() || g.lattice_dimension() != 1)
        throw std::invalid_argument("shooting requires chain");

    const std::int64_t base = *o.as_int();
    // conductance of edge (base + n, base + n + 1)
    auto weight = [&](std::int64_t n) {
        return g.edge_weight(VertexId(base + n), VertexId(base + n + 1));
    };

    // two fundamental solutions, integrated outward over [-span, span + 1]
    const auto m = static_cast<std::ptrdiff_t>(span);
    auto site = [&](std::ptrdiff_t n) { return static_cast<std::size_t>(n + m); };
    std::vector<std::array<double, 2>> psi(2 * span + 2);
    psi[site(0)] = {1.0, 0.0};
    psi[site(1)] = {0.0, 1.0};
    for (std::ptrdiff_t n = 1; n <= m; ++n) {
        const double cl = weight(n - 1), cr = weight(n);
        for (int s = 0; s < 2; ++s)
            psi[site(n + 1)][s] =
                ((cl + cr - lambda) * psi[site(n)][s] - cl * psi[site(n - 1)][s]) / cr;
    }
    for (std::ptrdiff_t n = 0; n >= -m + 1; --n) {
        const double cl = weight(n - 1), cr = weight(n);
        for (int s = 0; s < 2; ++s)
            psi[site(n - 1)][s] =
                ((cl + cr - lambda) * psi[site(n)][s] - cr * psi[site(n + 1)][s]) / cl;
    }

    DefectIndicator out;
    out.lambda = lambda;
    // partial two-sided Gram of the fundamental pair, l^2 and energy
    double l2a = 0, l2b = 0, l2c = 0;
    double ena = 0, enb = 0, enc = 0;
    auto absorb_site = [&](std::ptrdiff_t n) {
        const auto& p = psi[site(n)];
        l2a += p[0] * p[0];
        l2b += p[0] * p[1];
        l2c += p[1] * p[1];
    };
    auto absorb_edge = [&](std::ptrdiff_t n) {
        const double c = weight(n);
        const double d0 = psi[site(n + 1)][0] - psi[site(n)][0];
        const double d1 = psi[site(n + 1)][1] - psi[site(n)][1];
        ena += c * d0 * d0;
        enb += c * d0 * d1;
        enc += c * d1 * d1;
    };
    absorb_site(0);
    double prev_amp = -1.0;
    for (std::ptrdiff_t n = 1; n <= m; ++n) {
        absorb_site(n);
        absorb_site(-n);
        absorb_edge(n - 1);
        absorb_edge(-n);
        const auto& pf = psi[site(n)];
        const auto& pb = psi[site(-n)];
        const double amp = std::sqrt(pf[0] * pf[0] + pf[1] * pf[1] + pb[0] * pb[0] + pb[1] * pb[1]);
        DefectIndicator::Level rec;
        rec.level = static_cast<std::size_t>(n);
        rec.value = min_eigen_2x2(l2a, l2b, l2c);
        rec.energy_value = min_eigen_2x2(ena, enb, enc);
        rec.growth_ratio = prev_amp > 0.0 ? amp / prev_amp : 0.0;
        prev_amp = amp;
        out.levels.push_back(rec);
    }

    const std::size_t n_levels = out.levels.size();
    const std::size_t tail_start = n_levels - std::max<std::size_t>(2, n_levels / 4);
    bool all_grow = true;
    bool cauchy = true;
    for (std::size_t k = tail_start; k < n_levels; ++k) {
        const double prev = out.levels[k - 1].value;
        const double cur = out.levels[k].value;
        if (!(prev > 0.0) || cur / prev <= 1.05) all_grow = false;
        if (std::abs(cur - prev) > 1e-8 * std::max(1.0, std::abs(cur))) cauchy = false;
    }
    if (all_grow)
        out.verdict = DefectVerdict::NoDefectDetected;
    else if (cauchy)
        out.verdict = DefectVerdict::DefectSuspected;
    else
        out.verdict = DefectVerdict::Undecided;
    return out;
}

DefectIndicator finite_section_scan(const WeightedGraph& g, const Filtration& filtration,
                                    double lambda) {
    if (!(lambda < 0.0)) throw std::invalid_argument("scan defined for semibounded probe only");
    DefectIndicator out;
    out.lambda = lambda;
    double prev = -1.0;
    for (std::size_t k = 0; k < filtration.depth(); ++k) {
        Eigen::MatrixXd A = dirac_gram_matrix(g, filtration.level(k));
        // A is positive semidefinite, so sigma_min(A - lambda I) is the
        // smallest eigenvalue shifted by |lambda|
        const double value = min_eigen_spd(A) - lambda;
        DefectIndicator::Level rec;
        rec.level = k + 1;
        rec.value = value;
        rec.growth_ratio = prev > 0.0 ? value / prev : 0.0;
        prev = value;
        out.levels.push_back(rec);
    }

    const std::size_t n = out.levels.size();
    const std::size_t tail_start = n > 2 ? n - std::max<std::size_t>(2, n / 4) : 1;
    bool flat = true;
    bool vanishing = false;
    for (std::size_t k = tail_start; k < n; ++k) {
        const double a = out.levels[k - 1].value, b = out.levels[k].value;
        if (std::abs(b - a) > 0.01 * std::max(std::abs(a), std::abs(b))) flat = false;
        if (b < 1e-6) vanishing = true;
    }
    const bool away_from_zero = out.levels.back().value >= 0.5 * std::abs(lambda);
    if (vanishing)
        out.verdict = DefectVerdict::DefectSuspected;
    else if (flat && away_from_zero)
        out.verdict = DefectVerdict::NoDefectDetected;
    else
        out.verdict = DefectVerdict::Undecided;
    return out;
}

double semibounded_check(const WeightedGraph& g, const std::vector<VertexId>& window) {
    if (window.empty()) throw std::invalid_argument("empty probe window");
    return min_eigen_spd(dirac_gram_matrix(g, window));
}

}  // namespace energyspace
