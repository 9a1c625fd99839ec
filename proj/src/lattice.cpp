#include "energyspace/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "energyspace/numerics.hpp"

namespace energyspace {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1]
constexpr double kGKNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussW[7] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                               0.417959183673469, 0.381830050505119, 0.279705391489277,
                               0.129484966168870};

struct PanelResult {
    double kronrod;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0, gauss = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(mid + half * kGKNodes[i]);
        kronrod += kKronrodW[i] * v;
        if (i % 2 == 1) gauss += kGaussW[i / 2] * v;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

double adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                int depth) {
    const auto panel = gk15(f, a, b);
    if (panel.error <= tol || depth >= 48) return panel.kronrod;
    const double mid = 0.5 * (a + b);
    return adaptive(f, a, mid, 0.5 * tol, depth + 1) + adaptive(f, mid, b, 0.5 * tol, depth + 1);
}

std::complex<double> symbol(const std::map<std::int64_t, std::complex<double>>& u, double theta) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [x, v] : u)
        s += v * std::complex<double>(std::cos(static_cast<double>(x) * theta),
                                      std::sin(static_cast<double>(x) * theta));
    return s;
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double abs_tol) {
    if (!(a < b)) throw std::invalid_argument("adaptive_quadrature: a < b required");
    return adaptive(f, a, b, abs_tol, 0);
}

double fourier_energy(const std::map<std::int64_t, std::complex<double>>& u) {
    if (u.empty()) return 0.0;
    const double pi = std::numbers::pi;
    auto integrand = [&](double theta) {
        const double s = std::sin(0.5 * theta);
        return s * s * std::norm(symbol(u, theta));
    };
    return (2.0 / pi) * adaptive_quadrature(integrand, -pi, pi, 1e-10);
}

double chain_energy_direct(const std::map<std::int64_t, std::complex<double>>& u) {
    if (u.empty()) return 0.0;
    auto value = [&](std::int64_t x) {
        auto it = u.find(x);
        return it == u.end() ? std::complex<double>{0.0, 0.0} : it->second;
    };
    const std::int64_t lo = u.begin()->first - 1;
    const std::int64_t hi = u.rbegin()->first;
    CompensatedSum sum;
    for (std::int64_t x = lo; x <= hi; ++x) sum.add(std::norm(value(x) - value(x + 1)));
    return sum.value();
}

std::vector<double> monopole_symbol_divergence(std::int64_t x, const std::vector<double>& eps_grid) {
    const double pi = std::numbers::pi;
    for (double eps : eps_grid)
        if (!(eps > 0.0 && eps <= pi))
            throw std::invalid_argument("cutoffs must lie in (0, pi]");
    auto integrand = [&](double theta) {
        const double s2 = std::sin(0.5 * theta);
        const std::complex<double> w =
            std::complex<double>(std::cos(static_cast<double>(x) * theta),
                                 std::sin(static_cast<double>(x) * theta)) /
            (4.0 * s2 * s2);
        return s2 * s2 * std::norm(w);
    };
    std::vector<double> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (eps >= pi) {
            out.push_back(0.0);
            continue;
        }
        const double right = adaptive_quadrature(integrand, eps, pi, 1e-10);
        const double left = adaptive_quadrature(integrand, -pi, -eps, 1e-10);
        out.push_back(left + right);
    }
    return out;
}

ChainClosedForms chain_closed_forms(std::int64_t x, std::int64_t y) {
    if (!(0 <= y && y < x)) throw std::invalid_argument("normalization requires 0 <= y < x");

    const std::int64_t radius = 2 * x + 8;
    ChainClosedForms out;
    for (std::int64_t n = -radius; n <= radius; ++n) {
        const std::int64_t a = std::llabs(n);
        double printed = 0.0;
        if (a > y) printed = static_cast<double>(std::min(a, x) - y);
        out.printed.set(VertexId(n), printed);
        // one-sided bipole v_x - v_y: ramp between y and x
        out.corrected.set(VertexId(n), static_cast<double>(std::clamp(n, y, x) - y));
    }

    // probe family: dirac masses and short ramps strictly inside the window
    WeightedGraph chain = WeightedGraph::z_chain();
    std::vector<GraphFunction> probes;
    for (std::int64_t p = -x - 2; p <= x + 2; ++p) probes.push_back(dirac(chain, p));
    {
        GraphFunction ramp;
        for (std::int64_t n = -radius; n <= radius; ++n)
            ramp.set(VertexId(n), static_cast<double>(std::clamp(n, std::int64_t{-2}, x + 1)));
        probes.push_back(ramp);
    }

    auto eval = [&](const GraphFunction& f, std::int64_t n) {
        return f.defined_at(VertexId(n)) ? f.at(VertexId(n)) : 0.0;
    };
    for (const auto& f : probes) {
        const double fx = eval(f, x), fy = eval(f, y);
        const double fmx = eval(f, -x), fmy = eval(f, -y);
        const double corrected_pair = energy_inner(chain, out.corrected, f);
        const double printed_pair = energy_inner(chain, out.printed, f);
        out.corrected_max_error =
            std::max(out.corrected_max_error, std::abs(corrected_pair - (fx - fy)));
        out.printed_max_error = std::max(out.printed_max_error, std::abs(printed_pair - (fx - fy)));
        out.printed_pattern_error =
            std::max(out.printed_pattern_error, std::abs(printed_pair - (fx - fy + fmx - fmy)));
    }
    return out;
}

}  // namespace energyspace
