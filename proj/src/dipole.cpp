#include "energyspace/dipole.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "energyspace/numerics.hpp"

namespace energyspace {

namespace {

// Dirac Gram over the section window: ambient degree on the diagonal,
// -c(xy) on edges inside the window. This is the system matrix when the
// function is extended by zero on the complement.
Eigen::MatrixXd dirac_gram_matrix(const WeightedGraph& g, const std::vector<VertexId>& window) {
    const auto n = static_cast<Eigen::Index>(window.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    std::map<VertexId, Eigen::Index> index;
    for (Eigen::Index i = 0; i < n; ++i) index.emplace(window[i], i);
    for (Eigen::Index i = 0; i < n; ++i) {
        double deg = 0.0;
        for (const auto& [y, w] : g.neighbors(window[i])) {
            deg += w;
            auto it = index.find(y);
            if (it != index.end()) A(i, it->second) = -w;
        }
        A(i, i) = deg;
    }
    return A;
}

// Laplacian of the subgraph induced by the section, rows/columns without the
// base point. SPD since the section is connected.
Eigen::MatrixXd reduced_induced_laplacian(const WeightedGraph& g, const FiniteSection& section,
                                          std::vector<VertexId>& unknowns) {
    const VertexId& o = g.base_point();
    unknowns.clear();
    for (const auto& v : section.vertices())
        if (!(v == o)) unknowns.push_back(v);
    std::map<VertexId, Eigen::Index> index;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        index.emplace(unknowns[i], static_cast<Eigen::Index>(i));
    const auto n = static_cast<Eigen::Index>(unknowns.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double deg = 0.0;
        for (const auto& [y, w] : g.neighbors(unknowns[static_cast<std::size_t>(i)])) {
            if (!section.contains(y)) continue;  // induced degree only
            deg += w;
            auto it = index.find(y);
            if (it != index.end()) A(i, it->second) = -w;
        }
        A(i, i) = deg;
    }
    return A;
}

GraphFunction assemble(const std::vector<VertexId>& vertices, const Eigen::VectorXd& values) {
    std::map<VertexId, double> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out.emplace(vertices[i], values(static_cast<Eigen::Index>(i)));
    return GraphFunction(std::move(out));
}

}  // namespace

GraphFunction dipole(const WeightedGraph& g, const VertexId& x, const FiniteSection& section) {
    const VertexId& o = g.base_point();
    if (x == o) throw std::invalid_argument("dipole undefined at base point");
    if (!section.contains(x)) throw std::invalid_argument("dipole target not in section");

    if (section.mode() == BoundaryMode::Free) {
        std::vector<VertexId> unknowns;
        Eigen::MatrixXd A = reduced_induced_laplacian(g, section, unknowns);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(A.rows());
        const auto xit = std::lower_bound(unknowns.begin(), unknowns.end(), x);
        rhs(static_cast<Eigen::Index>(xit - unknowns.begin())) = 1.0;
        Eigen::VectorXd z = solve_spd(A, rhs);
        GraphFunction v = assemble(unknowns, z);
        v.set(o, 0.0);
        return v;
    }

    // grounded: zero extension on the complement, canonicalize afterwards
    const auto& window = section.vertices();
    Eigen::MatrixXd A = dirac_gram_matrix(g, window);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(A.rows());
    rhs(static_cast<Eigen::Index>(*section.index_of(x))) = 1.0;
    rhs(static_cast<Eigen::Index>(*section.index_of(o))) -= 1.0;
    Eigen::VectorXd z = solve_spd(A, rhs);
    return assemble(window, z).canonicalized(o);
}

GraphFunction bipole(const WeightedGraph& g, const VertexId& x, const VertexId& y,
                     const FiniteSection& section) {
    if (x == y) throw std::invalid_argument("degenerate bipole");
    const VertexId& o = g.base_point();
    if (x == o) {
        GraphFunction w = dipole(g, y, section);
        w.scale(-1.0);
        return w;
    }
    GraphFunction w = dipole(g, x, section);
    if (y == o) return w;
    w.add_scaled(-1.0, dipole(g, y, section));
    return w;
}

KernelMatrix gram(const WeightedGraph& g, const std::vector<VertexId>& window,
                  const FiniteSection& section) {
    const VertexId& o = g.base_point();
    for (const auto& x : window) {
        if (x == o) throw std::invalid_argument("gram window excludes the base point");
        if (!section.is_interior(x))
            throw std::invalid_argument("gram window must be interior to the section");
    }
    std::vector<GraphFunction> dipoles;
    dipoles.reserve(window.size());
    for (const auto& x : window) dipoles.push_back(dipole(g, x, section));

    KernelMatrix K;
    K.window = window;
    const auto n = static_cast<Eigen::Index>(window.size());
    K.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            const double value = energy_inner(g, dipoles[static_cast<std::size_t>(i)],
                                              dipoles[static_cast<std::size_t>(j)]);
            K.entries(i, j) = value;
            K.entries(j, i) = value;
        }
    return K;
}

DeltaReconstruction reconstruct_delta(const WeightedGraph& g, const VertexId& x,
                                      const FiniteSection& section) {
    const VertexId& o = g.base_point();
    if (!section.is_interior(x)) throw std::invalid_argument("section too small");
    for (const auto& [y, _] : g.neighbors(x))
        if (!section.is_interior(y)) throw std::invalid_argument("section too small");

    DeltaReconstruction out;
    GraphFunction combo;
    for (const auto& v : section.vertices()) combo.set(v, 0.0);

    if (!(x == o)) {
        const double cx = g.degree(x);
        out.coefficients.emplace_back(x, cx);
        combo.add_scaled(cx, dipole(g, x, section));
    }
    for (const auto& [y, w] : g.neighbors(x)) {
        if (y == o) continue;  // v_o vanishes in the quotient
        out.coefficients.emplace_back(y, -w);
        combo.add_scaled(-w, dipole(g, y, section));
    }

    GraphFunction residual = combo;
    residual.scale(-1.0);
    residual.add_scaled(1.0, dirac(g, x));
    // missing dirac-neighborhood vertices outside the section cannot occur:
    // x and its neighbors are interior
    out.residual = std::sqrt(std::max(0.0, energy_norm2(g, residual)));
    return out;
}

std::map<VertexId, double> coefficient_readout(const WeightedGraph& g, const GraphFunction& u) {
    std::map<VertexId, double> out;
    const VertexId& o = g.base_point();
    for (const auto& [x, _] : u.values()) {
        if (x == o) continue;
        bool evaluable = true;
        for (const auto& [y, w] : g.neighbors(x)) {
            (void)w;
            if (!u.defined_at(y)) {
                evaluable = false;
                break;
            }
        }
        if (evaluable) out.emplace(x, laplacian_apply(g, u, x));
    }
    return out;
}

std::string to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::Convergent: return "convergent";
        case TraceVerdict::Divergent: return "divergent";
        default: return "undecided";
    }
}

EnergyTrace monopole_trace(const WeightedGraph& g, const VertexId& x, const Filtration& filtration) {
    if (filtration.depth() < 4) throw std::invalid_argument("insufficient filtration depth");

    EnergyTrace trace;
    for (std::size_t k = 0; k < filtration.depth(); ++k) {
        const auto& level = filtration.level(k);
        if (!std::binary_search(level.begin(), level.end(), x))
            throw std::invalid_argument("filtration levels must contain the monopole vertex");
        Eigen::MatrixXd A = dirac_gram_matrix(g, level);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(A.rows());
        const auto xit = std::lower_bound(level.begin(), level.end(), x);
        const auto xi = static_cast<Eigen::Index>(xit - level.begin());
        rhs(xi) = 1.0;
        Eigen::VectorXd w = solve_spd(A, rhs);
        // grounded solution extends by zero, so ||w||_E^2 = w^T A w = w(x)
        trace.levels.push_back({k + 1, level.size(), w(xi)});
    }

    const std::size_t n = trace.levels.size();
    const std::size_t tail_start = n - std::max<std::size_t>(2, n / 4);
    double tail_gap = 0.0;
    bool ratio_growth = true;
    bool increment_growth = true;
    for (std::size_t k = tail_start; k < n; ++k) {
        const double prev = trace.levels[k - 1].energy;
        const double cur = trace.levels[k].energy;
        tail_gap = std::max(tail_gap, std::abs(cur - prev));
        const double level_index = static_cast<double>(trace.levels[k].index);
        if (!(prev > 0.0) || cur / prev <= 1.0 + 1.0 / (2.0 * level_index)) ratio_growth = false;
        if (level_index * (cur - prev) <= 0.1) increment_growth = false;
    }
    if (tail_gap < 1e-6)
        trace.verdict = TraceVerdict::Convergent;
    else if (ratio_growth || increment_growth)
        trace.verdict = TraceVerdict::Divergent;
    else
        trace.verdict = TraceVerdict::Undecided;
    return trace;
}

EmbeddingCheck l2c_embedding_check(const WeightedGraph& g, const std::map<VertexId, double>& xi,
                                   const GraphFunction& u) {
    EmbeddingCheck out;
    CompensatedSum lhs, weight;
    for (const auto& [x, coeff] : xi) {
        lhs.add(std::abs(coeff * laplacian_apply(g, u, x)));
        // c(x) = max(||delta_x||^2, sum_{y != x} |<delta_x, delta_y>|); both
        // sides equal the degree for a graph window
        double offdiag = 0.0;
        for (const auto& [y, w] : g.neighbors(x)) {
            (void)y;
            offdiag += std::abs(-w);
        }
        weight.add(std::max(g.degree(x), offdiag) * coeff * coeff);
    }
    out.lhs = lhs.value();
    out.bound = std::sqrt(std::max(0.0, weight.value())) *
                std::sqrt(std::max(0.0, energy_norm2(g, u)));
    return out;
}

QuadraticIdentity quadratic_identity_check(const WeightedGraph& g,
                                           const std::map<VertexId, std::complex<double>>& xi,
                                           const FiniteSection& section) {
    const VertexId& o = g.base_point();
    QuadraticIdentity out;
    CompensatedSum rhs_abs;
    std::complex<double> total{0.0, 0.0};

    GraphFunction u_re, u_im;
    for (const auto& v : section.vertices()) {
        u_re.set(v, 0.0);
        u_im.set(v, 0.0);
    }
    for (const auto& [x, coeff] : xi) {
        if (x == o) throw std::invalid_argument("coefficients live on non-base vertices");
        if (!section.is_interior(x))
            throw std::invalid_argument("coefficient support must be interior to the section");
        if (coeff == std::complex<double>{}) continue;
        GraphFunction vx = dipole(g, x, section);
        if (coeff.real() != 0.0) u_re.add_scaled(coeff.real(), vx);
        if (coeff.imag() != 0.0) u_im.add_scaled(coeff.imag(), vx);
        rhs_abs.add(std::norm(coeff));
        total += coeff;
    }
    out.rhs = rhs_abs.value() + std::norm(total);

    // Delta u over the section interior (plus base point), as a function pair
    GraphFunction du_re, du_im;
    for (const auto& v : section.vertices()) {
        bool inside = section.is_interior(v);
        if (!inside && !(v == o)) {
            du_re.set(v, 0.0);
            du_im.set(v, 0.0);
            continue;
        }
        du_re.set(v, laplacian_apply(g, u_re, v));
        du_im.set(v, laplacian_apply(g, u_im, v));
    }
    // <u, Delta u> = <re + i im, Dre + i Dim>, conjugate-linear first slot
    const double re_part = energy_inner(g, u_re, du_re) + energy_inner(g, u_im, du_im);
    out.lhs = re_part;
    return out;
}

}  // namespace energyspace
