#include <doctest.h>

#include <cmath>

#include "energyspace/dipole.hpp"
#include "oracles.hpp"

using namespace energyspace;

namespace {

double ramp(std::int64_t n, std::int64_t x) {
    // one-sided chain dipole: 0 past the base, |x| at the far plateau
    if (x >= 0) return static_cast<double>(std::clamp(n, std::int64_t{0}, x));
    return static_cast<double>(-std::clamp(n, x, std::int64_t{0}));
}

}  // namespace

TEST_CASE("chain dipole equals the one-sided ramp") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(50), BoundaryMode::Free);
    for (std::int64_t x : {std::int64_t{3}, std::int64_t{-4}}) {
        auto v = dipole(chain, VertexId(x), section);
        double max_err = 0.0;
        for (std::int64_t n = -50; n <= 50; ++n)
            max_err = std::max(max_err, std::abs(v.at(VertexId(n)) - ramp(n, x)));
        CHECK(max_err < 1e-10);
    }
    CHECK_THROWS_WITH_AS(dipole(chain, VertexId(0), section), "dipole undefined at base point",
                         std::invalid_argument);
}

TEST_CASE("dipole reproducing property") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(30), BoundaryMode::Free);
    auto v3 = dipole(chain, VertexId(3), section);
    RandomSource rs(3);
    for (int trial = 0; trial < 20; ++trial) {
        // random finite-support f strictly inside the section
        GraphFunction f;
        for (int n = -28; n <= 28; ++n) f.set(VertexId(n), 0.0);
        for (int k = 0; k < 6; ++k) {
            const int site = -20 + static_cast<int>(rs.uniform() * 41);
            f.set(VertexId(site), 2.0 * rs.uniform() - 1.0);
        }
        const double pairing = energy_inner(chain, v3, f);
        CHECK(pairing ==
              doctest::Approx(f.at(VertexId(3)) - f.at(VertexId(0))).epsilon(1e-10));
    }
    // pairing against dirac masses: delta_{x,y} - delta_{y,o}
    CHECK(energy_inner(chain, v3, dirac(chain, VertexId(7))) == doctest::Approx(0.0));
    CHECK(energy_inner(chain, v3, dirac(chain, VertexId(3))) == doctest::Approx(1.0));
    CHECK(energy_inner(chain, v3, dirac(chain, VertexId(0))) == doctest::Approx(-1.0));
}

TEST_CASE("complete graph dipole matches the pseudo-inverse oracle") {
    auto k3 = WeightedGraph::complete(3);
    FiniteSection whole(k3, k3.vertices(), BoundaryMode::Free);
    auto v1 = dipole(k3, VertexId(1), whole);
    auto oracle = oracles::pinv_dipole(k3, VertexId(1));
    for (const auto& x : k3.vertices())
        CHECK(v1.at(x) == doctest::Approx(oracle.at(x)).epsilon(1e-12));
    CHECK(v1.at(VertexId(1)) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(energy_norm2(k3, v1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("variational solve equals the pseudo-inverse on small graphs") {
    RandomSource rs(17);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = oracles::random_connected_graph(rs, 5 + trial % 8);
        FiniteSection whole(g, g.vertices(), BoundaryMode::Free);
        for (const auto& x : g.vertices()) {
            if (x == g.base_point()) continue;
            auto v = dipole(g, x, whole);
            auto w = oracles::pinv_dipole(g, x);
            for (const auto& z : g.vertices())
                CHECK(v.at(z) == doctest::Approx(w.at(z)).epsilon(1e-10));
        }
    }
}

TEST_CASE("bipole steps and resistance distance") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(20), BoundaryMode::Free);
    auto w52 = bipole(chain, VertexId(5), VertexId(2), section);
    for (std::int64_t n = -20; n < 20; ++n) {
        const double step = w52.at(VertexId(n + 1)) - w52.at(VertexId(n));
        if (n >= 2 && n < 5)
            CHECK(step == doctest::Approx(1.0).epsilon(1e-12));
        else
            CHECK(step == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(energy_norm2(chain, w52) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(bipole(chain, VertexId(2), VertexId(2), section), "degenerate bipole",
                         std::invalid_argument);
}

TEST_CASE("gram matrices: chain min formula and K3") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(40), BoundaryMode::Free);
    auto K = gram(chain, {VertexId(2), VertexId(5)}, section);
    CHECK(K.entries(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(K.entries(1, 1) == doctest::Approx(5.0).epsilon(1e-12));

    auto K2 = gram(chain, {VertexId(-3), VertexId(4)}, section);
    CHECK(K2.entries(0, 1) == doctest::Approx(0.0));
    CHECK(K2.entries(0, 0) == doctest::Approx(3.0).epsilon(1e-12));

    auto k3 = WeightedGraph::complete(3);
    FiniteSection whole(k3, k3.vertices(), BoundaryMode::Free);
    auto Kk3 = gram(k3, {VertexId(1), VertexId(2)}, whole);
    CHECK(Kk3.entries(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(Kk3.entries(1, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(Kk3.entries(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // kernel evaluation route: k(x,y) = v_y(x)
    auto v5 = dipole(chain, VertexId(5), section);
    CHECK(K.entries(0, 1) == doctest::Approx(v5.at(VertexId(2))).epsilon(1e-12));

    // PSD within tolerance
    CHECK(min_eigen_spd(K.entries) >= -1e-9);
    CHECK(min_eigen_spd(Kk3.entries) >= -1e-9);
}

TEST_CASE("dirichlet-grounded sections converge monotonically on transient chains") {
    auto geom = WeightedGraph::geometric_chain(2.0);
    double prev = -1.0;
    std::vector<double> at2;
    for (int k : {6, 10, 16, 24, 34}) {
        FiniteSection section(geom, geom.box(k), BoundaryMode::Grounded);
        auto v = dipole(geom, VertexId(2), section);
        at2.push_back(v.at(VertexId(2)));
        if (prev >= 0.0) CHECK(at2.back() >= prev - 1e-13);
        prev = at2.back();
    }
    CHECK(std::abs(at2[4] - at2[3]) < 1e-4);  // settling toward the limit

    // on the chain the free solve is section-independent once the section
    // covers the ramp support
    auto chain = WeightedGraph::z_chain();
    for (int k : {5, 12, 30}) {
        FiniteSection section(chain, chain.box(k), BoundaryMode::Free);
        auto v = dipole(chain, VertexId(3), section);
        for (std::int64_t n = -k; n <= k; ++n)
            CHECK(v.at(VertexId(n)) == doctest::Approx(ramp(n, 3)).epsilon(1e-12));
    }
}

TEST_CASE("delta reconstruction") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(20), BoundaryMode::Free);
    auto rec = reconstruct_delta(chain, VertexId(2), section);
    REQUIRE(rec.coefficients.size() == 3);
    CHECK(rec.residual < 1e-10);
    for (const auto& [v, c] : rec.coefficients) {
        if (v == VertexId(2)) CHECK(c == doctest::Approx(2.0));
        if (v == VertexId(1)) CHECK(c == doctest::Approx(-1.0));
        if (v == VertexId(3)) CHECK(c == doctest::Approx(-1.0));
    }

    // base-point reconstruction drops the dipole term entirely
    auto star = WeightedGraph::star(5);
    FiniteSection whole(star, star.vertices(), BoundaryMode::Free);
    auto rec_o = reconstruct_delta(star, VertexId(0), whole);
    CHECK(rec_o.coefficients.size() == 5);
    CHECK(rec_o.residual < 1e-10);

    auto k3 = WeightedGraph::complete(3);
    FiniteSection wk3(k3, k3.vertices(), BoundaryMode::Free);
    auto rec_k3 = reconstruct_delta(k3, VertexId(1), wk3);
    CHECK(rec_k3.residual < 1e-10);

    CHECK_THROWS_WITH_AS(reconstruct_delta(chain, VertexId(20), section), "section too small",
                         std::invalid_argument);
}

TEST_CASE("coefficient readout recovers dipole combinations") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(25), BoundaryMode::Free);
    auto v3 = dipole(chain, VertexId(3), section);
    auto xi = coefficient_readout(chain, v3);
    for (const auto& [x, value] : xi) {
        if (x == VertexId(3))
            CHECK(value == doctest::Approx(1.0).epsilon(1e-11));
        else
            CHECK(value == doctest::Approx(0.0).epsilon(1e-11));
    }

    GraphFunction zero;
    for (int n = -4; n <= 4; ++n) zero.set(VertexId(n), 0.0);
    for (const auto& [_, value] : coefficient_readout(chain, zero))
        CHECK(value == doctest::Approx(0.0));

    GraphFunction combo = dipole(chain, VertexId(1), section);
    combo.scale(2.0);
    combo.add_scaled(-1.0, dipole(chain, VertexId(4), section));
    auto back = coefficient_readout(chain, combo);
    CHECK(back.at(VertexId(1)) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(back.at(VertexId(4)) == doctest::Approx(-1.0).epsilon(1e-11));
    CHECK(back.at(VertexId(2)) == doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("monopole traces: chain diverges, geometric chain converges") {
    auto chain = WeightedGraph::z_chain();
    auto trace = monopole_trace(chain, VertexId(0), Filtration::boxes(chain, 30));
    REQUIRE(trace.levels.size() == 30);
    for (std::size_t k = 0; k < trace.levels.size(); ++k)
        CHECK(trace.levels[k].energy ==
              doctest::Approx(0.5 * (static_cast<double>(k + 1) + 1.0)).epsilon(1e-11));
    CHECK(trace.verdict == TraceVerdict::Divergent);

    auto geom = WeightedGraph::geometric_chain(2.0);
    auto gtrace = monopole_trace(geom, VertexId(0), Filtration::boxes(geom, 40));
    CHECK(gtrace.verdict == TraceVerdict::Convergent);
    // dirichlet level energies (2 - 2^{-k})/3 from the flux split
    CHECK(gtrace.levels.back().energy == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    CHECK_THROWS_WITH_AS(monopole_trace(chain, VertexId(0), Filtration::boxes(chain, 3)),
                         "insufficient filtration depth", std::invalid_argument);
}

TEST_CASE("quadratic identity for dipole combinations") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(30), BoundaryMode::Free);

    auto single = quadratic_identity_check(chain, {{VertexId(1), {1.0, 0.0}}}, section);
    CHECK(single.rhs == doctest::Approx(2.0));
    CHECK(single.lhs == doctest::Approx(2.0).epsilon(1e-11));

    auto zero = quadratic_identity_check(chain, {}, section);
    CHECK(zero.lhs == doctest::Approx(0.0));
    CHECK(zero.rhs == doctest::Approx(0.0));

    auto pair = quadratic_identity_check(
        chain, {{VertexId(1), {1.0, 0.0}}, {VertexId(2), {-1.0, 0.0}}}, section);
    CHECK(pair.rhs == doctest::Approx(2.0));
    CHECK(std::abs(pair.lhs - pair.rhs) < 1e-10);

    auto complex_pair = quadratic_identity_check(
        chain, {{VertexId(1), {0.0, 1.0}}, {VertexId(3), {1.0, -2.0}}}, section);
    // sum |xi|^2 = 1 + 5, |sum xi|^2 = |1 - i|^2 = 2
    CHECK(complex_pair.rhs == doctest::Approx(8.0));
    CHECK(std::abs(complex_pair.lhs - complex_pair.rhs) < 1e-10);
}

TEST_CASE("l2(c) embedding inequality") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(15), BoundaryMode::Free);
    auto v4 = dipole(chain, VertexId(4), section);
    auto check = l2c_embedding_check(chain, {{VertexId(4), 1.0}}, v4);
    CHECK(check.lhs == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(check.bound == doctest::Approx(std::sqrt(2.0) * 2.0).epsilon(1e-11));
    CHECK(check.lhs <= check.bound + 1e-12);

    auto empty = l2c_embedding_check(chain, {}, v4);
    CHECK(empty.lhs == 0.0);
    CHECK(empty.bound == 0.0);

    RandomSource rs(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracles::random_connected_graph(rs, 6 + trial % 30);
        auto u = oracles::random_function(rs, g);
        std::map<VertexId, double> xi;
        for (const auto& x : g.vertices())
            if (rs.uniform() < 0.4) xi[x] = 2.0 * rs.uniform() - 1.0;
        auto result = l2c_embedding_check(g, xi, u);
        CHECK(result.lhs <= result.bound + 1e-12);
    }
}
