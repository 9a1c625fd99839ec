#include <doctest.h>

#include <cmath>

#include "energyspace/boundary.hpp"
#include "energyspace/dipole.hpp"
#include "energyspace/duality.hpp"
#include "oracles.hpp"

using namespace energyspace;

namespace {

std::vector<VertexId> range_box(int k) {
    std::vector<VertexId> out;
    for (int n = -k; n <= k; ++n) out.emplace_back(n);
    return out;
}

}  // namespace

TEST_CASE("section boundaries") {
    auto chain = WeightedGraph::z_chain();
    auto bd = section_boundary(chain, range_box(3));
    REQUIRE(bd.size() == 2);
    CHECK(bd[0] == VertexId(-3));
    CHECK(bd[1] == VertexId(3));

    auto k3 = WeightedGraph::complete(3);
    CHECK(section_boundary(k3, k3.vertices()).empty());

    auto z2 = WeightedGraph::z_lattice(2);
    CHECK(section_boundary(z2, z2.box(1)).size() == 8);
}

TEST_CASE("normal derivative at the boundary") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(30), BoundaryMode::Free);
    auto v5 = dipole(chain, VertexId(5), section);
    CHECK(normal_derivative(chain, v5, range_box(3), VertexId(3)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(normal_derivative(chain, v5, range_box(3), VertexId(0)) == doctest::Approx(0.0));

    auto geom = WeightedGraph::geometric_chain(2.0);
    auto h = harmonic_defect(geom, Filtration::boxes(geom, 40)).at(0).h;
    for (int k : {4, 7, 10})
        CHECK(normal_derivative(geom, h, range_box(k), VertexId(k)) ==
              doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("boundary sum identity") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(30), BoundaryMode::Free);
    auto v5 = dipole(chain, VertexId(5), section);
    auto result = boundary_sum_identity(chain, v5, range_box(3));
    CHECK(result.sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.pairing == doctest::Approx(1.0).epsilon(1e-12));

    GraphFunction constant;
    for (int n = -10; n <= 10; ++n) constant.set(VertexId(n), 2.0);
    auto flat = boundary_sum_identity(chain, constant, range_box(3));
    CHECK(flat.sum == doctest::Approx(0.0));
    CHECK(flat.pairing == doctest::Approx(0.0));

    RandomSource rs(37);
    for (int trial = 0; trial < 500; ++trial) {
        auto g = oracles::random_connected_graph(rs, 6 + trial % 25);
        auto psi = oracles::random_function(rs, g);
        std::vector<VertexId> F;
        for (const auto& v : g.vertices())
            if (rs.uniform() < 0.5) F.push_back(v);
        if (F.empty()) F.push_back(g.base_point());
        auto check = boundary_sum_identity(g, psi, F);
        CHECK(std::abs(check.sum - check.pairing) <= 1e-12);
    }
}

TEST_CASE("weak null scan") {
    auto chain = WeightedGraph::z_chain();
    Filtration boxes = Filtration::boxes(chain, 12);
    FiniteSection big(chain, chain.box(20), BoundaryMode::Free);
    auto v3 = dipole(chain, VertexId(3), big);
    auto scan = weak_null_scan(chain, boxes, {v3, dirac(chain, VertexId(0))});
    for (std::size_t k = 3; k < scan.pairings.size(); ++k) {
        CHECK(scan.pairings[k][0] == doctest::Approx(0.0));  // disjoint edge supports
        CHECK(scan.pairings[k][1] == doctest::Approx(0.0));
    }
    CHECK(scan.max_tail[0] == doctest::Approx(0.0));

    auto geom = WeightedGraph::geometric_chain(2.0);
    auto h = harmonic_defect(geom, Filtration::boxes(geom, 40)).at(0).h;
    auto hscan = weak_null_scan(geom, Filtration::boxes(geom, 12), {h});
    for (const auto& row : hscan.pairings)
        CHECK(row[0] == doctest::Approx(0.0).epsilon(1e-10));  // inflow +1, outflow -1
}

TEST_CASE("indicator energies") {
    auto chain = WeightedGraph::z_chain();
    for (int k : {1, 5, 20}) CHECK(indicator_energy(chain, range_box(k)) == doctest::Approx(2.0));

    auto z2 = WeightedGraph::z_lattice(2);
    for (int k : {1, 3, 6})
        CHECK(indicator_energy(z2, z2.box(k)) == doctest::Approx(4.0 * (2.0 * k + 1.0)));

    auto k3 = WeightedGraph::complete(3);
    CHECK(indicator_energy(k3, k3.vertices()) == doctest::Approx(0.0));

    // equality with the brute-force pairing of the indicator against itself
    RandomSource rs(41);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracles::random_connected_graph(rs, 12);
        std::vector<VertexId> F;
        for (const auto& v : g.vertices())
            if (rs.uniform() < 0.5) F.push_back(v);
        if (F.empty()) F.push_back(g.base_point());
        auto chi = indicator(g, F);
        CHECK(indicator_energy(g, F) == doctest::Approx(energy_inner(g, chi, chi)).epsilon(1e-12));
    }

    // non-Cauchy witness: the difference of two chain indicators has energy 4
    for (int k : {5, 9}) {
        for (int j = 1; j < k; ++j) {
            auto chi_k = indicator(chain, range_box(k));
            auto chi_j = indicator(chain, range_box(j));
            GraphFunction diff = chi_k;
            diff.add_scaled(-1.0, chi_j);
            CHECK(energy_norm2(chain, diff) == doctest::Approx(4.0));
        }
    }
}

TEST_CASE("boundary point limits") {
    auto geom = WeightedGraph::geometric_chain(2.0);
    auto h = harmonic_defect(geom, Filtration::boxes(geom, 45)).at(0).h;
    std::vector<VertexId> ray;
    for (int n = 1; n <= 40; ++n) ray.emplace_back(n);
    auto limit = boundary_point_limit(geom, ray, h);
    CHECK(limit.convergent);
    CHECK(limit.limit == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(limit.tail_gap < 1e-9);

    auto chain = WeightedGraph::z_chain();
    GraphFunction logf;  // finite energy but unbounded along the ray
    for (int n = -45; n <= 45; ++n) logf.set(VertexId(n), std::log1p(std::abs(n)));
    std::vector<VertexId> zray;
    for (int n = 1; n <= 40; ++n) zray.emplace_back(n);
    auto divergent = boundary_point_limit(chain, zray, logf);
    CHECK_FALSE(divergent.convergent);

    GraphFunction constant;
    for (int n = -45; n <= 45; ++n) constant.set(VertexId(n), 1.0);
    auto flat = boundary_point_limit(chain, zray, constant);
    CHECK(flat.convergent);
    CHECK(flat.limit == doctest::Approx(0.0));
}
