#include <doctest.h>

#include <cmath>

#include "energyspace/duality.hpp"
#include "oracles.hpp"

using namespace energyspace;

TEST_CASE("kernel_to_graph on explicit matrices") {
    DiracGram k3;
    k3.window = {VertexId(0), VertexId(1), VertexId(2)};
    k3.entries.resize(3, 3);
    k3.entries << 2, -1, -1, -1, 2, -1, -1, -1, 2;
    auto g = kernel_to_graph(k3, VertexId(0));
    CHECK(g.vertex_count() == 3);
    for (const auto& x : g.vertices()) CHECK(g.degree(x) == doctest::Approx(2.0));
    CHECK(g.edge_weight(VertexId(0), VertexId(1)) == doctest::Approx(1.0));

    DiracGram diag;
    diag.window = {VertexId(0), VertexId(1)};
    diag.entries = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(kernel_to_graph(diag, VertexId(0)), std::invalid_argument);

    DiracGram positive_cross;
    positive_cross.window = {VertexId(0), VertexId(1)};
    positive_cross.entries.resize(2, 2);
    positive_cross.entries << 1, 1, 1, 1;
    CHECK_THROWS_WITH_AS(kernel_to_graph(positive_cross, VertexId(0)),
                         "not graph-compatible: positive cross term", std::invalid_argument);

    // tridiagonal path window
    DiracGram path;
    path.window = {VertexId(0), VertexId(1), VertexId(2), VertexId(3)};
    path.entries.resize(4, 4);
    path.entries << 1, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 1;
    auto pg = kernel_to_graph(path, VertexId(0));
    CHECK(pg.edge_weight(VertexId(1), VertexId(2)) == doctest::Approx(1.0));
    CHECK(pg.adjacent(VertexId(0), VertexId(2)) == false);
}

TEST_CASE("graph_to_kernel produces the chain min formula and row sums") {
    auto chain = WeightedGraph::z_chain();
    FiniteSection section(chain, chain.box(30), BoundaryMode::Free);
    auto pair = graph_to_kernel(chain, {VertexId(1), VertexId(2), VertexId(3)}, section);
    Eigen::MatrixXd expected(3, 3);
    expected << 1, 1, 1, 1, 2, 2, 1, 2, 3;
    CHECK((pair.kernel.entries - expected).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((pair.dirac.entries - pair.dirac.entries.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    auto k3 = WeightedGraph::complete(3);
    FiniteSection whole(k3, k3.vertices(), BoundaryMode::Free);
    auto k3pair = graph_to_kernel(k3, {VertexId(1), VertexId(2)}, whole);
    CHECK(k3pair.kernel.entries(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(k3pair.kernel.entries(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    for (Eigen::Index i = 0; i < 3; ++i)
        CHECK(std::abs(k3pair.dirac.entries.row(i).sum()) < 1e-12);

    // single-edge graph: resistance is the reciprocal weight
    auto edge = WeightedGraph::from_edges({{VertexId(0), VertexId(1), 4.0}}, VertexId(0));
    FiniteSection esec(edge, edge.vertices(), BoundaryMode::Free);
    auto epair = graph_to_kernel(edge, {VertexId(1)}, esec);
    CHECK(epair.kernel.entries(0, 0) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("roundtrip check") {
    auto k3 = WeightedGraph::complete(3);
    FiniteSection whole(k3, k3.vertices(), BoundaryMode::Free);
    CHECK(roundtrip_check(k3, whole) == doctest::Approx(0.0));

    RandomSource rs(29);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = oracles::random_connected_graph(rs, 20);
        FiniteSection sec(g, g.vertices(), BoundaryMode::Free);
        CHECK(roundtrip_check(g, sec) < 1e-9);
    }

    auto chain = WeightedGraph::z_chain();
    FiniteSection csec(chain, chain.box(12), BoundaryMode::Free);
    CHECK(roundtrip_check(chain, csec) < 1e-12);
}

TEST_CASE("harmonic defect: geometric chain has one direction, unit chain none") {
    auto geom = WeightedGraph::geometric_chain(2.0);
    auto candidates = harmonic_defect(geom, Filtration::boxes(geom, 40));
    REQUIRE(candidates.size() == 1);
    const auto& cand = candidates[0];
    CHECK(std::abs(cand.energy - 3.0) < 1e-6);
    CHECK(cand.max_interior_laplacian < 1e-12);
    // unit flux: h(n) - h(n-1) = 1 / c(n-1,n)
    for (int n = -5; n <= 5; ++n) {
        if (n == -5) continue;
        const double step = cand.h.at(VertexId(n)) - cand.h.at(VertexId(n - 1));
        CHECK(step == doctest::Approx(1.0 / geom.edge_weight(VertexId(n - 1), VertexId(n)))
                          .epsilon(1e-9));
    }
    // level energies settle monotonically from below
    for (std::size_t k = 1; k < cand.level_energies.size(); ++k)
        CHECK(cand.level_energies[k] >= cand.level_energies[k - 1] - 1e-12);

    auto chain = WeightedGraph::z_chain();
    CHECK(harmonic_defect(chain, Filtration::boxes(chain, 30)).empty());

    auto k5 = WeightedGraph::complete(5);
    CHECK(harmonic_defect(k5, Filtration::boxes(k5, 10)).empty());

    CHECK_THROWS_WITH_AS(harmonic_defect(chain, Filtration::boxes(chain, 2)),
                         "insufficient filtration depth", std::invalid_argument);
}

TEST_CASE("duality pair check") {
    auto geom = WeightedGraph::geometric_chain(2.0);
    auto candidates = harmonic_defect(geom, Filtration::boxes(geom, 40));
    REQUIRE(candidates.size() == 1);
    FiniteSection gsec(geom, geom.box(30), BoundaryMode::Free);
    CHECK(duality_pair_check(geom, candidates[0].h, gsec) < 1e-12);

    auto chain = WeightedGraph::z_chain();
    FiniteSection csec(chain, chain.box(20), BoundaryMode::Free);
    auto v3 = dipole(chain, VertexId(3), csec);
    CHECK(duality_pair_check(chain, v3, csec) == doctest::Approx(1.0).epsilon(1e-11));

    GraphFunction constant;
    for (int n = -20; n <= 20; ++n) constant.set(VertexId(n), 3.25);
    CHECK(duality_pair_check(chain, constant, csec) == doctest::Approx(0.0));
}

TEST_CASE("dirac gram json round trip") {
    DiracGram gram;
    gram.window = {VertexId(0), VertexId(1)};
    gram.entries.resize(2, 2);
    gram.entries << 1, -1, -1, 1;
    const char* path = "test_gram_io.json";
    gram.to_json_file(path);
    auto back = DiracGram::from_json_file(path);
    CHECK(back.window == gram.window);
    CHECK((back.entries - gram.entries).cwiseAbs().maxCoeff() == 0.0);
    std::remove(path);
}
