#include <cstdio>
#include "energyspace/duality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "energyspace/numerics.hpp"

namespace energyspace {

using nlohmann::json;

DiracGram DiracGram::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open gram file: " + path);
    json doc = json::parse(in);
    DiracGram out;
    for (const auto& label : doc.at("window")) {
        if (label.is_number_integer())
            out.window.emplace_back(label.get<std::int64_t>());
        else
            out.window.push_back(VertexId::parse(label.get<std::string>()));
    }
    const auto n = static_cast<Eigen::Index>(out.window.size());
    const auto& entries = doc.at("entries");
    if (static_cast<Eigen::Index>(entries.size()) != n * n)
        throw std::invalid_argument("gram entries must be a row-major n*n array");
    out.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out.entries(i, j) = entries.at(static_cast<std::size_t>(i * n + j)).get<double>();
    return out;
}

void DiracGram::to_json_file(const std::string& path) const {
    json doc;
    doc["window"] = json::array();
    for (const auto& v : window) doc["window"].push_back(v.to_string());
    doc["entries"] = json::array();
    for (Eigen::Index i = 0; i < entries.rows(); ++i)
        for (Eigen::Index j = 0; j < entries.cols(); ++j) doc["entries"].push_back(entries(i, j));
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write gram file: " + path);
    out << doc.dump(2) << "\n";
}

WeightedGraph kernel_to_graph(const DiracGram& gram, const VertexId& base, double tol,
                              const std::set<VertexId>& boundary_rows) {
    const auto n = gram.entries.rows();
    if (n != gram.entries.cols() || n != static_cast<Eigen::Index>(gram.window.size()))
        throw std::invalid_argument("gram window/entry dimensions disagree");
    const double scale = std::max(1.0, gram.entries.cwiseAbs().maxCoeff());
    if ((gram.entries - gram.entries.transpose()).cwiseAbs().maxCoeff() > tol * scale)
        throw std::invalid_argument("not graph-compatible: matrix is not symmetric");

    std::vector<Edge> edges;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (gram.entries(i, i) <= 0.0)
            throw std::invalid_argument("not graph-compatible: nonpositive diagonal");
        double row_sum = gram.entries(i, i);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            const double entry = gram.entries(i, j);
            if (entry > tol)
                throw std::invalid_argument("not graph-compatible: positive cross term");
            if (entry > -tol) continue;  // treated as no edge
            row_sum += entry;
            if (j > i) edges.push_back({gram.window[i], gram.window[j], -entry});
        }
        const bool exempt = boundary_rows.count(gram.window[i]) != 0;
        if (row_sum < -tol * scale)
            throw std::invalid_argument("dirac row-sum identity fails: diagonal deficit");
        if (!exempt && std::abs(row_sum) > tol * scale)
            throw std::invalid_argument("dirac row-sum identity fails");
    }
    if (edges.empty()) throw std::invalid_argument("gram matrix describes an edgeless graph");
    return WeightedGraph::from_edges(edges, base);
}

KernelPair graph_to_kernel(const WeightedGraph& g, const std::vector<VertexId>& window,
                           const FiniteSection& section) {
    KernelPair out;
    out.kernel = gram(g, window, section);

    std::vector<VertexId> dirac_window = window;
    dirac_window.push_back(g.base_point());
    std::sort(dirac_window.begin(), dirac_window.end());
    dirac_window.erase(std::unique(dirac_window.begin(), dirac_window.end()), dirac_window.end());
    out.dirac.window = dirac_window;
    const auto n = static_cast<Eigen::Index>(dirac_window.size());
    out.dirac.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out.dirac.entries(i, j) =
                delta_inner(g, dirac_window[static_cast<std::size_t>(i)],
                            dirac_window[static_cast<std::size_t>(j)]);
    return out;
}

double roundtrip_check(const WeightedGraph& g, const FiniteSection& section, double tol) {
    const auto& window = section.vertices();
    DiracGram gd;
    gd.window = window;
    const auto n = static_cast<Eigen::Index>(window.size());
    gd.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            gd.entries(i, j) = delta_inner(g, window[static_cast<std::size_t>(i)],
                                           window[static_cast<std::size_t>(j)]);

    std::set<VertexId> boundary(section.boundary().begin(), section.boundary().end());
    WeightedGraph rebuilt = kernel_to_graph(gd, g.base_point(), tol, boundary);

    double max_rel = 0.0;
    for (const auto& x : window) {
        for (const auto& [y, w] : g.neighbors(x)) {
            if (!(x < y) || !section.contains(y)) continue;
            const double rebuilt_w = rebuilt.edge_weight(x, y);
            max_rel = std::max(max_rel, std::abs(rebuilt_w - w) / w);
        }
    }
    return max_rel;
}

namespace {

// Connected components of `region` in the induced subgraph, labelled 0..m-1 in
// order of their smallest vertex.
std::map<VertexId, int> region_components(const WeightedGraph& g, const std::set<VertexId>& region) {
    std::map<VertexId, int> label;
    int next = 0;
    for (const auto& seed : region) {
        if (label.count(seed)) continue;
        std::deque<VertexId> queue{seed};
        label[seed] = next;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const auto& [w, _] : g.neighbors(v))
                if (region.count(w) && !label.count(w)) {
                    label[w] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

struct LevelSolve {
    std::map<int, GraphFunction> per_component;  // unit boundary datum per component
    std::map<int, double> energy;                // energy of that datum's solution
};

// Dirichlet solve on the level: harmonic inside, component indicator data on
// the boundary. Boundary vertices without a component label carry datum 0.
LevelSolve solve_level(const WeightedGraph& g, const std::vector<VertexId>& level,
                       const std::vector<VertexId>& boundary,
                       const std::map<VertexId, int>& bd_component, int components) {
    LevelSolve out;
    std::set<VertexId> bd_set(boundary.begin(), boundary.end());
    std::vector<VertexId> interior;
    for (const auto& v : level)
        if (!bd_set.count(v)) interior.push_back(v);
    std::map<VertexId, Eigen::Index> idx;
    for (std::size_t i = 0; i < interior.size(); ++i)
        idx.emplace(interior[i], static_cast<Eigen::Index>(i));

    const auto n = static_cast<Eigen::Index>(interior.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double deg = 0.0;
        for (const auto& [y, w] : g.neighbors(interior[static_cast<std::size_t>(i)])) {
            deg += w;  // interior vertices have all neighbors inside the level
            auto it = idx.find(y);
            if (it != idx.end()) A(i, it->second) = -w;
        }
        A(i, i) = deg;
    }
    Eigen::LLT<Eigen::MatrixXd> llt;
    if (n > 0) {
        llt.compute(A);
        if (llt.info() != Eigen::Success)
            throw std::runtime_error("harmonic level solve: factorization failed");
    }

    auto label_of = [&](const VertexId& b) {
        auto it = bd_component.find(b);
        return it == bd_component.end() ? -1 : it->second;
    };
    for (int c = 1; c < components; ++c) {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
        for (const auto& b : boundary) {
            if (label_of(b) != c) continue;
            for (const auto& [y, w] : g.neighbors(b)) {
                auto it = idx.find(y);
                if (it != idx.end()) rhs(it->second) += w;
            }
        }
        GraphFunction h;
        for (const auto& b : boundary) h.set(b, label_of(b) == c ? 1.0 : 0.0);
        if (n > 0) {
            Eigen::VectorXd z = llt.solve(rhs);
            z += llt.solve(rhs - A * z);
            for (Eigen::Index i = 0; i < n; ++i)
                h.set(interior[static_cast<std::size_t>(i)], z(i));
        }
        out.energy[c] = energy_norm2(g, h);
        out.per_component.emplace(c, std::move(h));
    }
    return out;
}

}  // namespace

std::vector<HarmonicCandidate> harmonic_defect(const WeightedGraph& g, const Filtration& filtration) {
    if (filtration.depth() < 4) throw std::invalid_argument("insufficient filtration depth");

    const auto& top = filtration.level(filtration.depth() - 1);
    std::set<VertexId> top_set(top.begin(), top.end());

    // analysis levels: all but the top, which serves as horizon
    const std::size_t usable = filtration.depth() - 1;
    if (usable < 3) throw std::invalid_argument("insufficient filtration depth");

    // classify every analysis level's boundary against the top annulus
    std::vector<std::map<VertexId, int>> bd_labels(usable);
    int components = 0;
    {
        // annulus of the first level carries the finest splitting; reuse its
        // component ids for all coarser levels via containment
        const auto& base_level = filtration.level(0);
        std::set<VertexId> base_set(base_level.begin(), base_level.end());
        std::set<VertexId> annulus;
        for (const auto& v : top)
            if (!base_set.count(v)) annulus.insert(v);
        auto annulus_label = region_components(g, annulus);
        for (std::size_t k = 0; k < usable; ++k) {
            const auto& level = filtration.level(k);
            std::set<VertexId> level_set(level.begin(), level.end());
            for (const auto& b : section_boundary(g, level)) {
                // smallest annulus-component label over the outside neighbors
                int lbl = -1;
                for (const auto& [y, _] : g.neighbors(b)) {
                    if (level_set.count(y)) continue;
                    auto it = annulus_label.find(y);
                    if (it != annulus_label.end() && (lbl < 0 || it->second < lbl))
                        lbl = it->second;
                }
                if (lbl >= 0) bd_labels[k][b] = lbl;
            }
        }
        for (const auto& [_, lbl] : annulus_label) components = std::max(components, lbl + 1);
    }
    if (components < 2) return {};

    // per level, one solve per non-reference component
    std::vector<LevelSolve> solves(usable);
    for (std::size_t k = 0; k < usable; ++k)
        solves[k] = solve_level(g, filtration.level(k), section_boundary(g, filtration.level(k)),
                                bd_labels[k], components);

    std::vector<HarmonicCandidate> out;
    for (int c = 1; c < components; ++c) {
        std::vector<double> level_energies;
        bool complete = true;
        for (std::size_t k = 0; k < usable; ++k) {
            auto it = solves[k].energy.find(c);
            if (it == solves[k].energy.end() || !(it->second > 0.0)) {
                complete = false;
                break;
            }
            // unit-flux normalization: for a unit potential datum the flux
            // through the cut equals the energy, so the normalized energy is
            // the effective resistance 1/e
            level_energies.push_back(1.0 / it->second);
        }
        fprintf(stderr, "DBG c=%d complete=%d n=%zu\n", c, (int)complete, level_energies.size());
        if (!complete || level_energies.size() < 3) continue;

        const std::size_t n = level_energies.size();
        const double tail_gap = std::abs(level_energies[n - 1] - level_energies[n - 2]);
        fprintf(stderr, "DBG tail_gap=%.3e E=%.12f\n", tail_gap, level_energies[n-1]);
        if (!(tail_gap < 1e-6)) continue;  // energies escape or have not settled

        const auto& h_raw = solves[usable - 1].per_component.at(c);
        const double e = solves[usable - 1].energy.at(c);
        GraphFunction h = h_raw;
        h.scale(1.0 / e);
        h = h.canonicalized(g.base_point());

        HarmonicCandidate cand;
        cand.level_energies = std::move(level_energies);
        cand.energy = cand.level_energies.back();
        double max_lap = 0.0;
        {
            auto bd_vec = section_boundary(g, filtration.level(usable - 1));
            std::set<VertexId> bd(bd_vec.begin(), bd_vec.end());
            for (const auto& v : filtration.level(usable - 1))
                if (!bd.count(v)) max_lap = std::max(max_lap, std::abs(laplacian_apply(g, h, v)));
        }
        cand.max_interior_laplacian = max_lap;
        fprintf(stderr, "DBG maxlap=%.3e\n", max_lap);
        if (!(max_lap <= 1e-9)) continue;
        cand.h = std::move(h);
        out.push_back(std::move(cand));
    }
    return out;
}

double duality_pair_check(const WeightedGraph& g, const GraphFunction& h,
                          const FiniteSection& section) {
    double max_abs = 0.0;
    for (const auto& x : section.interior()) {
        if (!h.defined_at(x)) continue;
        bool evaluable = true;
        for (const auto& [y, _] : g.neighbors(x))
            if (!h.defined_at(y)) {
                evaluable = false;
                break;
            }
        if (evaluable) max_abs = std::max(max_abs, std::abs(laplacian_apply(g, h, x)));
    }
    return max_abs;
}

}  // namespace energyspace
