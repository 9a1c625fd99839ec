#include "energyspace/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace energyspace {

struct WeightedGraph::Backend {
    virtual ~Backend() = default;
    virtual bool contains(const VertexId& x) const = 0;
    virtual std::vector<std::pair<VertexId, double>> neighbors(const VertexId& x) const = 0;
    virtual bool finite() const = 0;
    virtual std::vector<VertexId> vertices() const {
        throw std::logic_error("vertex enumeration requires a finite graph");
    }
    virtual int lattice_dim() const { return 0; }
};

namespace {

using NeighborList = std::vector<std::pair<VertexId, double>>;

struct FiniteBackend final : WeightedGraph::Backend {
    std::map<VertexId, NeighborList> adjacency;

    bool contains(const VertexId& x) const override { return adjacency.count(x) != 0; }
    NeighborList neighbors(const VertexId& x) const override {
        auto it = adjacency.find(x);
        if (it == adjacency.end()) throw std::invalid_argument("vertex not in graph");
        return it->second;
    }
    bool finite() const override { return true; }
    std::vector<VertexId> vertices() const override {
        std::vector<VertexId> out;
        out.reserve(adjacency.size());
        for (const auto& [v, _] : adjacency) out.push_back(v);
        return out;
    }
};

struct ZChainBackend final : WeightedGraph::Backend {
    bool contains(const VertexId& x) const override { return x.as_int() != nullptr; }
    NeighborList neighbors(const VertexId& x) const override {
        const auto* n = x.as_int();
        if (!n) throw std::invalid_argument("vertex not in graph");
        return {{VertexId(*n - 1), 1.0}, {VertexId(*n + 1), 1.0}};
    }
    bool finite() const override { return false; }
    int lattice_dim() const override { return 1; }
};

struct GeomChainBackend final : WeightedGraph::Backend {
    double ratio;
    explicit GeomChainBackend(double r) : ratio(r) {}

    // edge (n, n+1) carries weight ratio^|n|
    static double edge_pow(double r, std::int64_t n) {
        return std::pow(r, static_cast<double>(std::llabs(n)));
    }
    bool contains(const VertexId& x) const override { return x.as_int() != nullptr; }
    NeighborList neighbors(const VertexId& x) const override {
        const auto* n = x.as_int();
        if (!n) throw std::invalid_argument("vertex not in graph");
        return {{VertexId(*n - 1), edge_pow(ratio, *n - 1)}, {VertexId(*n + 1), edge_pow(ratio, *n)}};
    }
    bool finite() const override { return false; }
    int lattice_dim() const override { return 1; }
};

struct ZLatticeBackend final : WeightedGraph::Backend {
    int dim;
    explicit ZLatticeBackend(int d) : dim(d) {}

    bool contains(const VertexId& x) const override {
        const auto* t = x.as_tuple();
        return t && static_cast<int>(t->size()) == dim;
    }
    NeighborList neighbors(const VertexId& x) const override {
        const auto* t = x.as_tuple();
        if (!t || static_cast<int>(t->size()) != dim)
            throw std::invalid_argument("vertex not in graph");
        NeighborList out;
        out.reserve(2 * dim);
        for (int i = 0; i < dim; ++i) {
            for (int s : {-1, +1}) {
                auto coords = *t;
                coords[i] += s;
                out.emplace_back(VertexId(std::move(coords)), 1.0);
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
    bool finite() const override { return false; }
    int lattice_dim() const override { return dim; }
};

void check_connected(const FiniteBackend& fb, const VertexId& base) {
    if (!fb.contains(base)) throw std::invalid_argument("base point not in graph");
    std::set<VertexId> seen{base};
    std::deque<VertexId> queue{base};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const auto& [w, _] : fb.adjacency.at(v))
            if (seen.insert(w).second) queue.push_back(w);
    }
    if (seen.size() != fb.adjacency.size())
        throw std::invalid_argument("graph is not connected");
}

std::shared_ptr<FiniteBackend> build_finite(const std::vector<Edge>& edges) {
    auto fb = std::make_shared<FiniteBackend>();
    std::map<std::pair<VertexId, VertexId>, double> weights;
    for (const auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("edge weights must be positive finite reals");
        auto key = e.u < e.v ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
        auto [it, fresh] = weights.emplace(key, e.weight);
        if (!fresh && it->second != e.weight)
            throw std::invalid_argument("conflicting weights for edge " + e.u.to_string() + " " +
                                        e.v.to_string());
    }
    if (weights.empty()) throw std::invalid_argument("graph has no edges");
    for (const auto& [key, w] : weights) {
        fb->adjacency[key.first].emplace_back(key.second, w);
        fb->adjacency[key.second].emplace_back(key.first, w);
    }
    for (auto& [_, nbrs] : fb->adjacency)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return fb;
}

}  // namespace

WeightedGraph::WeightedGraph(std::shared_ptr<const Backend> backend, VertexId base,
                             std::string description)
    : backend_(std::move(backend)), base_(std::move(base)), description_(std::move(description)) {}

bool WeightedGraph::contains(const VertexId& x) const { return backend_->contains(x); }

std::vector<std::pair<VertexId, double>> WeightedGraph::neighbors(const VertexId& x) const {
    return backend_->neighbors(x);
}

double WeightedGraph::degree(const VertexId& x) const {
    double sum = 0.0;
    for (const auto& [_, w] : backend_->neighbors(x)) sum += w;
    return sum;
}

double WeightedGraph::edge_weight(const VertexId& x, const VertexId& y) const {
    for (const auto& [v, w] : backend_->neighbors(x))
        if (v == y) return w;
    return 0.0;
}

bool WeightedGraph::adjacent(const VertexId& x, const VertexId& y) const {
    return edge_weight(x, y) != 0.0;
}

bool WeightedGraph::is_finite() const { return backend_->finite(); }

std::vector<VertexId> WeightedGraph::vertices() const { return backend_->vertices(); }

std::size_t WeightedGraph::vertex_count() const { return backend_->vertices().size(); }

int WeightedGraph::lattice_dimension() const { return backend_->lattice_dim(); }

std::vector<VertexId> WeightedGraph::box(int radius) const {
    if (radius < 0) throw std::invalid_argument("box radius must be nonnegative");
    const int d = backend_->lattice_dim();
    std::vector<VertexId> out;
    if (d == 1) {
        for (std::int64_t n = -radius; n <= radius; ++n) out.emplace_back(n);
        return out;
    }
    if (d > 1) {
        VertexId::Tuple coords(static_cast<std::size_t>(d), -radius);
        while (true) {
            out.emplace_back(coords);
            int i = d - 1;
            while (i >= 0 && coords[i] == radius) coords[i--] = -radius;
            if (i < 0) break;
            ++coords[i];
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    // finite graph: breadth-first prefix of 2 + radius vertices around the base
    if (!backend_->finite()) throw std::logic_error("box requires a lattice generator");
    std::set<VertexId> seen{base_};
    std::deque<VertexId> queue{base_};
    std::vector<VertexId> order;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (const auto& [w, _] : backend_->neighbors(v))
            if (seen.insert(w).second) queue.push_back(w);
    }
    std::size_t take = std::min(order.size(), static_cast<std::size_t>(radius) + 2);
    out.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(out.begin(), out.end());
    return out;
}

WeightedGraph WeightedGraph::z_chain() {
    return WeightedGraph(std::make_shared<ZChainBackend>(), VertexId(0), "zchain");
}

WeightedGraph WeightedGraph::z_lattice(int d) {
    if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
    if (d == 1) return z_chain();
    VertexId::Tuple origin(static_cast<std::size_t>(d), 0);
    return WeightedGraph(std::make_shared<ZLatticeBackend>(d), VertexId(origin),
                         "zd:" + std::to_string(d));
}

WeightedGraph WeightedGraph::geometric_chain(double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio))
        throw std::invalid_argument("geometric ratio must be a positive real");
    std::ostringstream name;
    name << "geom:" << ratio;
    return WeightedGraph(std::make_shared<GeomChainBackend>(ratio), VertexId(0), name.str());
}

WeightedGraph WeightedGraph::star(int spokes) {
    if (spokes < 1) throw std::invalid_argument("star needs at least one spoke");
    std::vector<Edge> edges;
    for (int i = 1; i <= spokes; ++i) edges.push_back({VertexId(0), VertexId(i), 1.0});
    auto fb = build_finite(edges);
    return WeightedGraph(fb, VertexId(0), "star:" + std::to_string(spokes));
}

WeightedGraph WeightedGraph::complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs at least two vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({VertexId(i), VertexId(j), 1.0});
    auto fb = build_finite(edges);
    return WeightedGraph(fb, VertexId(0), "complete:" + std::to_string(n));
}

WeightedGraph WeightedGraph::from_edges(const std::vector<Edge>& edges, const VertexId& base) {
    auto fb = build_finite(edges);
    check_connected(*fb, base);
    return WeightedGraph(fb, base, "edges");
}

WeightedGraph WeightedGraph::from_file(const std::string& path, const VertexId& base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, w;
        if (!(ls >> a)) continue;
        if (!(ls >> b >> w))
            throw std::invalid_argument("malformed edge on line " + std::to_string(lineno) +
                                        " of " + path);
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("trailing tokens on line " + std::to_string(lineno) +
                                        " of " + path);
        edges.push_back({VertexId::parse(a), VertexId::parse(b), std::stod(w)});
    }
    auto fb = build_finite(edges);
    check_connected(*fb, base);
    return WeightedGraph(fb, base, path);
}

WeightedGraph WeightedGraph::from_spec(const std::string& spec,
                                       const std::optional<VertexId>& base) {
    auto with_optional_base = [&](WeightedGraph g) {
        return base ? g.with_base(*base) : g;
    };
    if (spec == "zchain") return with_optional_base(z_chain());
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        if (head == "zd") return with_optional_base(z_lattice(std::stoi(arg)));
        if (head == "geom") return with_optional_base(geometric_chain(std::stod(arg)));
        if (head == "star") return with_optional_base(star(std::stoi(arg)));
        if (head == "complete") return with_optional_base(complete(std::stoi(arg)));
    }
    if (!base) throw std::invalid_argument("graph files need an explicit base point");
    return from_file(spec, *base);
}

WeightedGraph WeightedGraph::with_base(const VertexId& base) const {
    if (!backend_->contains(base)) throw std::invalid_argument("base point not in graph");
    return WeightedGraph(backend_, base, description_);
}

}  // namespace energyspace
