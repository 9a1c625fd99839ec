#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "energyspace/vertex.hpp"

namespace energyspace {

struct Edge {
    VertexId u;
    VertexId v;
    double weight = 1.0;
};

/// Connected weighted graph with symmetric positive conductances, no self
/// loops, finite degrees, and a distinguished base point. Finite graphs are
/// stored explicitly; the built-in infinite families (integer chain, d-lattice,
/// geometric chain) are generator-backed and expose vertices lazily. Instances
/// are immutable and cheap to copy; all queries are pure.
class WeightedGraph {
public:
    bool contains(const VertexId& x) const;

    /// Neighbors with edge weights, sorted by vertex id.
    std::vector<std::pair<VertexId, double>> neighbors(const VertexId& x) const;

    /// c(x), the sum of incident conductances. Strictly positive.
    double degree(const VertexId& x) const;

    /// Weight of edge (x,y); 0 when not adjacent.
    double edge_weight(const VertexId& x, const VertexId& y) const;
    bool adjacent(const VertexId& x, const VertexId& y) const;

    const VertexId& base_point() const { return base_; }

    bool is_finite() const;
    /// All vertices, sorted. Finite graphs only.
    std::vector<VertexId> vertices() const;
    std::size_t vertex_count() const;

    /// >0 for the lattice-like generators (chain = 1), 0 otherwise.
    int lattice_dimension() const;
    /// Vertices of the box [-k,k]^d around the origin (lattice generators),
    /// or of a BFS prefix ball for finite graphs. Sorted.
    std::vector<VertexId> box(int radius) const;

    /// Generator spec or file path, echoed in reports.
    const std::string& description() const { return description_; }

    // Built-in families. Base point defaults to 0 / the origin / the hub.
    static WeightedGraph z_chain();
    static WeightedGraph z_lattice(int d);
    static WeightedGraph geometric_chain(double ratio);
    static WeightedGraph star(int spokes);
    static WeightedGraph complete(int n);

    static WeightedGraph from_edges(const std::vector<Edge>& edges, const VertexId& base);
    /// Text format: one `<label> <label> <weight>` per line, '#' comments.
    static WeightedGraph from_file(const std::string& path, const VertexId& base);
    /// "zchain" | "zd:<d>" | "geom:<ratio>" | "star:<k>" | "complete:<k>" | file path.
    static WeightedGraph from_spec(const std::string& spec,
                                   const std::optional<VertexId>& base = std::nullopt);

    WeightedGraph with_base(const VertexId& base) const;

    struct Backend;

private:
    WeightedGraph(std::shared_ptr<const Backend> backend, VertexId base, std::string description);

    std::shared_ptr<const Backend> backend_;
    VertexId base_;
    std::string description_;
};

}  // namespace energyspace
