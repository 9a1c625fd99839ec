#include "energyspace/section.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace energyspace {

std::vector<VertexId> section_boundary(const WeightedGraph& g, const std::vector<VertexId>& F) {
    std::set<VertexId> members(F.begin(), F.end());
    std::vector<VertexId> out;
    for (const auto& x : members) {
        for (const auto& [y, _] : g.neighbors(x)) {
            if (!members.count(y)) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

FiniteSection::FiniteSection(const WeightedGraph& g, std::vector<VertexId> vertices,
                             BoundaryMode mode)
    : graph_(g), mode_(mode), vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    if (vertices_.empty()) throw std::invalid_argument("empty section");
    for (const auto& x : vertices_)
        if (!g.contains(x)) throw std::invalid_argument("vertex not in graph: " + x.to_string());
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
    if (!index_.count(g.base_point()))
        throw std::invalid_argument("section must contain the base point");

    // induced connectivity
    std::set<VertexId> seen{g.base_point()};
    std::deque<VertexId> queue{g.base_point()};
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const auto& [w, _] : g.neighbors(v))
            if (index_.count(w) && seen.insert(w).second) queue.push_back(w);
    }
    if (seen.size() != vertices_.size()) throw std::invalid_argument("disconnected section");

    boundary_ = section_boundary(g, vertices_);
    std::set<VertexId> bd(boundary_.begin(), boundary_.end());
    for (const auto& x : vertices_)
        if (!bd.count(x)) interior_.push_back(x);
}

bool FiniteSection::is_interior(const VertexId& x) const {
    return index_.count(x) && !std::binary_search(boundary_.begin(), boundary_.end(), x);
}

std::optional<std::size_t> FiniteSection::index_of(const VertexId& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FiniteSection box_section(const WeightedGraph& g, int radius, BoundaryMode mode) {
    return FiniteSection(g, g.box(radius), mode);
}

Filtration::Filtration(const WeightedGraph& g, std::vector<std::vector<VertexId>> levels)
    : graph_(g), levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("filtration needs at least one level");
    for (auto& level : levels_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        if (!std::binary_search(level.begin(), level.end(), g.base_point()))
            throw std::invalid_argument("every filtration level must contain the base point");
        for (const auto& x : level)
            if (!g.contains(x))
                throw std::invalid_argument("vertex not in graph: " + x.to_string());
    }
    for (std::size_t k = 1; k < levels_.size(); ++k) {
        if (levels_[k].size() <= levels_[k - 1].size() ||
            !std::includes(levels_[k].begin(), levels_[k].end(), levels_[k - 1].begin(),
                           levels_[k - 1].end()))
            throw std::invalid_argument("filtration levels must be strictly nested");
    }
}

Filtration Filtration::boxes(const WeightedGraph& g, int kmax) {
    if (kmax < 1) throw std::invalid_argument("filtration needs at least one level");
    std::vector<std::vector<VertexId>> levels;
    std::size_t last_size = 0;
    for (int k = 1; k <= kmax; ++k) {
        auto level = g.box(k);
        if (level.size() == last_size) break;  // finite graph fully covered
        last_size = level.size();
        levels.push_back(std::move(level));
    }
    return Filtration(g, std::move(levels));
}

}  // namespace energyspace
