#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace energyspace {

/// Vertex label: an integer, an integer tuple (lattice coordinates), or a name.
/// Totally ordered (kind first, then value) so that every iteration over vertex
/// sets is deterministic.
class VertexId {
public:
    using Tuple = std::vector<std::int64_t>;

    VertexId() : value_(std::int64_t{0}) {}
    VertexId(std::int64_t v) : value_(v) {}
    VertexId(int v) : value_(static_cast<std::int64_t>(v)) {}
    VertexId(Tuple t) : value_(std::move(t)) {}
    VertexId(std::string name) : value_(std::move(name)) {}
    VertexId(const char* name) : value_(std::string(name)) {}

    bool operator==(const VertexId& rhs) const { return value_ == rhs.value_; }
    bool operator!=(const VertexId& rhs) const { return !(*this == rhs); }
    // variant ordering: alternative index first, then the held value
    bool operator<(const VertexId& rhs) const { return value_ < rhs.value_; }
    bool operator>(const VertexId& rhs) const { return rhs < *this; }
    bool operator<=(const VertexId& rhs) const { return !(rhs < *this); }
    bool operator>=(const VertexId& rhs) const { return !(*this < rhs); }

    const std::int64_t* as_int() const { return std::get_if<std::int64_t>(&value_); }
    const Tuple* as_tuple() const { return std::get_if<Tuple>(&value_); }
    const std::string* as_name() const { return std::get_if<std::string>(&value_); }

    /// "3", "(1,0)" or the raw name.
    std::string to_string() const;

    /// Inverse of to_string: "(...)" makes a tuple, pure integers an integer id,
    /// "quoted" or anything else a name.
    static VertexId parse(const std::string& token);

private:
    std::variant<std::int64_t, Tuple, std::string> value_;
};

inline std::string to_string(const VertexId& v) { return v.to_string(); }

}  // namespace energyspace
