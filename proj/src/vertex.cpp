#include "energyspace/vertex.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace energyspace {

std::string VertexId::to_string() const {
    if (const auto* i = as_int()) return std::to_string(*i);
    if (const auto* t = as_tuple()) {
        std::string out = "(";
        for (std::size_t k = 0; k < t->size(); ++k) {
            if (k) out += ',';
            out += std::to_string((*t)[k]);
        }
        out += ')';
        return out;
    }
    return *as_name();
}

namespace {

bool looks_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

VertexId VertexId::parse(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty vertex label");
    if (token.front() == '(') {
        if (token.back() != ')') throw std::invalid_argument("unterminated tuple label: " + token);
        Tuple coords;
        std::string body = token.substr(1, token.size() - 2);
        std::stringstream ss(body);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!looks_integer(part))
                throw std::invalid_argument("bad tuple coordinate in label: " + token);
            coords.push_back(std::stoll(part));
        }
        if (coords.empty()) throw std::invalid_argument("empty tuple label: " + token);
        return VertexId(std::move(coords));
    }
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
        return VertexId(token.substr(1, token.size() - 2));
    if (looks_integer(token)) return VertexId(static_cast<std::int64_t>(std::stoll(token)));
    return VertexId(token);
}

}  // namespace energyspace
