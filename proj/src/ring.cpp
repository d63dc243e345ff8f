#include "ska/ring.hpp"

#include <stdexcept>

namespace ska {

Ring::Ring(std::vector<std::string> vars, Field field) : vars_(std::move(vars)), field_(field) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw std::invalid_argument("empty variable name");
        if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate variable name: " + vars_[i]);
    }
}

Ring::Ring(std::vector<std::string> vars, Field field,
           const std::vector<std::pair<std::string, int>>& aliases)
    : Ring(std::move(vars), field) {
    for (const auto& [name, idx] : aliases) {
        if (idx < 0 || static_cast<size_t>(idx) >= vars_.size())
            throw std::invalid_argument("alias target out of range");
        if (!index_.emplace(name, idx).second)
            throw std::invalid_argument("alias clashes with an existing name: " + name);
    }
}

int Ring::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

RingPtr make_ring(std::vector<std::string> vars, Field field) {
    return std::make_shared<Ring>(std::move(vars), field);
}

RingPtr make_ring_xn(size_t n, Field field) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return make_ring(std::move(vars), field);
}

}  // namespace ska
