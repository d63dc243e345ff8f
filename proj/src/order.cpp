#include "ska/order.hpp"

#include <numeric>
#include <stdexcept>

namespace ska {

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& ranked) {
    std::vector<int> pos(ranked.size(), -1);
    for (size_t r = 0; r < ranked.size(); ++r) {
        int v = ranked[r];
        if (v < 0 || static_cast<size_t>(v) >= ranked.size() || pos[v] != -1)
            throw std::invalid_argument("order permutation is not a bijection on the variables");
        pos[v] = static_cast<int>(r);
    }
    return pos;
}

}  // namespace

MonomialOrder MonomialOrder::revlex(std::vector<int> ranked) {
    MonomialOrder o;
    o.kind_ = Kind::revlex;
    o.position_of_ = inverse_permutation(ranked);
    o.ranked_ = std::move(ranked);
    return o;
}

MonomialOrder MonomialOrder::lex(std::vector<int> ranked) {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    o.position_of_ = inverse_permutation(ranked);
    o.ranked_ = std::move(ranked);
    return o;
}

MonomialOrder MonomialOrder::block_eliminate(std::vector<int> front, MonomialOrder inner) {
    MonomialOrder o;
    o.kind_ = Kind::block;
    o.inner_ = std::make_shared<MonomialOrder>(std::move(inner));
    o.position_of_.assign(o.inner_->arity(), 0);
    o.in_front_.assign(o.inner_->arity(), 0);
    for (int v : front) {
        if (v < 0 || static_cast<size_t>(v) >= o.in_front_.size())
            throw std::invalid_argument("block order: front variable out of range");
        o.in_front_[v] = 1;
    }
    o.front_count_ = 0;
    for (char c : o.in_front_) o.front_count_ += c;
    o.ranked_ = std::move(front);
    return o;
}

MonomialOrder MonomialOrder::grevlex(size_t n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return revlex(std::move(id));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity() || a.arity() != arity())
        throw std::invalid_argument("monomial arity does not match order");
    switch (kind_) {
        case Kind::revlex: {
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            // lowest-ranked variable with differing exponent; smaller exponent wins
            for (size_t r = ranked_.size(); r-- > 0;) {
                uint32_t x = a[ranked_[r]], y = b[ranked_[r]];
                if (x != y) return x > y ? -1 : 1;
            }
            return 0;
        }
        case Kind::lex: {
            for (int v : ranked_) {
                uint32_t x = a[v], y = b[v];
                if (x != y) return x < y ? -1 : 1;
            }
            return 0;
        }
        case Kind::block: {
            uint32_t da = 0, db = 0;
            for (size_t i = 0; i < in_front_.size(); ++i) {
                if (in_front_[i]) {
                    da += a[i];
                    db += b[i];
                }
            }
            if (da != db) return da < db ? -1 : 1;
            return inner_->compare(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::string s;
    switch (kind_) {
        case Kind::revlex: s = "revlex:"; break;
        case Kind::lex: s = "lex:"; break;
        case Kind::block: s = "block:"; break;
    }
    for (size_t i = 0; i < ranked_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ranked_[i]);
    }
    if (kind_ == Kind::block) s += "|" + inner_->key();
    return s;
}

}  // namespace ska
