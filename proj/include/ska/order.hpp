#ifndef SKA_ORDER_HPP
#define SKA_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "ska/monomial.hpp"

namespace ska {

// Term orders: revlex / lex parameterized by a ranking of the variables
// (ranked[0] is the highest variable), plus a block elimination order that
// compares front-block degree first and delegates ties to an inner order.
class MonomialOrder {
public:
    enum class Kind : uint8_t { revlex, lex, block };

    static MonomialOrder revlex(std::vector<int> ranked);
    static MonomialOrder lex(std::vector<int> ranked);
    static MonomialOrder block_eliminate(std::vector<int> front, MonomialOrder inner);

    // default grevlex in declaration order for an n-variable ring
    static MonomialOrder grevlex(size_t n);

    Kind kind() const { return kind_; }
    const std::vector<int>& ranked() const { return ranked_; }

    // -1: a < b, 0: equal, +1: a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // stable identifier for caches and reports
    std::string key() const;

    size_t arity() const { return position_of_.size(); }

private:
    MonomialOrder() = default;

    Kind kind_ = Kind::revlex;
    std::vector<int> ranked_;        // variable indices, highest first (revlex/lex)
    std::vector<int> position_of_;   // inverse permutation
    std::vector<char> in_front_;     // block order membership mask
    uint32_t front_count_ = 0;
    std::shared_ptr<const MonomialOrder> inner_;
};

}  // namespace ska

#endif
