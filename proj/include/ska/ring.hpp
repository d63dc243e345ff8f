#ifndef SKA_RING_HPP
#define SKA_RING_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ska/scalar.hpp"

namespace ska {

// Ambient polynomial ring: ordered variable names plus the coefficient field.
// Aliases let alternative spellings resolve to a variable (c21 -> c12).
class Ring {
public:
    Ring(std::vector<std::string> vars, Field field);
    Ring(std::vector<std::string> vars, Field field,
         const std::vector<std::pair<std::string, int>>& aliases);

    size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(size_t i) const { return vars_.at(i); }
    const Field& field() const { return field_; }

    // -1 when absent
    int index_of(const std::string& name) const;

    bool same_ring(const Ring& o) const { return vars_ == o.vars_ && field_ == o.field_; }

private:
    std::vector<std::string> vars_;
    Field field_;
    std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Field field);

// x1..xn over the given field
RingPtr make_ring_xn(size_t n, Field field);

}  // namespace ska

#endif
