#include "ska/ideal.hpp"

#include <sstream>
#include <stdexcept>

namespace ska {

IdealPresentation::IdealPresentation(RingPtr r, std::vector<Polynomial> g)
    : ring(std::move(r)), gens(std::move(g)) {
    for (const Polynomial& p : gens) {
        if (!p.ring()->same_ring(*ring)) throw std::invalid_argument("generator ring mismatch");
        if (p.is_zero()) throw std::invalid_argument("zero generator in ideal presentation");
    }
}

bool IdealPresentation::is_homogeneous() const {
    for (const Polynomial& p : gens)
        if (!p.is_homogeneous()) return false;
    return true;
}

std::string IdealPresentation::to_text() const {
    std::ostringstream os;
    os << "vars:";
    for (size_t i = 0; i < ring->arity(); ++i) os << (i ? ", " : " ") << ring->var_name(i);
    os << "\n";
    os << "field: " << ring->field().name() << "\n";
    for (const Polynomial& p : gens) os << p.str() << "\n";
    return os.str();
}

uint64_t IdealPresentation::fingerprint() const { return fnv1a(to_text()); }

IdealPresentation with_extra_gens(const IdealPresentation& I, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = I.gens;
    for (const Polynomial& p : extra)
        if (!p.is_zero()) gens.push_back(p);
    return IdealPresentation(I.ring, std::move(gens));
}

IdealPresentation plus_variables(const IdealPresentation& I, const std::vector<int>& vars) {
    std::vector<Polynomial> extra;
    extra.reserve(vars.size());
    for (int v : vars) extra.push_back(Polynomial::variable(I.ring, static_cast<size_t>(v)));
    return with_extra_gens(I, extra);
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ska
