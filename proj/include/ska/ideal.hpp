#ifndef SKA_IDEAL_HPP
#define SKA_IDEAL_HPP

#include <string>
#include <vector>

#include "ska/polynomial.hpp"

namespace ska {

// Named variables + nonzero generators + field tag.
struct IdealPresentation {
    RingPtr ring;
    std::vector<Polynomial> gens;

    IdealPresentation(RingPtr r, std::vector<Polynomial> g);

    bool is_homogeneous() const;
    size_t arity() const { return ring->arity(); }

    // canonical file-format text (round-trips through parse_ideal_text)
    std::string to_text() const;
    uint64_t fingerprint() const;
};

// presentation of I + (extra generators)
IdealPresentation with_extra_gens(const IdealPresentation& I, const std::vector<Polynomial>& extra);

// presentation of I + (the given variables)
IdealPresentation plus_variables(const IdealPresentation& I, const std::vector<int>& vars);

uint64_t fnv1a(const std::string& s);

}  // namespace ska

#endif
