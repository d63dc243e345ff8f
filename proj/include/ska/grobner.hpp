#ifndef SKA_GROBNER_HPP
#define SKA_GROBNER_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>

#include "ska/ideal.hpp"
#include "ska/order.hpp"

namespace ska {

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> polys;  // monic, interreduced, descending leading monomials
    bool reduced = false;
};

struct MonomialIdeal {
    std::vector<Monomial> min_gens;  // pairwise non-dividing, descending reference order

    bool contains(const Monomial& m) const {
        for (const Monomial& g : min_gens)
            if (g.divides(m)) return true;
        return false;
    }
};

MonomialIdeal minimalize_monomials(std::vector<Monomial> gens);

// Deterministic remainder: reduce the highest reducible monomial first, using
// the first matching divisor in G's stored sequence.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const MonomialOrder& order);

// unique reduced monic Groebner basis
GroebnerBasis buchberger(const IdealPresentation& I, const MonomialOrder& order);
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

struct SPairWitness {
    size_t i = 0, j = 0;
    Polynomial remainder;
};

// true iff every S-polynomial of pairs of G reduces to 0 against G
bool is_groebner_basis(std::span<const Polynomial> G, const MonomialOrder& order,
                       std::optional<SPairWitness>* witness = nullptr);

MonomialIdeal initial_ideal(const IdealPresentation& I, const MonomialOrder& order);

// memo of reduced bases keyed by (presentation fingerprint, order key); safe
// to share across threads, duplicate computations produce identical results
class GbCache {
public:
    std::shared_ptr<const GroebnerBasis> get(const IdealPresentation& I, const MonomialOrder& order);
    std::shared_ptr<const GroebnerBasis> get_ref(const IdealPresentation& I);

private:
    std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> map_;
};

bool membership(const Polynomial& f, const IdealPresentation& I, GbCache& cache);

}  // namespace ska

#endif
