#ifndef SKA_HILBERT_HPP
#define SKA_HILBERT_HPP

#include "ska/grobner.hpp"

namespace ska {

// all monomials of total degree d, descending under the reference order
std::vector<Monomial> monomials_of_degree(size_t arity, uint32_t d);

// dim_k (S/I)_d for d in [lo, hi], by counting standard monomials of the
// initial ideal; requires homogeneous I
std::vector<long> hilbert_function(const IdealPresentation& I, uint32_t lo, uint32_t hi,
                                   const MonomialOrder& order);
std::vector<long> hilbert_function(const IdealPresentation& I, uint32_t lo, uint32_t hi);

long count_standard_monomials(const MonomialIdeal& in, size_t arity, uint32_t d);

// the initial ideal contains a pure power of every variable
bool is_artinian(const IdealPresentation& I);
bool is_artinian(const MonomialIdeal& in, size_t arity);

// largest d with dim (S/I)_d != 0, for Artinian I
uint32_t socle_degree(const IdealPresentation& I);

}  // namespace ska

#endif
