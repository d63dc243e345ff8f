#ifndef SKA_COLON_HPP
#define SKA_COLON_HPP

#include "ska/grobner.hpp"

namespace ska {

// generators of I intersect k[vars outside front], via a block elimination order
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& front);

// exact division q = g / f; throws if not divisible
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

// interreduced generators of I :_S f, via I cap (f) = eliminate_t(t*I + (1-t)*f)
std::vector<Polynomial> colon_by_polynomial(const IdealPresentation& I, const Polynomial& f);

// minimalize + tail-reduce a generating set under the reference order
std::vector<Polynomial> interreduce(std::vector<Polynomial> gens);

}  // namespace ska

#endif
