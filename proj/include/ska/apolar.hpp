#ifndef SKA_APOLAR_HPP
#define SKA_APOLAR_HPP

#include <optional>

#include "ska/hilbert.hpp"
#include "ska/linalg.hpp"

namespace ska {

// dual ring with capitalized variable names (x11 -> X11); falls back to a D_
// prefix when capitalization would collide
RingPtr dual_ring_of(const RingPtr& ring);

// homogeneous nonzero element of the graded dual, carried in the dual ring
struct DualForm {
    Polynomial poly;

    DualForm(Polynomial p) : poly(std::move(p)) {
        if (poly.is_zero()) throw std::invalid_argument("dual form must be nonzero");
        if (!poly.is_homogeneous()) throw std::invalid_argument("dual form must be homogeneous");
    }
    uint32_t degree() const { return poly.degree(); }
};

// S-module of dual forms of one common degree (level case), with the acting ring
struct InverseSystemModule {
    RingPtr acting_ring;
    RingPtr dual_ring;
    std::vector<Polynomial> gens;
    uint32_t socle_deg = 0;

    size_t type() const { return gens.size(); }
};

InverseSystemModule make_inverse_system(RingPtr acting_ring, std::vector<DualForm> gens);

// contraction: x^a o X^b = X^(b-a) when b >= a componentwise, else 0
Polynomial contract(const Polynomial& f, const Polynomial& dual_form);

// differentiation action: x^a acts as the iterated partial derivative
Polynomial differentiate(const Polynomial& f, const Polynomial& dual_form);

// dim_k M_d via exact rank of the span of {m o F_i : deg m = s - d}
long module_graded_dimension(const InverseSystemModule& M, uint32_t d);

// minimal generators of ann(M), degrees 1 .. s+1
IdealPresentation apolar_ideal(const InverseSystemModule& M);

// basis of (I_2)^perp under the differentiation pairing, in the dual ring
std::vector<Polynomial> perp_quadrics(const IdealPresentation& I);

enum class ObstructionConclusion : uint8_t { no_quadratic_gb_any_coordinates, inconclusive };

struct ObstructionReport {
    IdealPresentation ideal;
    long quadric_space_dim = 0;
    std::vector<Polynomial> perp_basis;
    bool artinian = false;
    bool quadratically_generated = false;
    bool perp_ideal_artinian = false;
    ObstructionConclusion conclusion = ObstructionConclusion::inconclusive;
    // positive characteristics q <= prime_scan_bound where the pipeline fails
    std::vector<uint64_t> excluded_primes;
    uint64_t prime_scan_bound = 0;
    std::string caveat;
};

struct ObstructionOptions {
    uint64_t prime_scan_bound = 50;
};

ObstructionReport ert_obstruction(const IdealPresentation& I, const ObstructionOptions& opts = {});

struct QuadricDiagonalization {
    std::vector<std::optional<Polynomial>> change;  // substitution images per variable
    Polynomial diagonal;                            // sum of lambda_i x_i^2
    std::vector<Scalar> lambda;
};

// invertible linear substitution taking a quadric to diagonal shape (char != 2)
QuadricDiagonalization diagonalize_quadric(const Polynomial& f);

// degree-2 part of a homogeneous ideal as a canonical row basis over the
// degree-2 monomials (descending reference order)
std::vector<std::vector<Scalar>> quadric_space_basis(const IdealPresentation& I);

}  // namespace ska

#endif
