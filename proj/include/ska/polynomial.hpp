#ifndef SKA_POLYNOMIAL_HPP
#define SKA_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ska/monomial.hpp"
#include "ska/order.hpp"
#include "ska/ring.hpp"

namespace ska {

struct Term {
    Monomial mon;
    Scalar coeff;
};

// Sparse polynomial over an exact field. Terms are stored strictly descending
// under the reference grevlex order (declaration ranking), so iteration and
// printing are deterministic regardless of how the value was produced.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, size_t i);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // degree of the zero polynomial is undefined
    uint32_t degree() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;

    Polynomial scaled(const Scalar& c) const;
    Polynomial term_times(const Monomial& m, const Scalar& c) const;
    Polynomial monic(const MonomialOrder& order) const;
    // monic under the reference grevlex order
    Polynomial monic_ref() const;

    const Term& leading_term(const MonomialOrder& order) const;
    const Term& leading_term_ref() const { return terms_.front(); }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // each ring variable divides at most one support monomial
    bool is_tidy() const;

    // substitute images for variables; unmapped variables map to themselves
    Polynomial substitute(const std::vector<std::optional<Polynomial>>& images) const;

    // image under the projection killing the variables in Y (same ambient ring)
    Polynomial kill_variables(const std::vector<char>& in_Y) const;

    std::string str() const;

    uint64_t support_mask_union() const;

private:
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::vector<char> variable_mask(const Ring& ring, const std::vector<int>& vars);

}  // namespace ska

#endif
