#ifndef SKA_SCALAR_HPP
#define SKA_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ska {

enum class FieldKind : uint8_t { rationals, prime };

// Exact coefficient value: a canonical rational (QQ) or a residue in [0, p) (GF(p)).
// All arithmetic goes through Field, which knows the modulus.
class Scalar {
public:
    Scalar() : v_(uint64_t{0}) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(uint64_t r) : v_(r) {}

    bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    uint64_t res() const { return std::get<uint64_t>(v_); }

private:
    std::variant<mpq_class, uint64_t> v_;
};

class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }
    static Field prime(uint64_t p);

    FieldKind kind() const { return kind_; }
    uint64_t characteristic() const { return kind_ == FieldKind::rationals ? 0 : p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long v) const;
    // numerator/denominator string pair, e.g. from_fraction("3", "4")
    Scalar from_fraction(const std::string& num, const std::string& den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    std::string str(const Scalar& a) const;
    std::string name() const;

    // scalar signum for display purposes: -1, 0, +1 (GF(p) residues count as +1)
    int display_sign(const Scalar& a) const;

private:
    Field(FieldKind k, uint64_t p) : kind_(k), p_(p) {}

    uint64_t mod_add(uint64_t a, uint64_t b) const;
    uint64_t mod_mul(uint64_t a, uint64_t b) const;
    uint64_t mod_inv(uint64_t a) const;

    FieldKind kind_;
    uint64_t p_;
};

}  // namespace ska

#endif
