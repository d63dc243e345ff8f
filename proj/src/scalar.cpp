#include "ska/scalar.hpp"

namespace ska {

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
    };
    auto powmod = [&](uint64_t a, uint64_t e, uint64_t m) -> uint64_t {
        uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace

Field Field::prime(uint64_t p) {
    if (p >= (1ull << 62) || !is_prime_u64(p))
        throw std::invalid_argument("GF(p): p must be prime (and < 2^62), got " + std::to_string(p));
    return Field(FieldKind::prime, p);
}

uint64_t Field::mod_add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
}

uint64_t Field::mod_mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
}

uint64_t Field::mod_inv(uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    // extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(a);
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<int64_t>(p_);
    return static_cast<uint64_t>(t);
}

Scalar Field::zero() const {
    return kind_ == FieldKind::rationals ? Scalar(mpq_class(0)) : Scalar(uint64_t{0});
}

Scalar Field::one() const {
    return kind_ == FieldKind::rationals ? Scalar(mpq_class(1)) : Scalar(uint64_t{1});
}

Scalar Field::from_long(long v) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(v));
    long m = v % static_cast<long>(p_);
    if (m < 0) m += static_cast<long>(p_);
    return Scalar(static_cast<uint64_t>(m));
}

Scalar Field::from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("zero denominator");
    if (kind_ == FieldKind::rationals) {
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(q);
    }
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class nr = n % p; if (nr < 0) nr += p;
    mpz_class dr = d % p; if (dr < 0) dr += p;
    Scalar a(static_cast<uint64_t>(nr.get_ui()));
    Scalar b(static_cast<uint64_t>(dr.get_ui()));
    return div(a, b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(a.rat() + b.rat()));
    return Scalar(mod_add(a.res(), b.res()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(a.rat() - b.rat()));
    return Scalar(mod_add(a.res(), b.res() == 0 ? 0 : p_ - b.res()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(a.rat() * b.rat()));
    return Scalar(mod_mul(a.res(), b.res()));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    if (is_zero(b)) throw std::domain_error("division by zero");
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(a.rat() / b.rat()));
    return Scalar(mod_mul(a.res(), mod_inv(b.res())));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::rationals) return Scalar(mpq_class(-a.rat()));
    return Scalar(a.res() == 0 ? 0 : p_ - a.res());
}

Scalar Field::inv(const Scalar& a) const { return div(one(), a); }

bool Field::is_zero(const Scalar& a) const {
    return kind_ == FieldKind::rationals ? a.rat() == 0 : a.res() == 0;
}

bool Field::is_one(const Scalar& a) const {
    return kind_ == FieldKind::rationals ? a.rat() == 1 : a.res() == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    return kind_ == FieldKind::rationals ? a.rat() == b.rat() : a.res() == b.res();
}

std::string Field::str(const Scalar& a) const {
    if (kind_ == FieldKind::rationals) return a.rat().get_str();
    return std::to_string(a.res());
}

std::string Field::name() const {
    return kind_ == FieldKind::rationals ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

int Field::display_sign(const Scalar& a) const {
    if (kind_ == FieldKind::rationals) return sgn(a.rat());
    return a.res() == 0 ? 0 : 1;
}

}  // namespace ska
