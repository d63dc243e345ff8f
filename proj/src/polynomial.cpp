#include "ska/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ska {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.mon.arity() != ring_->arity())
            throw std::invalid_argument("term arity does not match ring");
    normalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    size_t n = ring->arity();
    return Polynomial(ring, {Term{Monomial::one(n), c}});
}

Polynomial Polynomial::variable(RingPtr ring, size_t i) {
    size_t n = ring->arity();
    return Polynomial(ring, {Term{Monomial::variable(n, i), ring->field().one()}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    return Polynomial(ring, {Term{std::move(m), std::move(c)}});
}

void Polynomial::normalize() {
    const Field& F = ring_->field();
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare_ref(a.mon, b.mon) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon)
            out.back().coeff = F.add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (Term& t : out)
        if (!F.is_zero(t.coeff)) terms_.push_back(std::move(t));
}

uint32_t Polynomial::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
    uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mon.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = terms_.front().mon.degree();
    for (const Term& t : terms_)
        if (t.mon.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) throw std::invalid_argument("ring mismatch");
    const Field& F = ring_->field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare_ref(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) out.push_back(Term{terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-() const {
    const Field& F = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, F.neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_)) throw std::invalid_argument("ring mismatch");
    Polynomial acc(ring_);
    for (const Term& t : o.terms_) acc = acc + term_times(t.mon, t.coeff);
    return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    const Field& F = ring_->field();
    if (F.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mon, F.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::term_times(const Monomial& m, const Scalar& c) const {
    const Field& F = ring_->field();
    if (F.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mon.mul(m), F.mul(t.coeff, c)});
    // multiplying by a fixed monomial preserves the reference order
    return r;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    const Scalar& lc = leading_term(order).coeff;
    return scaled(ring_->field().inv(lc));
}

Polynomial Polynomial::monic_ref() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field().inv(terms_.front().coeff));
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.compare(terms_[i].mon, terms_[best].mon) > 0) best = i;
    return terms_[best];
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_ring(*o.ring_) || terms_.size() != o.terms_.size()) return false;
    const Field& F = ring_->field();
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || !F.equal(terms_[i].coeff, o.terms_[i].coeff))
            return false;
    return true;
}

bool Polynomial::is_tidy() const {
    size_t n = ring_->arity();
    for (size_t v = 0; v < n; ++v) {
        int hits = 0;
        for (const Term& t : terms_) {
            if (t.mon[v] > 0 && ++hits > 1) return false;
        }
    }
    return true;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images) const {
    if (images.size() != ring_->arity()) throw std::invalid_argument("substitution arity mismatch");
    const Field& F = ring_->field();
    for (const auto& img : images)
        if (img && !img->ring()->same_ring(*ring_)) throw std::invalid_argument("substitution ring mismatch");
    Polynomial acc(ring_);
    for (const Term& t : terms_) {
        Polynomial prod = Polynomial::constant(ring_, t.coeff);
        for (size_t v = 0; v < images.size(); ++v) {
            uint32_t e = t.mon[v];
            if (e == 0) continue;
            if (!images[v]) {
                std::vector<uint32_t> exps(ring_->arity(), 0);
                exps[v] = e;
                prod = prod.term_times(Monomial(std::move(exps)), F.one());
            } else {
                for (uint32_t k = 0; k < e; ++k) prod = prod * (*images[v]);
            }
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::kill_variables(const std::vector<char>& in_Y) const {
    if (in_Y.size() != ring_->arity()) throw std::invalid_argument("variable mask arity mismatch");
    Polynomial r(ring_);
    for (const Term& t : terms_) {
        bool dead = false;
        for (size_t v = 0; v < in_Y.size() && !dead; ++v)
            if (in_Y[v] && t.mon[v] > 0) dead = true;
        if (!dead) r.terms_.push_back(t);
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    const Field& F = ring_->field();
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::string cs = F.str(t.coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool coeff_is_unit = (cs == "1");
        if (t.mon.is_one()) {
            os << cs;
        } else {
            if (!coeff_is_unit) os << cs << "*";
            bool started = false;
            for (size_t v = 0; v < ring_->arity(); ++v) {
                uint32_t e = t.mon[v];
                if (e == 0) continue;
                if (started) os << "*";
                os << ring_->var_name(v);
                if (e > 1) os << "^" << e;
                started = true;
            }
        }
    }
    return os.str();
}

uint64_t Polynomial::support_mask_union() const {
    uint64_t m = 0;
    for (const Term& t : terms_) m |= t.mon.support_mask();
    return m;
}

std::vector<char> variable_mask(const Ring& ring, const std::vector<int>& vars) {
    std::vector<char> mask(ring.arity(), 0);
    for (int v : vars) {
        if (v < 0 || static_cast<size_t>(v) >= ring.arity())
            throw std::invalid_argument("variable index out of range");
        mask[v] = 1;
    }
    return mask;
}

}  // namespace ska
