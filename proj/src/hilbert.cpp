#include "ska/hilbert.hpp"

#include <algorithm>

namespace ska {

namespace {

void enumerate_rec(size_t arity, size_t pos, uint32_t remaining, std::vector<uint32_t>& cur,
                   std::vector<Monomial>& out) {
    if (pos + 1 == arity) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (uint32_t e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerate_rec(arity, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(size_t arity, uint32_t d) {
    std::vector<Monomial> out;
    if (arity == 0) {
        if (d == 0) out.push_back(Monomial::one(0));
        return out;
    }
    std::vector<uint32_t> cur(arity, 0);
    enumerate_rec(arity, 0, d, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return compare_ref(a, b) > 0; });
    return out;
}

long count_standard_monomials(const MonomialIdeal& in, size_t arity, uint32_t d) {
    long count = 0;
    for (const Monomial& m : monomials_of_degree(arity, d))
        if (!in.contains(m)) ++count;
    return count;
}

std::vector<long> hilbert_function(const IdealPresentation& I, uint32_t lo, uint32_t hi,
                                   const MonomialOrder& order) {
    if (!I.is_homogeneous())
        throw std::invalid_argument("hilbert_function requires a homogeneous ideal");
    MonomialIdeal in = initial_ideal(I, order);
    std::vector<long> out;
    for (uint32_t d = lo; d <= hi; ++d)
        out.push_back(count_standard_monomials(in, I.arity(), d));
    return out;
}

std::vector<long> hilbert_function(const IdealPresentation& I, uint32_t lo, uint32_t hi) {
    return hilbert_function(I, lo, hi, MonomialOrder::grevlex(I.arity()));
}

bool is_artinian(const MonomialIdeal& in, size_t arity) {
    std::vector<char> has_power(arity, 0);
    for (const Monomial& m : in.min_gens) {
        int v = m.pure_power_variable();
        if (v >= 0) has_power[v] = 1;
    }
    for (char c : has_power)
        if (!c) return false;
    return true;
}

bool is_artinian(const IdealPresentation& I) {
    if (!I.is_homogeneous())
        throw std::invalid_argument("is_artinian requires a homogeneous ideal");
    if (I.arity() == 0) return true;
    MonomialIdeal in = initial_ideal(I, MonomialOrder::grevlex(I.arity()));
    return is_artinian(in, I.arity());
}

uint32_t socle_degree(const IdealPresentation& I) {
    MonomialIdeal in = initial_ideal(I, MonomialOrder::grevlex(I.arity()));
    if (!is_artinian(in, I.arity()))
        throw std::invalid_argument("socle_degree requires an Artinian quotient");
    // sum of (top pure-power exponent - 1) bounds the socle degree
    uint32_t bound = 0;
    std::vector<uint32_t> power(I.arity(), 0);
    for (const Monomial& m : in.min_gens) {
        int v = m.pure_power_variable();
        if (v >= 0) power[v] = std::max(power[v], m.degree());
    }
    for (uint32_t p : power) bound += p - 1;
    uint32_t last_nonzero = 0;
    for (uint32_t d = 0; d <= bound; ++d)
        if (count_standard_monomials(in, I.arity(), d) > 0) last_nonzero = d;
    return last_nonzero;
}

}  // namespace ska
