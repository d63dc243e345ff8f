#include "ska/colon.hpp"

#include <algorithm>

namespace ska {

namespace {

// embed into a ring with one auxiliary variable appended
Polynomial embed_aux(const Polynomial& p, const RingPtr& ext) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const Term& t : p.terms()) {
        std::vector<uint32_t> e = t.mon.exponents();
        e.push_back(0);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(ext, std::move(terms));
}

Polynomial project_aux(const Polynomial& p, const RingPtr& base) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const Term& t : p.terms()) {
        std::vector<uint32_t> e = t.mon.exponents();
        if (e.back() != 0) throw std::logic_error("projection of a term containing the auxiliary variable");
        e.pop_back();
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(base, std::move(terms));
}

}  // namespace

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& front) {
    for (int v : front)
        if (v < 0 || static_cast<size_t>(v) >= I.arity())
            throw std::invalid_argument("eliminate: variable out of range");
    if (front.empty()) return I;
    MonomialOrder order =
        MonomialOrder::block_eliminate(front, MonomialOrder::grevlex(I.arity()));
    GroebnerBasis gb = buchberger(I, order);
    std::vector<char> mask = variable_mask(*I.ring, front);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.polys) {
        bool touches = false;
        for (const Term& t : g.terms()) {
            for (size_t v = 0; v < mask.size() && !touches; ++v)
                if (mask[v] && t.mon[v] > 0) touches = true;
            if (touches) break;
        }
        if (!touches) kept.push_back(g);
    }
    return IdealPresentation(I.ring, std::move(kept));
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const Field& F = g.ring()->field();
    MonomialOrder order = MonomialOrder::grevlex(g.ring()->arity());
    const Term& lt = f.leading_term(order);
    Polynomial q = Polynomial::zero(g.ring());
    Polynomial r = g;
    while (!r.is_zero()) {
        const Term& rt = r.leading_term(order);
        auto m = rt.mon.try_div(lt.mon);
        if (!m) throw std::invalid_argument("polynomial division is not exact");
        Scalar c = F.div(rt.coeff, lt.coeff);
        q = q + Polynomial::monomial(g.ring(), *m, c);
        r = r - f.term_times(*m, c);
    }
    return q;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> gens) {
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const Polynomial& p) { return p.is_zero(); }),
               gens.end());
    if (gens.empty()) return gens;
    MonomialOrder order = MonomialOrder::grevlex(gens.front().ring()->arity());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < gens.size(); ++k) {
            std::vector<Polynomial> others;
            others.reserve(gens.size() - 1);
            for (size_t t = 0; t < gens.size(); ++t)
                if (t != k) others.push_back(gens[t]);
            Polynomial r = normal_form(gens[k], others, order);
            if (r.is_zero()) {
                gens.erase(gens.begin() + static_cast<long>(k));
                changed = true;
                --k;
                continue;
            }
            r = r.monic(order);
            if (r != gens[k]) {
                gens[k] = r;
                changed = true;
            }
        }
    }
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_term(order).mon, b.leading_term(order).mon) > 0;
    });
    return gens;
}

std::vector<Polynomial> colon_by_polynomial(const IdealPresentation& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
    const RingPtr& base = I.ring;
    std::vector<std::string> ext_vars = base->vars();
    ext_vars.push_back("#t");
    RingPtr ext = make_ring(std::move(ext_vars), base->field());
    size_t t_idx = ext->arity() - 1;

    Polynomial t = Polynomial::variable(ext, t_idx);
    Polynomial one = Polynomial::constant(ext, ext->field().one());
    std::vector<Polynomial> J;
    for (const Polynomial& g : I.gens) J.push_back(t * embed_aux(g, ext));
    Polynomial fe = embed_aux(f, ext);
    J.push_back((one - t) * fe);

    IdealPresentation Jp(ext, std::move(J));
    IdealPresentation inter = eliminate(Jp, {static_cast<int>(t_idx)});

    std::vector<Polynomial> out;
    for (const Polynomial& g : inter.gens) {
        Polynomial gb = project_aux(g, base);
        out.push_back(divide_exact(gb, f));
    }
    return interreduce(std::move(out));
}

}  // namespace ska
