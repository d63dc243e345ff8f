#include "ska/grobner.hpp"

#include <algorithm>
#include <queue>

namespace ska {

namespace {

struct LeadInfo {
    Monomial lm;
    Scalar lc;
    uint64_t mask;
};

LeadInfo lead_info(const Polynomial& p, const MonomialOrder& order) {
    const Term& t = p.leading_term(order);
    return LeadInfo{t.mon, t.coeff, t.mon.support_mask()};
}

// index of the first element of G whose leading monomial divides m, or -1
int first_divisor(const Monomial& m, const std::vector<LeadInfo>& leads) {
    uint64_t mm = m.support_mask();
    for (size_t k = 0; k < leads.size(); ++k) {
        if ((leads[k].mask & ~mm) != 0) continue;
        if (leads[k].lm.divides(m)) return static_cast<int>(k);
    }
    return -1;
}

Polynomial normal_form_impl(const Polynomial& f, std::span<const Polynomial> G,
                            const std::vector<LeadInfo>& leads, const MonomialOrder& order) {
    const Field& F = f.ring()->field();
    Polynomial r = f;
    while (!r.is_zero()) {
        // highest reducible monomial under the active order
        int best_term = -1, best_div = -1;
        const auto& terms = r.terms();
        for (size_t ti = 0; ti < terms.size(); ++ti) {
            int d = first_divisor(terms[ti].mon, leads);
            if (d < 0) continue;
            if (best_term < 0 || order.compare(terms[ti].mon, terms[best_term].mon) > 0) {
                best_term = static_cast<int>(ti);
                best_div = d;
            }
        }
        if (best_term < 0) return r;
        const Term& t = terms[best_term];
        const Polynomial& g = G[best_div];
        Monomial q = t.mon.div(leads[best_div].lm);
        Scalar c = F.div(t.coeff, leads[best_div].lc);
        r = r - g.term_times(q, c);
    }
    return r;
}

std::vector<LeadInfo> all_leads(std::span<const Polynomial> G, const MonomialOrder& order) {
    std::vector<LeadInfo> leads;
    leads.reserve(G.size());
    for (const Polynomial& g : G) leads.push_back(lead_info(g, order));
    return leads;
}

}  // namespace

MonomialIdeal minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return compare_ref(a, b) < 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (const Monomial& m : gens) {
        bool dominated = false;
        for (const Monomial& k : keep)
            if (k.divides(m)) { dominated = true; break; }
        if (!dominated) keep.push_back(m);
    }
    std::sort(keep.begin(), keep.end(),
              [](const Monomial& a, const Monomial& b) { return compare_ref(a, b) > 0; });
    return MonomialIdeal{std::move(keep)};
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const MonomialOrder& order) {
    for (const Polynomial& g : G)
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
    return normal_form_impl(f, G, all_leads(G, order), order);
}

GroebnerBasis buchberger(const IdealPresentation& I, const MonomialOrder& order) {
    return buchberger(I.gens, order);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    std::vector<LeadInfo> leads;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
        Polynomial m = g.monic(order);
        basis.push_back(m);
        leads.push_back(lead_info(basis.back(), order));
    }

    // S-pair queue: min lcm degree first, then first-in
    struct Pair {
        uint32_t deg;
        uint64_t seq;
        size_t i, j;
    };
    auto cmp = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.seq > b.seq;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> queue(cmp);
    uint64_t seq = 0;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            uint32_t d = leads[i].lm.lcm(leads[j].lm).degree();
            queue.push(Pair{d, seq++, i, j});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        Pair p = queue.top();
        queue.pop();
        if (leads[p.i].lm.coprime(leads[p.j].lm)) continue;  // product criterion
        Monomial l = leads[p.i].lm.lcm(leads[p.j].lm);
        Polynomial s = basis[p.i].term_times(l.div(leads[p.i].lm), basis[p.i].ring()->field().one()) -
                       basis[p.j].term_times(l.div(leads[p.j].lm), basis[p.j].ring()->field().one());
        if (s.is_zero()) continue;
        Polynomial r = normal_form_impl(s, basis, leads, order);
        if (!r.is_zero()) {
            basis.push_back(r.monic(order));
            leads.push_back(lead_info(basis.back(), order));
            push_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int c = order.compare(leads[a].lm, leads[b].lm);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    std::vector<LeadInfo> min_leads;
    for (size_t k : idx) {
        bool dominated = false;
        for (const LeadInfo& li : min_leads) {
            if (li.lm == leads[k].lm || li.lm.divides(leads[k].lm)) { dominated = true; break; }
        }
        if (!dominated) {
            minimal.push_back(basis[k]);
            min_leads.push_back(leads[k]);
        }
    }

    // interreduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Polynomial> others;
            std::vector<LeadInfo> other_leads;
            for (size_t t = 0; t < minimal.size(); ++t) {
                if (t == k) continue;
                others.push_back(minimal[t]);
                other_leads.push_back(min_leads[t]);
            }
            Polynomial r = normal_form_impl(minimal[k], others, other_leads, order).monic(order);
            if (r != minimal[k]) {
                minimal[k] = r;
                min_leads[k] = lead_info(r, order);
                changed = true;
            }
        }
    }

    // canonical presentation: descending leading monomials
    std::vector<size_t> fin(minimal.size());
    for (size_t i = 0; i < fin.size(); ++i) fin[i] = i;
    std::sort(fin.begin(), fin.end(), [&](size_t a, size_t b) {
        return order.compare(min_leads[a].lm, min_leads[b].lm) > 0;
    });
    GroebnerBasis gb{order, {}, true};
    gb.polys.reserve(minimal.size());
    for (size_t k : fin) gb.polys.push_back(minimal[k]);
    return gb;
}

bool is_groebner_basis(std::span<const Polynomial> G, const MonomialOrder& order,
                       std::optional<SPairWitness>* witness) {
    std::vector<LeadInfo> leads = all_leads(G, order);
    for (size_t j = 1; j < G.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].lm.coprime(leads[j].lm)) continue;
            Monomial l = leads[i].lm.lcm(leads[j].lm);
            const Field& F = G[i].ring()->field();
            Polynomial s = G[i].term_times(l.div(leads[i].lm), F.inv(leads[i].lc)) -
                           G[j].term_times(l.div(leads[j].lm), F.inv(leads[j].lc));
            if (s.is_zero()) continue;
            Polynomial r = normal_form_impl(s, G, leads, order);
            if (!r.is_zero()) {
                if (witness) witness->emplace(SPairWitness{i, j, r});
                return false;
            }
        }
    }
    return true;
}

MonomialIdeal initial_ideal(const IdealPresentation& I, const MonomialOrder& order) {
    GroebnerBasis gb = buchberger(I, order);
    std::vector<Monomial> lms;
    lms.reserve(gb.polys.size());
    for (const Polynomial& g : gb.polys) lms.push_back(g.leading_term(order).mon);
    return minimalize_monomials(std::move(lms));
}

std::shared_ptr<const GroebnerBasis> GbCache::get(const IdealPresentation& I,
                                                  const MonomialOrder& order) {
    std::string key = std::to_string(I.fingerprint()) + "#" + order.key();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(I, order));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(key, gb);
    return it->second;  // first insertion wins; duplicates are identical anyway
}

std::shared_ptr<const GroebnerBasis> GbCache::get_ref(const IdealPresentation& I) {
    return get(I, MonomialOrder::grevlex(I.arity()));
}

bool membership(const Polynomial& f, const IdealPresentation& I, GbCache& cache) {
    if (f.is_zero()) return true;
    auto gb = cache.get_ref(I);
    return normal_form(f, gb->polys, gb->order).is_zero();
}

}  // namespace ska
