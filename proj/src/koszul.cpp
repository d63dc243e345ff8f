#include "ska/koszul.hpp"

#include <algorithm>
#include <mutex>

#include "ska/parallel.hpp"
#include "ska/rng.hpp"

namespace ska {

std::vector<Polynomial> colon_variables(const IdealPresentation& I, const std::vector<int>& Y,
                                        int x) {
    for (int y : Y)
        if (y == x) throw std::invalid_argument("colon_variables: x must not lie in Y");
    IdealPresentation IY = plus_variables(I, Y);
    return colon_by_polynomial(IY, Polynomial::variable(I.ring, static_cast<size_t>(x)));
}

std::optional<std::vector<int>> variable_generated_test(const IdealPresentation& I,
                                                        const std::vector<Polynomial>& colon_gens,
                                                        GbCache& cache,
                                                        const Polynomial** offending) {
    const RingPtr& ring = I.ring;
    std::vector<int> V;
    if (!colon_gens.empty()) {
        IdealPresentation C(ring, colon_gens);
        for (size_t v = 0; v < ring->arity(); ++v)
            if (membership(Polynomial::variable(ring, v), C, cache)) V.push_back(static_cast<int>(v));
    }
    IdealPresentation IV = plus_variables(I, V);
    for (const Polynomial& h : colon_gens) {
        if (!membership(h, IV, cache)) {
            if (offending) *offending = &h;
            return std::nullopt;
        }
    }
    return V;
}

std::vector<std::pair<std::vector<int>, int>> sk_sweep_pairs(size_t n) {
    // all subsets, grouped by cardinality then lexicographic on index tuples
    std::vector<std::vector<int>> subsets;
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> Y;
        for (size_t v = 0; v < n; ++v)
            if (mask & (1ull << v)) Y.push_back(static_cast<int>(v));
        subsets.push_back(std::move(Y));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<std::pair<std::vector<int>, int>> pairs;
    for (const auto& Y : subsets) {
        for (size_t x = 0; x < n; ++x) {
            if (std::find(Y.begin(), Y.end(), static_cast<int>(x)) == Y.end())
                pairs.push_back({Y, static_cast<int>(x)});
        }
    }
    return pairs;
}

namespace {

struct PairOutcome {
    bool ok = true;
    SkPairRecord record;
    std::optional<SkWitness> witness;
};

PairOutcome run_pair(const IdealPresentation& I, const std::vector<int>& Y, int x,
                     GbCache& cache) {
    PairOutcome out;
    out.record.Y = Y;
    out.record.x = x;
    const RingPtr& ring = I.ring;

    // prune: x in I + Y makes the colon the unit ideal
    IdealPresentation IY = plus_variables(I, Y);
    if (membership(Polynomial::variable(ring, static_cast<size_t>(x)), IY, cache)) {
        for (size_t v = 0; v < ring->arity(); ++v) out.record.V.push_back(static_cast<int>(v));
        return out;
    }

    std::vector<Polynomial> colon =
        colon_by_polynomial(IY, Polynomial::variable(ring, static_cast<size_t>(x)));
    const Polynomial* offending = nullptr;
    auto V = variable_generated_test(I, colon, cache, &offending);
    if (V) {
        out.record.V = *V;
        return out;
    }
    out.ok = false;
    out.witness = SkWitness{Y, x, *offending, colon};
    return out;
}

}  // namespace

StrongKoszulCertificate strong_koszul_certify(const IdealPresentation& I,
                                              const CertifyOptions& opts) {
    if (!I.is_homogeneous())
        throw std::invalid_argument("strong Koszul certification requires a homogeneous ideal");
    size_t n = I.arity();
    StrongKoszulCertificate cert{I, opts.mode};
    cert.seed = opts.seed;

    if (opts.mode == SkMode::theorem_shortcut) {
        UniversalOptions uopts;
        uopts.jobs = opts.jobs;
        uopts.seed = opts.seed;
        uopts.sample_count = opts.theorem_sample_count;
        uopts.exhaustive_cap = opts.theorem_universal_cap;
        uopts.mode = n <= opts.theorem_universal_cap ? SweepMode::exhaustive : SweepMode::sampled;
        UniversalGBReport rep = check_revlex_universal(I.gens, uopts);
        cert.theorem_universality = rep;
        cert.pairs_checked = rep.orders_checked;
        if (rep.universal && rep.is_tidy_set && rep.is_quadratic)
            cert.verdict = SkVerdict::certified;
        else
            cert.verdict = SkVerdict::inconclusive;
        return cert;
    }

    GbCache cache;
    if (opts.mode == SkMode::exhaustive) {
        if (n > opts.exhaustive_cap)
            throw std::invalid_argument(
                "exhaustive strong-Koszul sweep needs n <= " + std::to_string(opts.exhaustive_cap) +
                " variables (got " + std::to_string(n) + "); use sampled mode");
        auto pairs = sk_sweep_pairs(n);
        cert.pairs_checked = pairs.size();
        std::vector<PairOutcome> outcomes(pairs.size());
        uint64_t first_bad = parallel_find_first(pairs.size(), opts.jobs, [&](uint64_t k) {
            outcomes[k] = run_pair(I, pairs[k].first, pairs[k].second, cache);
            return !outcomes[k].ok;
        });
        if (first_bad == pairs.size()) {
            cert.verdict = SkVerdict::certified;
            if (opts.record_pairs)
                for (auto& o : outcomes) cert.pairs.push_back(std::move(o.record));
        } else {
            cert.verdict = SkVerdict::refuted;
            cert.witness = outcomes[first_bad].witness;
        }
        return cert;
    }

    // sampled: one-sided, never a positive certificate
    cert.sample_count = opts.sample_count;
    Rng rng(opts.seed);
    std::vector<std::pair<std::vector<int>, int>> pairs;
    for (uint64_t k = 0; k < opts.sample_count; ++k) {
        int x = static_cast<int>(rng.below(n));
        std::vector<int> Y;
        for (size_t v = 0; v < n; ++v)
            if (static_cast<int>(v) != x && rng.below(2) == 1) Y.push_back(static_cast<int>(v));
        pairs.push_back({std::move(Y), x});
    }
    cert.pairs_checked = pairs.size();
    std::vector<PairOutcome> outcomes(pairs.size());
    uint64_t first_bad = parallel_find_first(pairs.size(), opts.jobs, [&](uint64_t k) {
        outcomes[k] = run_pair(I, pairs[k].first, pairs[k].second, cache);
        return !outcomes[k].ok;
    });
    if (first_bad == pairs.size()) {
        cert.verdict = SkVerdict::no_counterexample_found;
        if (opts.record_pairs)
            for (auto& o : outcomes) cert.pairs.push_back(std::move(o.record));
    } else {
        cert.verdict = SkVerdict::refuted;
        cert.witness = outcomes[first_bad].witness;
    }
    return cert;
}

bool verify_certificate(const StrongKoszulCertificate& cert) {
    if (cert.verdict != SkVerdict::certified || cert.mode == SkMode::theorem_shortcut)
        return cert.verdict == SkVerdict::certified;
    const IdealPresentation& I = cert.ideal;
    GbCache cache;
    const RingPtr& ring = I.ring;
    for (const SkPairRecord& rec : cert.pairs) {
        IdealPresentation IY = plus_variables(I, rec.Y);
        Polynomial xp = Polynomial::variable(ring, static_cast<size_t>(rec.x));
        if (membership(xp, IY, cache)) {
            // pruned pair: the colon is the unit ideal, recorded as V = all
            std::vector<int> all;
            for (size_t v = 0; v < ring->arity(); ++v) all.push_back(static_cast<int>(v));
            if (rec.V != all) return false;
            continue;
        }
        for (int v : rec.V) {
            if (!membership(Polynomial::variable(ring, static_cast<size_t>(v)) * xp, IY, cache))
                return false;
        }
        IdealPresentation IV = plus_variables(I, rec.V);
        for (const Polynomial& h : colon_variables(I, rec.Y, rec.x)) {
            if (!membership(h, IV, cache)) return false;
        }
    }
    return true;
}

IdealPresentation quotient_by_variables(const IdealPresentation& I, const std::vector<int>& A) {
    auto mask = variable_mask(*I.ring, A);
    std::vector<std::string> vars;
    std::vector<int> new_index(I.arity(), -1);
    for (size_t v = 0; v < I.arity(); ++v) {
        if (!mask[v]) {
            new_index[v] = static_cast<int>(vars.size());
            vars.push_back(I.ring->var_name(v));
        }
    }
    RingPtr sub = make_ring(std::move(vars), I.ring->field());
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens) {
        Polynomial pg = g.kill_variables(mask);
        if (pg.is_zero()) continue;
        std::vector<Term> terms;
        for (const Term& t : pg.terms()) {
            std::vector<uint32_t> e(sub->arity(), 0);
            for (size_t v = 0; v < I.arity(); ++v)
                if (t.mon[v] > 0) e[static_cast<size_t>(new_index[v])] = t.mon[v];
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        gens.push_back(Polynomial(sub, std::move(terms)));
    }
    return IdealPresentation(sub, std::move(gens));
}

namespace {

ProductPresentation product_impl(const IdealPresentation& I1, const IdealPresentation& I2,
                                 ProductKind kind) {
    if (I1.ring->field() != I2.ring->field())
        throw std::invalid_argument("product of presentations over different fields");
    size_t n1 = I1.arity(), n2 = I2.arity();
    bool clash = false;
    for (const auto& v : I2.ring->vars())
        if (I1.ring->index_of(v) >= 0) clash = true;
    std::vector<std::string> vars;
    for (const auto& v : I1.ring->vars()) vars.push_back(clash ? v + "_1" : v);
    for (const auto& v : I2.ring->vars()) vars.push_back(clash ? v + "_2" : v);
    RingPtr ring = make_ring(std::move(vars), I1.ring->field());

    auto embed = [&](const Polynomial& p, size_t offset) {
        std::vector<Term> terms;
        for (const Term& t : p.terms()) {
            std::vector<uint32_t> e(n1 + n2, 0);
            for (size_t v = 0; v < t.mon.arity(); ++v) e[v + offset] = t.mon[v];
            terms.push_back(Term{Monomial(std::move(e)), t.coeff});
        }
        return Polynomial(ring, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (const Polynomial& g : I1.gens) gens.push_back(embed(g, 0));
    for (const Polynomial& g : I2.gens) gens.push_back(embed(g, n1));
    if (kind == ProductKind::fiber) {
        for (size_t i = 0; i < n1; ++i)
            for (size_t j = 0; j < n2; ++j)
                gens.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, n1 + j));
    }
    return ProductPresentation{IdealPresentation(ring, std::move(gens)), kind, n1};
}

}  // namespace

ProductPresentation tensor_presentation(const IdealPresentation& I1, const IdealPresentation& I2) {
    return product_impl(I1, I2, ProductKind::tensor);
}

ProductPresentation fiber_presentation(const IdealPresentation& I1, const IdealPresentation& I2) {
    return product_impl(I1, I2, ProductKind::fiber);
}

}  // namespace ska
