#include "ska/universal.hpp"

#include <algorithm>
#include <mutex>

#include "ska/parallel.hpp"
#include "ska/rng.hpp"

namespace ska {

uint64_t factorial(size_t n) {
    uint64_t f = 1;
    for (size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<int> unrank_permutation(uint64_t rank, size_t n) {
    // factorial number system; lexicographic on permutation words
    std::vector<int> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i);
    std::vector<int> out;
    out.reserve(n);
    for (size_t i = n; i > 0; --i) {
        uint64_t f = factorial(i - 1);
        size_t k = static_cast<size_t>(rank / f);
        rank %= f;
        out.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<long>(k));
    }
    return out;
}

bool is_tidy_set(const std::vector<Polynomial>& G) {
    for (const Polynomial& g : G)
        if (!g.is_tidy()) return false;
    return true;
}

bool is_quadratic_set(const std::vector<Polynomial>& G) {
    for (const Polynomial& g : G)
        if (g.is_zero() || g.degree() != 2 || !g.is_homogeneous()) return false;
    return true;
}

UniversalGBReport check_revlex_universal(const std::vector<Polynomial>& G,
                                         const UniversalOptions& opts) {
    for (const Polynomial& g : G)
        if (g.is_zero()) throw std::invalid_argument("universal check: zero polynomial in candidate set");
    UniversalGBReport rep;
    rep.candidate = G;
    rep.mode = opts.mode;
    rep.is_tidy_set = is_tidy_set(G);
    rep.is_quadratic = is_quadratic_set(G);
    if (G.empty()) {
        rep.universal = true;
        return rep;
    }
    size_t n = G.front().ring()->arity();

    if (opts.mode == SweepMode::exhaustive) {
        if (n > opts.exhaustive_cap)
            throw std::invalid_argument(
                "exhaustive universal check needs n <= " + std::to_string(opts.exhaustive_cap) +
                " variables (got " + std::to_string(n) + "); use sampled mode");
        uint64_t total = factorial(n);
        rep.orders_checked = total;
        std::mutex mu;
        std::vector<std::pair<uint64_t, UniversalWitness>> failures;
        uint64_t first = parallel_find_first(total, opts.jobs, [&](uint64_t idx) {
            // enumerate ascending words (lowest variable first); the ranking
            // expected by revlex() is the reverse
            std::vector<int> ranked = unrank_permutation(idx, n);
            std::reverse(ranked.begin(), ranked.end());
            std::optional<SPairWitness> w;
            if (is_groebner_basis(G, MonomialOrder::revlex(ranked), &w)) return false;
            std::lock_guard<std::mutex> lock(mu);
            failures.push_back({idx, UniversalWitness{ranked, w->i, w->j, w->remainder}});
            return true;
        });
        if (first == total) {
            rep.universal = true;
        } else {
            rep.universal = false;
            for (auto& f : failures)
                if (f.first == first) rep.witness = f.second;
        }
        return rep;
    }

    // sampled
    rep.sample_count = opts.sample_count;
    rep.seed = opts.seed;
    rep.orders_checked = opts.sample_count;
    Rng rng(opts.seed);
    std::vector<std::vector<int>> perms;
    perms.reserve(opts.sample_count);
    for (uint64_t k = 0; k < opts.sample_count; ++k) perms.push_back(rng.permutation(n));
    std::mutex mu;
    std::vector<std::pair<uint64_t, UniversalWitness>> failures;
    uint64_t first = parallel_find_first(perms.size(), opts.jobs, [&](uint64_t idx) {
        std::optional<SPairWitness> w;
        if (is_groebner_basis(G, MonomialOrder::revlex(perms[idx]), &w)) return false;
        std::lock_guard<std::mutex> lock(mu);
        failures.push_back({idx, UniversalWitness{perms[idx], w->i, w->j, w->remainder}});
        return true;
    });
    if (first == perms.size()) {
        rep.universal = true;  // means: no counterexample among the samples
    } else {
        rep.universal = false;
        for (auto& f : failures)
            if (f.first == first) rep.witness = f.second;
    }
    return rep;
}

std::vector<Polynomial> project_universal_gb(const std::vector<Polynomial>& G,
                                             const std::vector<int>& Y) {
    std::vector<Polynomial> out;
    if (G.empty()) return out;
    auto mask = variable_mask(*G.front().ring(), Y);
    for (const Polynomial& g : G) {
        Polynomial pg = g.kill_variables(mask);
        if (!pg.is_zero()) out.push_back(pg);
    }
    return out;
}

}  // namespace ska
