#ifndef SKA_UNIVERSAL_HPP
#define SKA_UNIVERSAL_HPP

#include <optional>

#include "ska/grobner.hpp"

namespace ska {

struct UniversalWitness {
    std::vector<int> ranked;  // variable ranking of the failing revlex order
    size_t pair_i = 0, pair_j = 0;
    Polynomial remainder;
};

enum class SweepMode : uint8_t { exhaustive, sampled };

struct UniversalOptions {
    SweepMode mode = SweepMode::exhaustive;
    uint64_t sample_count = 200;
    uint64_t seed = 0;
    size_t exhaustive_cap = 9;  // n! orders checked only for n <= cap
    unsigned jobs = 1;
};

struct UniversalGBReport {
    std::vector<Polynomial> candidate;
    SweepMode mode = SweepMode::exhaustive;
    uint64_t sample_count = 0;
    uint64_t seed = 0;
    uint64_t orders_checked = 0;
    bool universal = false;
    std::optional<UniversalWitness> witness;
    bool is_tidy_set = false;
    bool is_quadratic = false;
};

// Is G a Groebner basis for the revlex order of every variable ordering?
// Exhaustive mode enumerates the n! variable orderings as ascending words
// (lowest variable first) in lexicographic word order; the failure witness is
// the least failing word. Sampled mode draws uniform orderings from the
// recorded seed.
UniversalGBReport check_revlex_universal(const std::vector<Polynomial>& G,
                                         const UniversalOptions& opts);

// {pi(g) : g in G, pi(g) != 0} with pi killing the variables in Y
std::vector<Polynomial> project_universal_gb(const std::vector<Polynomial>& G,
                                             const std::vector<int>& Y);

bool is_tidy_set(const std::vector<Polynomial>& G);
bool is_quadratic_set(const std::vector<Polynomial>& G);

uint64_t factorial(size_t n);
std::vector<int> unrank_permutation(uint64_t rank, size_t n);

}  // namespace ska

#endif
