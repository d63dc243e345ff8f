#ifndef SKA_RNG_HPP
#define SKA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace ska {

// Deterministic RNG with stdlib-independent derived values, so seeds recorded
// in reports reproduce runs exactly.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, n)
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    std::vector<int> permutation(size_t n) {
        std::vector<int> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
        for (size_t i = n; i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace ska

#endif
