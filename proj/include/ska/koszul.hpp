#ifndef SKA_KOSZUL_HPP
#define SKA_KOSZUL_HPP

#include <optional>

#include "ska/colon.hpp"
#include "ska/universal.hpp"

namespace ska {

// interreduced generators of (I + Y) :_S x
std::vector<Polynomial> colon_variables(const IdealPresentation& I, const std::vector<int>& Y,
                                        int x);

// V = variables lying in the colon ideal; returns V iff every colon generator
// lies in I + (V), i.e. the colon is generated by variables modulo I.
std::optional<std::vector<int>> variable_generated_test(const IdealPresentation& I,
                                                        const std::vector<Polynomial>& colon_gens,
                                                        GbCache& cache,
                                                        const Polynomial** offending = nullptr);

enum class SkMode : uint8_t { exhaustive, sampled, theorem_shortcut };
enum class SkVerdict : uint8_t { certified, refuted, no_counterexample_found, inconclusive };

struct SkPairRecord {
    std::vector<int> Y;
    int x = -1;
    std::vector<int> V;
};

struct SkWitness {
    std::vector<int> Y;
    int x = -1;
    Polynomial offending;
    std::vector<Polynomial> colon_gens;
};

struct CertifyOptions {
    SkMode mode = SkMode::exhaustive;
    uint64_t sample_count = 200;
    uint64_t seed = 0;
    size_t exhaustive_cap = 12;
    // theorem-shortcut universality: exhaustive when n <= this, else sampled
    size_t theorem_universal_cap = 7;
    uint64_t theorem_sample_count = 200;
    unsigned jobs = 1;
    bool record_pairs = true;
};

struct StrongKoszulCertificate {
    IdealPresentation ideal;
    SkMode mode;
    uint64_t sample_count = 0;
    uint64_t seed = 0;
    // size of the deterministic sweep (exhaustive) or draw count (sampled);
    // a refutation may stop evaluating once the least witness is fixed
    uint64_t pairs_checked = 0;
    SkVerdict verdict = SkVerdict::inconclusive;
    std::vector<SkPairRecord> pairs;
    std::optional<SkWitness> witness;
    std::optional<UniversalGBReport> theorem_universality;
};

// Certify that S/I is strongly Koszul with respect to the variables.
StrongKoszulCertificate strong_koszul_certify(const IdealPresentation& I,
                                              const CertifyOptions& opts);

// Independent soundness pass over a positive certificate using normal forms
// only: v*x in I+Y for each v in V, and every colon generator in I + (V).
bool verify_certificate(const StrongKoszulCertificate& cert);

// exhaustive sweep order: |Y| ascending, then Y lexicographic, then x in
// declaration order
std::vector<std::pair<std::vector<int>, int>> sk_sweep_pairs(size_t n);

IdealPresentation quotient_by_variables(const IdealPresentation& I, const std::vector<int>& A);

enum class ProductKind : uint8_t { tensor, fiber };

struct ProductPresentation {
    IdealPresentation pres;
    ProductKind kind;
    size_t first_arity = 0;  // variables [0, first_arity) come from the first factor
};

ProductPresentation tensor_presentation(const IdealPresentation& I1, const IdealPresentation& I2);
ProductPresentation fiber_presentation(const IdealPresentation& I1, const IdealPresentation& I2);

}  // namespace ska

#endif
