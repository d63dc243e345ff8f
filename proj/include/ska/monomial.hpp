#ifndef SKA_MONOMIAL_HPP
#define SKA_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ska {

// Exponent vector with cached total degree. Arity is fixed by the ambient ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)), deg_(0) {
        for (uint32_t x : e_) deg_ += x;
    }
    static Monomial one(size_t arity) { return Monomial(std::vector<uint32_t>(arity, 0)); }
    static Monomial variable(size_t arity, size_t i) {
        std::vector<uint32_t> e(arity, 0);
        e.at(i) = 1;
        return Monomial(std::move(e));
    }

    size_t arity() const { return e_.size(); }
    uint32_t degree() const { return deg_; }
    uint32_t operator[](size_t i) const { return e_[i]; }
    const std::vector<uint32_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial mul(const Monomial& o) const {
        check_arity(o);
        std::vector<uint32_t> e(e_);
        for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility
    Monomial div(const Monomial& o) const {
        check_arity(o);
        std::vector<uint32_t> e(e_);
        for (size_t i = 0; i < e.size(); ++i) {
            if (o.e_[i] > e[i]) throw std::invalid_argument("monomial division not exact");
            e[i] -= o.e_[i];
        }
        return Monomial(std::move(e));
    }

    std::optional<Monomial> try_div(const Monomial& o) const {
        if (!o.divides(*this)) return std::nullopt;
        return div(o);
    }

    Monomial lcm(const Monomial& o) const {
        check_arity(o);
        std::vector<uint32_t> e(e_);
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], o.e_[i]);
        return Monomial(std::move(e));
    }

    bool coprime(const Monomial& o) const {
        check_arity(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    // -1 if not a pure power of a single variable, else that variable's index
    int pure_power_variable() const {
        int var = -1;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] > 0) {
                if (var >= 0) return -1;
                var = static_cast<int>(i);
            }
        }
        return var;
    }

    bool is_squarefree() const {
        for (uint32_t x : e_)
            if (x > 1) return false;
        return true;
    }

    uint64_t support_mask() const {
        uint64_t m = 0;
        for (size_t i = 0; i < e_.size() && i < 64; ++i)
            if (e_[i] > 0) m |= (1ull << i);
        return m;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t x : e_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    void check_arity(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial arity mismatch");
    }

    std::vector<uint32_t> e_;
    uint32_t deg_ = 0;
};

// grevlex with the declaration ranking x0 > x1 > ... > x(n-1); the reference
// order used for canonical storage and printing. Returns -1 / 0 / +1.
inline int compare_ref(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.arity(); i-- > 0;) {
        uint32_t x = a[i], y = b[i];
        if (x != y) return x > y ? -1 : 1;  // smaller exponent at the lowest differing variable wins
    }
    return 0;
}

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return static_cast<size_t>(m.hash()); }
};

}  // namespace ska

#endif
