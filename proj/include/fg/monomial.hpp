#ifndef FG_MONOMIAL_HPP
#define FG_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "fg/field.hpp"

namespace fg {

// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }
    int total() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    bool operator==(const Monomial&) const = default;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

inline Monomial mono_pow(const Monomial& a, int k) {
    Monomial r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] * k;
    return r;
}

enum class MonoOrder { degrevlex, lex };

// Returns <0, 0, >0 with "greater" meaning earlier in canonical term order.
inline int mono_cmp(MonoOrder ord, const Monomial& a, const Monomial& b) {
    if (ord == MonoOrder::lex) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    int da = a.total(), db = b.total();
    if (da != db) return da < db ? -1 : 1;
    // revlex tie-break: smaller exponent on the last differing variable wins
    for (std::size_t i = a.e.size(); i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

}  // namespace fg

#endif
