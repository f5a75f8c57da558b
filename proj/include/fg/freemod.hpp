#ifndef FG_FREEMOD_HPP
#define FG_FREEMOD_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "fg/poly.hpp"

namespace fg {

// Graded free module R(-t_0) + ... + R(-t_{rank-1}); twists[k] is the degree
// of the k-th basis element.
struct FreeModule {
    RingPtr ring;
    std::vector<Degree> twists;

    FreeModule() = default;
    FreeModule(RingPtr r, std::vector<Degree> t) : ring(std::move(r)), twists(std::move(t)) {}
    static FreeModule trivial(const RingPtr& r, std::size_t rank) {
        return FreeModule(r, std::vector<Degree>(rank, r->zero_degree()));
    }
    std::size_t rank() const { return twists.size(); }
};

struct ModTerm {
    int comp;
    Monomial m;
    bool operator==(const ModTerm&) const = default;
};

// Position-over-term: lower component index dominates, ties broken by the
// ring's monomial order.
inline int modterm_cmp(MonoOrder ord, const ModTerm& a, const ModTerm& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return mono_cmp(ord, a.m, b.m);
}

// Sparse element of a free module; terms sorted descending under POT.
class Vec {
  public:
    RingPtr ring;
    int rank = 0;
    std::vector<std::pair<ModTerm, Coeff>> terms;

    Vec() = default;
    Vec(RingPtr r, int rk) : ring(std::move(r)), rank(rk) {}

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead() const {
        if (terms.empty()) throw error("leading term of zero vector");
        return terms.front().first;
    }
    const Coeff& lead_coeff() const { return terms.front().second; }
    bool operator==(const Vec& o) const { return rank == o.rank && terms == o.terms; }
};

inline Vec vec_add(const Vec& f, const Vec& g) {
    check_same_ring(f.ring, g.ring);
    if (f.rank != g.rank) throw error("free module rank mismatch");
    const Ring& R = *f.ring;
    Vec r(f.ring, f.rank);
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
        int c;
        if (i >= f.terms.size()) c = -1;
        else if (j >= g.terms.size()) c = 1;
        else c = modterm_cmp(R.order, f.terms[i].first, g.terms[j].first);
        if (c > 0) r.terms.push_back(f.terms[i++]);
        else if (c < 0) r.terms.push_back(g.terms[j++]);
        else {
            Coeff s = fld_add(R.field, f.terms[i].second, g.terms[j].second);
            if (!s.is_zero()) r.terms.emplace_back(f.terms[i].first, s);
            ++i, ++j;
        }
    }
    return r;
}

inline Vec vec_scale(const Vec& f, const Coeff& c) {
    Vec r(f.ring, f.rank);
    Coeff cc = fld_normalize(f.ring->field, c);
    if (cc.is_zero()) return r;
    for (auto& [t, a] : f.terms) {
        Coeff p = fld_mul(f.ring->field, a, cc);
        if (!p.is_zero()) r.terms.emplace_back(t, p);
    }
    return r;
}

inline Vec vec_neg(const Vec& f) { return vec_scale(f, Coeff(-1)); }
inline Vec vec_sub(const Vec& f, const Vec& g) { return vec_add(f, vec_neg(g)); }

// f * (c * x^m)
inline Vec vec_mul_term(const Vec& f, const Monomial& m, const Coeff& c) {
    Vec r(f.ring, f.rank);
    Coeff cc = fld_normalize(f.ring->field, c);
    if (cc.is_zero()) return r;
    for (auto& [t, a] : f.terms) {
        Coeff p = fld_mul(f.ring->field, a, cc);
        if (!p.is_zero()) r.terms.emplace_back(ModTerm{t.comp, mono_mul(t.m, m)}, p);
    }
    // POT order is preserved under multiplication by a monomial
    return r;
}

inline Vec vec_mul_poly(const Vec& f, const Poly& p) {
    Vec acc(f.ring, f.rank);
    for (auto& [m, c] : p.terms) acc = vec_add(acc, vec_mul_term(f, m, c));
    return acc;
}

inline Vec vec_unit(const RingPtr& r, int rank, int comp) {
    Vec v(r, rank);
    v.terms.emplace_back(ModTerm{comp, Monomial(r->nvars())}, Coeff(1));
    return v;
}

inline Vec vec_from_column(const RingPtr& r, const std::vector<Poly>& col) {
    Vec acc(r, static_cast<int>(col.size()));
    for (std::size_t k = 0; k < col.size(); ++k) {
        if (col[k].is_zero()) continue;
        Vec part(r, acc.rank);
        for (auto& [m, c] : col[k].terms)
            part.terms.emplace_back(ModTerm{static_cast<int>(k), m}, c);
        acc = vec_add(acc, part);
    }
    return acc;
}

inline std::vector<Poly> vec_to_column(const Vec& v) {
    std::vector<Poly> col(v.rank, Poly::zero(v.ring));
    for (auto& [t, c] : v.terms)
        col[t.comp] = poly_add(col[t.comp], Poly::term(v.ring, t.m, c));
    return col;
}

// Component-indexed polynomial: picks out one coordinate.
inline Poly vec_component(const Vec& v, int comp) {
    Poly p(v.ring);
    for (auto& [t, c] : v.terms)
        if (t.comp == comp) p = poly_add(p, Poly::term(v.ring, t.m, c));
    return p;
}

// Degree of a homogeneous vector in F with the given twists; nullopt if the
// element mixes degrees.
inline std::optional<Degree> vec_degree(const Vec& v, const FreeModule& F) {
    if (v.is_zero()) throw error("degree of zero vector undefined");
    std::optional<Degree> d;
    for (auto& [t, c] : v.terms) {
        Degree td = deg_add(v.ring->mono_degree(t.m), F.twists[t.comp]);
        if (!d) d = td;
        else if (*d != td) return std::nullopt;
    }
    return d;
}

inline bool vec_homogeneous(const Vec& v, const FreeModule& F) {
    return v.is_zero() || vec_degree(v, F).has_value();
}

}  // namespace fg

#endif
