#ifndef FG_GROEBNER_HPP
#define FG_GROEBNER_HPP

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "fg/freemod.hpp"

namespace fg {

struct GroebnerBasis {
    RingPtr ring;
    int rank = 1;
    std::vector<Vec> gens;  // reduced: monic, no lead divides another, tails reduced
    bool reduced = false;
};

// Unique remainder of f modulo gb (full tail reduction).
inline Vec normal_form(const Vec& f, const GroebnerBasis& gb) {
    const Ring& R = *f.ring;
    Vec rem(f.ring, f.rank);
    Vec cur = f;
    while (!cur.is_zero()) {
        const ModTerm& lt = cur.lead();
        const Coeff& lc = cur.lead_coeff();
        bool reduced_step = false;
        for (const Vec& g : gb.gens) {
            const ModTerm& gt = g.lead();
            if (gt.comp == lt.comp && mono_divides(gt.m, lt.m)) {
                Coeff q = fld_div(R.field, lc, g.lead_coeff());
                cur = vec_sub(cur, vec_mul_term(g, mono_div(lt.m, gt.m), q));
                reduced_step = true;
                break;
            }
        }
        if (!reduced_step) {
            Vec t(f.ring, f.rank);
            t.terms.emplace_back(lt, lc);
            rem = vec_add(rem, t);
            cur.terms.erase(cur.terms.begin());
        }
    }
    return rem;
}

namespace detail {

inline Vec s_pair(const Vec& f, const Vec& g) {
    const Ring& R = *f.ring;
    Monomial l = mono_lcm(f.lead().m, g.lead().m);
    Vec a = vec_mul_term(f, mono_div(l, f.lead().m), fld_inv(R.field, f.lead_coeff()));
    Vec b = vec_mul_term(g, mono_div(l, g.lead().m), fld_inv(R.field, g.lead_coeff()));
    return vec_sub(a, b);
}

}  // namespace detail

inline GroebnerBasis buchberger(const RingPtr& ring, int rank, std::vector<Vec> gens) {
    GroebnerBasis gb;
    gb.ring = ring;
    gb.rank = rank;
    std::vector<Vec> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);

    struct Pair {
        std::size_t i, j;
        int deg;
    };
    auto lcm_deg = [&](std::size_t i, std::size_t j) {
        return mono_lcm(basis[i].lead().m, basis[j].lead().m).total();
    };
    std::deque<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> in_queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (basis[i].lead().comp != basis[j].lead().comp) return;
        pending.push_back(Pair{i, j, lcm_deg(i, j)});
        in_queue.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    GroebnerBasis work;
    work.ring = ring;
    work.rank = rank;
    while (!pending.empty()) {
        // normal selection: lowest lcm degree first, ties by insertion order
        auto it = std::min_element(pending.begin(), pending.end(),
                                   [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
        Pair p = *it;
        pending.erase(it);
        in_queue.erase({p.i, p.j});

        const Vec& f = basis[p.i];
        const Vec& g = basis[p.j];
        Monomial l = mono_lcm(f.lead().m, g.lead().m);
        // product criterion (ideal case only: invalid for modules in general)
        if (rank == 1 && mono_mul(f.lead().m, g.lead().m) == l) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].lead().comp != f.lead().comp) continue;
            if (!mono_divides(basis[k].lead().m, l)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (!in_queue.count({key1.first, key1.second}) &&
                !in_queue.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        work.gens = basis;
        Vec r = normal_form(detail::s_pair(f, g), work);
        if (!r.is_zero()) {
            basis.push_back(r);
            for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
        }
    }

    // reduce: monic, minimal lead set, tail-reduce
    for (auto& g : basis) g = vec_scale(g, fld_inv(ring->field, g.lead_coeff()));
    std::vector<Vec> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead().comp == basis[i].lead().comp &&
                mono_divides(basis[j].lead().m, basis[i].lead().m)) {
                // keep the earlier element on equal leads
                if (basis[j].lead().m == basis[i].lead().m) redundant = j < i;
                else redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis others;
        others.ring = ring;
        others.rank = rank;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.gens.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others);
        minimal[i] = vec_scale(minimal[i], fld_inv(ring->field, minimal[i].lead_coeff()));
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Vec& a, const Vec& b) {
        return modterm_cmp(ring->order, a.lead(), b.lead()) > 0;
    });
    gb.gens = std::move(minimal);
    gb.reduced = true;
    return gb;
}

inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& ideal_gens) {
    std::vector<Vec> vs;
    for (auto& p : ideal_gens) vs.push_back(vec_from_column(ring, {p}));
    return buchberger(ring, 1, vs);
}

inline bool gb_contains(const GroebnerBasis& gb, const Vec& f) {
    return normal_form(f, gb).is_zero();
}

// Submodule equality by mutual containment of generators.
inline bool submodule_equal(const RingPtr& ring, int rank, const std::vector<Vec>& u,
                            const std::vector<Vec>& v) {
    GroebnerBasis gu = buchberger(ring, rank, u);
    GroebnerBasis gv = buchberger(ring, rank, v);
    for (auto& x : u)
        if (!gb_contains(gv, x)) return false;
    for (auto& x : v)
        if (!gb_contains(gu, x)) return false;
    return true;
}

// Generators of the syzygy module of the given elements of F = R^rank:
// columns a = (a_1..a_s) with sum a_i g_i = 0.  Computed from a Groebner
// basis of {(g_i, e_i)} in R^rank + R^s under POT with the ambient
// components dominating; basis elements with vanishing ambient part give a
// Groebner basis of the syzygy module.
inline std::vector<Vec> syzygies(const RingPtr& ring, int rank, const std::vector<Vec>& gens) {
    const int s = static_cast<int>(gens.size());
    std::vector<Vec> aug;
    for (int i = 0; i < s; ++i) {
        Vec v(ring, rank + s);
        for (auto& [t, c] : gens[i].terms) v.terms.emplace_back(ModTerm{t.comp, t.m}, c);
        Vec unit = vec_unit(ring, rank + s, rank + i);
        v = vec_add(v, unit);
        aug.push_back(std::move(v));
    }
    GroebnerBasis gb = buchberger(ring, rank + s, aug);
    std::vector<Vec> syz;
    for (auto& g : gb.gens) {
        bool ambient = false;
        for (auto& [t, c] : g.terms)
            if (t.comp < rank) {
                ambient = true;
                break;
            }
        if (ambient) continue;
        Vec v(ring, s);
        for (auto& [t, c] : g.terms) v.terms.emplace_back(ModTerm{t.comp - rank, t.m}, c);
        syz.push_back(std::move(v));
    }
    return syz;
}

// Polynomial-matrix syzygies: columns of m generate a submodule of R^rows;
// returns the syzygy matrix (columns = relations among the input columns).
inline std::vector<std::vector<Poly>> syzygies(const RingPtr& ring,
                                               const std::vector<std::vector<Poly>>& cols) {
    if (cols.empty()) return {};
    int rank = static_cast<int>(cols.front().size());
    std::vector<Vec> gens;
    for (auto& c : cols) gens.push_back(vec_from_column(ring, c));
    std::vector<Vec> syz = syzygies(ring, rank, gens);
    std::vector<std::vector<Poly>> out;
    for (auto& v : syz) out.push_back(vec_to_column(v));
    return out;
}

// Generators of {a in R^s : sum a_j P_j in W}, P_j and W living in R^rank.
inline std::vector<Vec> preimage(const RingPtr& ring, int rank, const std::vector<Vec>& P,
                                 const std::vector<Vec>& W) {
    std::vector<Vec> all = P;
    for (auto& w : W) all.push_back(w);
    std::vector<Vec> syz = syzygies(ring, rank, all);
    const int s = static_cast<int>(P.size());
    std::vector<Vec> out;
    for (auto& v : syz) {
        Vec proj(ring, s);
        for (auto& [t, c] : v.terms)
            if (t.comp < s) proj.terms.emplace_back(t, c);
        if (!proj.is_zero()) out.push_back(std::move(proj));
    }
    return out;
}

// (U :_F x) = {f in F : x*f in U} for a nonzero polynomial x.
inline std::vector<Vec> colon(const RingPtr& ring, int rank, const std::vector<Vec>& U,
                              const Poly& x) {
    if (x.is_zero()) throw error("colon by zero");
    std::vector<Vec> P;
    for (int j = 0; j < rank; ++j) P.push_back(vec_mul_poly(vec_unit(ring, rank, j), x));
    return preimage(ring, rank, P, U);
}

// Intersection of two submodules of F = R^rank.
inline std::vector<Vec> intersect(const RingPtr& ring, int rank, const std::vector<Vec>& U,
                                  const std::vector<Vec>& V) {
    // kernel of F -> F/U + F/V via syzygies in F + F
    std::vector<Vec> cols;
    for (int j = 0; j < rank; ++j) {
        Vec v(ring, 2 * rank);
        Monomial one(ring->nvars());
        v.terms.emplace_back(ModTerm{j, one}, Coeff(1));
        v.terms.emplace_back(ModTerm{rank + j, one}, Coeff(1));
        v.terms = [&] {  // keep POT-sorted
            auto t = v.terms;
            std::sort(t.begin(), t.end(), [&](auto& a, auto& b) {
                return modterm_cmp(ring->order, a.first, b.first) > 0;
            });
            return t;
        }();
        cols.push_back(std::move(v));
    }
    auto embed = [&](const Vec& w, int offset) {
        Vec v(ring, 2 * rank);
        for (auto& [t, c] : w.terms) v.terms.emplace_back(ModTerm{t.comp + offset, t.m}, c);
        return v;
    };
    std::vector<Vec> all = cols;
    for (auto& u : U) all.push_back(embed(u, 0));
    for (auto& v : V) all.push_back(embed(v, rank));
    std::vector<Vec> syz = syzygies(ring, 2 * rank, all);
    std::vector<Vec> out;
    for (auto& v : syz) {
        Vec proj(ring, rank);
        for (auto& [t, c] : v.terms)
            if (t.comp < rank) proj.terms.emplace_back(t, c);
        if (!proj.is_zero()) out.push_back(std::move(proj));
    }
    return out;
}

// (U :_F a) for an ideal a: intersection of the colons by its generators.
inline std::vector<Vec> colon_ideal(const RingPtr& ring, int rank, const std::vector<Vec>& U,
                                    const std::vector<Poly>& a) {
    std::vector<Poly> gens;
    for (auto& g : a)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw error("colon by zero ideal");
    std::vector<Vec> acc = colon(ring, rank, U, gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i)
        acc = intersect(ring, rank, acc, colon(ring, rank, U, gens[i]));
    return acc;
}

// Stable value of (U : a^k): iterated colon with fixpoint detection.
inline std::vector<Vec> saturate(const RingPtr& ring, int rank, std::vector<Vec> U,
                                 const std::vector<Poly>& a) {
    for (;;) {
        std::vector<Vec> next = colon_ideal(ring, rank, U, a);
        for (auto& u : U) next.push_back(u);
        if (submodule_equal(ring, rank, U, next)) return U;
        U = std::move(next);
    }
}

// Ideal membership convenience (rank-1 wrappers).
inline std::vector<Vec> ideal_vecs(const RingPtr& ring, const std::vector<Poly>& gens) {
    std::vector<Vec> v;
    for (auto& p : gens)
        if (!p.is_zero()) v.push_back(vec_from_column(ring, {p}));
    return v;
}

inline std::vector<Poly> vecs_to_polys(const std::vector<Vec>& vs) {
    std::vector<Poly> out;
    for (auto& v : vs) out.push_back(vec_component(v, 0));
    return out;
}

inline bool ideal_member(const RingPtr& ring, const Poly& f, const std::vector<Poly>& I) {
    GroebnerBasis gb = buchberger(ring, I);
    return gb_contains(gb, vec_from_column(ring, {f}));
}

// Rabinowitsch trick: f in sqrt(I) iff 1 in (I, 1 - t*f) in R[t].
inline bool radical_member(const RingPtr& ring, const Poly& f, const std::vector<Poly>& I) {
    if (f.is_zero()) {
        // 0 in sqrt(I) always
        return true;
    }
    std::vector<std::string> vars = ring->vars;
    vars.push_back("@t");
    RingPtr ext = make_ring(vars, ring->field, Grading::standard, MonoOrder::degrevlex);
    auto lift = [&](const Poly& p) {
        Poly q(ext);
        for (auto& [m, c] : p.terms) {
            Monomial me(ext->nvars());
            std::copy(m.e.begin(), m.e.end(), me.e.begin());
            q = poly_add(q, Poly::term(ext, me, c));
        }
        return q;
    };
    std::vector<Poly> gens;
    for (auto& g : I) gens.push_back(lift(g));
    Poly t = Poly::variable(ext, static_cast<int>(ext->nvars()) - 1);
    gens.push_back(poly_sub(Poly::constant(ext, Coeff(1)), poly_mul(t, lift(f))));
    GroebnerBasis gb = buchberger(ext, gens);
    for (auto& g : gb.gens)
        if (g.lead().m.is_one()) return true;
    return false;
}

// Krull dimension of R/I: the maximum size of a variable subset S such that
// no leading monomial of the ideal lies in k[S].  dim R/(1) = -1.
inline int dim_ideal(const RingPtr& ring, const std::vector<Poly>& I) {
    GroebnerBasis gb = buchberger(ring, I);
    std::vector<Monomial> leads;
    for (auto& g : gb.gens) {
        if (g.lead().m.is_one()) return -1;
        leads.push_back(g.lead().m);
    }
    const std::size_t n = ring->nvars();
    int best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool independent = true;
        for (auto& lm : leads) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (lm.e[i] > 0 && !(mask >> i & 1)) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

}  // namespace fg

#endif
