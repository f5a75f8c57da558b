#ifndef FG_FILTERREG_HPP
#define FG_FILTERREG_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fg/fpmod.hpp"

namespace fg {

// ---- filter-regular elements and sequences ----
//
// x is a-filter-regular on M when the support of (0 :_M x) lies inside V(a),
// checked through colon -> subquotient -> annihilator -> radical membership.

struct FrWitness {
    bool verdict = false;
    std::vector<Vec> colon_gens;   // (rels : x) inside the cover of M
    std::vector<Poly> kernel_ann;  // annihilator of (0 :_M x)
};

inline FrWitness fr_element_witness(const std::vector<Poly>& a, const Poly& x,
                                    const FPModule& M) {
    if (x.is_zero()) throw error("filter-regular test on the zero element");
    // x need not be homogeneous: under a fine grading the ideal may contain
    // no monomial avoiding the relevant primes even when a mixed-degree
    // combination does, and every computation below is degree-agnostic.
    FrWitness w;
    if (M.ngens() == 0) {
        w.verdict = true;
        w.kernel_ann = {Poly::constant(M.ring, Coeff(1))};
        return w;
    }
    w.colon_gens = colon(M.ring, static_cast<int>(M.ngens()), rel_vecs(M), x);
    FPModule ker = subquotient(M.ring, M.cover(), w.colon_gens, rel_vecs(M), false);
    w.kernel_ann = annihilator(ker);
    w.verdict = true;
    for (auto& g : a) {
        if (g.is_zero()) continue;
        if (!radical_member(M.ring, g, w.kernel_ann)) {
            w.verdict = false;
            break;
        }
    }
    return w;
}

inline bool is_fr_element(const std::vector<Poly>& a, const Poly& x, const FPModule& M) {
    return fr_element_witness(a, x, M).verdict;
}

// Variant with an explicit submodule context: tests x on M/U where U is
// given by generators in the cover of M.
inline bool is_fr_element(const std::vector<Poly>& a, const Poly& x, const std::vector<Vec>& U,
                          const FPModule& M) {
    FPModule q = M;
    for (auto& u : U) {
        std::vector<Poly> col = vec_to_column(u);
        q.rels.push_back(std::move(col));
    }
    return is_fr_element(a, x, q);
}

struct FilterSequenceReport {
    std::vector<Poly> sequence;
    std::vector<bool> verdict_per_step;
    std::vector<FrWitness> witnesses;

    bool ok() const {
        return std::all_of(verdict_per_step.begin(), verdict_per_step.end(),
                           [](bool b) { return b; });
    }
};

inline FilterSequenceReport is_fr_sequence(const std::vector<Poly>& a,
                                           const std::vector<Poly>& xs, const FPModule& M) {
    FilterSequenceReport rep;
    rep.sequence = xs;
    FPModule cur = M;
    for (auto& x : xs) {
        FrWitness w = fr_element_witness(a, x, cur);
        rep.verdict_per_step.push_back(w.verdict);
        rep.witnesses.push_back(std::move(w));
        cur = quotient_by_ideal(cur, {x});
    }
    return rep;
}

// ---- equivalence audit ----
//
// Cross-checks two further characterizations of filter-regularity against the
// support test: powered sequences stay filter-regular, and each step's colon
// is contained in the a-saturation of the step submodule.

struct EquivalenceAudit {
    std::vector<bool> base_ok;       // support condition per step
    std::vector<bool> power_ok;      // powered sequence per step
    std::vector<bool> saturation_ok; // (U : x) <= (U : a^infinity) per step

    bool all_ok() const {
        auto allof = [](const std::vector<bool>& v) {
            return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
        };
        return allof(base_ok) && allof(power_ok) && allof(saturation_ok);
    }
};

inline EquivalenceAudit equivalence_audit(const std::vector<Poly>& a,
                                          const std::vector<Poly>& xs, const FPModule& M,
                                          const std::vector<int>& powers) {
    if (powers.size() != xs.size()) throw error("power vector length mismatch");
    EquivalenceAudit audit;

    FilterSequenceReport base = is_fr_sequence(a, xs, M);
    audit.base_ok = base.verdict_per_step;

    std::vector<Poly> powered;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (powers[i] < 1) throw error("powers must be positive");
        powered.push_back(poly_pow(xs[i], powers[i]));
    }
    FilterSequenceReport pow = is_fr_sequence(a, powered, M);
    audit.power_ok = pow.verdict_per_step;

    FPModule cur = M;
    bool a_zero = a.empty() ||
                  std::all_of(a.begin(), a.end(), [](const Poly& g) { return g.is_zero(); });
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool ok;
        if (cur.ngens() == 0 || a_zero) {
            ok = true;
        } else {
            int rank = static_cast<int>(cur.ngens());
            std::vector<Vec> col = colon(cur.ring, rank, rel_vecs(cur), xs[i]);
            std::vector<Vec> sat = saturate(cur.ring, rank, rel_vecs(cur), a);
            GroebnerBasis gb = buchberger(cur.ring, rank, sat);
            ok = std::all_of(col.begin(), col.end(),
                             [&](const Vec& v) { return gb_contains(gb, v); });
        }
        audit.saturation_ok.push_back(ok);
        cur = quotient_by_ideal(cur, {xs[i]});
    }
    return audit;
}

// ---- greedy sequence search ----

struct FindSequenceResult {
    std::vector<Poly> sequence;
    bool complete = false;                 // reached the requested length
    std::optional<int> certificate_i;      // Ext index proving no extension exists
    bool exhausted = false;                // candidate cap hit without a certificate
};

namespace detail {

// Candidate elements of the ideal b, in a fixed deterministic order:
// monomials of b by total degree (then monomial-order position), then
// small-integer combinations of b's generators -- the equal-degree ones
// first, then cross-degree pairs and triples (needed under fine gradings,
// where equal-degree generators never mix).  `variant` selects an
// alternative tie-break to exercise order independence.
inline std::vector<Poly> fr_candidates(const RingPtr& ring, const std::vector<Poly>& b,
                                       int variant, std::size_t cap) {
    std::vector<Poly> out;
    std::vector<Poly> bg;
    for (auto& g : b)
        if (!g.is_zero()) bg.push_back(g);
    if (bg.empty()) return out;
    GroebnerBasis gb = buchberger(ring, bg);

    int maxdeg = 0;
    for (auto& g : bg) maxdeg = std::max(maxdeg, g.lead_mono().total());
    for (int d = 1; d <= maxdeg + 4 && out.size() < cap; ++d) {
        std::vector<Monomial> monos;
        monomials_of_total_degree(ring->nvars(), d,
                                  [&](const Monomial& m) { monos.push_back(m); });
        std::sort(monos.begin(), monos.end(), [&](const Monomial& u, const Monomial& v) {
            int c = mono_cmp(MonoOrder::lex, u, v);
            return variant == 0 ? c < 0 : c > 0;
        });
        for (auto& m : monos) {
            if (out.size() >= cap) break;
            Poly p = Poly::term(ring, m, Coeff(1));
            if (ideal_member(ring, p, bg)) out.push_back(std::move(p));
        }
    }

    // homogeneous integer combinations c_1 g_1 + ... with |c_i| <= 3
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < bg.size() && out.size() < cap; ++i) {
        auto di = degree_of(bg[i]);
        bool placed = false;
        for (auto& grp : groups)
            if (degree_of(bg[grp.front()]) == di) {
                grp.push_back(i);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({i});
    }
    for (auto& grp : groups) {
        if (grp.size() < 2) continue;
        std::vector<int> c(grp.size(), -3);
        while (true) {
            if (out.size() >= cap) break;
            bool all_zero = std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
            // skip pure multiples of a single generator (already covered)
            int nz = static_cast<int>(std::count_if(c.begin(), c.end(),
                                                    [](int x) { return x != 0; }));
            if (!all_zero && nz >= 2) {
                Poly p = Poly::zero(ring);
                for (std::size_t i = 0; i < grp.size(); ++i)
                    if (c[i] != 0) p = poly_add(p, poly_scale(bg[grp[i]], Coeff(c[i])));
                if (!p.is_zero()) out.push_back(std::move(p));
            }
            std::size_t i = 0;
            while (i < c.size() && c[i] == 3) c[i++] = -3;
            if (i == c.size()) break;
            ++c[i];
        }
    }

    // cross-degree pairs and triples with coefficients in [-3, 3]
    auto emit_combo = [&](const std::vector<std::size_t>& idx) {
        std::vector<int> c(idx.size(), -3);
        while (out.size() < cap) {
            if (std::all_of(c.begin(), c.end(), [](int x) { return x != 0; })) {
                Poly p = Poly::zero(ring);
                for (std::size_t i = 0; i < idx.size(); ++i)
                    p = poly_add(p, poly_scale(bg[idx[i]], Coeff(c[i])));
                if (!p.is_zero()) out.push_back(std::move(p));
            }
            std::size_t i = 0;
            while (i < c.size() && c[i] == 3) c[i++] = -3;
            if (i == c.size()) break;
            ++c[i];
        }
    };
    auto mixed_degrees = [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (degree_of(bg[idx[i]]) != degree_of(bg[idx[0]])) return true;
        return false;
    };
    for (std::size_t i = 0; i < bg.size() && out.size() < cap; ++i)
        for (std::size_t j = i + 1; j < bg.size() && out.size() < cap; ++j)
            if (mixed_degrees({i, j})) emit_combo({i, j});
    for (std::size_t i = 0; i < bg.size() && out.size() < cap; ++i)
        for (std::size_t j = i + 1; j < bg.size() && out.size() < cap; ++j)
            for (std::size_t k = j + 1; k < bg.size() && out.size() < cap; ++k)
                if (mixed_degrees({i, j, k})) emit_combo({i, j, k});
    return out;
}

}  // namespace detail

inline constexpr std::size_t FR_CANDIDATE_CAP = 10000;

inline FindSequenceResult find_fr_sequence(const std::vector<Poly>& a,
                                           const std::vector<Poly>& b, const FPModule& M,
                                           int target_len, int variant = 0,
                                           std::size_t cap = FR_CANDIDATE_CAP) {
    FindSequenceResult res;
    if (target_len < 0) throw error("target length must be non-negative");
    RingPtr ring = M.ring;
    std::vector<Poly> candidates = detail::fr_candidates(ring, b, variant, cap);
    FPModule Rb = cyclic_module(ring, b);
    FPModule cur = M;
    while (static_cast<int>(res.sequence.size()) < target_len) {
        const Poly* found = nullptr;
        for (auto& cand : candidates) {
            if (is_fr_element(a, cand, cur)) {
                found = &cand;
                break;
            }
        }
        if (!found) {
            int i = static_cast<int>(res.sequence.size());
            if (!support_in_V(ext(i, Rb, M), a))
                res.certificate_i = i;  // no a-filter-regular extension exists
            else
                res.exhausted = true;
            return res;
        }
        res.sequence.push_back(*found);
        cur = quotient_by_ideal(cur, {*found});
    }
    res.complete = true;
    return res;
}

// ---- filter grade ----

struct FGradeResult {
    bool infinite = false;
    int value = 0;  // meaningful only when !infinite
    std::vector<Poly> sequence;        // maximal sequence found constructively
    std::optional<int> ext_i;          // least i with Supp Ext^i(R/b, M) not in V(a)
    std::optional<int> lc_i;           // least i from the local-cohomology table

    bool agrees() const {
        if (infinite) return !ext_i && !lc_i;
        if (ext_i && *ext_i != value) return false;
        if (lc_i && *lc_i != value) return false;
        return static_cast<int>(sequence.size()) == value;
    }
    std::string str() const { return infinite ? "infinity" : std::to_string(value); }
};

inline FGradeResult fgrade(const std::vector<Poly>& a, const std::vector<Poly>& b,
                           const FPModule& M) {
    RingPtr ring = M.ring;
    FPModule Rb = cyclic_module(ring, b);
    int n = static_cast<int>(ring->nvars());
    std::optional<int> violating;
    for (int i = 0; i <= n; ++i) {
        if (!support_in_V(ext(i, Rb, M), a)) {
            violating = i;
            break;
        }
    }
    bool inf_by_support = support_in_V(quotient_by_ideal(M, b), a);
    if (violating.has_value() == inf_by_support)
        throw error("filter grade characterizations disagree");

    FGradeResult res;
    if (!violating) {
        res.infinite = true;
        // constructive probe: in the infinite case every requested length works
        FindSequenceResult f = find_fr_sequence(a, b, M, std::min(n + 1, 3));
        if (!f.complete) throw error("filter grade characterizations disagree");
        res.sequence = f.sequence;
        return res;
    }
    res.value = *violating;
    res.ext_i = violating;
    FindSequenceResult f = find_fr_sequence(a, b, M, res.value + 1);
    if (f.complete || !f.certificate_i || *f.certificate_i != res.value ||
        static_cast<int>(f.sequence.size()) != res.value)
        throw error("filter grade characterizations disagree");
    res.sequence = f.sequence;
    return res;
}

inline std::vector<Poly> irrelevant_ideal(const RingPtr& ring) {
    std::vector<Poly> m;
    for (std::size_t v = 0; v < ring->nvars(); ++v)
        m.push_back(Poly::variable(ring, static_cast<int>(v)));
    return m;
}

inline FGradeResult fdepth(const std::vector<Poly>& b, const FPModule& M) {
    FGradeResult res = fgrade(irrelevant_ideal(M.ring), b, M);
    bool finite_length = dim_module(quotient_by_ideal(M, b)) <= 0;
    if (res.infinite != finite_length)
        throw error("filter depth characterizations disagree");
    return res;
}

}  // namespace fg

#endif
