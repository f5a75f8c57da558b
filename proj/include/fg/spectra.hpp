#ifndef FG_SPECTRA_HPP
#define FG_SPECTRA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fg/cech.hpp"

namespace fg {

// ---- monomial primes ----

// The prime (x_v : v in vars); empty support encodes the zero ideal (0),
// which is prime and carries torsion-free summands through the formulas.
struct MonomialPrime {
    std::vector<int> vars;  // sorted, distinct

    bool operator==(const MonomialPrime& o) const { return vars == o.vars; }
    bool operator<(const MonomialPrime& o) const { return vars < o.vars; }
    bool contains_var(int v) const {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    }
};

inline std::string prime_str(const RingPtr& ring, const MonomialPrime& p) {
    if (p.vars.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (i) out += ",";
        out += ring->vars[static_cast<std::size_t>(p.vars[i])];
    }
    return out + ")";
}

inline std::vector<Poly> prime_polys(const RingPtr& ring, const MonomialPrime& p) {
    std::vector<Poly> out;
    for (int v : p.vars) out.push_back(Poly::variable(ring, v));
    return out;
}

inline int prime_codim(const MonomialPrime& p) { return static_cast<int>(p.vars.size()); }

// f lies in p_S iff every term is divisible by a variable of S.
inline bool in_monomial_prime(const Poly& f, const MonomialPrime& p) {
    for (auto& [m, c] : f.terms) {
        bool hit = false;
        for (int v : p.vars)
            if (m.e[static_cast<std::size_t>(v)] > 0) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// ---- associated primes of admissible modules ----

namespace detail {

// Ass(R/I) for a monomial ideal I by the witness criterion: p_S is
// associated iff some monomial m not in I has sqrt(I : m) = p_S.  Witness
// exponents are bounded by the generator exponents.
inline std::vector<MonomialPrime> ass_cyclic_monomial(const RingPtr& ring,
                                                      const std::vector<Monomial>& gens) {
    std::vector<MonomialPrime> out;
    if (gens.empty()) {
        out.push_back({});  // Ass(R) = {(0)}
        return out;
    }
    const std::size_t n = ring->nvars();
    std::vector<int> bound(n, 0);
    for (auto& g : gens)
        for (std::size_t v = 0; v < n; ++v) bound[v] = std::max(bound[v], g.e[v]);

    Monomial m(n);
    std::function<void(std::size_t)> scan = [&](std::size_t v) {
        if (v == n) {
            for (auto& g : gens)
                if (mono_divides(g, m)) return;  // m in I
            // J = (I : m), generator by generator
            std::vector<Monomial> J;
            for (auto& g : gens) {
                Monomial q(n);
                for (std::size_t i = 0; i < n; ++i) q.e[i] = std::max(0, g.e[i] - m.e[i]);
                J.push_back(q);
            }
            MonomialPrime p;
            for (std::size_t i = 0; i < n; ++i)
                for (auto& q : J) {
                    bool pure = q.e[i] > 0;
                    for (std::size_t j = 0; j < n && pure; ++j)
                        if (j != i && q.e[j] > 0) pure = false;
                    if (pure) {
                        p.vars.push_back(static_cast<int>(i));
                        break;
                    }
                }
            // sqrt(J) = p_S iff also every generator meets S
            for (auto& q : J) {
                bool hit = false;
                for (int s : p.vars)
                    if (q.e[static_cast<std::size_t>(s)] > 0) hit = true;
                if (!hit) return;
            }
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            return;
        }
        for (int e = 0; e <= bound[v]; ++e) {
            m.e[v] = e;
            scan(v + 1);
        }
        m.e[v] = 0;
    };
    scan(0);
    return out;
}

}  // namespace detail

inline std::vector<MonomialPrime> ass_monomial(const FPModule& N) {
    AdmissibleModule adm = to_admissible(N);
    std::vector<MonomialPrime> out;
    for (auto& s : adm.summands)
        for (auto& p : detail::ass_cyclic_monomial(N.ring, s.gens))
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<MonomialPrime> minimal_primes_monomial(const RingPtr& ring,
                                                          const std::vector<Poly>& I) {
    std::vector<Monomial> gens = I.empty() ? std::vector<Monomial>{}
                                           : detail::monomial_gens(I);
    const std::size_t n = ring->nvars();
    std::vector<MonomialPrime> covers;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool cover = true;
        for (auto& g : gens) {
            bool hit = false;
            for (std::size_t v = 0; v < n && !hit; ++v)
                if ((mask & (1u << v)) && g.e[v] > 0) hit = true;
            if (!hit) {
                cover = false;
                break;
            }
        }
        if (!cover) continue;
        MonomialPrime p;
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (1u << v)) p.vars.push_back(static_cast<int>(v));
        covers.push_back(p);
    }
    std::vector<MonomialPrime> out;
    for (auto& p : covers) {
        bool minimal = true;
        for (auto& q : covers) {
            if (q == p || q.vars.size() >= p.vars.size()) continue;
            if (std::includes(p.vars.begin(), p.vars.end(), q.vars.begin(), q.vars.end()))
                minimal = false;
        }
        if (minimal) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Artinianness ----

// Least i with dim Ext^i(M/aM, N) > 0, or nullopt when every index is
// Artinian; cross-checked against the filter grade of a + Ann M at the
// irrelevant maximal ideal.
inline std::optional<int> artinian_index(const std::vector<Poly>& a, const FPModule& M,
                                         const FPModule& N) {
    RingPtr ring = M.ring;
    FPModule MaM = quotient_by_ideal(M, a);
    std::optional<int> value;
    for (int i = 0; i <= static_cast<int>(ring->nvars()); ++i)
        if (dim_module(ext(i, MaM, N)) > 0) {
            value = i;
            break;
        }
    std::vector<Poly> b = a;
    for (auto& g : annihilator(M))
        if (!g.is_zero()) b.push_back(g);
    FGradeResult fg = fgrade(irrelevant_ideal(ring), b, N);
    bool agree = fg.infinite ? !value.has_value() : (value && *value == fg.value);
    if (!agree) throw error("artinian index characterizations disagree");
    return value;
}

inline bool all_artinian(const std::vector<Poly>& a, const FPModule& M, const FPModule& N) {
    std::vector<Poly> gens = a;
    for (auto& g : annihilator(M))
        if (!g.is_zero()) gens.push_back(g);
    for (auto& g : annihilator(N))
        if (!g.is_zero()) gens.push_back(g);
    bool verdict = dim_ideal(M.ring, gens) <= 0;
    if (verdict != !artinian_index(a, M, N).has_value())
        throw error("Artinianness characterizations disagree");
    return verdict;
}

// ---- cohomological dimension on monomial primes ----

// cd_a(M, R/p) = n + pd M, tested through: dim R/p = n, the top local
// cohomology of R/p at a is nonzero (dim R/(a+p) = 0 on monomial primes),
// and p carries the top Ext (Ann Ext^d(M, R) <= p).
inline bool cd_test(const std::vector<Poly>& a, const FPModule& M, const MonomialPrime& p,
                    int n) {
    RingPtr ring = M.ring;
    if (static_cast<int>(ring->nvars()) - prime_codim(p) != n) return false;
    std::vector<Poly> ap = a;
    for (auto& g : prime_polys(ring, p)) ap.push_back(g);
    if (dim_ideal(ring, ap) != 0) return false;
    int d = std::max(projective_dimension(M), 0);
    std::vector<Poly> ann = annihilator(ext(d, M, free_rank1(ring)));
    for (auto& g : ann)
        if (!g.is_zero() && !in_monomial_prime(g, p)) return false;
    return true;
}

// ---- attached primes of the top generalized local cohomology ----

struct AttWitness {
    MonomialPrime p;
    int dim_Rp = 0;
    int dim_a_plus_p = 0;
    bool supp_ext = false;
};

struct AttReport {
    std::vector<MonomialPrime> att;
    std::vector<AttWitness> witnesses;
    int n = 0, d = 0;
};

inline AttReport att_top_local(const std::vector<Poly>& a, const FPModule& N) {
    RingPtr ring = N.ring;
    AttReport rep;
    rep.n = dim_module(N);
    for (auto& p : ass_monomial(N)) {
        AttWitness w;
        w.p = p;
        w.dim_Rp = static_cast<int>(ring->nvars()) - prime_codim(p);
        std::vector<Poly> ap = a;
        for (auto& g : prime_polys(ring, p)) ap.push_back(g);
        w.dim_a_plus_p = dim_ideal(ring, ap);
        w.supp_ext = true;  // Ext^0(R, R) = R has zero annihilator
        rep.witnesses.push_back(w);
        if (cd_test(a, free_rank1(ring), p, rep.n)) rep.att.push_back(p);
    }
    return rep;
}

inline AttReport att_top_gen(const std::vector<Poly>& a, const FPModule& M,
                             const FPModule& N) {
    RingPtr ring = M.ring;
    AttReport rep;
    rep.n = dim_module(N);
    rep.d = std::max(projective_dimension(M), 0);
    std::vector<Poly> ann_ext = annihilator(ext(rep.d, M, free_rank1(ring)));
    std::vector<Poly> ann_M = annihilator(M);

    for (auto& p : ass_monomial(N)) {
        AttWitness w;
        w.p = p;
        w.dim_Rp = static_cast<int>(ring->nvars()) - prime_codim(p);
        std::vector<Poly> ap = a;
        for (auto& g : prime_polys(ring, p)) ap.push_back(g);
        w.dim_a_plus_p = dim_ideal(ring, ap);
        w.supp_ext = std::all_of(ann_ext.begin(), ann_ext.end(), [&](const Poly& g) {
            return g.is_zero() || in_monomial_prime(g, p);
        });
        rep.witnesses.push_back(w);
        if (cd_test(a, M, p, rep.n)) rep.att.push_back(p);
    }

    // second route: Supp Ext^d(M,R) cut against the attached primes of the
    // ordinary top local cohomology of N
    AttReport local = att_top_local(a, N);
    std::vector<MonomialPrime> route2;
    for (auto& p : local.att) {
        bool in_supp = std::all_of(ann_ext.begin(), ann_ext.end(), [&](const Poly& g) {
            return g.is_zero() || in_monomial_prime(g, p);
        });
        if (in_supp) route2.push_back(p);
    }
    if (route2 != rep.att) throw error("attached prime routes disagree");

    // inclusion Att <= Supp M cut against Att of the local cohomology
    for (auto& p : rep.att) {
        bool in_supp_M = std::all_of(ann_M.begin(), ann_M.end(), [&](const Poly& g) {
            return g.is_zero() || in_monomial_prime(g, p);
        });
        if (!in_supp_M || std::find(local.att.begin(), local.att.end(), p) == local.att.end())
            throw error("attached primes violate the support inclusion");
    }

    // a nonzero top-dimensional attached prime is never the irrelevant ideal
    if (rep.n > 0)
        for (auto& p : rep.att)
            if (prime_codim(p) == static_cast<int>(ring->nvars()))
                throw error("attached prime of positive-dimensional top is maximal");
    return rep;
}

// ---- cohomological-dimension property audit ----

// Top nonvanishing index of H^*_a(M, N) observed on a window.
inline int cd_table(const std::vector<Poly>& a, const FPModule& M, const FPModule& N,
                    const DegreeWindow& window) {
    if (is_zero_module(N)) return -1;
    CohomologyTable t = gen_cech_table(a, M, N, window);
    int top = -1;
    for (int i = 0; i <= t.max_index; ++i)
        for (auto& d : window.degrees())
            if (t.entry(i, d) != 0) {
                top = i;
                break;
            }
    return top;
}

struct CdAudit {
    std::vector<std::pair<std::string, bool>> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const auto& c) { return c.second; });
    }
};

// Monotonicity in the support and max-additivity over direct sums.
inline CdAudit cd_properties_audit(const std::vector<Poly>& a, const FPModule& M,
                                   const std::vector<std::pair<FPModule, FPModule>>& pairs,
                                   const DegreeWindow& window) {
    CdAudit audit;
    for (auto& [N, L] : pairs) {
        // Supp N <= Supp L, i.e. sqrt(Ann L) <= sqrt(Ann N)
        std::vector<Poly> annN = annihilator(N);
        bool supp_ok = true;
        for (auto& g : annihilator(L))
            if (!g.is_zero() && !radical_member(M.ring, g, annN)) supp_ok = false;
        audit.checks.push_back({"support inclusion", supp_ok});
        int cn = cd_table(a, M, N, window);
        int cl = cd_table(a, M, L, window);
        audit.checks.push_back({"cd monotone", cn <= cl});
        audit.checks.push_back(
            {"cd additive over direct sum",
             cd_table(a, M, direct_sum(N, L), window) == std::max(cn, cl)});
    }
    return audit;
}

}  // namespace fg

#endif
