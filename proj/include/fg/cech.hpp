#ifndef FG_CECH_HPP
#define FG_CECH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "fg/filterreg.hpp"
#include "fg/window.hpp"

namespace fg {

// ---- admissible modules: finite sums of twisted cyclic monomial quotients ----
//
// Localization pieces of these are 0- or 1-dimensional with closed-form
// membership, so Cech cohomology tables are exact per multidegree.

struct AdmissibleSummand {
    Degree twist;                // generator degree of R(-twist)/I
    std::vector<Monomial> gens;  // monomial generators of I
};

struct AdmissibleModule {
    RingPtr ring;
    std::vector<AdmissibleSummand> summands;
};

inline AdmissibleModule to_admissible(const FPModule& N) {
    AdmissibleModule out{N.ring, {}};
    for (auto& t : N.gen_twists) out.summands.push_back({t, {}});
    for (auto& col : N.rels) {
        int row = -1;
        for (std::size_t j = 0; j < col.size(); ++j) {
            if (col[j].is_zero()) continue;
            if (row >= 0 || col[j].terms.size() != 1) throw error("N outside admissible class");
            row = static_cast<int>(j);
        }
        if (row < 0) continue;
        out.summands[static_cast<std::size_t>(row)].gens.push_back(col[static_cast<std::size_t>(row)].lead_mono());
    }
    return out;
}

inline FPModule to_fpmodule(const AdmissibleModule& N) {
    FPModule out = zero_module(N.ring);
    for (auto& s : N.summands) {
        std::vector<Poly> gens;
        for (auto& m : s.gens) gens.push_back(Poly::term(N.ring, m, Coeff(1)));
        out = direct_sum(out, cyclic_module(N.ring, gens, s.twist));
    }
    return out;
}

namespace detail {

inline std::vector<Monomial> monomial_gens(const std::vector<Poly>& a) {
    std::vector<Monomial> out;
    for (auto& p : a) {
        if (p.is_zero()) continue;
        if (p.terms.size() != 1) throw error("expected monomial ideal generators");
        out.push_back(p.lead_mono());
    }
    if (out.empty()) throw error("expected at least one monomial generator");
    return out;
}

inline std::vector<bool> inverted_vars(std::size_t nvars, const std::vector<Monomial>& monos,
                                       std::uint32_t mask, const std::vector<bool>& extra) {
    std::vector<bool> inv = extra.empty() ? std::vector<bool>(nvars, false) : extra;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        if (!(mask & (1u << k))) continue;
        for (std::size_t i = 0; i < nvars; ++i)
            if (monos[k].e[i] > 0) inv[i] = true;
    }
    return inv;
}

inline int cech_sign(std::uint32_t mask, int l) {
    int cnt = __builtin_popcount(mask & ((1u << l) - 1u));
    return (cnt % 2 == 0) ? 1 : -1;
}

// Does the Laurent monomial at degree d survive in (R(-twist)/I)_{m_T}?
inline bool laurent_alive(const AdmissibleSummand& s, const std::vector<bool>& inv,
                          const Degree& d) {
    Degree v = deg_sub(d, s.twist);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!inv[i] && v[i] < 0) return false;
    for (auto& g : s.gens) {
        bool kills = true;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!inv[i] && g.e[i] > v[i]) {
                kills = false;
                break;
            }
        if (kills) return false;
    }
    return true;
}

// Exact piece provider for an admissible module: piece(T, e) has one basis
// vector per surviving summand.
struct AdmissibleProvider {
    const AdmissibleModule& N;
    std::vector<Monomial> monos;
    std::vector<bool> extra_inv;  // extra inverted variables (for localized tables)

    std::vector<int> alive(std::uint32_t mask, const Degree& e) const {
        std::vector<bool> inv = inverted_vars(N.ring->nvars(), monos, mask, extra_inv);
        std::vector<int> out;
        for (std::size_t j = 0; j < N.summands.size(); ++j)
            if (laurent_alive(N.summands[j], inv, e)) out.push_back(static_cast<int>(j));
        return out;
    }

    std::size_t dim(std::uint32_t mask, const Degree& e) const { return alive(mask, e).size(); }

    QMat cech_map(std::uint32_t mask, int l, const Degree& e) const {
        auto src = alive(mask, e);
        auto tgt = alive(mask | (1u << l), e);
        QMat m(tgt.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t r = 0; r < tgt.size(); ++r)
                if (src[c] == tgt[r]) m.at(r, c) = 1;
        return m;
    }

    QMat mono_map(std::uint32_t mask, const Degree& e, const Coeff& c, const Monomial& u) const {
        auto src = alive(mask, e);
        Degree eu = deg_add(e, Degree(u.e.begin(), u.e.end()));
        auto tgt = alive(mask, eu);
        QMat m(tgt.size(), src.size());
        for (std::size_t i = 0; i < src.size(); ++i)
            for (std::size_t r = 0; r < tgt.size(); ++r)
                if (src[i] == tgt[r]) m.at(r, i) = c.v;
        return m;
    }
};

// Resolution data for the totalization: generator twists per level and
// single-term matrices (fine grading makes every homogeneous entry a term).
struct ResData {
    std::vector<std::vector<Degree>> twists;  // twists[p][k]
    std::vector<Matrix> maps;                 // maps[p] : F_{p+1} -> F_p
};

inline ResData res_data(const FPModule& M) {
    Resolution res = free_resolution(M, static_cast<int>(M.ring->nvars()) + 1);
    ResData out;
    for (auto& F : res.frees) out.twists.push_back(F.twists);
    for (auto& A : res.maps) {
        for (auto& col : A)
            for (auto& p : col)
                if (p.terms.size() > 1) throw error("resolution entry is not a term");
        out.maps.push_back(A);
    }
    return out;
}

inline ResData trivial_res(const RingPtr& ring) {
    return ResData{{{ring->zero_degree()}}, {}};
}

// Cohomology of the total complex Hom(F_*, Cech(a) (x) X) at one multidegree,
// where X is abstracted behind the provider.  D = d_cech * (-1)^p + d_hom.
template <typename Provider>
std::vector<int> totalize_at(const ResData& res, const Provider& prov, std::size_t s,
                             const Degree& d) {
    const int P = static_cast<int>(res.twists.size()) - 1;
    const int top = P + static_cast<int>(s);
    struct Item {
        int p, k;
        std::uint32_t mask;
        std::size_t offset, dim;
        Degree e;
    };
    std::vector<std::vector<Item>> items(static_cast<std::size_t>(top) + 1);
    std::vector<std::size_t> total(static_cast<std::size_t>(top) + 1, 0);
    for (int p = 0; p <= P; ++p)
        for (int k = 0; k < static_cast<int>(res.twists[p].size()); ++k) {
            Degree e = deg_add(d, res.twists[p][k]);
            for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
                int i = p + __builtin_popcount(mask);
                std::size_t dm = prov.dim(mask, e);
                if (dm == 0) continue;
                items[i].push_back({p, k, mask, total[i], dm, e});
                total[i] += dm;
            }
        }
    auto find_item = [&](int i, int p, int k, std::uint32_t mask) -> const Item* {
        for (auto& it : items[i])
            if (it.p == p && it.k == k && it.mask == mask) return &it;
        return nullptr;
    };
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int i = 0; i < top; ++i) {
        if (total[i] == 0 || total[i + 1] == 0) continue;
        QMat D(total[i + 1], total[i]);
        auto add_block = [&](const Item& src, const Item& tgt, const QMat& blk, int sign) {
            for (std::size_t r = 0; r < blk.rows; ++r)
                for (std::size_t c = 0; c < blk.cols; ++c)
                    if (blk.at(r, c) != 0)
                        D.at(tgt.offset + r, src.offset + c) += sign * blk.at(r, c);
        };
        for (auto& it : items[i]) {
            // Cech differential, with the totalization sign (-1)^p
            for (int l = 0; l < static_cast<int>(s); ++l) {
                if (it.mask & (1u << l)) continue;
                const Item* tgt = find_item(i + 1, it.p, it.k, it.mask | (1u << l));
                if (!tgt) continue;
                int sign = cech_sign(it.mask, l) * (it.p % 2 == 0 ? 1 : -1);
                add_block(it, *tgt, prov.cech_map(it.mask, l, it.e), sign);
            }
            // Hom differential: compose with F_{p+1} -> F_p
            if (it.p < P) {
                const Matrix& A = res.maps[static_cast<std::size_t>(it.p)];
                for (int kp = 0; kp < static_cast<int>(A.size()); ++kp) {
                    const Poly& entry = A[static_cast<std::size_t>(kp)][static_cast<std::size_t>(it.k)];
                    if (entry.is_zero()) continue;
                    const Item* tgt = find_item(i + 1, it.p + 1, kp, it.mask);
                    if (!tgt) continue;
                    add_block(it, *tgt,
                              prov.mono_map(it.mask, it.e, entry.terms.front().second,
                                            entry.terms.front().first),
                              1);
                }
            }
        }
        ranks[static_cast<std::size_t>(i)] = qmat_rank(D);
    }
    std::vector<int> h(static_cast<std::size_t>(top) + 1, 0);
    for (int i = 0; i <= top; ++i) {
        std::size_t below = i > 0 ? ranks[static_cast<std::size_t>(i - 1)] : 0;
        h[static_cast<std::size_t>(i)] =
            static_cast<int>(total[static_cast<std::size_t>(i)]) -
            static_cast<int>(ranks[static_cast<std::size_t>(i)]) - static_cast<int>(below);
    }
    return h;
}

template <typename Provider>
CohomologyTable totalize(const ResData& res, const Provider& prov, std::size_t s,
                         const DegreeWindow& window) {
    CohomologyTable table(window);
    table.max_index = static_cast<int>(res.twists.size()) - 1 + static_cast<int>(s);
    for (auto& d : window.degrees()) table.cols[d] = totalize_at(res, prov, s, d);
    return table;
}

}  // namespace detail

// ---- exact H^0 ----

// H^0_a(M, N) = Gamma_a(Hom(M, N)), exactly (no windowing).
inline FPModule h0_exact(const std::vector<Poly>& a, const FPModule& M, const FPModule& N) {
    FPModule H = hom(M, N);
    if (H.ngens() == 0) return H;
    return gamma(a, H).module;
}

// ---- Cech tables ----

inline void require_fine(const RingPtr& ring) {
    if (ring->grading != Grading::fine) throw error("Cech tables require the fine grading");
}

// dim_k H^i_a(N)_d for admissible N, exact per multidegree.
inline CohomologyTable cech_table(const std::vector<Poly>& a, const FPModule& N,
                                  const DegreeWindow& window) {
    require_fine(N.ring);
    AdmissibleModule adm = to_admissible(N);
    auto monos = detail::monomial_gens(a);
    detail::AdmissibleProvider prov{adm, monos, {}};
    CohomologyTable table =
        detail::totalize(detail::trivial_res(N.ring), prov, monos.size(), window);
    // the H^0 row must equal the Hilbert table of the exact torsion submodule
    if (N.ngens() > 0) {
        FPModule g = gamma(a, N).module;
        GroebnerBasis gb = buchberger(N.ring, static_cast<int>(g.ngens()), rel_vecs(g));
        for (auto& d : window.degrees())
            if (table.entry(0, d) != hilbert_piece_fine(g, gb, d))
                throw error("H^0 row disagrees with the exact torsion submodule");
    }
    return table;
}

// dim_k H^i_a(M, N)_d via the total complex Hom(F_*, Cech(a) (x) N).
inline CohomologyTable gen_cech_table(const std::vector<Poly>& a, const FPModule& M,
                                      const FPModule& N, const DegreeWindow& window) {
    require_fine(N.ring);
    check_same_ring(M.ring, N.ring);
    AdmissibleModule adm = to_admissible(N);
    auto monos = detail::monomial_gens(a);
    detail::AdmissibleProvider prov{adm, monos, {}};
    return detail::totalize(detail::res_data(M), prov, monos.size(), window);
}

// ---- windowed modules ----
//
// A finite window of an infinite graded module: per-multidegree dimensions
// plus the multiplication map of each variable between adjacent pieces.

struct WindowedModule {
    RingPtr ring;
    Degree low, high;  // storage box
    std::map<Degree, std::size_t> dims;
    std::map<Degree, std::vector<QMat>> var_maps;  // action of each variable at d

    bool in_box(const Degree& d) const {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] < low[i] || d[i] > high[i]) return false;
        return true;
    }
    std::size_t dim_at(const Degree& d) const {
        auto it = dims.find(d);
        if (it == dims.end()) throw error("windowed module box exceeded");
        return it->second;
    }
};

// Multiplication by x^u as a map piece(from) -> piece(from + u).
inline QMat wm_monomial_map(const WindowedModule& W, Degree from, const Degree& u) {
    QMat m = qmat_identity(W.dim_at(from));
    for (std::size_t v = 0; v < u.size(); ++v) {
        if (u[v] < 0) throw error("negative multiplication step");
        for (int t = 0; t < u[v]; ++t) {
            auto it = W.var_maps.find(from);
            if (it == W.var_maps.end()) throw error("windowed module box exceeded");
            m = qmat_mul(it->second[v], m);
            ++from[v];
        }
    }
    return m;
}

// Windowed H^n_(xs)(N) for admissible N: the cokernel of the last Cech
// differential, with induced variable actions, over the given storage box.
inline WindowedModule windowed_top_cohomology(const std::vector<Poly>& xs, const FPModule& N,
                                              const Degree& box_low, const Degree& box_high) {
    require_fine(N.ring);
    AdmissibleModule adm = to_admissible(N);
    std::vector<Monomial> monos;
    for (auto& p : xs) {
        if (p.is_zero() || p.terms.size() != 1) throw error("expected monomial sequence");
        monos.push_back(p.lead_mono());
    }
    detail::AdmissibleProvider prov{adm, monos, {}};
    const std::size_t n = monos.size();
    const std::uint32_t full = n == 0 ? 0u : (1u << n) - 1u;

    WindowedModule W{N.ring, box_low, box_high, {}, {}};
    DegreeWindow box(box_low, box_high);
    std::map<Degree, CokerData> cokers;
    for (auto& d : box.degrees()) {
        std::size_t top_dim = prov.dim(full, d);
        QMat B(top_dim, 0);
        if (n > 0 && top_dim > 0) {
            // columns: pieces at the size-(n-1) subsets
            std::vector<std::pair<std::uint32_t, std::size_t>> srcs;
            std::size_t cols = 0;
            for (std::size_t k = 0; k < n; ++k) {
                std::uint32_t mask = full ^ (1u << k);
                std::size_t dm = prov.dim(mask, d);
                srcs.push_back({mask, dm});
                cols += dm;
            }
            B = QMat(top_dim, cols);
            std::size_t off = 0;
            for (std::size_t k = 0; k < n; ++k) {
                auto [mask, dm] = srcs[k];
                if (dm > 0) {
                    QMat blk = prov.cech_map(mask, static_cast<int>(k), d);
                    int sign = detail::cech_sign(mask, static_cast<int>(k));
                    for (std::size_t r = 0; r < blk.rows; ++r)
                        for (std::size_t c = 0; c < blk.cols; ++c)
                            B.at(r, off + c) = sign * blk.at(r, c);
                }
                off += dm;
            }
        }
        CokerData ck = qmat_coker(B);
        W.dims[d] = ck.dim;
        cokers[d] = std::move(ck);
    }
    for (auto& d : box.degrees()) {
        std::vector<QMat> acts;
        for (std::size_t v = 0; v < N.ring->nvars(); ++v) {
            Degree dv = d;
            ++dv[v];
            if (!W.in_box(dv)) {
                acts.push_back(QMat());
                continue;
            }
            Monomial xv(N.ring->nvars());
            xv.e[v] = 1;
            QMat diag = prov.mono_map(full, d, Coeff(1), xv);
            acts.push_back(qmat_mul(cokers[dv].P, qmat_mul(diag, cokers[d].S)));
        }
        W.var_maps[d] = std::move(acts);
    }
    return W;
}

namespace detail {

// Piece provider backed by a windowed module: the localization (W_{m_T})_e is
// represented at colimit level K as W_{e + K deg m_T}; stability at that
// level is certified on first use and a shortfall raises an error.
struct WindowedProvider {
    const WindowedModule& W;
    std::vector<Monomial> monos;
    int K;
    mutable std::set<std::pair<std::uint32_t, Degree>> checked;

    Degree shift(std::uint32_t mask) const {
        Degree c = W.ring->zero_degree();
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (mask & (1u << k))
                c = deg_add(c, Degree(monos[k].e.begin(), monos[k].e.end()));
        return c;
    }

    Degree rep_degree(std::uint32_t mask, const Degree& e) const {
        Degree c = shift(mask);
        Degree out = e;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += K * c[i];
        return out;
    }

    void check_margin(std::uint32_t mask, const Degree& e) const {
        if (mask == 0 || !checked.insert({mask, e}).second) return;
        Degree rep = rep_degree(mask, e);
        QMat trans = wm_monomial_map(W, rep, shift(mask));
        if (trans.rows != trans.cols || qmat_rank(trans) != trans.rows)
            throw error("margin insufficiency: localization piece not yet stable");
    }

    std::size_t dim(std::uint32_t mask, const Degree& e) const {
        check_margin(mask, e);
        return W.dim_at(rep_degree(mask, e));
    }

    QMat cech_map(std::uint32_t mask, int l, const Degree& e) const {
        Degree step = W.ring->zero_degree();
        for (std::size_t i = 0; i < step.size(); ++i)
            step[i] = K * monos[static_cast<std::size_t>(l)].e[i];
        return wm_monomial_map(W, rep_degree(mask, e), step);
    }

    QMat mono_map(std::uint32_t mask, const Degree& e, const Coeff& c, const Monomial& u) const {
        QMat m = wm_monomial_map(W, rep_degree(mask, e), Degree(u.e.begin(), u.e.end()));
        for (auto& x : m.a) x *= c.v;
        return m;
    }
};

}  // namespace detail

// ---- torsion-functor and composite-formula verifiers ----

struct NsReport {
    bool preconditions_ok = true;
    std::string message;
    std::vector<std::pair<int, bool>> index_ok;  // (cohomological index, tables agree)
    bool h0_exact_ok = true;

    bool ok() const {
        if (!preconditions_ok || !h0_exact_ok) return false;
        return std::all_of(index_ok.begin(), index_ok.end(),
                           [](const auto& p) { return p.second; });
    }
};

// Verifies H^i_a(M,N) = H^i_(xs)(M,N) for i < |xs| when xs is an a-filter-regular
// N-sequence contained in a.  Verified by table equality, plus exact
// submodule equality of the two torsion H^0's.
inline NsReport ns_verify(const std::vector<Poly>& a, const std::vector<Poly>& xs,
                          const FPModule& M, const FPModule& N, const DegreeWindow& window) {
    NsReport rep;
    for (auto& x : xs)
        if (!ideal_member(N.ring, x, a)) {
            rep.preconditions_ok = false;
            rep.message = "sequence element not contained in the ideal";
            return rep;
        }
    FilterSequenceReport fr = is_fr_sequence(a, xs, N);
    for (std::size_t i = 0; i < fr.verdict_per_step.size(); ++i)
        if (!fr.verdict_per_step[i]) {
            rep.preconditions_ok = false;
            rep.message = "sequence fails filter-regularity at step " + std::to_string(i);
            return rep;
        }
    if (xs.empty()) return rep;  // vacuously true

    CohomologyTable ta = gen_cech_table(a, M, N, window);
    CohomologyTable tx = gen_cech_table(xs, M, N, window);
    for (int i = 0; i < static_cast<int>(xs.size()); ++i)
        rep.index_ok.push_back({i, table_rows_equal(ta, i, tx, i, window)});

    FPModule H = hom(M, N);
    if (H.ngens() > 0) {
        auto ga = gamma(a, H);
        auto gx = gamma(xs, H);
        rep.h0_exact_ok =
            submodule_equal(N.ring, static_cast<int>(H.ngens()), ga.gens, gx.gens);
    }
    return rep;
}

// Verifies H^{i+n}_a(M,N) = H^i_a(M, H^n_(xs)(N)) for i >= pd M, with xs an
// a-filter-regular N-sequence of length n inside a.  The right side is
// evaluated on the windowed H^n_(xs)(N) at colimit level K and re-checked at
// K+1; any instability is an error, never a silent truncation.
inline NsReport ns_compose_verify(const std::vector<Poly>& a, const std::vector<Poly>& xs,
                                  const FPModule& M, const FPModule& N,
                                  const DegreeWindow& window, int margin_extra = 0,
                                  std::vector<int> sample_is = {}) {
    NsReport rep;
    require_fine(N.ring);
    for (auto& x : xs)
        if (!ideal_member(N.ring, x, a)) {
            rep.preconditions_ok = false;
            rep.message = "sequence element not contained in the ideal";
            return rep;
        }
    if (!is_fr_sequence(a, xs, N).ok()) {
        rep.preconditions_ok = false;
        rep.message = "sequence fails filter-regularity";
        return rep;
    }
    const int n = static_cast<int>(xs.size());
    const int d = std::max(projective_dimension(M), 0);
    if (sample_is.empty()) sample_is = {d, d + 1};

    CohomologyTable lhs = gen_cech_table(a, M, N, window);

    auto a_monos = detail::monomial_gens(a);
    detail::ResData res = detail::res_data(M);
    Degree t_max = N.ring->zero_degree();
    for (auto& lvl : res.twists)
        for (auto& t : lvl)
            for (std::size_t i = 0; i < t_max.size(); ++i) t_max[i] = std::max(t_max[i], t[i]);
    Degree c_all = N.ring->zero_degree();
    for (auto& m : a_monos)
        for (std::size_t i = 0; i < c_all.size(); ++i) c_all[i] += m.e[i];

    // The colimit level must clear every stability boundary reachable from
    // the window: boundaries sit within the window span plus the exponents
    // appearing in N and the resolution twists.
    int reach = 0;
    for (std::size_t i = 0; i < window.high.size(); ++i)
        reach = std::max(reach, window.high[i] - window.low[i]);
    for (auto& sm : to_admissible(N).summands) {
        for (auto& t : sm.twist) reach = std::max(reach, std::abs(t));
        for (auto& g : sm.gens)
            for (auto& e : g.e) reach = std::max(reach, e);
    }
    for (auto& t : t_max) reach = std::max(reach, t);
    const int K = 1 + margin_extra + reach;
    Degree box_hi = window.high;
    for (std::size_t i = 0; i < box_hi.size(); ++i)
        box_hi[i] += t_max[i] + (K + 3) * c_all[i];
    WindowedModule W = windowed_top_cohomology(xs, N, window.low, box_hi);

    detail::WindowedProvider provK{W, a_monos, K, {}};
    CohomologyTable rhs = detail::totalize(res, provK, a_monos.size(), window);
    detail::WindowedProvider provK1{W, a_monos, K + 1, {}};
    CohomologyTable rhs1 = detail::totalize(res, provK1, a_monos.size(), window);
    if (!tables_equal(rhs, rhs1, window, rhs.max_index))
        throw error("margin insufficiency: tables differ across colimit levels");

    for (int i : sample_is)
        rep.index_ok.push_back({i, table_rows_equal(lhs, i + n, rhs, i, window)});
    return rep;
}

// ---- local-cohomology certificate for the filter grade ----

// Least i with H^i_b(M) not supported in V(a), observed on the window:
// Supp H is outside V(a) exactly when H localized at some generator of a is
// nonzero, and those localized tables are exact per multidegree.
inline std::optional<int> lc_violation_index(const std::vector<Poly>& a,
                                             const std::vector<Poly>& b, const FPModule& M,
                                             const DegreeWindow& window) {
    require_fine(M.ring);
    AdmissibleModule adm = to_admissible(M);
    auto b_monos = detail::monomial_gens(b);
    auto a_monos = detail::monomial_gens(a);
    for (int i = 0; i <= static_cast<int>(b_monos.size()); ++i) {
        for (auto& g : a_monos) {
            std::vector<bool> extra(M.ring->nvars(), false);
            for (std::size_t v = 0; v < M.ring->nvars(); ++v)
                if (g.e[v] > 0) extra[v] = true;
            detail::AdmissibleProvider prov{adm, b_monos, extra};
            CohomologyTable t =
                detail::totalize(detail::trivial_res(M.ring), prov, b_monos.size(), window);
            for (auto& dd : window.degrees())
                if (t.entry(i, dd) != 0) return i;
        }
    }
    return std::nullopt;
}

// fgrade with the third, local-cohomology certificate (monomial data only).
inline FGradeResult fgrade_with_lc(const std::vector<Poly>& a, const std::vector<Poly>& b,
                                   const FPModule& M, const DegreeWindow& window) {
    FGradeResult res = fgrade(a, b, M);
    std::optional<int> lc = lc_violation_index(a, b, M, window);
    if (res.infinite) {
        if (lc) throw error("filter grade characterizations disagree");
    } else {
        if (!lc || *lc != res.value)
            throw error("filter grade characterizations disagree (window too small?)");
        res.lc_i = lc;
    }
    return res;
}

}  // namespace fg

#endif
