#ifndef FG_FPMOD_HPP
#define FG_FPMOD_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "fg/groebner.hpp"

namespace fg {

// Matrix of polynomials, stored column-major (columns = relations / images).
using Matrix = std::vector<std::vector<Poly>>;

// Finitely presented graded module: coker of a map between twisted free
// modules.  gen_twists[k] is the degree of generator k; each relation column
// must be homogeneous compatibly with the twists.  The zero module has no
// generators.
struct FPModule {
    RingPtr ring;
    std::vector<Degree> gen_twists;
    Matrix rels;

    std::size_t ngens() const { return gen_twists.size(); }
    FreeModule cover() const { return FreeModule(ring, gen_twists); }
};

inline FPModule free_module(const RingPtr& r, std::vector<Degree> twists) {
    return FPModule{r, std::move(twists), {}};
}

inline FPModule free_rank1(const RingPtr& r) { return free_module(r, {r->zero_degree()}); }

inline FPModule zero_module(const RingPtr& r) { return FPModule{r, {}, {}}; }

// R(-twist)/I for an ideal I.
inline FPModule cyclic_module(const RingPtr& r, const std::vector<Poly>& ideal_gens,
                              Degree twist) {
    FPModule m{r, {std::move(twist)}, {}};
    for (auto& g : ideal_gens)
        if (!g.is_zero()) m.rels.push_back({g});
    return m;
}

inline FPModule cyclic_module(const RingPtr& r, const std::vector<Poly>& ideal_gens) {
    return cyclic_module(r, ideal_gens, r->zero_degree());
}

inline std::vector<Vec> rel_vecs(const FPModule& m) {
    std::vector<Vec> out;
    for (auto& col : m.rels) {
        Vec v = vec_from_column(m.ring, col);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

inline void validate_presentation(const FPModule& m) {
    FreeModule F = m.cover();
    for (auto& col : m.rels) {
        if (col.size() != m.ngens()) throw error("relation column has wrong length");
        Vec v = vec_from_column(m.ring, col);
        if (!v.is_zero() && !vec_homogeneous(v, F))
            throw error("inhomogeneous relation column");
    }
}

inline bool is_zero_module(const FPModule& m) {
    if (m.ngens() == 0) return true;
    GroebnerBasis gb = buchberger(m.ring, static_cast<int>(m.ngens()), rel_vecs(m));
    for (std::size_t j = 0; j < m.ngens(); ++j)
        if (!gb_contains(gb, vec_unit(m.ring, static_cast<int>(m.ngens()), static_cast<int>(j))))
            return false;
    return true;
}

// ---- graded maps ----

// Map source -> target; column j of matrix is the image of source generator
// j written in target generators.  Degree-0 unless `shift` is set; shifted
// maps satisfy deg(entry) + t_target = t_source + shift.
struct GradedMap {
    FPModule source, target;
    Matrix matrix;

    GradedMap(FPModule src, FPModule tgt, Matrix mat)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(mat)) {
        check_same_ring(source.ring, target.ring);
        if (matrix.size() != source.ngens()) throw error("map matrix has wrong column count");
        FreeModule FT = target.cover();
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            if (matrix[j].size() != target.ngens())
                throw error("map matrix column has wrong length");
            Vec v = vec_from_column(source.ring, matrix[j]);
            if (v.is_zero()) continue;
            auto d = vec_degree(v, FT);
            if (!d || *d != source.gen_twists[j]) throw error("map is not degree preserving");
        }
        // well-definedness certificate: image of every source relation lies
        // in the target relation submodule
        GroebnerBasis tg =
            buchberger(target.ring, static_cast<int>(target.ngens()), rel_vecs(target));
        for (auto& rel : source.rels) {
            Vec img(target.ring, static_cast<int>(target.ngens()));
            for (std::size_t j = 0; j < rel.size(); ++j) {
                if (rel[j].is_zero() || matrix[j].empty()) continue;
                Vec col = vec_from_column(target.ring, matrix[j]);
                img = vec_add(img, vec_mul_poly(col, rel[j]));
            }
            if (!gb_contains(tg, img)) throw error("map does not respect relations");
        }
    }
};

inline GradedMap identity_map(const FPModule& m) {
    Matrix mat(m.ngens(), std::vector<Poly>(m.ngens(), Poly::zero(m.ring)));
    for (std::size_t j = 0; j < m.ngens(); ++j)
        mat[j][j] = Poly::constant(m.ring, Coeff(1));
    return GradedMap(m, m, std::move(mat));
}

// ---- presentation utilities ----

// Remove generators against relations with unit (constant) entries.
inline FPModule prune(FPModule m) {
    auto is_const = [](const Poly& p) {
        return p.terms.size() == 1 && p.terms.front().first.is_one();
    };
    const Field& fld = m.ring->field;
    for (;;) {
        std::size_t row = m.ngens(), col = m.rels.size();
        for (std::size_t c = 0; c < m.rels.size() && row == m.ngens(); ++c)
            for (std::size_t r = 0; r < m.ngens(); ++r)
                if (is_const(m.rels[c][r])) {
                    row = r;
                    col = c;
                    break;
                }
        if (row == m.ngens()) break;
        Coeff pivot = m.rels[col][row].terms.front().second;
        for (std::size_t c = 0; c < m.rels.size(); ++c) {
            if (c == col || m.rels[c][row].is_zero()) continue;
            Poly factor = poly_scale(m.rels[c][row], fld_inv(fld, pivot));
            for (std::size_t r = 0; r < m.ngens(); ++r)
                m.rels[c][r] = poly_sub(m.rels[c][r], poly_mul(factor, m.rels[col][r]));
        }
        m.rels.erase(m.rels.begin() + static_cast<long>(col));
        for (auto& c : m.rels) c.erase(c.begin() + static_cast<long>(row));
        m.gen_twists.erase(m.gen_twists.begin() + static_cast<long>(row));
    }
    // drop zero columns
    Matrix kept;
    for (auto& c : m.rels)
        if (!vec_from_column(m.ring, c).is_zero()) kept.push_back(c);
    m.rels = std::move(kept);
    return m;
}

// Irredundant generating set of a graded submodule (graded Nakayama makes
// the greedy sweep minimal).
inline std::vector<Vec> minimal_gens(const RingPtr& ring, int rank, std::vector<Vec> gens) {
    std::vector<Vec> kept;
    for (auto& g : gens)
        if (!g.is_zero()) kept.push_back(g);
    std::stable_sort(kept.begin(), kept.end(), [&](const Vec& a, const Vec& b) {
        return a.lead().m.total() < b.lead().m.total();
    });
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        GroebnerBasis gb = buchberger(ring, rank, others);
        if (gb_contains(gb, kept[i])) kept.erase(kept.begin() + static_cast<long>(i));
        else ++i;
    }
    return kept;
}

// Presentation of U/W for submodules W <= U of a twisted free module.
// With graded = false, inhomogeneous generators are accepted and given zero
// twists; the result is then only valid for degree-agnostic operations
// (annihilator, support, dimension), not for Hilbert functions.
inline FPModule subquotient(const RingPtr& ring, const FreeModule& F, const std::vector<Vec>& U,
                            const std::vector<Vec>& W, bool graded = true) {
    std::vector<Degree> twists;
    std::vector<Vec> ugens;
    for (auto& u : U) {
        if (u.is_zero()) continue;
        auto d = vec_degree(u, F);
        if (!d && graded) throw error("inhomogeneous subquotient generator");
        twists.push_back(d ? *d : ring->zero_degree());
        ugens.push_back(u);
    }
    if (ugens.empty()) return zero_module(ring);
    std::vector<Vec> pre = preimage(ring, static_cast<int>(F.rank()), ugens, W);
    FPModule out{ring, std::move(twists), {}};
    for (auto& p : pre) out.rels.push_back(vec_to_column(p));
    return out;
}

// ---- kernel / hom ----

struct SubmoduleModule {
    FPModule module;            // presentation of the subquotient
    std::vector<Vec> gens;      // its generators inside the ambient free cover
};

// prune() discards the correspondence between generators and ambient
// elements, so subquotients that must retain their ambient generators use
// this variant: it only drops zero columns.
inline FPModule prune_keep(const FPModule& m, const std::vector<Vec>&) {
    FPModule out = m;
    Matrix kept;
    for (auto& c : out.rels)
        if (!vec_from_column(out.ring, c).is_zero()) kept.push_back(c);
    out.rels = std::move(kept);
    return out;
}

// Kernel of a graded map, with its generators inside the source's cover.
inline SubmoduleModule kernel_with_gens(const GradedMap& f) {
    const RingPtr& ring = f.source.ring;
    int trank = static_cast<int>(f.target.ngens());
    std::vector<Vec> U;
    if (trank == 0) {
        for (std::size_t j = 0; j < f.source.ngens(); ++j)
            U.push_back(vec_unit(ring, static_cast<int>(f.source.ngens()), static_cast<int>(j)));
    } else {
        std::vector<Vec> P;
        for (auto& col : f.matrix) P.push_back(vec_from_column(ring, col));
        U = preimage(ring, trank, P, rel_vecs(f.target));
    }
    U = minimal_gens(ring, static_cast<int>(f.source.ngens()), U);
    FPModule ker = subquotient(ring, f.source.cover(), U, rel_vecs(f.source));
    return SubmoduleModule{prune_keep(ker, U), U};
}

inline FPModule kernel(const GradedMap& f) { return kernel_with_gens(f).module; }

// Hom_R(M, N) as a finitely presented module.
inline FPModule hom(const FPModule& M, const FPModule& N) {
    check_same_ring(M.ring, N.ring);
    const RingPtr& ring = M.ring;
    const std::size_t g = M.ngens(), h = N.ngens();
    if (g == 0 || h == 0) return zero_module(ring);

    // P = direct sum over M generators of N(t^M_j)
    FPModule P{ring, {}, {}};
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t k = 0; k < h; ++k)
            P.gen_twists.push_back(deg_sub(N.gen_twists[k], M.gen_twists[j]));
    for (std::size_t j = 0; j < g; ++j)
        for (auto& rel : N.rels) {
            std::vector<Poly> col(g * h, Poly::zero(ring));
            for (std::size_t k = 0; k < h; ++k) col[j * h + k] = rel[k];
            P.rels.push_back(std::move(col));
        }
    if (M.rels.empty()) return P;  // Hom(free, N) = sum of twisted copies of N

    // Q = direct sum over M relations of N(deg rel_i)
    FPModule Q{ring, {}, {}};
    const std::size_t s = M.rels.size();
    FreeModule FM = M.cover();
    std::vector<Degree> rel_degs;
    for (auto& rel : M.rels) {
        auto d = vec_degree(vec_from_column(ring, rel), FM);
        if (!d) throw error("inhomogeneous relation in hom");
        rel_degs.push_back(*d);
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < h; ++k)
            Q.gen_twists.push_back(deg_sub(N.gen_twists[k], rel_degs[i]));
    for (std::size_t i = 0; i < s; ++i)
        for (auto& rel : N.rels) {
            std::vector<Poly> col(s * h, Poly::zero(ring));
            for (std::size_t k = 0; k < h; ++k) col[i * h + k] = rel[k];
            Q.rels.push_back(std::move(col));
        }

    // induced map P -> Q: (j,k) -> sum_i A[j][i] (i,k)
    Matrix mat(g * h, std::vector<Poly>(s * h, Poly::zero(ring)));
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t k = 0; k < h; ++k)
            for (std::size_t i = 0; i < s; ++i)
                mat[j * h + k][i * h + k] = M.rels[i][j];
    GradedMap phi(P, Q, std::move(mat));
    return prune(kernel(phi));
}

// ---- free resolutions ----

struct Resolution {
    std::vector<FreeModule> frees;  // F_0, F_1, ...
    std::vector<Matrix> maps;       // maps[l]: F_{l+1} -> F_l (columns over F_l gens)
    int length() const { return static_cast<int>(maps.size()); }
};

// Minimal graded free resolution, truncated at max_len maps.
inline Resolution free_resolution(const FPModule& M, int max_len) {
    if (max_len < 0) throw error("resolution length must be >= 0");
    Resolution res;
    FPModule P = prune(M);
    if (P.ngens() == 0) {
        res.frees.push_back(FreeModule(M.ring, {}));
        return res;
    }
    res.frees.push_back(P.cover());
    std::vector<Vec> cols = minimal_gens(P.ring, static_cast<int>(P.ngens()), rel_vecs(P));
    int level = 0;
    while (!cols.empty() && level < max_len) {
        // copy: the push_back below reallocates res.frees
        const FreeModule F = res.frees.back();
        Matrix A;
        std::vector<Degree> twists;
        for (auto& c : cols) {
            A.push_back(vec_to_column(c));
            auto d = vec_degree(c, F);
            if (!d) throw error("inhomogeneous syzygy");
            twists.push_back(*d);
        }
        res.maps.push_back(std::move(A));
        res.frees.push_back(FreeModule(P.ring, std::move(twists)));
        ++level;
        if (level >= max_len) break;
        std::vector<Vec> syz = syzygies(P.ring, static_cast<int>(F.rank()), cols);
        cols = minimal_gens(P.ring, static_cast<int>(res.frees.back().rank()), syz);
    }
    return res;
}

inline int projective_dimension(const FPModule& M) {
    if (is_zero_module(M)) return -1;
    Resolution res = free_resolution(M, static_cast<int>(M.ring->nvars()) + 1);
    return res.length();
}

// ---- Ext ----

namespace detail {

// Hom(F_l, N) where F_l is a twisted free module: direct sum of N(a_j).
inline FPModule hom_free_into(const FreeModule& F, const FPModule& N) {
    FPModule P{N.ring, {}, {}};
    const std::size_t r = F.rank(), h = N.ngens();
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < h; ++k)
            P.gen_twists.push_back(deg_sub(N.gen_twists[k], F.twists[j]));
    for (std::size_t j = 0; j < r; ++j)
        for (auto& rel : N.rels) {
            std::vector<Poly> col(r * h, Poly::zero(N.ring));
            for (std::size_t k = 0; k < h; ++k) col[j * h + k] = rel[k];
            P.rels.push_back(std::move(col));
        }
    return P;
}

// induced map Hom(F_l, N) -> Hom(F_{l+1}, N) from A: F_{l+1} -> F_l.
inline Matrix hom_induced(const Matrix& A, std::size_t r_from, std::size_t r_to,
                          const FPModule& N) {
    const std::size_t h = N.ngens();
    Matrix mat(r_from * h, std::vector<Poly>(r_to * h, Poly::zero(N.ring)));
    for (std::size_t j = 0; j < r_from; ++j)
        for (std::size_t jp = 0; jp < r_to; ++jp)
            for (std::size_t k = 0; k < h; ++k)
                mat[j * h + k][jp * h + k] = A[jp][j];
    return mat;
}

}  // namespace detail

// Ext^i_R(M, N) via Hom(free_resolution(M), N).
inline FPModule ext(int i, const FPModule& M, const FPModule& N) {
    if (i < 0) throw error("ext index must be >= 0");
    check_same_ring(M.ring, N.ring);
    const RingPtr& ring = M.ring;
    if (N.ngens() == 0 || is_zero_module(M)) return zero_module(ring);
    Resolution res = free_resolution(M, i + 1);
    if (i > res.length()) return zero_module(ring);
    const std::size_t h = N.ngens();

    FPModule Hi = detail::hom_free_into(res.frees[static_cast<std::size_t>(i)], N);
    if (Hi.ngens() == 0) return zero_module(ring);

    // cycles: preimage of the relation submodule of Hom(F_{i+1}, N)
    std::vector<Vec> U;
    const int rank_i = static_cast<int>(Hi.ngens());
    if (i < res.length()) {
        FPModule Hnext = detail::hom_free_into(res.frees[static_cast<std::size_t>(i) + 1], N);
        Matrix d = detail::hom_induced(res.maps[static_cast<std::size_t>(i)],
                                       res.frees[static_cast<std::size_t>(i)].rank(),
                                       res.frees[static_cast<std::size_t>(i) + 1].rank(), N);
        std::vector<Vec> P;
        for (auto& col : d) P.push_back(vec_from_column(ring, col));
        U = preimage(ring, static_cast<int>(Hnext.ngens()), P, rel_vecs(Hnext));
    } else {
        for (int j = 0; j < rank_i; ++j) U.push_back(vec_unit(ring, rank_i, j));
    }

    // boundaries: image of d^{i-1} plus the relations of Hom(F_i, N)
    std::vector<Vec> W = rel_vecs(Hi);
    if (i > 0) {
        Matrix d = detail::hom_induced(res.maps[static_cast<std::size_t>(i) - 1],
                                       res.frees[static_cast<std::size_t>(i) - 1].rank(),
                                       res.frees[static_cast<std::size_t>(i)].rank(), N);
        for (auto& col : d) {
            Vec v = vec_from_column(ring, col);
            if (!v.is_zero()) W.push_back(std::move(v));
        }
    }
    U = minimal_gens(ring, rank_i, U);
    return prune(subquotient(ring, Hi.cover(), U, W));
}

// ---- annihilator / support / dimension ----

inline std::vector<Poly> annihilator(const FPModule& M) {
    const RingPtr& ring = M.ring;
    if (M.ngens() == 0) return {Poly::constant(ring, Coeff(1))};
    const int rank = static_cast<int>(M.ngens());
    std::vector<Vec> rels = rel_vecs(M);
    std::vector<Vec> acc;
    bool first = true;
    for (int j = 0; j < rank; ++j) {
        std::vector<Vec> P = {vec_unit(ring, rank, j)};
        std::vector<Vec> ann_j = preimage(ring, rank, P, rels);  // ideal in R^1
        if (first) {
            acc = ann_j;
            first = false;
        } else {
            acc = intersect(ring, 1, acc, ann_j);
        }
    }
    std::vector<Poly> out = vecs_to_polys(minimal_gens(ring, 1, acc));
    if (out.empty()) out.push_back(Poly::zero(ring));
    return out;
}

inline bool support_in_V(const FPModule& M, const std::vector<Poly>& a) {
    if (is_zero_module(M)) return true;
    std::vector<Poly> ann = annihilator(M);
    for (auto& g : a)
        if (!g.is_zero() && !radical_member(M.ring, g, ann)) return false;
    return true;
}

inline int dim_module(const FPModule& M) {
    if (is_zero_module(M)) return -1;
    return dim_ideal(M.ring, annihilator(M));
}

// ---- torsion functor ----

// Gamma_a(M) = (0 :_M <a>) with its generators inside M's cover.
inline SubmoduleModule gamma(const std::vector<Poly>& a, const FPModule& M) {
    const RingPtr& ring = M.ring;
    bool all_zero = true;
    for (auto& g : a)
        if (!g.is_zero()) all_zero = false;
    if (a.empty() || all_zero) throw error("gamma of the zero ideal");
    if (M.ngens() == 0) return SubmoduleModule{zero_module(ring), {}};
    const int rank = static_cast<int>(M.ngens());
    std::vector<Vec> rels = rel_vecs(M);
    std::vector<Vec> sat = saturate(ring, rank, rels, a);
    std::vector<Vec> gens = minimal_gens(ring, rank, sat);
    FPModule mod = subquotient(ring, M.cover(), gens, rels);
    return SubmoduleModule{mod, gens};
}

// ---- Hilbert functions ----

namespace detail {
inline void monomials_of_total_degree(std::size_t nvars, int d,
                                      const std::function<void(const Monomial&)>& fn) {
    Monomial m(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i + 1 == nvars) {
            m.e[i] = rem;
            fn(m);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m.e[i] = e;
            rec(i + 1, rem - e);
        }
    };
    if (d >= 0) rec(0, d);
}
}  // namespace detail

// dim_k M_d for integer degrees in [lo, hi] (standard grading).
inline std::vector<int> hilbert_function(const FPModule& M, int lo, int hi) {
    if (M.ring->grading != Grading::standard)
        throw error("hilbert_function expects the standard grading");
    std::vector<int> out(static_cast<std::size_t>(hi - lo + 1), 0);
    if (M.ngens() == 0) return out;
    GroebnerBasis gb = buchberger(M.ring, static_cast<int>(M.ngens()), rel_vecs(M));
    for (int d = lo; d <= hi; ++d) {
        int count = 0;
        for (std::size_t k = 0; k < M.ngens(); ++k) {
            int mdeg = d - M.gen_twists[k][0];
            if (mdeg < 0) continue;
            detail::monomials_of_total_degree(M.ring->nvars(), mdeg, [&](const Monomial& m) {
                for (auto& g : gb.gens) {
                    if (g.lead().comp == static_cast<int>(k) && mono_divides(g.lead().m, m))
                        return;
                }
                ++count;
            });
        }
        out[static_cast<std::size_t>(d - lo)] = count;
    }
    return out;
}

// dim_k M_d at a single multidegree (fine grading).
inline int hilbert_piece_fine(const FPModule& M, const GroebnerBasis& gb, const Degree& d) {
    int count = 0;
    for (std::size_t k = 0; k < M.ngens(); ++k) {
        Degree rem = deg_sub(d, M.gen_twists[k]);
        bool nonneg = std::all_of(rem.begin(), rem.end(), [](int x) { return x >= 0; });
        if (!nonneg) continue;
        Monomial m(std::vector<int>(rem.begin(), rem.end()));
        bool reducible = false;
        for (auto& g : gb.gens)
            if (g.lead().comp == static_cast<int>(k) && mono_divides(g.lead().m, m)) {
                reducible = true;
                break;
            }
        if (!reducible) ++count;
    }
    return count;
}

// ---- constructions ----

inline FPModule direct_sum(const FPModule& M, const FPModule& N) {
    check_same_ring(M.ring, N.ring);
    FPModule out{M.ring, M.gen_twists, {}};
    out.gen_twists.insert(out.gen_twists.end(), N.gen_twists.begin(), N.gen_twists.end());
    const std::size_t g = M.ngens(), h = N.ngens();
    for (auto& col : M.rels) {
        std::vector<Poly> c = col;
        c.resize(g + h, Poly::zero(M.ring));
        out.rels.push_back(std::move(c));
    }
    for (auto& col : N.rels) {
        std::vector<Poly> c(g, Poly::zero(M.ring));
        c.insert(c.end(), col.begin(), col.end());
        out.rels.push_back(std::move(c));
    }
    return out;
}

// M / (ideal * M): adds relations x * e_k.
inline FPModule quotient_by_ideal(const FPModule& M, const std::vector<Poly>& xs) {
    FPModule out = M;
    for (auto& x : xs) {
        if (x.is_zero()) continue;
        for (std::size_t k = 0; k < M.ngens(); ++k) {
            std::vector<Poly> col(M.ngens(), Poly::zero(M.ring));
            col[k] = x;
            out.rels.push_back(std::move(col));
        }
    }
    return out;
}

// M(a): degree-d piece becomes M_{d+a}; generator degrees drop by a.
inline FPModule twist(const FPModule& M, const Degree& a) {
    FPModule out = M;
    for (auto& t : out.gen_twists) t = deg_sub(t, a);
    return out;
}

}  // namespace fg

#endif
