#ifndef FG_WINDOW_HPP
#define FG_WINDOW_HPP

#include <map>
#include <vector>

#include "fg/ring.hpp"

namespace fg {

// ---- multidegree windows ----

struct DegreeWindow {
    Degree low, high;

    DegreeWindow(Degree lo, Degree hi) : low(std::move(lo)), high(std::move(hi)) {
        if (low.size() != high.size()) throw error("window bounds have different lengths");
        long long points = 1;
        for (std::size_t i = 0; i < low.size(); ++i) {
            if (low[i] > high[i]) throw error("empty degree window");
            points *= high[i] - low[i] + 1;
            if (points > 100000) throw error("degree window too large");
        }
    }

    bool contains(const Degree& d) const {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] < low[i] || d[i] > high[i]) return false;
        return true;
    }

    std::vector<Degree> degrees() const {
        std::vector<Degree> out;
        Degree d = low;
        while (true) {
            out.push_back(d);
            std::size_t i = 0;
            while (i < d.size() && d[i] == high[i]) d[i++] = low[i];
            if (i == d.size()) break;
            ++d[i];
        }
        return out;
    }
};

// Uniform window [lo, hi]^n.
inline DegreeWindow cube_window(std::size_t n, int lo, int hi) {
    return DegreeWindow(Degree(n, lo), Degree(n, hi));
}

// ---- exact rational matrices ----

struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<mpq_class> a;  // row-major

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    mpq_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline QMat qmat_identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline QMat qmat_mul(const QMat& x, const QMat& y) {
    if (x.cols != y.rows) throw error("matrix shape mismatch");
    QMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                if (y.at(k, j) != 0) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

inline std::size_t qmat_rank(QMat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        mpq_class inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            mpq_class f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// Quotient of k^m by the column span of B: returns the dimension h, a
// projection P (h x m) with P B = 0, and a section S (m x h) with P S = I.
struct CokerData {
    std::size_t dim = 0;
    QMat P, S;
};

inline CokerData qmat_coker(const QMat& B) {
    const std::size_t m = B.rows;
    // reduced column echelon form of B
    QMat E = B;
    std::vector<std::size_t> pivot_row;
    std::size_t next_col = 0;
    for (std::size_t i = 0; i < m && next_col < E.cols; ++i) {
        std::size_t j = next_col;
        while (j < E.cols && E.at(i, j) == 0) ++j;
        if (j == E.cols) continue;
        for (std::size_t r = 0; r < m; ++r) std::swap(E.at(r, next_col), E.at(r, j));
        mpq_class inv = 1 / E.at(i, next_col);
        for (std::size_t r = 0; r < m; ++r) E.at(r, next_col) *= inv;
        for (std::size_t jj = 0; jj < E.cols; ++jj) {
            if (jj == next_col || E.at(i, jj) == 0) continue;
            mpq_class f = E.at(i, jj);
            for (std::size_t r = 0; r < m; ++r) E.at(r, jj) -= f * E.at(r, next_col);
        }
        pivot_row.push_back(i);
        ++next_col;
    }
    const std::size_t rank = pivot_row.size();
    std::vector<bool> is_pivot(m, false);
    for (auto i : pivot_row) is_pivot[i] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (!is_pivot[i]) free_rows.push_back(i);

    CokerData out;
    out.dim = m - rank;
    out.P = QMat(out.dim, m);
    out.S = QMat(m, out.dim);
    for (std::size_t u = 0; u < free_rows.size(); ++u) {
        out.P.at(u, free_rows[u]) = 1;
        out.S.at(free_rows[u], u) = 1;
    }
    // pivot coordinate e_{p_j} is congruent to -sum over free rows of column j
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t u = 0; u < free_rows.size(); ++u)
            out.P.at(u, pivot_row[j]) = -E.at(free_rows[u], j);
    return out;
}

// ---- cohomology tables ----

struct CohomologyTable {
    DegreeWindow window;
    int max_index = 0;
    std::map<Degree, std::vector<int>> cols;  // per degree: dims for i = 0..max_index

    explicit CohomologyTable(DegreeWindow w) : window(std::move(w)) {}

    int entry(int i, const Degree& d) const {
        auto it = cols.find(d);
        if (it == cols.end()) return 0;
        if (i < 0 || i >= static_cast<int>(it->second.size())) return 0;
        return it->second[static_cast<std::size_t>(i)];
    }
};

inline bool table_rows_equal(const CohomologyTable& s, int i, const CohomologyTable& t, int j,
                             const DegreeWindow& w) {
    for (auto& d : w.degrees())
        if (s.entry(i, d) != t.entry(j, d)) return false;
    return true;
}

inline bool tables_equal(const CohomologyTable& s, const CohomologyTable& t,
                         const DegreeWindow& w, int max_index) {
    for (int i = 0; i <= max_index; ++i)
        if (!table_rows_equal(s, i, t, i, w)) return false;
    return true;
}

}  // namespace fg

#endif
