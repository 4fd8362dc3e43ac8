#ifndef ORE_LINALG_HPP
#define ORE_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ore/rational.hpp"

namespace ore {

// Pivot complexity: prefer entries of low total degree to limit expression
// swell during exact elimination.
inline long pivot_complexity(const Rational&) { return 0; }
template <class F>
auto pivot_complexity(const F& f) -> decltype(f.total_degree(), long()) {
    return f.total_degree();
}

inline bool elem_is_zero(const Rational& x) { return x == 0; }
template <class F>
auto elem_is_zero(const F& x) -> decltype(x.is_zero()) {
    return x.is_zero();
}

template <class F>
using Vec = std::vector<F>;
template <class F>
using Mat = std::vector<std::vector<F>>;

// Incremental echelon basis that tracks how each reduced row was formed from
// the inserted vectors. Feeding vectors one at a time yields the first linear
// dependence, which is exactly a minimal-operator computation.
template <class F>
class DependenceFinder {
  public:
    explicit DependenceFinder(size_t dim) : dim_(dim) {}

    size_t rank() const { return rows_.size(); }

    // Insert vector number `index`; returns the dependence coefficients
    // c_0..c_index (with c_index = 1) if v is dependent on earlier vectors.
    std::optional<Vec<F>> insert(Vec<F> v, size_t index) {
        Vec<F> combo(index + 1, F(0));
        combo[index] = F(1);
        for (const Row& r : rows_) {
            F f = v[r.pivot];
            if (elem_is_zero(f)) continue;
            for (size_t j = 0; j < dim_; ++j)
                if (!elem_is_zero(r.v[j])) v[j] -= f * r.v[j];
            for (size_t j = 0; j < r.combo.size(); ++j)
                if (!elem_is_zero(r.combo[j])) combo[j] -= f * r.combo[j];
        }
        size_t piv = dim_;
        long best = 0;
        for (size_t j = 0; j < dim_; ++j) {
            if (elem_is_zero(v[j])) continue;
            long c = pivot_complexity(v[j]);
            if (piv == dim_ || c < best) {
                piv = j;
                best = c;
            }
        }
        if (piv == dim_) return combo;  // dependent
        F inv = F(1) / v[piv];
        for (auto& e : v) e = inv * e;
        for (auto& e : combo) e = inv * e;
        // back-reduce previous rows to keep the basis fully reduced
        for (Row& r : rows_) {
            F f = r.v[piv];
            if (elem_is_zero(f)) continue;
            for (size_t j = 0; j < dim_; ++j)
                if (!elem_is_zero(v[j])) r.v[j] -= f * v[j];
            if (r.combo.size() < combo.size()) r.combo.resize(combo.size(), F(0));
            for (size_t j = 0; j < combo.size(); ++j)
                if (!elem_is_zero(combo[j])) r.combo[j] -= f * combo[j];
        }
        rows_.push_back(Row{std::move(v), std::move(combo), piv});
        return std::nullopt;
    }

  private:
    struct Row {
        Vec<F> v;
        Vec<F> combo;
        size_t pivot;
    };
    size_t dim_;
    std::vector<Row> rows_;
};

// Reduced row echelon form in place; returns the pivot column of each
// surviving row. Zero rows are removed.
template <class F>
std::vector<size_t> rref(Mat<F>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t ncols = m[0].size();
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < m.size(); ++col) {
        size_t sel = m.size();
        long best = 0;
        for (size_t i = r; i < m.size(); ++i) {
            if (elem_is_zero(m[i][col])) continue;
            long c = pivot_complexity(m[i][col]);
            if (sel == m.size() || c < best) {
                sel = i;
                best = c;
            }
        }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        F inv = F(1) / m[r][col];
        for (auto& e : m[r]) e = inv * e;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || elem_is_zero(m[i][col])) continue;
            F f = m[i][col];
            for (size_t j = 0; j < ncols; ++j)
                if (!elem_is_zero(m[r][j])) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Basis of the right nullspace of the ncols-column matrix m.
template <class F>
Mat<F> nullspace(Mat<F> m, size_t ncols) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    Mat<F> basis;
    for (size_t col = 0; col < ncols; ++col) {
        if (is_pivot[col]) continue;
        Vec<F> v(ncols, F(0));
        v[col] = F(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b; nullopt when inconsistent or the solution is not unique.
template <class F>
std::optional<Vec<F>> solve_linear(Mat<F> a, Vec<F> b) {
    size_t ncols = a.empty() ? 0 : a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(a);
    Vec<F> x(ncols, F(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == ncols) return std::nullopt;  // row 0 = 1
        x[pivots[i]] = a[i][ncols];
    }
    if (pivots.size() < ncols) return std::nullopt;
    return x;
}

template <class F>
std::optional<Mat<F>> invert_matrix(const Mat<F>& a) {
    size_t n = a.size();
    Mat<F> m(n, Vec<F>(2 * n, F(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = F(1);
    }
    std::vector<size_t> pivots = rref(m);
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat<F> inv(n, Vec<F>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

template <class F>
Vec<F> mat_vec(const Mat<F>& a, const Vec<F>& x) {
    Vec<F> r(a.size(), F(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (!elem_is_zero(a[i][j]) && !elem_is_zero(x[j])) r[i] += a[i][j] * x[j];
    return r;
}

// Rank of a matrix over F.
template <class F>
size_t matrix_rank(Mat<F> m) {
    return rref(m).size();
}

}  // namespace ore

#endif
