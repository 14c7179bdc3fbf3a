#pragma once

// Sylvester matrices, fraction-free determinants, resultants, the symbolic
// discriminant of the generic degree-n polynomial and its principal
// subresultant coefficients.

#include "dplus/errors.hpp"
#include "dplus/multipoly.hpp"
#include "dplus/unipoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace dplus {

/// Largest generic degree the symbolic routines accept unless told otherwise.
inline constexpr unsigned kDefaultScaleCap = 8;

inline void check_scale_cap(unsigned n, unsigned cap) {
    if (n > cap)
        throw ScaleCapExceeded("degree " + std::to_string(n) + " exceeds the symbolic scale cap " +
                               std::to_string(cap));
}

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const VarTable& vars)
        : rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(vars)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("empty matrix");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    const VarTable& vars() const { return entries_.front().vars(); }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Keeps the listed rows and columns, in the given order.
    PolyMatrix submatrix(std::span<const std::size_t> keep_rows, std::span<const std::size_t> keep_cols) const {
        PolyMatrix out(keep_rows.size(), keep_cols.size(), vars());
        for (std::size_t i = 0; i < keep_rows.size(); ++i)
            for (std::size_t j = 0; j < keep_cols.size(); ++j) out(i, j) = (*this)(keep_rows[i], keep_cols[j]);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<MultiPoly> entries_;
};

/// Standard layout: deg B shifted rows of A's coefficients followed by deg A
/// shifted rows of B's. Coefficients are given by descending power; the formal
/// degree is size()-1 regardless of whether the leading entry vanishes.
inline PolyMatrix sylvester_matrix(std::span<const MultiPoly> a, std::span<const MultiPoly> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("sylvester matrix of an empty coefficient list");
    std::size_t m = a.size() - 1, n = b.size() - 1;
    if (m == 0 && n == 0) throw DomainError("sylvester matrix needs a positive formal degree");
    const VarTable& vars = a.front().vars();
    PolyMatrix s(m + n, m + n, vars);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = a[i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = b[j];
    return s;
}

inline std::vector<MultiPoly> as_constants(const UniPoly& p, const VarTable& vars) {
    std::vector<MultiPoly> out;
    for (const auto& c : p.coeffs()) out.push_back(MultiPoly::constant(vars, c));
    return out;
}

inline PolyMatrix sylvester_matrix(const UniPoly& a, const UniPoly& b) {
    VarTable none;
    auto ac = as_constants(a, none), bc = as_constants(b, none);
    return sylvester_matrix(ac, bc);
}

/// Laplace expansion along the first row. Used for small blocks and as a test oracle.
inline MultiPoly cofactor_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    MultiPoly det(m.vars());
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        cols.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        MultiPoly term = m(0, j) * cofactor_determinant(m.submatrix(rows, cols));
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Fraction-free Bareiss elimination; every division is exact by Sylvester's identity.
inline MultiPoly bareiss_determinant(PolyMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    bool negate = false;
    MultiPoly prev = MultiPoly::constant(m.vars(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            // Prefer the sparsest nonzero pivot below.
            std::size_t best = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!m(r, k).is_zero() && (best == n || m(r, k).size() < m(best, k).size())) best = r;
            if (best == n) return MultiPoly(m.vars());
            m.swap_rows(k, best);
            negate = !negate;
        }
        const MultiPoly& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const MultiPoly& lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m(i, j) * pivot;
                if (!lead.is_zero() && !m(k, j).is_zero()) num -= lead * m(k, j);
                m(i, j) = num.exact_divide(prev);
            }
            m(i, k) = MultiPoly(m.vars());
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Bareiss above 3x3, cofactor expansion below.
inline MultiPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() < 4) return cofactor_determinant(m);
    return bareiss_determinant(m);
}

inline MultiPoly resultant(std::span<const MultiPoly> a, std::span<const MultiPoly> b) {
    return determinant(sylvester_matrix(a, b));
}

inline Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant with the zero polynomial");
    return determinant(sylvester_matrix(a, b)).constant_value();
}

/// Table c0..cn of the generic polynomial c0 x^n + ... + cn.
inline VarTable generic_coeff_table(unsigned n) { return VarTable(VarTable::indexed("c", 0, static_cast<int>(n))); }

/// Coefficients c0..cn of the generic polynomial and c0*n, ..., c_{n-1}*1 of its derivative.
inline std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>> generic_poly_and_derivative(unsigned n,
                                                                                             const VarTable& vars) {
    std::vector<MultiPoly> p, dp;
    for (unsigned i = 0; i <= n; ++i) p.push_back(MultiPoly::variable(vars, i));
    for (unsigned i = 0; i < n; ++i) dp.push_back(p[i] * Rational(static_cast<long>(n - i)));
    return {p, dp};
}

/// D = (-1)^(n choose 2) / c0 * res(p, p') for the generic degree-n polynomial, in Z[c0..cn].
inline MultiPoly discriminant_symbolic(unsigned n, unsigned cap = kDefaultScaleCap) {
    if (n < 2) throw DomainError("symbolic discriminant needs n >= 2");
    check_scale_cap(n, cap);
    VarTable vars = generic_coeff_table(n);
    auto [p, dp] = generic_poly_and_derivative(n, vars);
    MultiPoly res = resultant(p, dp);
    MultiPoly disc = res.exact_divide(MultiPoly::variable(vars, 0));
    return (n * (n - 1) / 2) % 2 == 0 ? disc : -disc;
}

/// j-th principal subresultant coefficient of (p, p') for the generic degree-n
/// polynomial: determinant of the Sylvester matrix of (p, p') with the last j
/// rows of each block and the last 2j columns removed. j = 0 gives res(p, p').
inline MultiPoly subdiscriminant(unsigned n, unsigned j, unsigned cap = kDefaultScaleCap) {
    if (n < 2) throw DomainError("subdiscriminant needs n >= 2");
    if (j >= n) throw DomainError("subdiscriminant index must satisfy 0 <= j <= n-1");
    check_scale_cap(n, cap);
    VarTable vars = generic_coeff_table(n);
    auto [p, dp] = generic_poly_and_derivative(n, vars);
    PolyMatrix s = sylvester_matrix(p, dp);
    // p-rows come first (n-1 of them), then n rows of p'.
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r + j < n - 1; ++r) rows.push_back(r);
    for (std::size_t r = 0; r + j < n; ++r) rows.push_back(n - 1 + r);
    for (std::size_t c = 0; c + 2 * j < 2 * n - 1; ++c) cols.push_back(c);
    return determinant(s.submatrix(rows, cols));
}

}  // namespace dplus
