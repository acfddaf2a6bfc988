#pragma once

// Linear algebra over the exact fields Q and Q(i, sqrt(d)).  Subspaces are
// represented by matrices whose columns span them; every function returning a
// basis returns linearly independent columns.

#include <optional>
#include <type_traits>
#include <vector>

#include "hodge1/matrix.hpp"

namespace hodge1 {

template <class T>
struct Echelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

template <class T>
Echelon<T> rref(Matrix<T> m)
{
    static_assert(!std::is_same_v<T, Integer>, "row reduction needs a field; convert with to_rational");
    Echelon<T> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            if (!is_zero(m(row, j))) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m)
{
    return rref(m).pivots.size();
}

inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Basis of {x : m x = 0}.
template <class T>
Matrix<T> kernel(const Matrix<T>& m)
{
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return Matrix<T>::from_columns(m.cols(), basis);
}

/// The subset of columns of m at pivot positions: spans the column space.
template <class T>
Matrix<T> column_basis(const Matrix<T>& m)
{
    return m.select_columns(rref(m).pivots);
}

/// Rows spanning {y : y^T m = 0}, returned as a matrix of row vectors.
template <class T>
Matrix<T> left_annihilator(const Matrix<T>& m)
{
    return kernel(m.transpose()).transpose();
}

/// Some x with m x = b, if one exists.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b)
{
    if (b.size() != m.rows()) throw InvalidInput("solve: right-hand side has wrong length");
    Matrix<T> aug = hcat(m, Matrix<T>::column_vector(b));
    auto e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    std::vector<T> x(m.cols(), T(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

/// Solves m X = b column by column; throws InconsistentData if any column fails.
template <class T>
Matrix<T> solve_columns(const Matrix<T>& m, const Matrix<T>& b)
{
    Matrix<T> x(m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto s = solve(m, b.column(j));
        if (!s) throw InconsistentData("vector outside the expected span");
        x.set_column(j, *s);
    }
    return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m)
{
    if (m.rows() != m.cols()) throw InvalidInput("inverse of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    auto e = rref(hcat(m, Matrix<T>::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return e.reduced.columns(n, n);
}

template <class T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    T det(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

template <class T>
bool in_span(const Matrix<T>& span, const std::vector<T>& v)
{
    if (span.cols() == 0) {
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }
    return solve(span, v).has_value();
}

template <class T>
bool span_contains(const Matrix<T>& big, const Matrix<T>& small)
{
    for (std::size_t j = 0; j < small.cols(); ++j)
        if (!in_span(big, small.column(j))) return false;
    return true;
}

template <class T>
bool same_span(const Matrix<T>& a, const Matrix<T>& b)
{
    return rank(a) == rank(b) && span_contains(a, b);
}

template <class T>
Matrix<T> subspace_sum(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows()) throw InvalidInput("subspace sum: ambient dimensions differ");
    return column_basis(hcat(a, b));
}

template <class T>
Matrix<T> subspace_intersection(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows()) throw InvalidInput("subspace intersection: ambient dimensions differ");
    Matrix<T> ab = column_basis(a);
    Matrix<T> bb = column_basis(b);
    Matrix<T> k = kernel(hcat(ab, -bb));
    return column_basis(ab * k.row_block(0, ab.cols()));
}

/// Image of the subspace spanned by `space` under `map`.
template <class T>
Matrix<T> image_of(const Matrix<T>& map, const Matrix<T>& space)
{
    return column_basis(map * space);
}

/// Basis of {x : map x ∈ target} where target is a subspace of the codomain.
template <class T>
Matrix<T> preimage_of(const Matrix<T>& map, const Matrix<T>& target)
{
    Matrix<T> tb = column_basis(target);
    Matrix<T> k = kernel(hcat(map, -tb));
    return column_basis(k.row_block(0, map.cols()));
}

/// A left inverse of a matrix with independent columns.
template <class T>
Matrix<T> left_inverse(const Matrix<T>& m)
{
    if (m.cols() == 0) return Matrix<T>(0, m.rows());
    auto e = rref(hcat(m, Matrix<T>::identity(m.rows())));
    for (std::size_t r = 0; r < m.cols(); ++r)
        if (r >= e.pivots.size() || e.pivots[r] != r)
            throw InvalidInput("left_inverse: columns are dependent");
    return e.reduced.row_block(0, m.cols()).columns(m.cols(), m.rows());
}

// ---- Q-structure of Q(i, sqrt(d))-vector spaces -------------------------

/// Rational matrix of multiplication by each entry of m over the Q-basis of
/// the field: a (deg*rows) x (deg*cols) matrix, deg = expansion_degree(d).
RatMatrix expand_matrix(const ExactMatrix& m, std::int64_t d);
std::vector<Rational> expand_vector(const std::vector<Scalar>& v, std::int64_t d);
/// Embeds a rational matrix as field-valued coordinates (real parts only).
RatMatrix embed_rational(const RatMatrix& m, std::int64_t d);
std::vector<Scalar> collapse_vector(const std::vector<Rational>& coords, std::int64_t d);

/// Basis of V ∩ Q^n for the subspace V spanned by the columns.
RatMatrix rational_points(const ExactMatrix& v);

/// Complex conjugate subspace.
inline ExactMatrix conj_space(const ExactMatrix& v) { return v.conj(); }

}  // namespace hodge1
