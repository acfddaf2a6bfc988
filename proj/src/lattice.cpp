#include "hodge1/lattice.hpp"

#include <algorithm>

namespace hodge1 {

namespace {

// Column operation on (col_a, col_b): [a b] <- [a b] * [[s, x], [t, y]].
void mix_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                 const Integer& x, const Integer& y)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer va = m(i, a), vb = m(i, b);
        m(i, a) = s * va + t * vb;
        m(i, b) = x * va + y * vb;
    }
}

void mix_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
              const Integer& x, const Integer& y)
{
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer va = m(a, j), vb = m(b, j);
        m(a, j) = s * va + t * vb;
        m(b, j) = x * va + y * vb;
    }
}

// Unimodular coefficients (s, t, x, y) sending (p, q) to (gcd, 0).
void gcd_step(const Integer& p, const Integer& q, Integer& s, Integer& t, Integer& x, Integer& y)
{
    if (sgn(p) != 0 && mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
        s = 1;
        t = 0;
        x = -q / p;
        y = 1;
        return;
    }
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    x = -q / g;
    y = p / g;
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_column(IntMatrix& m, std::size_t a)
{
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = -m(i, a);
}

void negate_row(IntMatrix& m, std::size_t a)
{
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m)
{
    HnfResult out;
    out.h = m;
    out.u = IntMatrix::identity(m.cols());
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;
    std::size_t r = 0;
    Integer s, t, x, y;
    for (std::size_t i = 0; i < h.rows() && r < h.cols(); ++i) {
        for (std::size_t j = r + 1; j < h.cols(); ++j) {
            if (sgn(h(i, j)) == 0) continue;
            gcd_step(h(i, r), h(i, j), s, t, x, y);
            mix_columns(h, r, j, s, t, x, y);
            mix_columns(u, r, j, s, t, x, y);
        }
        if (sgn(h(i, r)) == 0) continue;
        if (sgn(h(i, r)) < 0) {
            negate_column(h, r);
            negate_column(u, r);
        }
        for (std::size_t k = 0; k < r; ++k) {
            Integer q = floor_div(h(i, k), h(i, r));
            if (sgn(q) == 0) continue;
            for (std::size_t row = 0; row < h.rows(); ++row) h(row, k) -= q * h(row, r);
            for (std::size_t row = 0; row < u.rows(); ++row) u(row, k) -= q * u(row, r);
        }
        ++r;
    }
    out.rank = r;
    return out;
}

HnfResult hnf(const ExactMatrix& m)
{
    return hnf(to_integer(m, "hnf input"));
}

namespace {

// Diagonalises the trailing block starting at (t, t) as far as row t and
// column t are concerned: afterwards s(t, j) = s(i, t) = 0 for i, j > t.
void clear_cross(SnfResult& r, std::size_t t)
{
    IntMatrix& m = r.s;
    Integer s, u, x, y;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
            if (sgn(m(i, t)) == 0) continue;
            gcd_step(m(t, t), m(i, t), s, u, x, y);
            mix_rows(m, t, i, s, u, x, y);
            mix_rows(r.u, t, i, s, u, x, y);
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (sgn(m(t, j)) == 0) continue;
            gcd_step(m(t, t), m(t, j), s, u, x, y);
            mix_columns(m, t, j, s, u, x, y);
            mix_columns(r.v, t, j, s, u, x, y);
        }
        for (std::size_t i = t + 1; i < m.rows(); ++i)
            if (sgn(m(i, t)) != 0) dirty = true;
    }
    if (sgn(m(t, t)) < 0) {
        negate_row(m, t);
        negate_row(r.u, t);
    }
}

}  // namespace

SnfResult snf(const IntMatrix& m)
{
    SnfResult r;
    r.s = m;
    r.u = IntMatrix::identity(m.rows());
    r.v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                if (sgn(r.s(i, j)) == 0) continue;
                if (!found || abs(r.s(i, j)) < abs(r.s(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(r.s, t, pi);
        swap_rows(r.u, t, pi);
        swap_columns(r.s, t, pj);
        swap_columns(r.v, t, pj);
        clear_cross(r, t);
    }
    const std::size_t rank = t;
    // Enforce the divisibility chain d_1 | d_2 | ... .
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j) {
                if (r.s(j, j) % r.s(i, i) == 0) continue;
                // col_i += col_j puts d_j below d_i; re-clear position i.
                for (std::size_t k = 0; k < r.s.rows(); ++k) r.s(k, i) += r.s(k, j);
                for (std::size_t k = 0; k < r.v.rows(); ++k) r.v(k, i) += r.v(k, j);
                clear_cross(r, i);
                clear_cross(r, j);
                changed = true;
            }
    }
    for (std::size_t i = 0; i < rank; ++i) r.divisors.push_back(r.s(i, i));
    return r;
}

SnfResult snf(const ExactMatrix& m)
{
    return snf(to_integer(m, "snf input"));
}

LatticeBasis::LatticeBasis(std::size_t ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis))
{
    if (basis_.rows() != ambient_)
        throw InvalidInput("lattice basis has " + std::to_string(basis_.rows()) + " rows, ambient rank is " +
                           std::to_string(ambient_));
    auto h = hnf(basis_);
    if (h.rank != basis_.cols()) throw InvalidInput("lattice basis columns are dependent");
    canonical_ = h.h.columns(0, h.rank);
}

LatticeBasis LatticeBasis::spanned_by(const IntMatrix& generators)
{
    auto h = hnf(generators);
    return {generators.rows(), h.h.columns(0, h.rank)};
}

bool LatticeBasis::contains(const std::vector<Integer>& v) const
{
    return integer_solve(basis_, v).has_value();
}

bool LatticeBasis::contains(const LatticeBasis& other) const
{
    for (std::size_t j = 0; j < other.rank(); ++j)
        if (!contains(other.basis().column(j))) return false;
    return true;
}

IntMatrix clear_row_denominators(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational q = m(i, j) * Rational(l);
            out(i, j) = q.get_num();
        }
    }
    return out;
}

namespace {

IntMatrix clear_column_denominators(const RatMatrix& m)
{
    return clear_row_denominators(m.transpose()).transpose();
}

}  // namespace

IntMatrix saturated_basis(const RatMatrix& span)
{
    RatMatrix cb = column_basis(span);
    const std::size_t k = cb.cols();
    if (k == 0) return IntMatrix(span.rows(), 0);
    IntMatrix m = clear_column_denominators(cb);
    auto s = snf(m);
    auto uinv = inverse(to_rational(s.u));
    IntMatrix basis = to_integer(uinv->columns(0, k), "saturation basis");
    return hnf(basis).h.columns(0, k);
}

LatticeBasis saturate(const LatticeBasis& l)
{
    return {l.ambient(), saturated_basis(to_rational(l.basis()))};
}

Integer saturation_index(const LatticeBasis& l)
{
    Integer idx = 1;
    for (const auto& d : snf(l.basis()).divisors) idx *= d;
    return idx;
}

Integer lattice_index(const LatticeBasis& big, const LatticeBasis& small)
{
    if (big.rank() != small.rank()) throw InvalidInput("lattice_index: ranks differ");
    if (!big.contains(small)) throw InvalidInput("lattice_index: not a sublattice");
    RatMatrix coords = solve_columns(to_rational(big.basis()), to_rational(small.basis()));
    Rational det = determinant(coords);
    return abs(det.get_num());
}

std::optional<std::vector<Integer>> integer_solve(const IntMatrix& a, const std::vector<Integer>& b)
{
    if (b.size() != a.rows()) throw InvalidInput("integer_solve: right-hand side has wrong length");
    auto h = hnf(a);
    std::vector<Integer> y(a.cols(), Integer(0));
    std::vector<Integer> residual = b;
    std::size_t row = 0;
    for (std::size_t j = 0; j < h.rank; ++j) {
        while (row < a.rows() && sgn(h.h(row, j)) == 0) {
            if (sgn(residual[row]) != 0) return std::nullopt;
            ++row;
        }
        if (residual[row] % h.h(row, j) != 0) return std::nullopt;
        y[j] = residual[row] / h.h(row, j);
        for (std::size_t i = row; i < a.rows(); ++i) residual[i] -= y[j] * h.h(i, j);
        ++row;
    }
    for (const auto& r : residual)
        if (sgn(r) != 0) return std::nullopt;
    return h.u * y;
}

IntMatrix integer_kernel(const IntMatrix& a)
{
    auto h = hnf(a);
    return h.u.columns(h.rank, a.cols() - h.rank);
}

namespace {

std::int64_t radicand_of(const std::vector<Scalar>& v)
{
    std::int64_t d = 1;
    for (const auto& x : v)
        if (x.has_radical()) d = common_radicand(d, x.radicand());
    return d;
}

// Rational (deg*n) x k matrix of x |-> m x for rational x.
RatMatrix expand_rational_action(const ExactMatrix& m, std::int64_t d)
{
    const int deg = expansion_degree(d);
    RatMatrix e = expand_matrix(m, d);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(deg * j);
    return e.select_columns(cols);
}

std::optional<std::vector<Rational>> rational_solve(const RatMatrix& a, const std::vector<Rational>& b)
{
    return solve(a, b);
}

std::optional<std::vector<Rational>> integral_solve(const RatMatrix& a, const std::vector<Rational>& b)
{
    IntMatrix ab = clear_row_denominators(hcat(a, RatMatrix::column_vector(b)));
    auto x = integer_solve(ab.columns(0, a.cols()), ab.column(a.cols()));
    if (!x) return std::nullopt;
    std::vector<Rational> out;
    for (auto& v : *x) out.emplace_back(v);
    return out;
}

}  // namespace

std::optional<std::vector<Scalar>> solve_linear(const ExactMatrix& m, const std::vector<Scalar>& b, SolveMode mode)
{
    if (b.size() != m.rows())
        throw InvalidInput("solve_linear: matrix is " + m.shape() + " but right-hand side has length " +
                           std::to_string(b.size()));
    if (mode == SolveMode::field) return solve(m, b);
    const std::int64_t d = common_radicand(common_radicand(m), radicand_of(b));
    RatMatrix a = expand_rational_action(m, d);
    std::vector<Rational> rhs = expand_vector(b, d);
    auto x = mode == SolveMode::integer ? integral_solve(a, rhs) : rational_solve(a, rhs);
    if (!x) return std::nullopt;
    return std::vector<Scalar>(x->begin(), x->end());
}

ExactMatrix subspace_ops(const ExactMatrix& a, const ExactMatrix& b, SubspaceOp op)
{
    switch (op) {
    case SubspaceOp::sum: return subspace_sum(a, b);
    case SubspaceOp::intersect: return subspace_intersection(a, b);
    case SubspaceOp::kernel_of: return kernel(a);
    case SubspaceOp::image_of: return column_basis(a);
    }
    return {};
}

namespace {

// Rows cutting out the Q-span of the expanded subspace.
RatMatrix subspace_equations(const ExactMatrix& subspace, std::size_t n, std::int64_t d)
{
    const int deg = expansion_degree(d);
    if (subspace.cols() == 0) return RatMatrix::identity(deg * n);
    return left_annihilator(expand_matrix(subspace, d));
}

}  // namespace

Membership subgroup_member(const std::vector<Scalar>& v, const ExactMatrix& subspace, const RatMatrix& lattice,
                           MembershipMode mode)
{
    const std::size_t n = v.size();
    if (subspace.rows() != n || lattice.rows() != n)
        throw InvalidInput("subgroup_member: ambient dimensions disagree");
    const std::int64_t d = common_radicand(common_radicand(subspace), radicand_of(v));
    RatMatrix q = subspace_equations(subspace, n, d);
    RatMatrix el = embed_rational(lattice, d);
    std::vector<Rational> ev = expand_vector(v, d);
    RatMatrix a = q * el;
    std::vector<Rational> rhs = q * ev;

    std::optional<std::vector<Rational>> coeffs;
    if (lattice.cols() == 0) {
        bool zero = std::all_of(rhs.begin(), rhs.end(), [](const Rational& r) { return sgn(r) == 0; });
        if (zero) coeffs = std::vector<Rational>{};
    } else {
        coeffs = mode == MembershipMode::strict ? integral_solve(a, rhs) : rational_solve(a, rhs);
    }
    Membership out;
    if (!coeffs) return out;
    out.inside = true;
    out.lattice_coefficients = *coeffs;
    std::vector<Rational> residual = ev;
    std::vector<Rational> shift = el * *coeffs;
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= shift[i];
    if (subspace.cols() == 0) return out;
    auto z = solve(expand_matrix(subspace, d), residual);
    if (!z) throw InconsistentData("subgroup_member: residual outside the subspace");
    out.subspace_coefficients = collapse_vector(*z, d);
    return out;
}

IntMatrix preimage_lattice(const ExactMatrix& values, const ExactMatrix& subspace, const RatMatrix& lattice,
                           MembershipMode mode)
{
    const std::size_t n = values.rows();
    const std::size_t r = values.cols();
    if (subspace.rows() != n || lattice.rows() != n)
        throw InvalidInput("preimage_lattice: ambient dimensions disagree");
    const std::int64_t d = common_radicand(common_radicand(subspace), common_radicand(values));
    RatMatrix q = subspace_equations(subspace, n, d);
    RatMatrix sys = hcat(q * expand_rational_action(values, d), -(q * embed_rational(lattice, d)));
    if (mode == MembershipMode::strict) {
        IntMatrix k = integer_kernel(clear_row_denominators(sys));
        return LatticeBasis::spanned_by(k.row_block(0, r)).basis();
    }
    RatMatrix k = kernel(sys);
    return saturated_basis(k.row_block(0, r));
}

QuotientFrame quotient_frame(const IntMatrix& saturated_sub)
{
    const std::size_t n = saturated_sub.rows();
    const std::size_t r = saturated_sub.cols();
    auto s = snf(saturated_sub);
    if (s.divisors.size() != r) throw InvalidInput("quotient_frame: sublattice basis is dependent");
    for (const auto& dv : s.divisors)
        if (dv != 1) throw InvalidInput("quotient_frame: sublattice is not saturated");
    auto uinv = inverse(to_rational(s.u));
    QuotientFrame f;
    f.projection = s.u.row_block(r, n - r);
    f.lifts = to_integer(uinv->columns(r, n - r), "quotient lifts");
    return f;
}

}  // namespace hodge1
