#pragma once

// Independent reference checks used to cross-examine library results.  They
// deliberately avoid quotient frames and A^{p,q} bases.

#include <algorithm>

#include "hodge1/mhs.hpp"

namespace oracle {

using namespace hodge1;

inline std::size_t dim_sum(const ExactMatrix& a, const ExactMatrix& b)
{
    return rank(hcat(a, b));
}

/// Opposedness on every weight via F^p ⊕ conj F^{k-p+1} = gr^W_k, computed
/// inside W_k modulo W_{k-1} by dimension counts.
inline bool opposed(const MixedHodgeStructure& h)
{
    int lo = 0, hi = 0;
    for (int p : h.listed_levels()) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    for (int k : h.listed_weights()) {
        ExactMatrix wk = to_exact(h.weight_space(k));
        ExactMatrix wk1 = to_exact(h.weight_space(k - 1));
        const std::size_t top = rank(wk), bottom = rank(wk1);
        if (top == bottom) continue;
        for (int p = lo - std::abs(k) - 3; p <= hi + std::abs(k) + 3; ++p) {
            ExactMatrix a = hcat(subspace_intersection(h.hodge_space(p), wk), wk1);
            ExactMatrix b = hcat(subspace_intersection(h.hodge_space(k - p + 1), wk).conj(), wk1);
            const std::size_t da = rank(a), db = rank(b), ds = dim_sum(a, b);
            if (ds != top) return false;
            if ((da - bottom) + (db - bottom) != top - bottom) return false;
        }
    }
    return true;
}

/// Filtration axioms checked directly from the jump lists.
inline bool well_nested(const MixedHodgeStructure& h)
{
    const auto& ws = h.weight_steps();
    for (std::size_t i = 0; i + 1 < ws.size(); ++i)
        if (ws[i].weight == ws[i + 1].weight || !span_contains(ws[i + 1].basis, ws[i].basis)) return false;
    const auto& fs = h.hodge_steps();
    for (std::size_t i = 0; i + 1 < fs.size(); ++i)
        if (fs[i].level == fs[i + 1].level || !span_contains(fs[i].basis, fs[i + 1].basis)) return false;
    if (h.rank() == 0) return true;
    if (ws.empty() || fs.empty()) return false;
    return rank(ws.back().basis) == h.rank() && rank(fs.front().basis) == h.rank();
}

inline bool valid(const MixedHodgeStructure& h) { return well_nested(h) && opposed(h); }

/// h^{p,q} via dim gr_F^p gr^W_{p+q}, without A^{p,q} bases.
inline HodgeNumbers hodge_numbers(const MixedHodgeStructure& h)
{
    HodgeNumbers out;
    int lo = 0, hi = 0;
    for (int p : h.listed_levels()) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    for (int k : h.listed_weights()) {
        ExactMatrix wk = to_exact(h.weight_space(k));
        ExactMatrix wk1 = to_exact(h.weight_space(k - 1));
        for (int p = lo - 1; p <= hi; ++p) {
            auto fp = rank(hcat(subspace_intersection(h.hodge_space(p), wk), wk1));
            auto fp1 = rank(hcat(subspace_intersection(h.hodge_space(p + 1), wk), wk1));
            if (fp > fp1) out[{p, k - p}] += fp - fp1;
        }
    }
    return out;
}

/// Determinant of an integer matrix.
inline Integer det_int(const IntMatrix& m)
{
    Rational d = determinant(to_rational(m));
    return d.get_num();
}

/// Column Hermite form: pivots positive, entries left of a pivot reduced into [0, pivot).
inline bool is_column_hnf(const IntMatrix& h, std::size_t rank)
{
    std::size_t row = 0;
    for (std::size_t c = 0; c < rank; ++c) {
        while (row < h.rows() && sgn(h(row, c)) == 0) ++row;
        if (row == h.rows() || sgn(h(row, c)) <= 0) return false;
        for (std::size_t k = 0; k < c; ++k)
            if (sgn(h(row, k)) < 0 || h(row, k) >= h(row, c)) return false;
        for (std::size_t k = c + 1; k < h.cols(); ++k)
            if (sgn(h(row, k)) != 0) return false;
        ++row;
    }
    for (std::size_t c = rank; c < h.cols(); ++c)
        for (std::size_t r = 0; r < h.rows(); ++r)
            if (sgn(h(r, c)) != 0) return false;
    return true;
}

}  // namespace oracle
