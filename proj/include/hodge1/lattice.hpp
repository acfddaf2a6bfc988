#pragma once

// Integer lattice algebra: Hermite and Smith normal forms, saturation,
// integral solving, and the mixed field/lattice membership problems behind
// torus arithmetic.

#include <optional>
#include <vector>

#include "hodge1/linalg.hpp"

namespace hodge1 {

struct HnfResult {
    IntMatrix h;  // column Hermite normal form, h = m * u
    IntMatrix u;  // unimodular
    std::size_t rank = 0;
};

/// Column HNF: the first `rank` columns are in echelon form with positive
/// pivots, entries left of a pivot reduced into [0, pivot); the rest vanish.
HnfResult hnf(const IntMatrix& m);
HnfResult hnf(const ExactMatrix& m);

struct SnfResult {
    IntMatrix s;  // diagonal, s = u * m * v
    IntMatrix u;
    IntMatrix v;
    std::vector<Integer> divisors;  // non-zero diagonal entries, each dividing the next
};

SnfResult snf(const IntMatrix& m);
SnfResult snf(const ExactMatrix& m);

/// A free sublattice of Z^n given by independent integer columns.
class LatticeBasis {
public:
    LatticeBasis() = default;
    LatticeBasis(std::size_t ambient, IntMatrix basis);

    static LatticeBasis full(std::size_t n) { return {n, IntMatrix::identity(n)}; }
    static LatticeBasis zero(std::size_t n) { return {n, IntMatrix(n, 0)}; }
    /// Lattice generated by arbitrary (possibly dependent) integer columns.
    static LatticeBasis spanned_by(const IntMatrix& generators);

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    /// Hermite-reduced basis; equal lattices have equal canonical bases.
    const IntMatrix& canonical() const { return canonical_; }

    bool contains(const std::vector<Integer>& v) const;
    bool contains(const LatticeBasis& other) const;

    friend bool operator==(const LatticeBasis& a, const LatticeBasis& b)
    {
        return a.ambient_ == b.ambient_ && a.canonical_ == b.canonical_;
    }
    friend bool operator!=(const LatticeBasis& a, const LatticeBasis& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;
    IntMatrix canonical_;
};

/// (Q-span of L) ∩ Z^n.
LatticeBasis saturate(const LatticeBasis& l);
/// Index [saturate(L) : L], the product of the elementary divisors of L.
Integer saturation_index(const LatticeBasis& l);
/// Hermite-reduced basis of (span of the columns) ∩ Z^n for a rational spanning set.
IntMatrix saturated_basis(const RatMatrix& span);
/// Index [big : small] for lattices of equal rank with small ⊆ big.
Integer lattice_index(const LatticeBasis& big, const LatticeBasis& small);

std::optional<std::vector<Integer>> integer_solve(const IntMatrix& a, const std::vector<Integer>& b);
/// Basis of {x ∈ Z^n : a x = 0}; always saturated.
IntMatrix integer_kernel(const IntMatrix& a);
/// Multiplies each row by the lcm of its denominators.
IntMatrix clear_row_denominators(const RatMatrix& m);

enum class SolveMode { field, integer, rational };

/// Solves m x = b with x in the scalar field, in Q, or in Z.  Integral and
/// rational modes expand every coordinate over the Q-basis of the field.
std::optional<std::vector<Scalar>> solve_linear(const ExactMatrix& m, const std::vector<Scalar>& b,
                                                SolveMode mode);

enum class SubspaceOp { sum, intersect, kernel_of, image_of };

/// Field subspace algebra. kernel_of/image_of read `a` as a matrix and ignore `b`.
ExactMatrix subspace_ops(const ExactMatrix& a, const ExactMatrix& b, SubspaceOp op);

enum class MembershipMode { strict, isogeny };

struct Membership {
    bool inside = false;
    std::vector<Scalar> subspace_coefficients;
    std::vector<Rational> lattice_coefficients;
};

/// Decides v ∈ S + L with S the field span of `subspace` and L generated by
/// the columns of `lattice` (integer combinations when strict, rational when
/// isogeny).  Witness coefficients are filled in when inside.
Membership subgroup_member(const std::vector<Scalar>& v, const ExactMatrix& subspace, const RatMatrix& lattice,
                           MembershipMode mode);

/// Basis (columns in Z^r) of {x ∈ Z^r : values * x ∈ S + L} for the same
/// S + L as in subgroup_member.
IntMatrix preimage_lattice(const ExactMatrix& values, const ExactMatrix& subspace, const RatMatrix& lattice,
                           MembershipMode mode);

/// Coordinates for Z^n / sub with sub saturated: projection * sub = 0,
/// projection * lifts = identity, both integral.
struct QuotientFrame {
    IntMatrix projection;
    IntMatrix lifts;
};

QuotientFrame quotient_frame(const IntMatrix& saturated_sub);

}  // namespace hodge1
