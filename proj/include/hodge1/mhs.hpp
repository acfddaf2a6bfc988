#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodge1/lattice.hpp"

namespace hodge1 {

/// One jump of the weight filtration: the columns span W_weight ⊆ Q^n.
struct WeightStep {
    int weight = 0;
    RatMatrix basis;
    friend bool operator==(const WeightStep&, const WeightStep&) = default;
};

/// One jump of the Hodge filtration: the columns span F^level ⊆ K^n, K = Q(i, sqrt(d)).
struct HodgeStep {
    int level = 0;
    ExactMatrix basis;
    friend bool operator==(const HodgeStep&, const HodgeStep&) = default;
};

/// A finite-rank mixed Hodge structure (H_Z, W, F) with H_Z = Z^n.
///
/// Filtrations are stored as sorted jump lists.  W_k is the step with the
/// largest listed weight <= k (zero below the first step); F^p is the step
/// with the smallest listed level >= p (zero above the last step).  The
/// constructor only checks shapes; use validate_mhs for the axioms.
class MixedHodgeStructure {
public:
    MixedHodgeStructure() = default;
    MixedHodgeStructure(std::size_t rank, std::vector<WeightStep> weights, std::vector<HodgeStep> hodge);

    std::size_t rank() const { return rank_; }
    const std::vector<WeightStep>& weight_steps() const { return weights_; }
    const std::vector<HodgeStep>& hodge_steps() const { return hodge_; }

    RatMatrix weight_space(int k) const;
    ExactMatrix hodge_space(int p) const;
    std::vector<int> listed_weights() const;
    std::vector<int> listed_levels() const;
    /// Radicand used by the Hodge filtration (1 when purely Q(i)).
    std::int64_t radicand() const;

    friend bool operator==(const MixedHodgeStructure&, const MixedHodgeStructure&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<WeightStep> weights_;
    std::vector<HodgeStep> hodge_;
};

using MHS = MixedHodgeStructure;

/// A mixed Hodge structure whose weight filtration jumps exactly once.
class PureHodgeStructure {
public:
    PureHodgeStructure() = default;
    /// Throws InvalidInput if `h` has a second weight jump or a jump elsewhere.
    PureHodgeStructure(MixedHodgeStructure h, int weight);

    static PureHodgeStructure zero(int weight) { return {MixedHodgeStructure(0, {}, {}), weight}; }

    const MixedHodgeStructure& mhs() const { return mhs_; }
    int weight() const { return weight_; }
    std::size_t rank() const { return mhs_.rank(); }

    friend bool operator==(const PureHodgeStructure&, const PureHodgeStructure&) = default;

private:
    MixedHodgeStructure mhs_;
    int weight_ = 0;
};

using HodgeNumbers = std::map<std::pair<int, int>, std::size_t>;

struct WeightBookkeeping {
    int weight = 0;
    std::size_t graded_rank = 0;
    HodgeNumbers hodge_numbers;        // dim A^{p,q}, p + q = weight, zeros omitted
    std::size_t decomposition_rank = 0;  // rank of the union of the A^{p,q} bases
    bool direct = false;
    bool spans = false;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<WeightBookkeeping> weights;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate_mhs(const MixedHodgeStructure& h);
/// Throws InvalidInput listing the violations of `h`.
void require_valid(const MixedHodgeStructure& h, const std::string& what = "mixed Hodge structure");

HodgeNumbers hodge_numbers(const MixedHodgeStructure& h);

/// Induced structure on upper / lower for saturated lattices lower ⊆ upper ⊆ Z^n,
/// together with the coordinates used for it: `lifts` sends the quotient
/// basis into upper, `projection` reads quotient coordinates off vectors of
/// span(upper) and kills span(lower).
struct Subquotient {
    MixedHodgeStructure mhs;
    IntMatrix lifts;
    RatMatrix projection;
};

Subquotient subquotient(const MixedHodgeStructure& h, const IntMatrix& lower, const IntMatrix& upper);

/// W_k ∩ Z^n, saturated.
IntMatrix weight_lattice(const MixedHodgeStructure& h, int k);
/// gr^W_k with the frame relating it to H.
Subquotient graded_frame(const MixedHodgeStructure& h, int k);
PureHodgeStructure graded_piece(const MixedHodgeStructure& h, int k);

MixedHodgeStructure tate_twist(const MixedHodgeStructure& h, int m);
/// Z(m)^r: weight -2m, type (-m, -m).
MixedHodgeStructure tate(int m, std::size_t r = 1);
MixedHodgeStructure direct_sum(const MixedHodgeStructure& a, const MixedHodgeStructure& b);
/// The same structure read in the lattice coordinates y = g x (g unimodular).
MixedHodgeStructure change_basis(const MixedHodgeStructure& h, const IntMatrix& g);
/// Drops jumps that do not change the filtered space.
MixedHodgeStructure normalized(const MixedHodgeStructure& h);

struct TorsionQuotient {
    MixedHodgeStructure mhs;
    std::vector<Integer> torsion;  // elementary divisors > 1 of the relations
};

/// Z^n / relations modulo torsion, with filtrations pushed to the free quotient.
TorsionQuotient quotient_torsion(const MixedHodgeStructure& h, const IntMatrix& relations);

struct MHSMorphism {
    MixedHodgeStructure source;
    MixedHodgeStructure target;
    IntMatrix matrix;  // target.rank() x source.rank()
};

struct MorphismReport {
    bool shape_ok = true;
    bool weight_compatible = true;
    bool hodge_compatible = true;
    bool weight_strict = true;
    bool hodge_strict = true;
    std::vector<std::string> issues;
    bool compatible() const { return shape_ok && weight_compatible && hodge_compatible; }
    bool strict() const { return compatible() && weight_strict && hodge_strict; }
};

MorphismReport check_morphism(const MHSMorphism& f);

struct MorphismHomology {
    Subquotient kernel;
    Subquotient cokernel;
    std::size_t image_rank = 0;
};

/// Kernel and cokernel (modulo torsion) with induced filtrations.  Rejects
/// maps that are not filtered and strict.
MorphismHomology morphism_homology(const MHSMorphism& f);

/// F^p ∩ W_2p ∩ Z^n, i.e. Hom(Z(-p), H), as a saturated lattice.
LatticeBasis hodge_classes(const MixedHodgeStructure& h, int p);

std::string describe(const HodgeNumbers& h);

}  // namespace hodge1
