#pragma once

// Cochain complexes of lattices and of mixed Hodge structures, row complexes
// of simplicial cohomology data, connecting maps, and the comparison of the
// cycle-theoretic boundary map with the extension class.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge1/motive.hpp"

namespace hodge1 {

/// Free abelian groups Z^{ranks[k]} in degrees first + k, with
/// differentials[k] : degree first+k -> first+k+1.
struct LatticeComplex {
    int first = 0;
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> differentials;  // ranks.size() - 1 entries

    int last() const { return first + static_cast<int>(ranks.size()) - 1; }
    std::size_t rank(int i) const;
    /// Zero matrix of the right shape outside the stored range.
    IntMatrix differential(int i) const;
    friend bool operator==(const LatticeComplex&, const LatticeComplex&) = default;
};

/// Throws InvalidInput on shape mismatches or d∘d != 0, naming the degree.
void require_complex(const LatticeComplex& c);

/// H^i modulo torsion: cycles / saturation of the boundaries.
struct CohomologyFrame {
    IntMatrix cycles;       // saturated kernel of d^i, columns in Z^{rank i}
    IntMatrix boundaries;   // saturated image of d^{i-1}
    IntMatrix lifts;        // class coordinates -> cycles
    RatMatrix projection;   // reads class coordinates off vectors in span(cycles)
    std::vector<Integer> torsion;  // elementary divisors > 1 of the boundaries

    std::size_t rank() const { return lifts.cols(); }
};

CohomologyFrame lattice_cohomology(const LatticeComplex& c, int i);

struct EulerCheck {
    long from_terms = 0;
    long from_cohomology = 0;
    bool holds() const { return from_terms == from_cohomology; }
};

EulerCheck euler_characteristic(const LatticeComplex& c);

struct MHSComplex {
    int first = 0;
    std::vector<MixedHodgeStructure> terms;
    std::vector<IntMatrix> differentials;

    int last() const { return first + static_cast<int>(terms.size()) - 1; }
    MixedHodgeStructure term(int i) const;
    LatticeComplex lattices() const;
    friend bool operator==(const MHSComplex&, const MHSComplex&) = default;
};

/// d∘d = 0 and every differential is a strict morphism; throws InvalidInput.
void require_complex(const MHSComplex& c);

struct MHSCohomology {
    Subquotient frame;  // subquotient of the degree-i term
    std::vector<Integer> torsion;
};

MHSCohomology cohomology_frame(const MHSComplex& c, int i);
MixedHodgeStructure cohomology_mhs(const MHSComplex& c, int i);

/// Annotation carrying cycles: per component s a lattice NS_s, face maps on
/// it, cycle classes into H^{2p}(X_s), and the Abel–Jacobi corrections
/// abel_jacobi[s][k][j] = AJ(∂^k lift(x_j)) - lift(∂^k x_j) in the torus of
/// H^{2p-1}(X_{s+1}), x_j the basis of NS_s.
struct CycleData {
    int p = 0;
    std::vector<std::size_t> ns_ranks;
    std::vector<std::vector<IntMatrix>> ns_faces;   // [s][k] : NS_s -> NS_{s+1}
    std::vector<IntMatrix> cycle_class;             // [s] : NS_s -> H^{2p}(X_s)
    std::vector<std::vector<std::vector<TorusPoint>>> abel_jacobi;
    friend bool operator==(const CycleData&, const CycleData&) = default;
};

/// E_1 data of a simplicial space: pure structures H^t(X_s) of weight t and
/// face pullbacks faces[t][s][k] : H^t(X_s) -> H^t(X_{s+1}), 0 <= k <= s+1.
struct SimplicialCohomologyDatum {
    std::size_t components = 0;  // S + 1
    std::map<int, std::vector<PureHodgeStructure>> cohomology;
    std::map<int, std::vector<std::vector<IntMatrix>>> faces;
    std::optional<CycleData> cycles;
    std::vector<std::string> notes;  // coniveau and other annotations, carried verbatim
    friend bool operator==(const SimplicialCohomologyDatum&, const SimplicialCohomologyDatum&) = default;
};

/// Checks shapes, weights, that faces are morphisms, and the cosimplicial
/// identities ∂^j ∂^i = ∂^i ∂^{j-1} (i < j); the error names (t, s, i, j).
void require_datum(const SimplicialCohomologyDatum& d);

/// Differential Σ_k (-1)^k faces[s][k].
IntMatrix alternating_sum(const std::vector<IntMatrix>& faces, std::size_t rows, std::size_t cols);

MHSComplex row_complex(const SimplicialCohomologyDatum& d, int t);
/// gr^W_t H^{t+i}(X) = H^i of the row complex at t; checked to be pure of weight t.
PureHodgeStructure weight_graded(const SimplicialCohomologyDatum& d, int t, int i);

struct DegenerationReport {
    int degree = 0;
    std::map<int, std::size_t> graded_ranks;  // weight t -> rank gr^W_t H^n
    bool pure = true;
    std::optional<std::size_t> full_rank;
    bool ranks_match = true;
    std::vector<std::string> issues;
    bool ok() const { return pure && ranks_match; }
};

/// Purity of every weight-graded piece of H^n and, when the full H^n is
/// supplied, agreement of the ranks weight by weight and in total.
DegenerationReport degeneration_guard(const SimplicialCohomologyDatum& d, int n,
                                      const std::optional<MixedHodgeStructure>& full = std::nullopt);

/// 0 -> A -> B -> C -> 0 degreewise, all three on the same degree range.
struct LatticeSES {
    LatticeComplex a, b, c;
    std::vector<IntMatrix> f;  // A^k -> B^k
    std::vector<IntMatrix> g;  // B^k -> C^k
};

/// Chain maps, injectivity of f, surjectivity of g and ker g = im f over Z;
/// throws InvalidInput naming the degree.
void require_ses(const LatticeSES& s);

/// Snake-lemma map H^i(C) -> H^{i+1}(A) in cohomology-frame coordinates.
IntMatrix connecting_map(const LatticeSES& s, int i);

/// Map induced on H^i (frame coordinates) by a chain map given per degree.
IntMatrix induced_map(const LatticeComplex& src, const LatticeComplex& dst, const std::vector<IntMatrix>& maps, int i);

struct LongExactReport {
    bool exact = true;
    std::vector<std::string> issues;
};

/// ... H^i(A) -> H^i(B) -> H^i(C) -> H^{i+1}(A) ... checked for zero
/// composites and matching ranks at every slot (modulo torsion).
LongExactReport long_exact_sequence(const LatticeSES& s);

/// The torus H^{i+1} of the J^p complex with its frame in the row complex at 2p-1.
struct TorusCohomology {
    int p = 0;
    int degree = 0;  // i + 1
    MHSComplex row;  // row complex at weight 2p-1
    MHSCohomology cohomology;
    TorusPresentation torus;
};

TorusCohomology torus_cohomology(const SimplicialCohomologyDatum& d, int p, int i);

/// Projects a point of the degree-(i+1) torus to H^{i+1} of the torus complex,
/// first moving it into the cycles modulo F and rational vectors.
TorusPoint project_torus_point(const TorusCohomology& tc, const std::vector<Scalar>& v);

struct BoundaryTable {
    IntMatrix cocycles;  // basis of H^i(NS) (free part) as cocycles in NS_i
    std::vector<TorusPoint> values;
    TorusPresentation torus;
    std::size_t image_rank = 0;
};

/// λ^i: H^i(NS^•) -> H^{i+1}(J^•), computed up to isogeny.
BoundaryTable extension_connecting(const SimplicialCohomologyDatum& d, int p, int i);

struct SquareReport {
    bool commutes = true;
    std::vector<std::string> witnesses;
    std::size_t kernel_rank_boundary = 0;   // rank of ker λ
    std::size_t kernel_rank_extension = 0;  // rank of ker (e^p ∘ cycle class)
    BoundaryTable boundary;
};

/// Evaluates λ followed by the inclusion, and the cycle class followed by e^p
/// of the two-step structure assembled from `extension` (classes in the
/// H^i-frame of the row at 2p, values in the torus frame), on each basis cocycle.
SquareReport motivic_square_check(const SimplicialCohomologyDatum& d, int p, int i, const ClassTable& extension);

}  // namespace hodge1
