#pragma once

// Extension classes, intermediate-Jacobian tori and Hodge 1-motives.

#include <optional>
#include <string>
#include <vector>

#include "hodge1/mhs.hpp"

namespace hodge1 {

/// The compact torus C^m / (F + Z^m).
struct TorusPresentation {
    std::size_t rank = 0;  // lattice rank m
    ExactMatrix hodge;     // m x (m/2): the subspace F
    bool level_one = false;  // the lattice carries types (p-1,p), (p,p-1) only
    std::string provenance;

    std::size_t dimension() const { return hodge.cols(); }
    friend bool operator==(const TorusPresentation&, const TorusPresentation&) = default;
};

/// Checks F ∩ conj(F) = 0 and 2 dim F = m; throws InvalidInput otherwise.
TorusPresentation make_torus(ExactMatrix hodge, bool level_one, std::string provenance);
TorusPresentation zero_torus();

struct TorusPoint {
    std::vector<Scalar> rep;
    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

TorusPoint zero_point(const TorusPresentation& t);
TorusPoint operator+(const TorusPoint& a, const TorusPoint& b);
TorusPoint operator-(const TorusPoint& a, const TorusPoint& b);
TorusPoint scale(const TorusPoint& a, const Rational& c);

/// Equality in C^m / (F + Z^m).
bool same_point(const TorusPresentation& t, const TorusPoint& a, const TorusPoint& b);
bool is_zero_point(const TorusPresentation& t, const TorusPoint& a);
bool is_torsion_point(const TorusPresentation& t, const TorusPoint& a);

/// Least n >= 1 with n v = 0, or nullopt when v has infinite order.
std::optional<Integer> point_order(const TorusPresentation& t, const TorusPoint& v);

TorusPresentation jacobian_torus(const MixedHodgeStructure& h, int p);

/// Coordinates shared by extension class computations at level p.
struct ExtensionFrames {
    int p = 0;
    Subquotient even;     // gr^W_2p
    Subquotient odd;      // gr^W_{2p-1}
    IntMatrix classes;    // basis of H^{p,p}_Z in gr^W_2p coordinates
    ExactMatrix hodge_w2p;  // F^p ∩ W_2p in H coordinates
    RatMatrix weight_odd;   // W_{2p-1} in H coordinates
    TorusPresentation torus;
};

ExtensionFrames extension_frames(const MixedHodgeStructure& h, int p);

/// e^p of a class x (gr^W_2p coordinates) using the given integral lift
/// x_z ∈ W_2p ∩ Z^n and Hodge lift x_f ∈ F^p ∩ W_2p.  Throws InvalidInput
/// when a lift does not map to x.
TorusPoint extension_value(const ExtensionFrames& f, const std::vector<Integer>& x, const std::vector<Integer>& x_z,
                           const std::vector<Scalar>& x_f);
/// e^p of x with canonical lifts.
TorusPoint extension_value(const ExtensionFrames& f, const std::vector<Integer>& x);
/// Some Hodge lift of x; throws InconsistentData when none exists.
std::vector<Scalar> hodge_lift(const ExtensionFrames& f, const std::vector<Integer>& x);

struct ClassTable {
    IntMatrix classes;               // basis of the source lattice, gr^W_2p coordinates
    std::vector<TorusPoint> values;  // one value per column of `classes`
    TorusPresentation torus;

    /// Values as columns of an m x r matrix.
    ExactMatrix value_matrix() const;
};

ClassTable extension_class(const MixedHodgeStructure& h, int p);

/// Lattice {x : e^p(x) = 0} in the coordinates of table.classes.
IntMatrix extension_kernel(const ClassTable& table, MembershipMode mode);

struct AbelianPart {
    IntMatrix lattice;        // H_a as a saturated sublattice of gr^W_{2p-1} (columns)
    TorusPresentation torus;  // A in the coordinates of `lattice`
    ExactMatrix hodge_in_ambient;  // F^p ∩ span(lattice) in gr^W_{2p-1} coordinates
};

/// Largest sub-Hodge structure of gr^W_{2p-1} of types (p-1,p), (p,p-1).
AbelianPart abelian_part(const MixedHodgeStructure& h, int p);

/// [Z^r → A] with A abelian; values[j] is the image of the j-th basis vector.
struct OneMotive {
    std::size_t lattice_rank = 0;
    TorusPresentation abelian;
    std::vector<TorusPoint> values;
    std::size_t torus_part_rank = 0;  // rank of a multiplicative part; only 0 is supported
    friend bool operator==(const OneMotive&, const OneMotive&) = default;
};

struct HodgeMotive {
    OneMotive motive;
    MembershipMode mode = MembershipMode::isogeny;
    IntMatrix lattice;         // basis of H^p(H) in coordinates of table.classes
    ClassTable table;
    AbelianPart abelian;
    LatticeBasis hodge_lattice;  // F^p ∩ H_Z
    IntMatrix h_prime;         // H' ⊆ Z^n
    IntMatrix h_double_prime;  // H'' ⊆ Z^n
    IntMatrix h_hodge;         // lattice of H^h ⊆ Z^n
    MixedHodgeStructure h_e;   // H'' / W_{2p-2}
    MixedHodgeStructure h_h;   // H^h / W_{2p-2}
    IntMatrix h_e_lifts;       // H^e coordinates -> Z^n
};

HodgeMotive hodge_motive(const MixedHodgeStructure& h, int p, MembershipMode mode = MembershipMode::isogeny);

/// H = L_A ⊕ Z^r with W_{2p-1} = L_A and F^p spanned by F^p(A) and the b_j + v_j,
/// v_j the columns of `values` (representatives in A's coordinates).
MixedHodgeStructure assemble_two_step(const PureHodgeStructure& a, std::size_t r, const ExactMatrix& values, int p);

/// Pure structure of weight 2p-1 whose F^p is the torus subspace.
PureHodgeStructure torus_hodge_structure(const TorusPresentation& t, int p);

MixedHodgeStructure realize_one_motive(const OneMotive& m, int p);

/// Rational maps between two 1-motives: lattice (r2 x r1) and torus lattices (m2 x m1).
struct MotiveMap {
    RatMatrix lattice;
    RatMatrix torus;
};

/// True when `map` is invertible, carries F into F and is compatible with u up to torsion.
bool is_isogeny(const OneMotive& a, const OneMotive& b, const MotiveMap& map);

}  // namespace hodge1
