#pragma once

// Two-piece gluings X = Y ∪ Z (a pushout along Z -> Y), their Čech simplicial
// data, the analysis of H^n(X), and the two shipped fixtures.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge1/complexes.hpp"

namespace hodge1 {

struct GluingDegree {
    PureHodgeStructure y;     // H^t(Y)
    PureHodgeStructure z;     // H^t(Z)
    IntMatrix restriction;    // i* : H^t(Y) -> H^t(Z)
    friend bool operator==(const GluingDegree&, const GluingDegree&) = default;
};

/// Cycle lattices of both pieces in degree 2p with Abel–Jacobi corrections
/// of the restricted cycles: abel_jacobi[j] lies in H^{2p-1}(Z) coordinates.
struct CycleGluing {
    int p = 0;
    IntMatrix class_y;          // NS(Y) -> H^{2p}(Y)
    IntMatrix class_z;          // NS(Z) -> H^{2p}(Z)
    IntMatrix ns_restriction;   // NS(Y) -> NS(Z)
    std::vector<TorusPoint> abel_jacobi;  // one per basis vector of NS(Y)
    friend bool operator==(const CycleGluing&, const CycleGluing&) = default;
};

/// Extension table of H^{2p}(X): classes as columns in H^{2p}(Y) ⊕ H^{2p}(Y)
/// coordinates (cycles of the row at 2p), values in H^{2p-1}(Z) coordinates.
struct ExtensionData {
    int p = 0;
    IntMatrix classes;
    std::vector<std::vector<Scalar>> values;
    friend bool operator==(const ExtensionData&, const ExtensionData&) = default;
};

struct GluingSpec {
    std::string name;
    std::map<int, GluingDegree> degrees;
    std::optional<CycleGluing> cycles;
    std::optional<ExtensionData> extension;
    std::map<int, MixedHodgeStructure> full;  // independently known H^n(X), by n
    std::vector<std::string> notes;
    friend bool operator==(const GluingSpec&, const GluingSpec&) = default;
};

/// Weights, shapes and that every restriction is a morphism; throws InvalidInput.
void require_gluing(const GluingSpec& g);

/// X_0 = Y ⊔ Y, X_1 = Z with faces (a, b) -> i*a and (a, b) -> i*b, so the
/// row differential is s(a, b) = i*a - i*b.
SimplicialCohomologyDatum cech_two_gluing(const GluingSpec& g);

struct AnalysisBundle {
    int n = 0;
    int p = 0;
    std::map<int, PureHodgeStructure> graded;  // weight t -> gr^W_t H^n(X), non-zero pieces only
    std::size_t full_hodge_classes = 0;        // rank of the Hodge classes in gr^W_2p
    std::optional<ClassTable> table;           // frame coordinates of the rows
    std::optional<MixedHodgeStructure> h_e;
    std::optional<HodgeMotive> motive;
    IntMatrix motive_classes;                  // motive lattice in H^{2p}(Y)^2 coordinates
    std::optional<SquareReport> square;        // when cycle data are present
    DegenerationReport degeneration;
    std::vector<std::string> notes;
};

/// Weight-graded pieces of H^n(X) and, for n = 2p, the assembled H^e and its
/// Hodge 1-motive.  The extension table is required when gr^W_{2p-1} and
/// Hodge classes in gr^W_{2p} are both non-zero (UnsupportedInput otherwise).
AnalysisBundle mv_cohomology(const GluingSpec& g, int n, int p, MembershipMode mode = MembershipMode::isogeny);

/// "bloch" or "srinivas"; throws InvalidInput for anything else.
GluingSpec builtin_fixture(const std::string& name);
std::vector<std::string> builtin_fixture_names();

/// The same gluing with the two copies of Y exchanged: class coordinates swap
/// halves and the extension values change sign.
GluingSpec swap_copies(const GluingSpec& g);

}  // namespace hodge1
