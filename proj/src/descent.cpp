#include "hodge1/descent.hpp"

#include "hodge1/errors.hpp"

namespace hodge1 {

namespace {

std::string deg(int i) { return std::to_string(i); }

std::size_t rank_at(const GluingSpec& g, int t, bool of_y)
{
    auto it = g.degrees.find(t);
    if (it == g.degrees.end()) return 0;
    return of_y ? it->second.y.rank() : it->second.z.rank();
}

IntMatrix swap_halves(std::size_t half)
{
    IntMatrix s(2 * half, 2 * half);
    for (std::size_t k = 0; k < half; ++k) {
        s(k, half + k) = 1;
        s(half + k, k) = 1;
    }
    return s;
}

}  // namespace

void require_gluing(const GluingSpec& g)
{
    for (const auto& [t, piece] : g.degrees) {
        if (piece.y.weight() != t || piece.z.weight() != t)
            throw InvalidInput("degree " + deg(t) + ": H^t(Y) has weight " + deg(piece.y.weight()) + " and H^t(Z) weight " +
                               deg(piece.z.weight()) + ", both must equal " + deg(t));
        require_valid(piece.y.mhs(), "H^" + deg(t) + "(Y)");
        require_valid(piece.z.mhs(), "H^" + deg(t) + "(Z)");
        const IntMatrix& r = piece.restriction;
        if (r.rows() != piece.z.rank() || r.cols() != piece.y.rank())
            throw InvalidInput("degree " + deg(t) + ": restriction is " + r.shape() + ", expected " +
                               std::to_string(piece.z.rank()) + "x" + std::to_string(piece.y.rank()));
        if (!check_morphism({piece.y.mhs(), piece.z.mhs(), r}).compatible())
            throw InvalidInput("degree " + deg(t) + ": restriction is not a morphism of Hodge structures");
    }
    if (g.cycles) {
        const CycleGluing& c = *g.cycles;
        const int t = 2 * c.p;
        if (!g.degrees.count(t)) throw InvalidInput("cycle data for p = " + deg(c.p) + " need H^" + deg(t) + " of the pieces");
        const std::size_t ny = c.class_y.cols(), nz = c.class_z.cols();
        if (c.class_y.rows() != rank_at(g, t, true) || c.class_z.rows() != rank_at(g, t, false))
            throw InvalidInput("cycle classes do not land in H^" + deg(t) + " of the pieces");
        if (c.ns_restriction.rows() != nz || c.ns_restriction.cols() != ny)
            throw InvalidInput("cycle restriction is " + c.ns_restriction.shape() + ", expected " + std::to_string(nz) + "x" +
                               std::to_string(ny));
        if (c.abel_jacobi.size() != ny)
            throw InvalidInput("expected " + std::to_string(ny) + " Abel-Jacobi values, got " +
                               std::to_string(c.abel_jacobi.size()));
        const std::size_t m = rank_at(g, t - 1, false);
        for (const auto& v : c.abel_jacobi)
            if (v.rep.size() != m)
                throw InvalidInput("Abel-Jacobi values need " + std::to_string(m) + " coordinates in H^" + deg(t - 1) + "(Z)");
    }
    if (g.extension) {
        const ExtensionData& e = *g.extension;
        const int t = 2 * e.p;
        if (e.classes.rows() != 2 * rank_at(g, t, true))
            throw InvalidInput("extension classes need " + std::to_string(2 * rank_at(g, t, true)) +
                               " coordinates in H^" + deg(t) + "(Y) ⊕ H^" + deg(t) + "(Y)");
        if (e.values.size() != e.classes.cols())
            throw InvalidInput("extension table has " + std::to_string(e.classes.cols()) + " classes and " +
                               std::to_string(e.values.size()) + " values");
        const std::size_t m = rank_at(g, t - 1, false);
        for (const auto& v : e.values)
            if (v.size() != m)
                throw InvalidInput("extension values need " + std::to_string(m) + " coordinates in H^" + deg(t - 1) + "(Z)");
    }
}

SimplicialCohomologyDatum cech_two_gluing(const GluingSpec& g)
{
    require_gluing(g);
    SimplicialCohomologyDatum d;
    d.components = 2;
    d.notes = g.notes;
    for (const auto& [t, piece] : g.degrees) {
        const std::size_t ry = piece.y.rank(), rz = piece.z.rank();
        d.cohomology[t] = {PureHodgeStructure(direct_sum(piece.y.mhs(), piece.y.mhs()), t), piece.z};
        d.faces[t] = {{hcat(piece.restriction, IntMatrix(rz, ry)), hcat(IntMatrix(rz, ry), piece.restriction)}};
    }
    if (g.cycles) {
        const CycleGluing& c = *g.cycles;
        const std::size_t ny = c.class_y.cols(), nz = c.class_z.cols();
        CycleData cd;
        cd.p = c.p;
        cd.ns_ranks = {2 * ny, nz};
        cd.ns_faces = {{hcat(c.ns_restriction, IntMatrix(nz, ny)), hcat(IntMatrix(nz, ny), c.ns_restriction)}};
        cd.cycle_class = {block_diagonal(c.class_y, c.class_y), c.class_z};
        TorusPoint zero{std::vector<Scalar>(rank_at(g, 2 * c.p - 1, false), Scalar(0))};
        std::vector<TorusPoint> first = c.abel_jacobi, second(ny, zero);
        first.insert(first.end(), ny, zero);
        second.insert(second.end(), c.abel_jacobi.begin(), c.abel_jacobi.end());
        cd.abel_jacobi = {{first, second}};
        d.cycles = cd;
    }
    require_datum(d);
    return d;
}

AnalysisBundle mv_cohomology(const GluingSpec& g, int n, int p, MembershipMode mode)
{
    for (int t : {n - 1, n})
        if (!g.degrees.count(t))
            throw UnsupportedInput("H^" + deg(n) + " of the gluing needs H^" + deg(t) + " of both pieces, which is missing");
    const SimplicialCohomologyDatum d = cech_two_gluing(g);
    AnalysisBundle out;
    out.n = n;
    out.p = p;
    out.notes = g.notes;
    for (int t : {n - 1, n}) {
        PureHodgeStructure piece = weight_graded(d, t, n - t);
        if (piece.rank() > 0) out.graded.emplace(t, piece);
    }
    std::optional<MixedHodgeStructure> full;
    if (auto it = g.full.find(n); it != g.full.end()) full = it->second;
    out.degeneration = degeneration_guard(d, n, full);
    if (n != 2 * p) {
        out.notes.push_back("no extension analysis: a two-piece gluing has both gr^W_" + deg(2 * p - 1) + " and gr^W_" +
                            deg(2 * p) + " only in degree " + deg(2 * p));
        return out;
    }

    const PureHodgeStructure odd = weight_graded(d, 2 * p - 1, 1);
    const MHSCohomology even = cohomology_frame(row_complex(d, 2 * p), 0);
    const LatticeBasis hodge = hodge_classes(even.frame.mhs, p);
    out.full_hodge_classes = hodge.rank();
    const TorusCohomology tc = torus_cohomology(d, p, 0);

    ClassTable table;
    table.torus = tc.torus;
    if (g.extension) {
        const ExtensionData& e = *g.extension;
        if (e.p != p)
            throw UnsupportedInput("the extension table is given for p = " + deg(e.p) + ", not p = " + deg(p));
        const IntMatrix s = row_complex(d, 2 * p).differentials.at(0);
        if (!(s * e.classes).is_zero()) throw InvalidInput("extension classes are not in the kernel of i*a - i*b");
        table.classes = to_integer(even.frame.projection * to_rational(e.classes), "extension classes");
        for (std::size_t j = 0; j < table.classes.cols(); ++j)
            if (!hodge.contains(table.classes.column(j)))
                throw InvalidInput("extension class " + std::to_string(j) + " is not a Hodge class");
        if (rank(table.classes) != hodge.rank())
            throw InvalidInput("extension classes have rank " + std::to_string(rank(table.classes)) +
                               ", the Hodge classes rank " + std::to_string(hodge.rank()));
        for (const auto& v : e.values) table.values.push_back(project_torus_point(tc, v));
    } else {
        if (odd.rank() > 0 && hodge.rank() > 0)
            throw UnsupportedInput("H^" + deg(n) + " has both gr^W_" + deg(2 * p - 1) + " and Hodge classes in gr^W_" +
                                   deg(2 * p) + "; the Abel-Jacobi extension table (extension values in H^" +
                                   deg(2 * p - 1) + "(Z)) is missing");
        table.classes = hodge.basis();
        table.values.assign(table.classes.cols(), zero_point(tc.torus));
    }

    out.h_e = assemble_two_step(odd, table.classes.cols(), table.value_matrix(), p);
    out.motive = hodge_motive(*out.h_e, p, mode);
    out.motive_classes = even.frame.lifts * table.classes * out.motive->lattice;
    out.table = table;
    if (g.cycles && g.cycles->p == p) out.square = motivic_square_check(d, p, 0, table);
    return out;
}

namespace {

PureHodgeStructure tate_piece(int p, std::size_t r) { return {tate(-p, r), 2 * p}; }

/// Weight 2p-1 structure of types (2p-1, 0) + (0, 2p-1) with F^{2p-1} = span(1, tau).
PureHodgeStructure extremal_pair(int p, const Scalar& tau)
{
    const int w = 2 * p - 1;
    MixedHodgeStructure h(2, {{w, RatMatrix::identity(2)}},
                          {{0, ExactMatrix::identity(2)}, {w, ExactMatrix{{Scalar(1)}, {tau}}}});
    return {h, w};
}

GluingSpec bloch()
{
    GluingSpec g;
    g.name = "bloch";
    g.degrees[3] = {PureHodgeStructure::zero(3), PureHodgeStructure::zero(3), IntMatrix(0, 0)};
    g.degrees[4] = {tate_piece(2, 2), tate_piece(2, 1), IntMatrix{{4, -1}}};
    CycleGluing c;
    c.p = 2;
    c.class_y = IntMatrix::identity(2);
    c.class_z = IntMatrix::identity(1);
    c.ns_restriction = IntMatrix{{4, -1}};
    c.abel_jacobi = {TorusPoint{}, TorusPoint{}};
    g.cycles = c;
    g.notes = {
        "P: H^4 of rank 2 spanned by the hyperplane class and a surface class; S: H^4 of rank 1",
        "restriction row (4, -1) is a chosen nonzero row; every nonzero row gives the same ranks",
        "Chow-level annotation: the image of the cycle group of X has rank 2, strictly smaller than H^4(X); "
        "carried as a note, never computed"};
    return g;
}

GluingSpec srinivas()
{
    GluingSpec g;
    g.name = "srinivas";
    g.degrees[3] = {PureHodgeStructure::zero(3), extremal_pair(2, Scalar::imaginary_unit()), IntMatrix(2, 0)};
    g.degrees[4] = {tate_piece(2, 2), tate_piece(2, 1), IntMatrix{{1, 0}}};
    const Scalar t = Scalar::sqrt_of(2);
    CycleGluing c;
    c.p = 2;
    c.class_y = IntMatrix::identity(2);
    c.class_z = IntMatrix::identity(1);
    c.ns_restriction = IntMatrix{{1, 0}};
    c.abel_jacobi = {TorusPoint{{Scalar(0), Scalar(0)}}, TorusPoint{{t, Scalar(0)}}};
    g.cycles = c;
    ExtensionData e;
    e.p = 2;
    e.classes = IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    e.values = {{t, Scalar(0)}, {-t, Scalar(0)}, {Scalar(0), Scalar(0)}};
    g.extension = e;
    g.notes = {
        "Y: H^4 = Z(-2)^2 spanned by h and the primitive class a with i*a = 0; H^3(Y) = 0",
        "Z: H^3 of types (3,0) + (0,3) with F^3 = span(1, i); H^4(Z) = Z(-2)",
        "cycle lattices taken modulo homological equivalence, so the primitive cycle restricts to zero",
        "extension classes: a on the first copy, a on the second copy, the diagonal h; values (t, -t, 0), t = (sqrt 2, 0)"};
    return g;
}

}  // namespace

GluingSpec builtin_fixture(const std::string& name)
{
    if (name == "bloch") return bloch();
    if (name == "srinivas") return srinivas();
    throw InvalidInput("unknown fixture '" + name + "' (known: bloch, srinivas)");
}

std::vector<std::string> builtin_fixture_names() { return {"bloch", "srinivas"}; }

GluingSpec swap_copies(const GluingSpec& g)
{
    GluingSpec out = g;
    if (out.extension) {
        ExtensionData& e = *out.extension;
        e.classes = swap_halves(e.classes.rows() / 2) * e.classes;
        for (auto& v : e.values)
            for (auto& x : v) x = -x;
    }
    return out;
}

}  // namespace hodge1
