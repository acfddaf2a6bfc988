#include "hodge1/complexes.hpp"

#include <sstream>

#include "hodge1/errors.hpp"

namespace hodge1 {

namespace {

std::string deg(int i) { return std::to_string(i); }

MixedHodgeStructure zero_structure() { return MixedHodgeStructure(0, {}, {}); }

bool in_range(int i, int first, std::size_t count)
{
    return i >= first && i < first + static_cast<int>(count);
}

std::size_t idx(int i, int first) { return static_cast<std::size_t>(i - first); }

}  // namespace

// ---- lattice complexes ---------------------------------------------------

std::size_t LatticeComplex::rank(int i) const
{
    return in_range(i, first, ranks.size()) ? ranks[idx(i, first)] : 0;
}

IntMatrix LatticeComplex::differential(int i) const
{
    if (in_range(i, first, differentials.size())) return differentials[idx(i, first)];
    return IntMatrix(rank(i + 1), rank(i));
}

void require_complex(const LatticeComplex& c)
{
    const std::size_t expected = c.ranks.empty() ? 0 : c.ranks.size() - 1;
    if (c.differentials.size() != expected)
        throw InvalidInput("complex has " + std::to_string(c.differentials.size()) + " differentials for " +
                           std::to_string(c.ranks.size()) + " terms");
    for (int i = c.first; i < c.last(); ++i) {
        const IntMatrix& d = c.differentials[idx(i, c.first)];
        if (d.rows() != c.rank(i + 1) || d.cols() != c.rank(i))
            throw InvalidInput("differential in degree " + deg(i) + " is " + d.shape() + ", expected " +
                               std::to_string(c.rank(i + 1)) + "x" + std::to_string(c.rank(i)));
    }
    for (int i = c.first; i + 1 < c.last(); ++i)
        if (!(c.differential(i + 1) * c.differential(i)).is_zero())
            throw InvalidInput("d∘d is not zero from degree " + deg(i) + " to degree " + deg(i + 2));
}

CohomologyFrame lattice_cohomology(const LatticeComplex& c, int i)
{
    const std::size_t n = c.rank(i);
    CohomologyFrame f;
    f.cycles = n == 0 ? IntMatrix(0, 0) : integer_kernel(c.differential(i));
    IntMatrix incoming = c.differential(i - 1);
    f.boundaries = saturated_basis(to_rational(incoming));
    if (incoming.rows() > 0 && incoming.cols() > 0)
        for (const auto& dv : snf(incoming).divisors)
            if (dv != 1) f.torsion.push_back(dv);
    if (f.cycles.cols() == 0) {
        f.lifts = IntMatrix(n, 0);
        f.projection = RatMatrix(0, n);
        return f;
    }
    RatMatrix cyc = to_rational(f.cycles);
    IntMatrix coords = to_integer(solve_columns(cyc, to_rational(f.boundaries)), "boundary coordinates");
    QuotientFrame qf = quotient_frame(coords);
    f.lifts = f.cycles * qf.lifts;
    f.projection = to_rational(qf.projection) * left_inverse(cyc);
    return f;
}

EulerCheck euler_characteristic(const LatticeComplex& c)
{
    EulerCheck e;
    for (int i = c.first; i <= c.last(); ++i) {
        long sign = (i % 2 == 0) ? 1 : -1;
        e.from_terms += sign * static_cast<long>(c.rank(i));
        e.from_cohomology += sign * static_cast<long>(lattice_cohomology(c, i).rank());
    }
    return e;
}

// ---- complexes of mixed Hodge structures ---------------------------------

MixedHodgeStructure MHSComplex::term(int i) const
{
    return in_range(i, first, terms.size()) ? terms[idx(i, first)] : zero_structure();
}

LatticeComplex MHSComplex::lattices() const
{
    LatticeComplex c;
    c.first = first;
    for (const auto& t : terms) c.ranks.push_back(t.rank());
    c.differentials = differentials;
    return c;
}

void require_complex(const MHSComplex& c)
{
    require_complex(c.lattices());
    for (int i = c.first; i <= c.last(); ++i) require_valid(c.term(i), "term in degree " + deg(i));
    for (int i = c.first; i < c.last(); ++i) {
        auto report = check_morphism({c.term(i), c.term(i + 1), c.differentials[idx(i, c.first)]});
        if (!report.strict()) {
            std::string msg = "differential in degree " + deg(i) + " is not a strict morphism of mixed Hodge structures";
            for (const auto& s : report.issues) msg += "; " + s;
            throw InvalidInput(msg);
        }
    }
}

MHSCohomology cohomology_frame(const MHSComplex& c, int i)
{
    require_complex(c);
    auto lc = lattice_cohomology(c.lattices(), i);
    MHSCohomology out;
    out.torsion = lc.torsion;
    MixedHodgeStructure term = c.term(i);
    if (term.rank() == 0) {
        out.frame.mhs = term;
        out.frame.lifts = IntMatrix(0, 0);
        out.frame.projection = RatMatrix(0, 0);
        return out;
    }
    out.frame = subquotient(term, lc.boundaries, lc.cycles);
    return out;
}

MixedHodgeStructure cohomology_mhs(const MHSComplex& c, int i) { return cohomology_frame(c, i).frame.mhs; }

// ---- simplicial data -----------------------------------------------------

namespace {

std::size_t term_rank(const SimplicialCohomologyDatum& d, int t, std::size_t s)
{
    auto it = d.cohomology.find(t);
    if (it == d.cohomology.end() || s >= it->second.size()) return 0;
    return it->second[s].rank();
}

MixedHodgeStructure term_of(const SimplicialCohomologyDatum& d, int t, std::size_t s)
{
    auto it = d.cohomology.find(t);
    if (it == d.cohomology.end() || s >= it->second.size()) return MixedHodgeStructure(0, {{t, RatMatrix(0, 0)}}, {});
    return it->second[s].mhs();
}

IntMatrix face_of(const SimplicialCohomologyDatum& d, int t, std::size_t s, std::size_t k)
{
    auto it = d.faces.find(t);
    if (it == d.faces.end()) return IntMatrix(term_rank(d, t, s + 1), term_rank(d, t, s));
    return it->second[s][k];
}

std::string where(int t, std::size_t s) { return "t = " + std::to_string(t) + ", s = " + std::to_string(s); }

/// Checks shapes of faces[s][k] : Z^{rank(s)} -> Z^{rank(s+1)} and the cosimplicial identities.
void check_faces(const std::vector<std::vector<IntMatrix>>& faces, const std::vector<std::size_t>& ranks,
                 const std::string& what)
{
    const std::size_t comps = ranks.size();
    if (faces.size() != (comps == 0 ? 0 : comps - 1))
        throw InvalidInput(what + ": expected face maps for " + std::to_string(comps == 0 ? 0 : comps - 1) +
                           " levels, got " + std::to_string(faces.size()));
    for (std::size_t s = 0; s < faces.size(); ++s) {
        if (faces[s].size() != s + 2)
            throw InvalidInput(what + ", s = " + std::to_string(s) + ": expected " + std::to_string(s + 2) +
                               " face maps, got " + std::to_string(faces[s].size()));
        for (std::size_t k = 0; k < faces[s].size(); ++k)
            if (faces[s][k].rows() != ranks[s + 1] || faces[s][k].cols() != ranks[s])
                throw InvalidInput(what + ", s = " + std::to_string(s) + ": face map " + std::to_string(k) + " is " +
                                   faces[s][k].shape() + ", expected " + std::to_string(ranks[s + 1]) + "x" +
                                   std::to_string(ranks[s]));
    }
    for (std::size_t s = 0; s + 1 < faces.size(); ++s)
        for (std::size_t j = 1; j <= s + 2; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (faces[s + 1][j] * faces[s][i] != faces[s + 1][i] * faces[s][j - 1])
                    throw InvalidInput(what + ", s = " + std::to_string(s) +
                                       ": face maps violate the cosimplicial identity for (i, j) = (" +
                                       std::to_string(i) + ", " + std::to_string(j) + ")");
}

}  // namespace

void require_datum(const SimplicialCohomologyDatum& d)
{
    if (d.components == 0) throw InvalidInput("simplicial datum has no components");
    for (const auto& [t, terms] : d.cohomology) {
        if (terms.size() != d.components)
            throw InvalidInput("degree " + deg(t) + " lists " + std::to_string(terms.size()) + " components, expected " +
                               std::to_string(d.components));
        std::vector<std::size_t> ranks;
        for (std::size_t s = 0; s < terms.size(); ++s) {
            if (terms[s].weight() != t)
                throw InvalidInput("H^" + deg(t) + "(X_" + std::to_string(s) + ") has weight " +
                                   deg(terms[s].weight()) + ", expected " + deg(t));
            require_valid(terms[s].mhs(), "H^" + deg(t) + "(X_" + std::to_string(s) + ")");
            ranks.push_back(terms[s].rank());
        }
        auto it = d.faces.find(t);
        if (it == d.faces.end()) {
            if (d.components > 1) throw InvalidInput("degree " + deg(t) + " has no face maps");
            continue;
        }
        check_faces(it->second, ranks, "degree " + deg(t));
        for (std::size_t s = 0; s + 1 < d.components; ++s)
            for (std::size_t k = 0; k < it->second[s].size(); ++k)
                if (!check_morphism({terms[s].mhs(), terms[s + 1].mhs(), it->second[s][k]}).compatible())
                    throw InvalidInput("face map " + std::to_string(k) + " at " + where(t, s) +
                                       " is not a morphism of Hodge structures");
    }
    for (const auto& [t, f] : d.faces)
        if (!d.cohomology.count(t)) throw InvalidInput("face maps given for degree " + deg(t) + " without cohomology");

    if (!d.cycles) return;
    const CycleData& c = *d.cycles;
    if (c.ns_ranks.size() != d.components)
        throw InvalidInput("cycle data list " + std::to_string(c.ns_ranks.size()) + " components, expected " +
                           std::to_string(d.components));
    check_faces(c.ns_faces, c.ns_ranks, "cycle lattices");
    if (c.cycle_class.size() != d.components || c.abel_jacobi.size() + 1 != d.components)
        throw InvalidInput("cycle data: cycle classes or Abel-Jacobi corrections have the wrong number of levels");
    const int even = 2 * c.p, odd = 2 * c.p - 1;
    for (std::size_t s = 0; s < d.components; ++s) {
        const IntMatrix& cl = c.cycle_class[s];
        if (cl.rows() != term_rank(d, even, s) || cl.cols() != c.ns_ranks[s])
            throw InvalidInput("cycle class map at s = " + std::to_string(s) + " is " + cl.shape() + ", expected " +
                               std::to_string(term_rank(d, even, s)) + "x" + std::to_string(c.ns_ranks[s]));
        RatMatrix classes = to_rational(cl);
        ExactMatrix hodge = term_of(d, even, s).hodge_space(c.p);
        if (!span_contains(hodge, to_exact(classes)))
            throw InvalidInput("cycle classes at s = " + std::to_string(s) + " are not Hodge classes of level " +
                               deg(c.p));
    }
    for (std::size_t s = 0; s + 1 < d.components; ++s) {
        for (std::size_t k = 0; k <= s + 1; ++k)
            if (c.cycle_class[s + 1] * c.ns_faces[s][k] != face_of(d, even, s, k) * c.cycle_class[s])
                throw InvalidInput("cycle class does not commute with face map " + std::to_string(k) + " at s = " +
                                   std::to_string(s));
        if (c.abel_jacobi[s].size() != s + 2)
            throw InvalidInput("Abel-Jacobi corrections at s = " + std::to_string(s) + " need " + std::to_string(s + 2) +
                               " face maps");
        for (std::size_t k = 0; k <= s + 1; ++k) {
            if (c.abel_jacobi[s][k].size() != c.ns_ranks[s])
                throw InvalidInput("Abel-Jacobi corrections at s = " + std::to_string(s) + ", face " +
                                   std::to_string(k) + " list " + std::to_string(c.abel_jacobi[s][k].size()) +
                                   " values for " + std::to_string(c.ns_ranks[s]) + " cycles");
            for (const auto& v : c.abel_jacobi[s][k])
                if (v.rep.size() != term_rank(d, odd, s + 1))
                    throw InvalidInput("Abel-Jacobi value at s = " + std::to_string(s) + " has " +
                                       std::to_string(v.rep.size()) + " coordinates, expected " +
                                       std::to_string(term_rank(d, odd, s + 1)));
        }
    }
}

IntMatrix alternating_sum(const std::vector<IntMatrix>& faces, std::size_t rows, std::size_t cols)
{
    IntMatrix out(rows, cols);
    for (std::size_t k = 0; k < faces.size(); ++k) {
        if (k % 2 == 0)
            out += faces[k];
        else
            out -= faces[k];
    }
    return out;
}

MHSComplex row_complex(const SimplicialCohomologyDatum& d, int t)
{
    require_datum(d);
    MHSComplex c;
    for (std::size_t s = 0; s < d.components; ++s) c.terms.push_back(term_of(d, t, s));
    auto it = d.faces.find(t);
    for (std::size_t s = 0; s + 1 < d.components; ++s) {
        const std::size_t rows = term_rank(d, t, s + 1), cols = term_rank(d, t, s);
        c.differentials.push_back(it == d.faces.end() ? IntMatrix(rows, cols) : alternating_sum(it->second[s], rows, cols));
    }
    return c;
}

PureHodgeStructure weight_graded(const SimplicialCohomologyDatum& d, int t, int i)
{
    MixedHodgeStructure h = cohomology_mhs(row_complex(d, t), i);
    if (h.rank() == 0) return PureHodgeStructure::zero(t);
    try {
        return PureHodgeStructure(h, t);
    } catch (const InvalidInput& e) {
        throw InconsistentData("H^" + deg(i) + " of the weight-" + deg(t) + " row is not pure of weight " + deg(t) +
                               ": " + e.what());
    }
}

DegenerationReport degeneration_guard(const SimplicialCohomologyDatum& d, int n,
                                      const std::optional<MixedHodgeStructure>& full)
{
    require_datum(d);
    DegenerationReport r;
    r.degree = n;
    std::size_t total = 0;
    for (const auto& [t, terms] : d.cohomology) {
        int s = n - t;
        if (s < 0 || s >= static_cast<int>(d.components)) continue;
        try {
            auto g = weight_graded(d, t, s);
            for (const auto& [pq, dim] : hodge_numbers(g.mhs()))
                if (pq.first + pq.second != t) {
                    r.pure = false;
                    r.issues.push_back("gr^W_" + deg(t) + " has a component of type (" + deg(pq.first) + "," +
                                       deg(pq.second) + ")");
                }
            r.graded_ranks[t] = g.rank();
            total += g.rank();
        } catch (const InconsistentData& e) {
            r.pure = false;
            r.issues.push_back(e.what());
        }
    }
    if (full) {
        require_valid(*full, "supplied H^" + deg(n));
        r.full_rank = full->rank();
        if (total != full->rank()) {
            r.ranks_match = false;
            r.issues.push_back("graded pieces have total rank " + std::to_string(total) + ", the supplied H^" + deg(n) +
                               " has rank " + std::to_string(full->rank()));
        }
        for (int w : full->listed_weights()) {
            std::size_t have = graded_frame(*full, w).mhs.rank();
            auto it = r.graded_ranks.find(w);
            std::size_t want = it == r.graded_ranks.end() ? 0 : it->second;
            if (have != want) {
                r.ranks_match = false;
                r.issues.push_back("weight " + deg(w) + ": supplied rank " + std::to_string(have) + ", computed " +
                                   std::to_string(want));
            }
        }
    }
    return r;
}

// ---- short exact sequences -----------------------------------------------

void require_ses(const LatticeSES& s)
{
    require_complex(s.a);
    require_complex(s.b);
    require_complex(s.c);
    const std::size_t len = s.b.ranks.size();
    if (s.a.first != s.b.first || s.c.first != s.b.first || s.a.ranks.size() != len || s.c.ranks.size() != len)
        throw InvalidInput("the three complexes must cover the same degrees");
    if (s.f.size() != len || s.g.size() != len) throw InvalidInput("maps must be given in every degree");
    const int first = s.b.first;
    for (std::size_t k = 0; k < len; ++k) {
        const int i = first + static_cast<int>(k);
        const IntMatrix& f = s.f[k];
        const IntMatrix& g = s.g[k];
        if (f.rows() != s.b.rank(i) || f.cols() != s.a.rank(i) || g.rows() != s.c.rank(i) || g.cols() != s.b.rank(i))
            throw InvalidInput("maps in degree " + deg(i) + " have the wrong shape");
        if (!(g * f).is_zero()) throw InvalidInput("not exact at degree " + deg(i) + ": g∘f is not zero");
        if (rank(f) != f.cols()) throw InvalidInput("not exact at degree " + deg(i) + ": A -> B is not injective");
        if (LatticeBasis::spanned_by(g) != LatticeBasis::full(g.rows()))
            throw InvalidInput("not exact at degree " + deg(i) + ": B -> C is not surjective over Z");
        if (LatticeBasis::spanned_by(f) != LatticeBasis(f.rows(), integer_kernel(g)))
            throw InvalidInput("not exact at degree " + deg(i) + ": the image of A is not the kernel of B -> C");
        if (k + 1 < len) {
            if (s.f[k + 1] * s.a.differential(i) != s.b.differential(i) * f)
                throw InvalidInput("A -> B is not a chain map at degree " + deg(i));
            if (s.g[k + 1] * s.b.differential(i) != s.c.differential(i) * g)
                throw InvalidInput("B -> C is not a chain map at degree " + deg(i));
        }
    }
}

namespace {

std::vector<Integer> class_coordinates(const CohomologyFrame& f, const std::vector<Integer>& z)
{
    std::vector<Rational> q = f.projection * std::vector<Rational>(z.begin(), z.end());
    std::vector<Integer> out;
    for (const auto& x : q) {
        if (x.get_den() != 1) throw InconsistentData("cohomology class with non-integral coordinates");
        out.push_back(x.get_num());
    }
    return out;
}

}  // namespace

IntMatrix connecting_map(const LatticeSES& s, int i)
{
    require_ses(s);
    auto fc = lattice_cohomology(s.c, i);
    auto fa = lattice_cohomology(s.a, i + 1);
    IntMatrix out(fa.rank(), fc.rank());
    if (fa.rank() == 0 || fc.rank() == 0) return out;
    const int first = s.b.first;
    for (std::size_t j = 0; j < fc.rank(); ++j) {
        auto b = integer_solve(s.g[idx(i, first)], fc.lifts.column(j));
        if (!b) throw InconsistentData("connecting map: cycle of C does not lift");
        std::vector<Integer> db = s.b.differential(i) * *b;
        auto a = integer_solve(s.f[idx(i + 1, first)], db);
        if (!a) throw InconsistentData("connecting map: boundary of the lift is not in A");
        out.set_column(j, class_coordinates(fa, *a));
    }
    return out;
}

IntMatrix induced_map(const LatticeComplex& src, const LatticeComplex& dst, const std::vector<IntMatrix>& maps, int i)
{
    auto fs = lattice_cohomology(src, i);
    auto fd = lattice_cohomology(dst, i);
    IntMatrix out(fd.rank(), fs.rank());
    if (!in_range(i, src.first, maps.size())) return out;
    const IntMatrix& m = maps[idx(i, src.first)];
    for (std::size_t j = 0; j < fs.rank(); ++j) out.set_column(j, class_coordinates(fd, m * fs.lifts.column(j)));
    return out;
}

LongExactReport long_exact_sequence(const LatticeSES& s)
{
    require_ses(s);
    LongExactReport r;
    auto fail = [&](const std::string& msg) {
        r.exact = false;
        r.issues.push_back(msg);
    };
    const int first = s.b.first, last = s.b.last();
    // Maps in order: alpha_i : H^i(A) -> H^i(B), beta_i : H^i(B) -> H^i(C), delta_i : H^i(C) -> H^{i+1}(A).
    std::vector<IntMatrix> maps;
    std::vector<std::string> names;
    std::vector<std::size_t> dims;
    for (int i = first; i <= last; ++i) {
        dims.push_back(lattice_cohomology(s.a, i).rank());
        names.push_back("H^" + deg(i) + "(A)");
        maps.push_back(induced_map(s.a, s.b, s.f, i));
        dims.push_back(lattice_cohomology(s.b, i).rank());
        names.push_back("H^" + deg(i) + "(B)");
        maps.push_back(induced_map(s.b, s.c, s.g, i));
        dims.push_back(lattice_cohomology(s.c, i).rank());
        names.push_back("H^" + deg(i) + "(C)");
        maps.push_back(connecting_map(s, i));
    }
    // maps[k] goes from slot k to slot k+1; the last connecting map lands in H^{last+1}(A) = 0.
    for (std::size_t k = 0; k < dims.size(); ++k) {
        std::size_t rank_in = k == 0 ? 0 : rank(maps[k - 1]);
        std::size_t rank_out = rank(maps[k]);
        if (k > 0 && maps[k].cols() > 0 && !(maps[k] * maps[k - 1]).is_zero())
            fail("composite into and out of " + names[k] + " is not zero");
        if (dims[k] - rank_out != rank_in)
            fail("not exact at " + names[k] + ": kernel rank " + std::to_string(dims[k] - rank_out) + ", image rank " +
                 std::to_string(rank_in));
    }
    return r;
}

// ---- boundary maps into the torus complex --------------------------------

TorusCohomology torus_cohomology(const SimplicialCohomologyDatum& d, int p, int i)
{
    TorusCohomology tc;
    tc.p = p;
    tc.degree = i + 1;
    tc.row = row_complex(d, 2 * p - 1);
    tc.cohomology = cohomology_frame(tc.row, i + 1);
    const auto& g = tc.cohomology.frame.mhs;
    if (g.rank() == 0) {
        tc.torus = zero_torus();
        return tc;
    }
    bool level_one = true;
    for (const auto& [pq, dim] : hodge_numbers(g))
        if (pq.first != p && pq.first != p - 1) level_one = false;
    tc.torus = make_torus(g.hodge_space(p), level_one,
                          "H^" + deg(i + 1) + " of the J^" + deg(p) + " complex (computed up to isogeny)");
    return tc;
}

TorusPoint project_torus_point(const TorusCohomology& tc, const std::vector<Scalar>& v)
{
    const MixedHodgeStructure term = tc.row.term(tc.degree);
    const std::size_t m = term.rank();
    if (v.size() != m)
        throw InvalidInput("torus value has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(m));
    if (tc.torus.rank == 0) return {};
    std::vector<Scalar> w = v;
    IntMatrix next = tc.row.lattices().differential(tc.degree);
    if (next.rows() > 0) {
        ExactMatrix dn = to_exact(next);
        ExactMatrix f = term.hodge_space(tc.p);
        auto mem = subgroup_member(dn * v, dn * f, to_rational(next), MembershipMode::isogeny);
        if (!mem.inside) throw InvalidInput("torus value is not a cocycle, even up to isogeny");
        std::vector<Scalar> shift = f * mem.subspace_coefficients;
        for (std::size_t k = 0; k < m; ++k) w[k] -= shift[k] + Scalar(mem.lattice_coefficients[k]);
    }
    return {to_exact(tc.cohomology.frame.projection) * w};
}

namespace {

LatticeComplex ns_complex(const CycleData& c)
{
    LatticeComplex l;
    l.ranks = c.ns_ranks;
    for (std::size_t s = 0; s + 1 < c.ns_ranks.size(); ++s)
        l.differentials.push_back(alternating_sum(c.ns_faces[s], c.ns_ranks[s + 1], c.ns_ranks[s]));
    return l;
}

const CycleData& cycles_for(const SimplicialCohomologyDatum& d, int p)
{
    if (!d.cycles)
        throw UnsupportedInput("the boundary map needs the cycle-data annotation (cycle lattices, cycle classes and "
                               "Abel-Jacobi corrections), which is missing");
    if (d.cycles->p != p)
        throw UnsupportedInput("cycle data are given for p = " + deg(d.cycles->p) + ", not p = " + deg(p));
    return *d.cycles;
}

std::size_t isogeny_kernel_rank(const std::vector<TorusPoint>& values, const TorusPresentation& t)
{
    if (t.rank == 0 || values.empty()) return values.size();
    ClassTable table{IntMatrix(0, values.size()), values, t};
    return preimage_lattice(table.value_matrix(), t.hodge, RatMatrix::identity(t.rank), MembershipMode::isogeny).cols();
}

}  // namespace

BoundaryTable extension_connecting(const SimplicialCohomologyDatum& d, int p, int i)
{
    const CycleData& c = cycles_for(d, p);
    require_datum(d);
    BoundaryTable out;
    auto frame = lattice_cohomology(ns_complex(c), i);
    out.cocycles = frame.lifts;
    auto tc = torus_cohomology(d, p, i);
    out.torus = tc.torus;
    const std::size_t r = out.cocycles.cols();
    const bool has_next = i >= 0 && i + 1 < static_cast<int>(d.components);
    const std::size_t m = has_next ? tc.row.term(i + 1).rank() : 0;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Scalar> v(m, Scalar(0));
        if (has_next) {
            const auto& corrections = c.abel_jacobi[static_cast<std::size_t>(i)];
            std::vector<Integer> cocycle = out.cocycles.column(j);
            for (std::size_t k = 0; k < corrections.size(); ++k) {
                Scalar sign(k % 2 == 0 ? 1 : -1);
                for (std::size_t x = 0; x < cocycle.size(); ++x) {
                    if (sgn(cocycle[x]) == 0) continue;
                    Scalar coeff = sign * Scalar(Rational(cocycle[x]));
                    for (std::size_t e = 0; e < m; ++e) v[e] += coeff * corrections[k][x].rep[e];
                }
            }
        }
        out.values.push_back(project_torus_point(tc, v));
    }
    out.image_rank = r - isogeny_kernel_rank(out.values, out.torus);
    return out;
}

SquareReport motivic_square_check(const SimplicialCohomologyDatum& d, int p, int i, const ClassTable& extension)
{
    const CycleData& c = cycles_for(d, p);
    SquareReport rep;
    rep.boundary = extension_connecting(d, p, i);
    const BoundaryTable& bt = rep.boundary;
    const std::size_t r = bt.cocycles.cols();

    auto even = cohomology_frame(row_complex(d, 2 * p), i);
    const std::size_t nc = extension.classes.cols();
    if (extension.classes.rows() != even.frame.mhs.rank())
        throw InvalidInput("extension table classes have " + std::to_string(extension.classes.rows()) +
                           " coordinates, the weight-" + deg(2 * p) + " piece has rank " +
                           std::to_string(even.frame.mhs.rank()));
    if (extension.values.size() != nc) throw InvalidInput("extension table has a value count mismatch");
    if (extension.torus.rank != bt.torus.rank)
        throw InvalidInput("extension table values live in a rank " + std::to_string(extension.torus.rank) +
                           " torus, the boundary map in a rank " + std::to_string(bt.torus.rank) + " torus");

    PureHodgeStructure odd = weight_graded(d, 2 * p - 1, i + 1);
    const std::size_t m = odd.rank();
    MixedHodgeStructure assembled = assemble_two_step(odd, nc, extension.value_matrix(), p);
    auto frames = extension_frames(assembled, p);
    IntMatrix embed_a = vcat(IntMatrix::identity(m), IntMatrix(nc, m));
    ExactMatrix to_odd = to_exact(frames.odd.projection * to_rational(embed_a));
    RatMatrix table_classes = to_rational(extension.classes);

    std::vector<TorusPoint> via_extension;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Integer> cocycle = bt.cocycles.column(j);
        std::vector<Integer> cl = c.cycle_class[static_cast<std::size_t>(i)] * cocycle;
        std::vector<Rational> x = even.frame.mhs.rank() == 0 ? std::vector<Rational>{}
                                                         : even.frame.projection * std::vector<Rational>(cl.begin(), cl.end());
        auto y = solve(table_classes, x);
        if (!y)
            throw InvalidInput("cycle class of basis cocycle " + std::to_string(j) +
                               " is not a combination of the tabulated classes");
        Integer den = 1;
        for (const auto& q : *y) den = lcm(den, Integer(q.get_den()));
        std::vector<Integer> lift(m + nc, 0);
        for (std::size_t k = 0; k < nc; ++k) lift[m + k] = Integer((*y)[k] * den);
        std::vector<Rational> even_coords = frames.even.projection * std::vector<Rational>(lift.begin(), lift.end());
        std::vector<Integer> xe;
        for (const auto& q : even_coords) xe.push_back(q.get_num());
        TorusPoint e = scale(extension_value(frames, xe), Rational(1) / Rational(den));
        via_extension.push_back(e);
        TorusPoint lam{to_odd * bt.values[j].rep};
        if (!is_torsion_point(frames.torus, lam - e)) {
            rep.commutes = false;
            std::ostringstream os;
            os << "basis cocycle " << j << ": boundary value and extension class differ by a non-torsion point";
            rep.witnesses.push_back(os.str());
        }
    }
    rep.kernel_rank_boundary = r - bt.image_rank;
    rep.kernel_rank_extension = isogeny_kernel_rank(via_extension, frames.torus);
    return rep;
}

}  // namespace hodge1
