#include "hodge1/motive.hpp"

#include <algorithm>
#include <set>

namespace hodge1 {

// ---- tori ----------------------------------------------------------------

TorusPresentation make_torus(ExactMatrix hodge, bool level_one, std::string provenance)
{
    const std::size_t m = hodge.rows();
    hodge = column_basis(hodge);
    if (2 * hodge.cols() != m)
        throw InvalidInput("torus subspace has dimension " + std::to_string(hodge.cols()) + " in a rank " +
                           std::to_string(m) + " lattice (need half)");
    if (subspace_intersection(hodge, hodge.conj()).cols() != 0)
        throw InvalidInput("torus subspace meets its conjugate");
    return {m, std::move(hodge), level_one, std::move(provenance)};
}

TorusPresentation zero_torus()
{
    return {0, ExactMatrix(0, 0), true, "zero"};
}

TorusPoint zero_point(const TorusPresentation& t)
{
    return {std::vector<Scalar>(t.rank, Scalar(0))};
}

TorusPoint operator+(const TorusPoint& a, const TorusPoint& b)
{
    if (a.rep.size() != b.rep.size()) throw InvalidInput("torus points of different length");
    TorusPoint out = a;
    for (std::size_t i = 0; i < out.rep.size(); ++i) out.rep[i] += b.rep[i];
    return out;
}

TorusPoint operator-(const TorusPoint& a, const TorusPoint& b)
{
    return a + scale(b, -1);
}

TorusPoint scale(const TorusPoint& a, const Rational& c)
{
    TorusPoint out = a;
    for (auto& x : out.rep) x *= Scalar(c);
    return out;
}

namespace {

void check_point(const TorusPresentation& t, const TorusPoint& a)
{
    if (a.rep.size() != t.rank)
        throw InvalidInput("torus point has " + std::to_string(a.rep.size()) + " coordinates, torus lattice rank is " +
                           std::to_string(t.rank));
}

}  // namespace

bool is_zero_point(const TorusPresentation& t, const TorusPoint& a)
{
    check_point(t, a);
    return subgroup_member(a.rep, t.hodge, RatMatrix::identity(t.rank), MembershipMode::strict).inside;
}

bool same_point(const TorusPresentation& t, const TorusPoint& a, const TorusPoint& b)
{
    return is_zero_point(t, a - b);
}

bool is_torsion_point(const TorusPresentation& t, const TorusPoint& a)
{
    check_point(t, a);
    return subgroup_member(a.rep, t.hodge, RatMatrix::identity(t.rank), MembershipMode::isogeny).inside;
}

std::optional<Integer> point_order(const TorusPresentation& t, const TorusPoint& v)
{
    check_point(t, v);
    auto m = subgroup_member(v.rep, t.hodge, RatMatrix::identity(t.rank), MembershipMode::isogeny);
    if (!m.inside) return std::nullopt;
    Integer den = 1;
    for (const auto& c : m.lattice_coefficients) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (Integer k = 1; k <= den; ++k) {
        if (den % k != 0) continue;
        if (is_zero_point(t, scale(v, Rational(k)))) return k;
    }
    throw InconsistentData("point_order: torsion point not killed by its denominator");
}

TorusPresentation jacobian_torus(const MixedHodgeStructure& h, int p)
{
    auto odd = graded_frame(h, 2 * p - 1);
    if (odd.mhs.rank() == 0) return zero_torus();
    bool level_one = true;
    for (const auto& [pq, dim] : hodge_numbers(odd.mhs))
        if (pq.first != p && pq.first != p - 1) level_one = false;
    return make_torus(odd.mhs.hodge_space(p), level_one, "J^" + std::to_string(p) + " of a rank " +
                                                              std::to_string(h.rank()) + " structure");
}

// ---- extension classes ---------------------------------------------------

ExtensionFrames extension_frames(const MixedHodgeStructure& h, int p)
{
    require_valid(h);
    ExtensionFrames f;
    f.p = p;
    f.even = graded_frame(h, 2 * p);
    f.odd = graded_frame(h, 2 * p - 1);
    f.classes = hodge_classes(f.even.mhs, p).basis();
    f.hodge_w2p = subspace_intersection(h.hodge_space(p), to_exact(h.weight_space(2 * p)));
    f.weight_odd = h.weight_space(2 * p - 1);
    f.torus = jacobian_torus(h, p);
    return f;
}

std::vector<Scalar> hodge_lift(const ExtensionFrames& f, const std::vector<Integer>& x)
{
    std::vector<Scalar> target(x.begin(), x.end());
    ExactMatrix image = to_exact(f.even.projection) * f.hodge_w2p;
    auto z = solve(image, target);
    if (!z) throw InconsistentData("class has no lift into F^" + std::to_string(f.p) + " ∩ W_" +
                                   std::to_string(2 * f.p) + " (corrupted input)");
    return f.hodge_w2p * *z;
}

TorusPoint extension_value(const ExtensionFrames& f, const std::vector<Integer>& x, const std::vector<Integer>& x_z,
                           const std::vector<Scalar>& x_f)
{
    std::vector<Rational> xz_q(x_z.begin(), x_z.end());
    std::vector<Rational> x_q(x.begin(), x.end());
    if (f.even.projection * xz_q != x_q) throw InvalidInput("integral lift does not map to the class");
    std::vector<Scalar> x_s(x.begin(), x.end());
    if (to_exact(f.even.projection) * x_f != x_s) throw InvalidInput("Hodge lift does not map to the class");
    std::vector<Scalar> diff = x_f;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= Scalar(x_z[i]);
    if (!in_span(to_exact(f.weight_odd), diff))
        throw InvalidInput("lifts differ by a vector outside W_" + std::to_string(2 * f.p - 1));
    return {to_exact(f.odd.projection) * diff};
}

TorusPoint extension_value(const ExtensionFrames& f, const std::vector<Integer>& x)
{
    std::vector<Integer> x_z = f.even.lifts * x;
    return extension_value(f, x, x_z, hodge_lift(f, x));
}

ExactMatrix ClassTable::value_matrix() const
{
    ExactMatrix v(torus.rank, values.size());
    for (std::size_t j = 0; j < values.size(); ++j) v.set_column(j, values[j].rep);
    return v;
}

ClassTable extension_class(const MixedHodgeStructure& h, int p)
{
    auto f = extension_frames(h, p);
    ClassTable t;
    t.classes = f.classes;
    t.torus = f.torus;
    for (std::size_t j = 0; j < f.classes.cols(); ++j) t.values.push_back(extension_value(f, f.classes.column(j)));
    return t;
}

IntMatrix extension_kernel(const ClassTable& table, MembershipMode mode)
{
    const std::size_t r = table.values.size();
    if (r == 0) return IntMatrix(0, 0);
    if (table.torus.rank == 0) return IntMatrix::identity(r);
    return preimage_lattice(table.value_matrix(), table.torus.hodge, RatMatrix::identity(table.torus.rank), mode);
}

// ---- abelian part --------------------------------------------------------

AbelianPart abelian_part(const MixedHodgeStructure& h, int p)
{
    auto odd = graded_frame(h, 2 * p - 1);
    const auto& g = odd.mhs;
    const std::size_t m = g.rank();
    AbelianPart out;
    if (m == 0) {
        out.lattice = IntMatrix(0, 0);
        out.torus = zero_torus();
        out.hodge_in_ambient = ExactMatrix(0, 0);
        return out;
    }
    ExactMatrix fp = g.hodge_space(p), fp1 = g.hodge_space(p - 1);
    ExactMatrix middle = subspace_sum(subspace_intersection(fp1, fp.conj()), subspace_intersection(fp, fp1.conj()));
    RatMatrix u = rational_points(middle);
    while (true) {
        ExactMatrix s1 = subspace_intersection(fp, to_exact(u));
        RatMatrix next = rational_points(subspace_sum(s1, s1.conj()));
        if (next.cols() == u.cols()) break;
        u = next;
    }
    out.lattice = saturated_basis(u);
    if (out.lattice.cols() == 0) {
        out.torus = zero_torus();
        out.hodge_in_ambient = ExactMatrix(m, 0);
        return out;
    }
    ExactMatrix lat = to_exact(out.lattice);
    out.hodge_in_ambient = subspace_intersection(fp, lat);
    out.torus = make_torus(solve_columns(lat, out.hodge_in_ambient), true,
                           "abelian part of J^" + std::to_string(p) + " (polarization assumed)");
    return out;
}

// ---- the Hodge 1-motive --------------------------------------------------

HodgeMotive hodge_motive(const MixedHodgeStructure& h, int p, MembershipMode mode)
{
    auto frames = extension_frames(h, p);
    HodgeMotive out;
    out.mode = mode;
    out.table.classes = frames.classes;
    out.table.torus = frames.torus;
    for (std::size_t j = 0; j < frames.classes.cols(); ++j)
        out.table.values.push_back(extension_value(frames, frames.classes.column(j)));
    out.abelian = abelian_part(h, p);

    const std::size_t m = frames.torus.rank;
    const std::size_t r = frames.classes.cols();
    ExactMatrix values = out.table.value_matrix();
    ExactMatrix allowed = hcat(to_exact(out.abelian.lattice), frames.torus.hodge);
    if (m == 0)
        out.lattice = IntMatrix::identity(r);
    else if (r == 0)
        out.lattice = IntMatrix(0, 0);
    else
        out.lattice = preimage_lattice(values, allowed, RatMatrix::identity(m), mode);

    const std::size_t a = out.abelian.lattice.cols();
    out.motive.lattice_rank = out.lattice.cols();
    out.motive.abelian = out.abelian.torus;
    for (std::size_t j = 0; j < out.lattice.cols(); ++j) {
        std::vector<Integer> coeffs = out.lattice.column(j);
        std::vector<Scalar> v = values * std::vector<Scalar>(coeffs.begin(), coeffs.end());
        TorusPoint u{std::vector<Scalar>(a, Scalar(0))};
        if (m > 0) {
            auto mem = subgroup_member(v, allowed, RatMatrix::identity(m), mode);
            if (!mem.inside) throw InconsistentData("motive lattice vector outside the abelian part");
            for (std::size_t k = 0; k < a; ++k) u.rep[k] = mem.subspace_coefficients[k];
        }
        out.motive.values.push_back(std::move(u));
    }

    out.hodge_lattice = hodge_classes(h, p);
    IntMatrix w_low = weight_lattice(h, 2 * p - 2);
    IntMatrix w_odd = weight_lattice(h, 2 * p - 1);
    IntMatrix class_lifts = frames.even.lifts * frames.classes;
    out.h_prime = saturated_basis(to_rational(hcat(w_low, frames.odd.lifts * out.abelian.lattice)));
    out.h_double_prime = saturated_basis(to_rational(hcat(w_odd, class_lifts)));
    out.h_hodge = saturated_basis(to_rational(hcat(out.h_prime, class_lifts * out.lattice)));
    auto he = subquotient(h, w_low, out.h_double_prime);
    out.h_e = he.mhs;
    out.h_e_lifts = he.lifts;
    out.h_h = subquotient(h, w_low, out.h_hodge).mhs;
    return out;
}

// ---- assembly and realization --------------------------------------------

MixedHodgeStructure assemble_two_step(const PureHodgeStructure& a, std::size_t r, const ExactMatrix& values, int p)
{
    if (a.weight() != 2 * p - 1)
        throw InvalidInput("assemble_two_step: abelian piece has weight " + std::to_string(a.weight()) +
                           ", expected " + std::to_string(2 * p - 1));
    const std::size_t m = a.rank();
    if (values.rows() != m || values.cols() != r)
        throw InvalidInput("assemble_two_step: values are " + values.shape() + ", expected " + std::to_string(m) +
                           "x" + std::to_string(r));
    require_valid(a.mhs(), "odd-weight piece");
    const std::size_t n = m + r;
    ExactMatrix classes = vcat(values, ExactMatrix::identity(r));
    std::vector<int> listed = a.mhs().listed_levels();
    std::set<int> levels(listed.begin(), listed.end());
    levels.insert(p);
    levels.insert(p + 1);
    std::vector<HodgeStep> fs;
    for (int q : levels) {
        ExactMatrix fa = a.mhs().hodge_space(q);
        ExactMatrix step = vcat(fa, ExactMatrix(r, fa.cols()));
        if (q <= p) step = hcat(step, classes);
        fs.push_back({q, step});
    }
    std::vector<WeightStep> ws{{2 * p - 1, vcat(RatMatrix::identity(m), RatMatrix(r, m))},
                               {2 * p, RatMatrix::identity(n)}};
    return normalized(MixedHodgeStructure(n, std::move(ws), std::move(fs)));
}

PureHodgeStructure torus_hodge_structure(const TorusPresentation& t, int p)
{
    const std::size_t m = t.rank;
    MixedHodgeStructure h(m, {{2 * p - 1, RatMatrix::identity(m)}},
                          {{p - 1, ExactMatrix::identity(m)}, {p, t.hodge}, {p + 1, ExactMatrix(m, 0)}});
    require_valid(h, "Hodge structure of the torus");
    return {normalized(h), 2 * p - 1};
}

MixedHodgeStructure realize_one_motive(const OneMotive& m, int p)
{
    if (m.torus_part_rank != 0)
        throw UnsupportedInput("1-motives with a multiplicative torus part are not supported (torus rank " +
                               std::to_string(m.torus_part_rank) + ")");
    if (!m.abelian.level_one)
        throw UnsupportedInput("the target torus is not an abelian variety (provenance: " + m.abelian.provenance +
                               "); only [L -> A] with A abelian can be realized");
    if (m.values.size() != m.lattice_rank)
        throw InvalidInput("1-motive has " + std::to_string(m.values.size()) + " values for a rank " +
                           std::to_string(m.lattice_rank) + " lattice");
    ClassTable t{IntMatrix::identity(m.lattice_rank), m.values, m.abelian};
    for (const auto& v : m.values) check_point(m.abelian, v);
    return assemble_two_step(torus_hodge_structure(m.abelian, p), m.lattice_rank, t.value_matrix(), p);
}

bool is_isogeny(const OneMotive& a, const OneMotive& b, const MotiveMap& map)
{
    const std::size_t r1 = a.lattice_rank, r2 = b.lattice_rank, m1 = a.abelian.rank, m2 = b.abelian.rank;
    if (r1 != r2 || m1 != m2) return false;
    if (map.lattice.rows() != r2 || map.lattice.cols() != r1) return false;
    if (map.torus.rows() != m2 || map.torus.cols() != m1) return false;
    if (rank(map.lattice) != r1 || rank(map.torus) != m1) return false;
    ExactMatrix t = to_exact(map.torus);
    if (!span_contains(b.abelian.hodge, t * a.abelian.hodge)) return false;
    for (std::size_t j = 0; j < r1; ++j) {
        TorusPoint lhs{t * a.values[j].rep};
        TorusPoint rhs = zero_point(b.abelian);
        for (std::size_t k = 0; k < r2; ++k) rhs = rhs + scale(b.values[k], map.lattice(k, j));
        if (!is_torsion_point(b.abelian, lhs - rhs)) return false;
    }
    return true;
}

}  // namespace hodge1
