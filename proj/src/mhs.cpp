#include "hodge1/mhs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodge1 {

MixedHodgeStructure::MixedHodgeStructure(std::size_t rank, std::vector<WeightStep> weights,
                                         std::vector<HodgeStep> hodge)
    : rank_(rank), weights_(std::move(weights)), hodge_(std::move(hodge))
{
    for (const auto& w : weights_)
        if (w.basis.rows() != rank_)
            throw InvalidInput("W_" + std::to_string(w.weight) + " basis vectors have length " +
                               std::to_string(w.basis.rows()) + ", expected " + std::to_string(rank_));
    for (const auto& f : hodge_)
        if (f.basis.rows() != rank_)
            throw InvalidInput("F^" + std::to_string(f.level) + " basis vectors have length " +
                               std::to_string(f.basis.rows()) + ", expected " + std::to_string(rank_));
    std::stable_sort(weights_.begin(), weights_.end(),
                     [](const WeightStep& a, const WeightStep& b) { return a.weight < b.weight; });
    std::stable_sort(hodge_.begin(), hodge_.end(),
                     [](const HodgeStep& a, const HodgeStep& b) { return a.level < b.level; });
}

RatMatrix MixedHodgeStructure::weight_space(int k) const
{
    const WeightStep* best = nullptr;
    for (const auto& w : weights_)
        if (w.weight <= k) best = &w;
    return best ? best->basis : RatMatrix(rank_, 0);
}

ExactMatrix MixedHodgeStructure::hodge_space(int p) const
{
    for (const auto& f : hodge_)
        if (f.level >= p) return f.basis;
    return ExactMatrix(rank_, 0);
}

std::vector<int> MixedHodgeStructure::listed_weights() const
{
    std::vector<int> out;
    for (const auto& w : weights_) out.push_back(w.weight);
    return out;
}

std::vector<int> MixedHodgeStructure::listed_levels() const
{
    std::vector<int> out;
    for (const auto& f : hodge_) out.push_back(f.level);
    return out;
}

std::int64_t MixedHodgeStructure::radicand() const
{
    std::int64_t d = 1;
    for (const auto& f : hodge_) d = common_radicand(d, common_radicand(f.basis));
    return d;
}

PureHodgeStructure::PureHodgeStructure(MixedHodgeStructure h, int weight) : mhs_(std::move(h)), weight_(weight)
{
    const std::size_t n = mhs_.rank();
    if (hodge1::rank(mhs_.weight_space(weight - 1)) != 0 || hodge1::rank(mhs_.weight_space(weight)) != n)
        throw InvalidInput("structure is not pure of weight " + std::to_string(weight));
}

// ---- subquotients --------------------------------------------------------

MixedHodgeStructure normalized(const MixedHodgeStructure& h)
{
    std::vector<WeightStep> ws;
    std::size_t prev = 0;
    for (const auto& w : h.weight_steps()) {
        RatMatrix b = column_basis(w.basis);
        if (b.cols() > prev) {
            prev = b.cols();
            ws.push_back({w.weight, std::move(b)});
        }
    }
    std::vector<HodgeStep> fs;
    const auto& steps = h.hodge_steps();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        ExactMatrix b = column_basis(steps[i].basis);
        std::size_t next = i + 1 < steps.size() ? rank(steps[i + 1].basis) : 0;
        if (b.cols() > next) fs.push_back({steps[i].level, std::move(b)});
    }
    return {h.rank(), std::move(ws), std::move(fs)};
}

IntMatrix weight_lattice(const MixedHodgeStructure& h, int k)
{
    return saturated_basis(h.weight_space(k));
}

Subquotient subquotient(const MixedHodgeStructure& h, const IntMatrix& lower, const IntMatrix& upper)
{
    const std::size_t n = h.rank();
    if (lower.rows() != n || upper.rows() != n) throw InvalidInput("subquotient: ambient rank mismatch");
    RatMatrix up = to_rational(upper);
    RatMatrix coords = solve_columns(up, to_rational(lower));
    QuotientFrame qf = quotient_frame(to_integer(coords, "sublattice coordinates"));
    Subquotient out;
    out.lifts = upper * qf.lifts;
    out.projection = to_rational(qf.projection) * left_inverse(up);
    const std::size_t m = qf.lifts.cols();

    std::vector<WeightStep> ws;
    for (const auto& w : h.weight_steps()) {
        RatMatrix inside = subspace_intersection(w.basis, up);
        ws.push_back({w.weight, column_basis(out.projection * inside)});
    }
    ExactMatrix up_field = to_exact(up);
    ExactMatrix proj_field = to_exact(out.projection);
    std::vector<HodgeStep> fs;
    for (const auto& f : h.hodge_steps()) {
        ExactMatrix inside = subspace_intersection(f.basis, up_field);
        fs.push_back({f.level, column_basis(proj_field * inside)});
    }
    out.mhs = normalized(MixedHodgeStructure(m, std::move(ws), std::move(fs)));
    return out;
}

Subquotient graded_frame(const MixedHodgeStructure& h, int k)
{
    return subquotient(h, weight_lattice(h, k - 1), weight_lattice(h, k));
}

PureHodgeStructure graded_piece(const MixedHodgeStructure& h, int k)
{
    return {graded_frame(h, k).mhs, k};
}

// ---- validation ----------------------------------------------------------

namespace {

void check_nesting(const MixedHodgeStructure& h, std::vector<std::string>& violations)
{
    const auto& ws = h.weight_steps();
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
        if (ws[i].weight == ws[i + 1].weight) {
            violations.push_back("weight " + std::to_string(ws[i].weight) + " listed twice");
            continue;
        }
        if (!span_contains(ws[i + 1].basis, ws[i].basis))
            violations.push_back("W_" + std::to_string(ws[i].weight) + " is not contained in W_" +
                                 std::to_string(ws[i + 1].weight) + " (weights " + std::to_string(ws[i].weight) +
                                 " and " + std::to_string(ws[i + 1].weight) + " are not nested)");
    }
    if (h.rank() > 0) {
        if (ws.empty())
            violations.push_back("weight filtration is empty");
        else if (rank(ws.back().basis) != h.rank())
            violations.push_back("top weight step W_" + std::to_string(ws.back().weight) +
                                 " is not the whole space");
    }
    const auto& fs = h.hodge_steps();
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        if (fs[i].level == fs[i + 1].level) {
            violations.push_back("Hodge level " + std::to_string(fs[i].level) + " listed twice");
            continue;
        }
        if (!span_contains(fs[i].basis, fs[i + 1].basis))
            violations.push_back("F^" + std::to_string(fs[i + 1].level) + " is not contained in F^" +
                                 std::to_string(fs[i].level));
    }
    if (h.rank() > 0) {
        if (fs.empty())
            violations.push_back("Hodge filtration is empty");
        else if (rank(fs.front().basis) != h.rank())
            violations.push_back("lowest Hodge step F^" + std::to_string(fs.front().level) +
                                 " is not the whole space");
    }
}

int top_level(const MixedHodgeStructure& h)
{
    return h.hodge_steps().empty() ? 0 : h.hodge_steps().back().level;
}

WeightBookkeeping bookkeep(const MixedHodgeStructure& g, int k, int pmax)
{
    WeightBookkeeping wb;
    wb.weight = k;
    wb.graded_rank = g.rank();
    ExactMatrix all(g.rank(), 0);
    std::size_t total = 0;
    for (int p = k - pmax; p <= pmax; ++p) {
        ExactMatrix a = subspace_intersection(g.hodge_space(p), g.hodge_space(k - p).conj());
        if (a.cols() == 0) continue;
        wb.hodge_numbers[{p, k - p}] = a.cols();
        total += a.cols();
        all = hcat(all, a);
    }
    wb.decomposition_rank = rank(all);
    wb.direct = wb.decomposition_rank == total;
    wb.spans = wb.decomposition_rank == g.rank();
    return wb;
}

}  // namespace

ValidationReport validate_mhs(const MixedHodgeStructure& h)
{
    ValidationReport report;
    check_nesting(h, report.violations);
    if (!report.valid()) return report;
    const int pmax = top_level(h);
    for (int k : h.listed_weights()) {
        Subquotient g = graded_frame(h, k);
        if (g.mhs.rank() == 0) continue;
        WeightBookkeeping wb = bookkeep(g.mhs, k, pmax);
        std::size_t total = 0;
        for (const auto& [pq, dim] : wb.hodge_numbers) total += dim;
        if (!wb.direct)
            report.violations.push_back("weight " + std::to_string(k) + ": the A^{p,q} (total dimension " +
                                        std::to_string(total) + ") do not form a direct sum");
        if (!wb.spans)
            report.violations.push_back("weight " + std::to_string(k) + ": the A^{p,q} span dimension " +
                                        std::to_string(wb.decomposition_rank) + " but gr^W_" +
                                        std::to_string(k) + " has dimension " + std::to_string(wb.graded_rank) +
                                        " (filtrations are not opposed)");
        report.weights.push_back(std::move(wb));
    }
    return report;
}

void require_valid(const MixedHodgeStructure& h, const std::string& what)
{
    auto r = validate_mhs(h);
    if (r.valid()) return;
    std::string msg = what + " is invalid:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw InvalidInput(msg);
}

HodgeNumbers hodge_numbers(const MixedHodgeStructure& h)
{
    auto r = validate_mhs(h);
    if (!r.valid()) require_valid(h);
    HodgeNumbers out;
    for (const auto& wb : r.weights)
        for (const auto& [pq, dim] : wb.hodge_numbers) out[pq] += dim;
    return out;
}

std::string describe(const HodgeNumbers& h)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [pq, dim] : h) {
        os << (first ? "" : ", ") << "(" << pq.first << "," << pq.second << "): " << dim;
        first = false;
    }
    os << "}";
    return os.str();
}

// ---- constructions -------------------------------------------------------

MixedHodgeStructure tate_twist(const MixedHodgeStructure& h, int m)
{
    std::vector<WeightStep> ws = h.weight_steps();
    for (auto& w : ws) w.weight -= 2 * m;
    std::vector<HodgeStep> fs = h.hodge_steps();
    for (auto& f : fs) f.level -= m;
    return {h.rank(), std::move(ws), std::move(fs)};
}

MixedHodgeStructure tate(int m, std::size_t r)
{
    return {r, {{-2 * m, RatMatrix::identity(r)}}, {{-m, ExactMatrix::identity(r)}}};
}

MixedHodgeStructure direct_sum(const MixedHodgeStructure& a, const MixedHodgeStructure& b)
{
    std::set<int> weights, levels;
    for (int k : a.listed_weights()) weights.insert(k);
    for (int k : b.listed_weights()) weights.insert(k);
    for (int p : a.listed_levels()) levels.insert(p);
    for (int p : b.listed_levels()) levels.insert(p);
    std::vector<WeightStep> ws;
    for (int k : weights) ws.push_back({k, block_diagonal(a.weight_space(k), b.weight_space(k))});
    std::vector<HodgeStep> fs;
    for (int p : levels) fs.push_back({p, block_diagonal(a.hodge_space(p), b.hodge_space(p))});
    return {a.rank() + b.rank(), std::move(ws), std::move(fs)};
}

MixedHodgeStructure change_basis(const MixedHodgeStructure& h, const IntMatrix& g)
{
    if (g.rows() != h.rank() || g.cols() != h.rank()) throw InvalidInput("change_basis: shape mismatch");
    RatMatrix gq = to_rational(g);
    ExactMatrix gf = to_exact(g);
    std::vector<WeightStep> ws = h.weight_steps();
    for (auto& w : ws) w.basis = gq * w.basis;
    std::vector<HodgeStep> fs = h.hodge_steps();
    for (auto& f : fs) f.basis = gf * f.basis;
    return {h.rank(), std::move(ws), std::move(fs)};
}

TorsionQuotient quotient_torsion(const MixedHodgeStructure& h, const IntMatrix& relations)
{
    if (relations.rows() != h.rank()) throw InvalidInput("relations have the wrong number of rows");
    auto s = snf(relations);
    TorsionQuotient out;
    for (const auto& d : s.divisors)
        if (d > 1) out.torsion.push_back(d);
    const std::size_t r = s.divisors.size();
    const std::size_t m = h.rank() - r;
    IntMatrix proj = s.u.row_block(r, m);
    RatMatrix pq = to_rational(proj);
    ExactMatrix pf = to_exact(proj);
    std::vector<WeightStep> ws = h.weight_steps();
    for (auto& w : ws) w.basis = column_basis(pq * w.basis);
    std::vector<HodgeStep> fs = h.hodge_steps();
    for (auto& f : fs) f.basis = column_basis(pf * f.basis);
    out.mhs = MixedHodgeStructure(m, std::move(ws), std::move(fs));
    return out;
}

// ---- morphisms -----------------------------------------------------------

MorphismReport check_morphism(const MHSMorphism& f)
{
    MorphismReport rep;
    const auto& src = f.source;
    const auto& tgt = f.target;
    if (f.matrix.rows() != tgt.rank() || f.matrix.cols() != src.rank()) {
        rep.shape_ok = false;
        rep.weight_compatible = rep.hodge_compatible = false;
        rep.issues.push_back("matrix is " + f.matrix.shape() + " but the map goes from rank " +
                             std::to_string(src.rank()) + " to rank " + std::to_string(tgt.rank()));
        return rep;
    }
    RatMatrix fq = to_rational(f.matrix);
    ExactMatrix ff = to_exact(f.matrix);
    RatMatrix image_q = column_basis(fq);
    ExactMatrix image_f = to_exact(image_q);

    std::set<int> weights;
    for (int k : src.listed_weights()) weights.insert(k);
    for (int k : tgt.listed_weights()) weights.insert(k);
    for (int k : weights) {
        RatMatrix fw = image_of(fq, src.weight_space(k));
        RatMatrix wk = tgt.weight_space(k);
        if (!span_contains(wk, fw)) {
            rep.weight_compatible = false;
            rep.issues.push_back("f(W_" + std::to_string(k) + ") is not contained in W'_" + std::to_string(k));
            continue;
        }
        if (rank(subspace_intersection(image_q, wk)) != fw.cols()) {
            rep.weight_strict = false;
            rep.issues.push_back("f(H) ∩ W'_" + std::to_string(k) + " is larger than f(W_" + std::to_string(k) +
                                 ")");
        }
    }
    std::set<int> levels;
    for (int p : src.listed_levels()) levels.insert(p);
    for (int p : tgt.listed_levels()) levels.insert(p);
    for (int p : levels) {
        ExactMatrix fp = image_of(ff, src.hodge_space(p));
        ExactMatrix tp = tgt.hodge_space(p);
        if (!span_contains(tp, fp)) {
            rep.hodge_compatible = false;
            rep.issues.push_back("f(F^" + std::to_string(p) + ") is not contained in F'^" + std::to_string(p));
            continue;
        }
        if (rank(subspace_intersection(image_f, tp)) != fp.cols()) {
            rep.hodge_strict = false;
            rep.issues.push_back("f(H) ∩ F'^" + std::to_string(p) + " is larger than f(F^" + std::to_string(p) +
                                 ")");
        }
    }
    return rep;
}

MorphismHomology morphism_homology(const MHSMorphism& f)
{
    auto rep = check_morphism(f);
    if (!rep.strict()) {
        std::string msg = "morphism_homology: map is not a strict morphism:";
        for (const auto& i : rep.issues) msg += " " + i + ";";
        throw InvalidInput(msg);
    }
    MorphismHomology out;
    const std::size_t n = f.source.rank();
    const std::size_t n2 = f.target.rank();
    IntMatrix ker = integer_kernel(f.matrix);
    out.kernel = subquotient(f.source, IntMatrix(n, 0), ker);
    IntMatrix img = saturated_basis(to_rational(f.matrix));
    out.image_rank = img.cols();
    out.cokernel = subquotient(f.target, img, IntMatrix::identity(n2));
    return out;
}

LatticeBasis hodge_classes(const MixedHodgeStructure& h, int p)
{
    ExactMatrix v = subspace_intersection(h.hodge_space(p), to_exact(h.weight_space(2 * p)));
    return {h.rank(), saturated_basis(rational_points(v))};
}

}  // namespace hodge1
