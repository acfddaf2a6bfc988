#include "hodge1/report.hpp"

#include <sstream>

#include "hodge1/errors.hpp"

namespace hodge1 {

namespace {

std::string num(long v) { return std::to_string(v); }

Json hodge_json(const MixedHodgeStructure& h)
{
    Json a = Json::array();
    for (const auto& [pq, dim] : hodge_numbers(h)) a.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", dim}});
    return a;
}

Json points_json(const std::vector<TorusPoint>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(point_json(x.rep));
    return a;
}

Json order_json(const TorusPresentation& t, const TorusPoint& v)
{
    auto o = point_order(t, v);
    if (!o) return "infinite";
    return o->get_str();
}

const char* mode_name(MembershipMode m) { return m == MembershipMode::strict ? "strict" : "isogeny"; }

int require_p(const RunOptions& o, const std::string& command)
{
    if (!o.p) throw UnsupportedInput(command + " needs -p");
    return *o.p;
}

Json motive_json(const HodgeMotive& hm)
{
    Json values = Json::array();
    for (const auto& v : hm.motive.values)
        values.push_back({{"point", point_json(v.rep)}, {"order", order_json(hm.motive.abelian, v)}});
    return {{"mode", mode_name(hm.mode)},
            {"lattice_rank", hm.lattice.cols()},
            {"abelian_rank", hm.abelian.lattice.cols()},
            {"abelian_dimension", hm.motive.abelian.dimension()},
            {"full_hodge_classes", hm.hodge_lattice.rank()},
            {"lattice", int_matrix_json(hm.lattice)},
            {"values", values}};
}

Json graded_json(const SimplicialCohomologyDatum& d)
{
    Json pieces = Json::array();
    for (const auto& [t, terms] : d.cohomology)
        for (std::size_t i = 0; i < d.components; ++i) {
            PureHodgeStructure g = weight_graded(d, t, static_cast<int>(i));
            if (g.rank() == 0) continue;
            pieces.push_back({{"weight", t},
                              {"degree", t + static_cast<int>(i)},
                              {"rank", g.rank()},
                              {"hodge_numbers", hodge_json(g.mhs())}});
        }
    return pieces;
}

Json degeneration_json(const DegenerationReport& r)
{
    Json ranks = Json::array();
    for (const auto& [t, rank] : r.graded_ranks) ranks.push_back({{"weight", t}, {"rank", rank}});
    Json out = {{"degree", r.degree}, {"graded_ranks", ranks}, {"pure", r.pure}, {"ranks_match", r.ranks_match}};
    if (r.full_rank) out["full_rank"] = *r.full_rank;
    Json issues = Json::array();
    for (const auto& s : r.issues) issues.push_back(s);
    out["issues"] = issues;
    return out;
}

Json square_json(const SquareReport& s)
{
    bool zero = true;
    for (const auto& v : s.boundary.values) zero = zero && is_zero_point(s.boundary.torus, v);
    Json witnesses = Json::array();
    for (const auto& w : s.witnesses) witnesses.push_back(w);
    return {{"commutes", s.commutes},
            {"kernel_rank_boundary", s.kernel_rank_boundary},
            {"kernel_rank_extension", s.kernel_rank_extension},
            {"image_rank", s.boundary.image_rank},
            {"source_rank", s.boundary.cocycles.cols()},
            {"boundary_zero", zero},
            {"boundary_values", points_json(s.boundary.values)},
            {"witnesses", witnesses}};
}

Json summary_json(const Document& doc)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MixedHodgeStructure>) {
                return {{"rank", x.rank()}, {"hodge_numbers", hodge_json(x)}};
            } else if constexpr (std::is_same_v<T, MHSComplex>) {
                Json ranks = Json::array();
                for (const auto& t : x.terms) ranks.push_back(t.rank());
                return {{"first", x.first}, {"term_ranks", ranks}};
            } else if constexpr (std::is_same_v<T, SimplicialCohomologyDatum>) {
                Json degrees = Json::array();
                for (const auto& [t, p] : x.cohomology) degrees.push_back(t);
                return {{"components", x.components}, {"degrees", degrees}, {"cycle_data", x.cycles.has_value()}};
            } else if constexpr (std::is_same_v<T, GluingSpec>) {
                Json degrees = Json::array();
                for (const auto& [t, p] : x.degrees) degrees.push_back(t);
                return {{"name", x.name},
                        {"degrees", degrees},
                        {"cycle_data", x.cycles.has_value()},
                        {"extension_table", x.extension.has_value()}};
            } else {
                return {{"lattice_rank", x.lattice_rank}, {"torus_rank", x.abelian.rank}};
            }
        },
        doc.payload);
}

Json run_validate(const Document& doc)
{
    validate_document(doc);
    return {{"status", "ok"}, {"summary", summary_json(doc)}};
}

Json run_hodge_numbers(const Document& doc)
{
    if (const auto* h = std::get_if<MixedHodgeStructure>(&doc.payload))
        return {{"rank", h->rank()}, {"hodge_numbers", hodge_json(*h)}};
    if (const auto* c = std::get_if<MHSComplex>(&doc.payload)) {
        Json degrees = Json::array();
        for (int i = c->first; i <= c->last(); ++i) {
            MHSCohomology h = cohomology_frame(*c, i);
            Json torsion = Json::array();
            for (const auto& t : h.torsion) torsion.push_back(t.get_str());
            degrees.push_back({{"degree", i},
                               {"rank", h.frame.mhs.rank()},
                               {"torsion", torsion},
                               {"hodge_numbers", hodge_json(h.frame.mhs)}});
        }
        return {{"cohomology", degrees}};
    }
    if (const auto* d = std::get_if<SimplicialCohomologyDatum>(&doc.payload)) return {{"graded", graded_json(*d)}};
    if (const auto* g = std::get_if<GluingSpec>(&doc.payload)) return {{"graded", graded_json(cech_two_gluing(*g))}};
    throw UnsupportedInput("hodge-numbers of a one-motive needs its realization; run realize -p first");
}

Json run_motive(const Document& doc, const RunOptions& o)
{
    const int p = require_p(o, "motive");
    if (const auto* h = std::get_if<MixedHodgeStructure>(&doc.payload)) {
        Json out = {{"p", p}};
        out["motive"] = motive_json(hodge_motive(*h, p, o.mode));
        return out;
    }
    const auto* g = std::get_if<GluingSpec>(&doc.payload);
    if (!g) throw UnsupportedInput("motive applies to mhs and gluing documents, not " + kind_name(doc.kind()));
    const int n = o.n.value_or(2 * p);
    AnalysisBundle b = mv_cohomology(*g, n, p, o.mode);
    Json out = {{"p", p}, {"n", n}};
    Json graded = Json::array();
    for (const auto& [t, piece] : b.graded)
        graded.push_back({{"weight", t}, {"rank", piece.rank()}, {"hodge_numbers", hodge_json(piece.mhs())}});
    out["graded"] = graded;
    out["total_rank"] = b.h_e ? Json(b.h_e->rank()) : Json(nullptr);
    if (b.motive) {
        out["motive"] = motive_json(*b.motive);
        out["motive"]["full_hodge_classes"] = b.full_hodge_classes;
        out["motive_classes"] = int_matrix_json(b.motive_classes);
    }
    if (b.square) out["square"] = square_json(*b.square);
    out["degeneration"] = degeneration_json(b.degeneration);
    Json notes = Json::array();
    for (const auto& s : b.notes) notes.push_back(s);
    out["notes"] = notes;
    return out;
}

Json row_json(const MHSComplex& row)
{
    Json ranks = Json::array(), diffs = Json::array();
    for (const auto& t : row.terms) ranks.push_back(t.rank());
    for (const auto& d : row.differentials) diffs.push_back(int_matrix_json(d));
    return {{"term_ranks", ranks}, {"differentials", diffs}};
}

Json run_glue(const Document& doc)
{
    SimplicialCohomologyDatum d;
    if (const auto* g = std::get_if<GluingSpec>(&doc.payload))
        d = cech_two_gluing(*g);
    else if (const auto* x = std::get_if<SimplicialCohomologyDatum>(&doc.payload))
        d = *x;
    else
        throw UnsupportedInput("glue applies to gluing and simplicial-datum documents, not " + kind_name(doc.kind()));
    Json rows = Json::array();
    for (const auto& [t, terms] : d.cohomology) {
        Json r = row_json(row_complex(d, t));
        r["weight"] = t;
        rows.push_back(r);
    }
    return {{"components", d.components}, {"rows", rows}, {"graded", graded_json(d)}};
}

Json run_square(const Document& doc, const RunOptions& o)
{
    const int p = require_p(o, "square-check");
    const auto* g = std::get_if<GluingSpec>(&doc.payload);
    if (!g)
        throw UnsupportedInput("square-check needs an extension table, which only gluing documents carry; got " +
                               kind_name(doc.kind()));
    const int i = o.i.value_or(0);
    if (i != 0)
        throw UnsupportedInput("for a two-piece gluing the square lives in degree i = 0 (n = 2p), not i = " + num(i));
    AnalysisBundle b = mv_cohomology(*g, 2 * p, p, o.mode);
    if (!b.square) throw UnsupportedInput("square-check needs the cycle data of the gluing, which are missing");
    Json out = {{"p", p}, {"i", i}};
    out["square"] = square_json(*b.square);
    return out;
}

Json run_realize(const Document& doc, const RunOptions& o)
{
    const int p = require_p(o, "realize");
    const auto* m = std::get_if<OneMotive>(&doc.payload);
    if (!m) throw UnsupportedInput("realize applies to one-motive documents, not " + kind_name(doc.kind()));
    MixedHodgeStructure h = realize_one_motive(*m, p);
    HodgeMotive back = hodge_motive(h, p, o.mode);
    return {{"p", p},
            {"rank", h.rank()},
            {"hodge_numbers", hodge_json(h)},
            {"recovered", motive_json(back)},
            {"structure", mhs_json(h)}};
}

std::string types_text(const Json& numbers)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& e : numbers) {
        os << (first ? "" : " + ") << "(" << e["p"].get<int>() << "," << e["q"].get<int>() << ")";
        if (e["dim"].get<std::size_t>() != 1) os << "^" << e["dim"].get<std::size_t>();
        first = false;
    }
    return first ? "none" : os.str();
}

std::string point_text(const Json& point)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < point.size(); ++k) {
        if (k) os << ", ";
        if (point[k].is_string()) {
            os << point[k].get<std::string>();
        } else {
            os << "[";
            for (std::size_t c = 0; c < 4; ++c) os << (c ? " " : "") << point[k][c].get<std::string>();
            os << "]";
        }
    }
    os << ")";
    return os.str();
}

void motive_text(std::ostream& os, const Json& m, int p)
{
    const auto lattice = m["lattice_rank"].get<std::size_t>(), abelian = m["abelian_rank"].get<std::size_t>();
    os << "Hodge 1-motive (p = " << p << ", " << m["mode"].get<std::string>() << " mode): lattice rank " << lattice
       << " → ";
    if (abelian == 0)
        os << "0\n";
    else
        os << "abelian torus of rank " << abelian << " (dimension " << m["abelian_dimension"].get<std::size_t>() << ")\n";
    os << "lattice rank " << lattice << ", abelian part " << abelian << ", full Hodge classes "
       << m["full_hodge_classes"].get<std::size_t>() << "\n";
    const auto& values = m["values"];
    for (std::size_t j = 0; j < values.size(); ++j)
        if (abelian > 0)
            os << "  u(e_" << j + 1 << ") = " << point_text(values[j]["point"]) << ", order "
               << values[j]["order"].get<std::string>() << "\n";
}

void square_text(std::ostream& os, const Json& s, int i)
{
    os << "λ^" << i;
    if (s["boundary_zero"].get<bool>())
        os << " = 0";
    else
        os << ": image rank " << s["image_rank"].get<std::size_t>();
    os << " on H^" << i << "(NS) of rank " << s["source_rank"].get<std::size_t>() << "\n";
    os << "square " << (s["commutes"].get<bool>() ? "commutes" : "does NOT commute") << ": ker λ rank "
       << s["kernel_rank_boundary"].get<std::size_t>() << ", ker(e∘cl) rank " << s["kernel_rank_extension"].get<std::size_t>()
       << "\n";
    for (const auto& w : s["witnesses"]) os << "  witness: " << w.get<std::string>() << "\n";
}

void graded_text(std::ostream& os, const Json& graded)
{
    for (const auto& g : graded)
        os << "gr^W_" << g["weight"].get<int>() << " H^" << g["degree"].get<int>() << ": rank " << g["rank"].get<std::size_t>()
           << ", types " << types_text(g["hodge_numbers"]) << "\n";
}

}  // namespace

std::vector<std::string> command_names()
{
    return {"validate", "hodge-numbers", "motive", "glue", "square-check", "realize"};
}

Json run_command(const std::string& command, const Document& doc, const RunOptions& opts)
{
    Json out = {{"schema", kSchemaVersion}, {"command", command}, {"kind", kind_name(doc.kind())}, {"field", doc.field}};
    Json body;
    if (command == "validate")
        body = run_validate(doc);
    else if (command == "hodge-numbers")
        body = run_hodge_numbers(doc);
    else if (command == "motive")
        body = run_motive(doc, opts);
    else if (command == "glue")
        body = run_glue(doc);
    else if (command == "square-check")
        body = run_square(doc, opts);
    else if (command == "realize")
        body = run_realize(doc, opts);
    else
        throw UnsupportedInput("unknown command '" + command + "'");
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    return out;
}

std::string render_text(const Json& r)
{
    std::ostringstream os;
    const std::string command = r["command"].get<std::string>();
    if (command == "validate") {
        os << "OK: " << r["kind"].get<std::string>() << "\n";
        for (auto it = r["summary"].begin(); it != r["summary"].end(); ++it)
            if (it.key() == "hodge_numbers")
                os << "  types: " << types_text(it.value()) << "\n";
            else
                os << "  " << it.key() << ": " << it.value().dump() << "\n";
    } else if (command == "hodge-numbers") {
        if (r.contains("hodge_numbers")) os << "rank " << r["rank"].get<std::size_t>() << ", types " << types_text(r["hodge_numbers"]) << "\n";
        if (r.contains("cohomology"))
            for (const auto& c : r["cohomology"]) {
                os << "H^" << c["degree"].get<int>() << ": rank " << c["rank"].get<std::size_t>() << ", types "
                   << types_text(c["hodge_numbers"]);
                if (!c["torsion"].empty()) os << ", torsion " << c["torsion"].dump();
                os << "\n";
            }
        if (r.contains("graded")) graded_text(os, r["graded"]);
    } else if (command == "motive") {
        const int p = r["p"].get<int>();
        if (r.contains("n")) {
            const int n = r["n"].get<int>();
            for (const auto& g : r["graded"])
                os << "gr^W_" << g["weight"].get<int>() << " H^" << n << ": rank " << g["rank"].get<std::size_t>()
                   << ", types " << types_text(g["hodge_numbers"]) << "\n";
            if (!r["total_rank"].is_null()) os << "H^" << n << " (assembled H^e): rank " << r["total_rank"].get<std::size_t>() << "\n";
        }
        if (r.contains("motive")) motive_text(os, r["motive"], p);
        if (r.contains("square")) square_text(os, r["square"], 0);
        if (r.contains("degeneration")) {
            const auto& d = r["degeneration"];
            os << "degeneration guard: " << (d["pure"].get<bool>() && d["ranks_match"].get<bool>() ? "ok" : "FAILED") << "\n";
            for (const auto& s : d["issues"]) os << "  " << s.get<std::string>() << "\n";
        }
        if (r.contains("notes"))
            for (const auto& s : r["notes"]) os << "note: " << s.get<std::string>() << "\n";
    } else if (command == "glue") {
        os << "simplicial datum with " << r["components"].get<std::size_t>() << " components\n";
        for (const auto& row : r["rows"]) {
            os << "row " << row["weight"].get<int>() << ": ranks " << row["term_ranks"].dump();
            for (const auto& d : row["differentials"]) os << ", d = " << d.dump();
            os << "\n";
        }
        graded_text(os, r["graded"]);
    } else if (command == "square-check") {
        square_text(os, r["square"], r["i"].get<int>());
    } else if (command == "realize") {
        os << "realized structure: rank " << r["rank"].get<std::size_t>() << ", types " << types_text(r["hodge_numbers"])
           << "\n";
        os << "recovered ";
        motive_text(os, r["recovered"], r["p"].get<int>());
    }
    return os.str();
}

Document realized_document(const Document& doc, int p)
{
    const auto* m = std::get_if<OneMotive>(&doc.payload);
    if (!m) throw UnsupportedInput("realize applies to one-motive documents, not " + kind_name(doc.kind()));
    return make_document(realize_one_motive(*m, p), {"realization of a one-motive at p = " + std::to_string(p)});
}

}  // namespace hodge1
