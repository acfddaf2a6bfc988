#include "hodge1/document.hpp"

#include <fstream>
#include <sstream>

#include "hodge1/errors.hpp"

namespace hodge1 {

ParseError::ParseError(const std::string& message, std::string field, std::size_t line)
    : std::runtime_error(message), field_(std::move(field)), line_(line)
{
}

std::string kind_name(DocumentKind k)
{
    switch (k) {
    case DocumentKind::mhs: return "mhs";
    case DocumentKind::complex: return "complex";
    case DocumentKind::simplicial_datum: return "simplicial-datum";
    case DocumentKind::gluing: return "gluing";
    case DocumentKind::one_motive: return "one-motive";
    }
    return "unknown";
}

namespace {

// ---- reading -------------------------------------------------------------

class Node {
public:
    Node(const Json& j, std::string path, std::int64_t d) : j_(j), path_(std::move(path)), d_(d) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_ + ": " + what, path_); }

    const std::string& path() const { return path_; }

    void allow(std::initializer_list<const char*> keys) const
    {
        require_object();
        for (auto it = j_.begin(); it != j_.end(); ++it) {
            bool known = false;
            for (const char* k : keys) known = known || it.key() == k;
            if (!known) Node(*it, path_ + "." + it.key(), d_).fail("unknown field");
        }
    }

    bool has(const char* key) const
    {
        require_object();
        return j_.contains(key);
    }

    Node operator[](const char* key) const
    {
        require_object();
        auto it = j_.find(key);
        if (it == j_.end()) fail(std::string("missing field '") + key + "'");
        return {*it, path_ + "." + key, d_};
    }

    std::size_t size() const
    {
        if (!j_.is_array()) fail("expected an array");
        return j_.size();
    }

    Node at(std::size_t i) const { return {j_.at(i), path_ + "[" + std::to_string(i) + "]", d_}; }

    long integer() const
    {
        if (j_.is_number_float()) fail("exact rationals required, got a floating-point number");
        if (!j_.is_number_integer()) fail("expected an integer");
        return j_.get<long>();
    }

    std::size_t count() const
    {
        long v = integer();
        if (v < 0) fail("expected a non-negative integer");
        return static_cast<std::size_t>(v);
    }

    std::string string() const
    {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    bool boolean() const
    {
        if (!j_.is_boolean()) fail("expected true or false");
        return j_.get<bool>();
    }

    Rational rational() const
    {
        if (j_.is_number_float()) fail("exact rationals required, got a floating-point number");
        if (j_.is_number_integer()) return Rational(j_.get<long>());
        if (!j_.is_string()) fail("expected a rational as a string \"a/b\"");
        try {
            return parse_rational(j_.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(e.what());
        }
    }

    Integer whole() const
    {
        Rational q = rational();
        if (q.get_den() != 1) fail("expected an integer, got " + to_string(q));
        return q.get_num();
    }

    Scalar scalar() const
    {
        if (!j_.is_array()) return Scalar(rational());
        if (j_.size() != 4) fail("extended scalars are 4-tuples over {1, i, sqrt d, i sqrt d}");
        std::array<Rational, 4> c;
        for (std::size_t k = 0; k < 4; ++k) c[k] = at(k).rational();
        if (d_ == 1 && (sgn(c[2]) != 0 || sgn(c[3]) != 0))
            fail("radical coordinates need a field with d > 1");
        return Scalar(c[0], c[1], c[2], c[3], d_);
    }

    template <class T, class Entry>
    Matrix<T> matrix(Entry entry) const
    {
        if (j_.is_object()) {
            allow({"shape", "rows"});
            Node shape = (*this)["shape"];
            if (shape.size() != 2) shape.fail("expected [rows, cols]");
            const std::size_t r = shape.at(0).count(), c = shape.at(1).count();
            if (!has("rows")) {
                if (r != 0 && c != 0) fail("a non-empty matrix needs its rows");
                return Matrix<T>(r, c);
            }
            Matrix<T> m = (*this)["rows"].template matrix<T>(entry);
            if (m.rows() != r || (r > 0 && m.cols() != c)) fail("rows do not match the declared shape");
            return r == 0 ? Matrix<T>(0, c) : m;
        }
        const std::size_t r = size();
        if (r == 0) return Matrix<T>(0, 0);
        const std::size_t c = at(0).size();
        Matrix<T> m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            Node row = at(i);
            if (row.size() != c)
                row.fail("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(c));
            for (std::size_t k = 0; k < c; ++k) m(i, k) = entry(row.at(k));
        }
        return m;
    }

    IntMatrix int_matrix() const { return matrix<Integer>([](const Node& n) { return n.whole(); }); }
    RatMatrix rat_matrix() const { return matrix<Rational>([](const Node& n) { return n.rational(); }); }
    ExactMatrix exact_matrix() const { return matrix<Scalar>([](const Node& n) { return n.scalar(); }); }

    std::vector<Scalar> point() const
    {
        std::vector<Scalar> v;
        for (std::size_t k = 0; k < size(); ++k) v.push_back(at(k).scalar());
        return v;
    }

private:
    void require_object() const
    {
        if (!j_.is_object()) fail("expected an object");
    }

    const Json& j_;
    std::string path_;
    std::int64_t d_;
};

MixedHodgeStructure read_mhs(const Node& n)
{
    n.allow({"rank", "weights", "hodge"});
    const std::size_t rank = n["rank"].count();
    std::vector<WeightStep> ws;
    Node weights = n["weights"];
    for (std::size_t k = 0; k < weights.size(); ++k) {
        Node s = weights.at(k);
        s.allow({"weight", "basis"});
        ws.push_back({static_cast<int>(s["weight"].integer()), s["basis"].rat_matrix()});
        if (ws.back().basis.rows() == 0 && ws.back().basis.cols() == 0) ws.back().basis = RatMatrix(rank, 0);
        if (ws.back().basis.rows() != rank) s["basis"].fail("expected " + std::to_string(rank) + " rows");
    }
    std::vector<HodgeStep> fs;
    Node hodge = n["hodge"];
    for (std::size_t k = 0; k < hodge.size(); ++k) {
        Node s = hodge.at(k);
        s.allow({"level", "basis"});
        fs.push_back({static_cast<int>(s["level"].integer()), s["basis"].exact_matrix()});
        if (fs.back().basis.rows() == 0 && fs.back().basis.cols() == 0) fs.back().basis = ExactMatrix(rank, 0);
        if (fs.back().basis.rows() != rank) s["basis"].fail("expected " + std::to_string(rank) + " rows");
    }
    try {
        return MixedHodgeStructure(rank, std::move(ws), std::move(fs));
    } catch (const InvalidInput& e) {
        n.fail(e.what());
    }
}

PureHodgeStructure read_pure(const Node& n, int weight)
{
    MixedHodgeStructure h = read_mhs(n);
    try {
        return PureHodgeStructure(h, weight);
    } catch (const InvalidInput& e) {
        throw InvalidInput(n.path() + ": " + e.what());
    }
}

std::vector<IntMatrix> read_int_matrices(const Node& n)
{
    std::vector<IntMatrix> out;
    for (std::size_t k = 0; k < n.size(); ++k) out.push_back(n.at(k).int_matrix());
    return out;
}

std::vector<TorusPoint> read_points(const Node& n)
{
    std::vector<TorusPoint> out;
    for (std::size_t k = 0; k < n.size(); ++k) out.push_back({n.at(k).point()});
    return out;
}

MHSComplex read_complex(const Node& n)
{
    n.allow({"first", "terms", "differentials"});
    MHSComplex c;
    c.first = static_cast<int>(n["first"].integer());
    Node terms = n["terms"];
    for (std::size_t k = 0; k < terms.size(); ++k) c.terms.push_back(read_mhs(terms.at(k)));
    c.differentials = read_int_matrices(n["differentials"]);
    return c;
}

CycleData read_cycle_data(const Node& n)
{
    n.allow({"p", "ns_ranks", "ns_faces", "cycle_class", "abel_jacobi"});
    CycleData c;
    c.p = static_cast<int>(n["p"].integer());
    Node ranks = n["ns_ranks"];
    for (std::size_t k = 0; k < ranks.size(); ++k) c.ns_ranks.push_back(ranks.at(k).count());
    Node faces = n["ns_faces"];
    for (std::size_t s = 0; s < faces.size(); ++s) c.ns_faces.push_back(read_int_matrices(faces.at(s)));
    c.cycle_class = read_int_matrices(n["cycle_class"]);
    Node aj = n["abel_jacobi"];
    for (std::size_t s = 0; s < aj.size(); ++s) {
        std::vector<std::vector<TorusPoint>> level;
        for (std::size_t k = 0; k < aj.at(s).size(); ++k) level.push_back(read_points(aj.at(s).at(k)));
        c.abel_jacobi.push_back(level);
    }
    return c;
}

std::vector<std::string> read_strings(const Node& n)
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n.size(); ++k) out.push_back(n.at(k).string());
    return out;
}

SimplicialCohomologyDatum read_datum(const Node& n)
{
    n.allow({"components", "cohomology", "faces", "cycles", "notes"});
    SimplicialCohomologyDatum d;
    d.components = n["components"].count();
    Node coh = n["cohomology"];
    for (std::size_t k = 0; k < coh.size(); ++k) {
        Node e = coh.at(k);
        e.allow({"degree", "pieces"});
        const int t = static_cast<int>(e["degree"].integer());
        if (d.cohomology.count(t)) e["degree"].fail("degree " + std::to_string(t) + " listed twice");
        Node pieces = e["pieces"];
        for (std::size_t s = 0; s < pieces.size(); ++s) d.cohomology[t].push_back(read_pure(pieces.at(s), t));
    }
    Node faces = n["faces"];
    for (std::size_t k = 0; k < faces.size(); ++k) {
        Node e = faces.at(k);
        e.allow({"degree", "levels"});
        const int t = static_cast<int>(e["degree"].integer());
        if (d.faces.count(t)) e["degree"].fail("degree " + std::to_string(t) + " listed twice");
        Node levels = e["levels"];
        auto& out = d.faces[t];
        for (std::size_t s = 0; s < levels.size(); ++s) out.push_back(read_int_matrices(levels.at(s)));
    }
    if (n.has("cycles")) d.cycles = read_cycle_data(n["cycles"]);
    if (n.has("notes")) d.notes = read_strings(n["notes"]);
    return d;
}

GluingSpec read_gluing(const Node& n)
{
    n.allow({"name", "degrees", "cycles", "extension", "full", "notes"});
    GluingSpec g;
    if (n.has("name")) g.name = n["name"].string();
    Node degrees = n["degrees"];
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        Node e = degrees.at(k);
        e.allow({"degree", "y", "z", "restriction"});
        const int t = static_cast<int>(e["degree"].integer());
        if (g.degrees.count(t)) e["degree"].fail("degree " + std::to_string(t) + " listed twice");
        GluingDegree piece{read_pure(e["y"], t), read_pure(e["z"], t), e["restriction"].int_matrix()};
        if (piece.restriction.rows() == 0 && piece.restriction.cols() == 0)
            piece.restriction = IntMatrix(piece.z.rank(), piece.y.rank());
        g.degrees.emplace(t, std::move(piece));
    }
    if (n.has("cycles")) {
        Node c = n["cycles"];
        c.allow({"p", "class_y", "class_z", "ns_restriction", "abel_jacobi"});
        g.cycles = CycleGluing{static_cast<int>(c["p"].integer()), c["class_y"].int_matrix(), c["class_z"].int_matrix(),
                               c["ns_restriction"].int_matrix(), read_points(c["abel_jacobi"])};
    }
    if (n.has("extension")) {
        Node e = n["extension"];
        e.allow({"p", "classes", "values"});
        ExtensionData x;
        x.p = static_cast<int>(e["p"].integer());
        x.classes = e["classes"].int_matrix();
        Node values = e["values"];
        for (std::size_t k = 0; k < values.size(); ++k) x.values.push_back(values.at(k).point());
        g.extension = x;
    }
    if (n.has("full")) {
        Node full = n["full"];
        for (std::size_t k = 0; k < full.size(); ++k) {
            Node e = full.at(k);
            e.allow({"degree", "structure"});
            g.full[static_cast<int>(e["degree"].integer())] = read_mhs(e["structure"]);
        }
    }
    if (n.has("notes")) g.notes = read_strings(n["notes"]);
    return g;
}

OneMotive read_one_motive(const Node& n)
{
    n.allow({"lattice_rank", "torus", "values", "torus_part_rank"});
    OneMotive m;
    m.lattice_rank = n["lattice_rank"].count();
    Node t = n["torus"];
    t.allow({"rank", "hodge", "level_one", "provenance"});
    m.abelian.rank = t["rank"].count();
    m.abelian.hodge = t["hodge"].exact_matrix();
    if (m.abelian.hodge.rows() == 0 && m.abelian.hodge.cols() == 0) m.abelian.hodge = ExactMatrix(m.abelian.rank, 0);
    m.abelian.level_one = t["level_one"].boolean();
    if (t.has("provenance")) m.abelian.provenance = t["provenance"].string();
    m.values = read_points(n["values"]);
    if (n.has("torus_part_rank")) m.torus_part_rank = n["torus_part_rank"].count();
    return m;
}

// ---- writing -------------------------------------------------------------

Json write_rational(const Rational& q) { return to_string(q); }

Json write_integer(const Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json write_scalar(const Scalar& s)
{
    if (s.is_rational()) return write_rational(s.a());
    Json a = Json::array();
    for (const auto& c : s.coordinates()) a.push_back(write_rational(c));
    return a;
}

template <class T, class Entry>
Json write_matrix(const Matrix<T>& m, Entry entry)
{
    if (m.rows() == 0 || m.cols() == 0) return Json{{"shape", {m.rows(), m.cols()}}};
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Json write(const IntMatrix& m) { return write_matrix(m, write_integer); }
Json write(const RatMatrix& m) { return write_matrix(m, write_rational); }
Json write(const ExactMatrix& m) { return write_matrix(m, write_scalar); }

Json write_point(const std::vector<Scalar>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(write_scalar(x));
    return a;
}

Json write_points(const std::vector<TorusPoint>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(write_point(x.rep));
    return a;
}

Json write_matrices(const std::vector<IntMatrix>& v)
{
    Json a = Json::array();
    for (const auto& m : v) a.push_back(write(m));
    return a;
}

Json write_mhs(const MixedHodgeStructure& h)
{
    Json ws = Json::array(), fs = Json::array();
    for (const auto& s : h.weight_steps()) ws.push_back({{"weight", s.weight}, {"basis", write(s.basis)}});
    for (const auto& s : h.hodge_steps()) fs.push_back({{"level", s.level}, {"basis", write(s.basis)}});
    return {{"rank", h.rank()}, {"weights", ws}, {"hodge", fs}};
}

Json write_complex(const MHSComplex& c)
{
    Json terms = Json::array();
    for (const auto& t : c.terms) terms.push_back(write_mhs(t));
    return {{"first", c.first}, {"terms", terms}, {"differentials", write_matrices(c.differentials)}};
}

Json write_strings(const std::vector<std::string>& v)
{
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

Json write_datum(const SimplicialCohomologyDatum& d)
{
    Json out;
    out["components"] = d.components;
    Json coh = Json::array();
    for (const auto& [t, pieces] : d.cohomology) {
        Json ps = Json::array();
        for (const auto& p : pieces) ps.push_back(write_mhs(p.mhs()));
        coh.push_back({{"degree", t}, {"pieces", ps}});
    }
    out["cohomology"] = coh;
    Json faces = Json::array();
    for (const auto& [t, levels] : d.faces) {
        Json ls = Json::array();
        for (const auto& l : levels) ls.push_back(write_matrices(l));
        faces.push_back({{"degree", t}, {"levels", ls}});
    }
    out["faces"] = faces;
    if (d.cycles) {
        const CycleData& c = *d.cycles;
        Json ranks = Json::array(), ns_faces = Json::array(), aj = Json::array();
        for (auto r : c.ns_ranks) ranks.push_back(r);
        for (const auto& f : c.ns_faces) ns_faces.push_back(write_matrices(f));
        for (const auto& level : c.abel_jacobi) {
            Json l = Json::array();
            for (const auto& face : level) l.push_back(write_points(face));
            aj.push_back(l);
        }
        out["cycles"] = {{"p", c.p},
                         {"ns_ranks", ranks},
                         {"ns_faces", ns_faces},
                         {"cycle_class", write_matrices(c.cycle_class)},
                         {"abel_jacobi", aj}};
    }
    if (!d.notes.empty()) out["notes"] = write_strings(d.notes);
    return out;
}

Json write_gluing(const GluingSpec& g)
{
    Json out;
    if (!g.name.empty()) out["name"] = g.name;
    Json degrees = Json::array();
    for (const auto& [t, piece] : g.degrees)
        degrees.push_back({{"degree", t},
                           {"y", write_mhs(piece.y.mhs())},
                           {"z", write_mhs(piece.z.mhs())},
                           {"restriction", write(piece.restriction)}});
    out["degrees"] = degrees;
    if (g.cycles) {
        const CycleGluing& c = *g.cycles;
        out["cycles"] = {{"p", c.p},
                         {"class_y", write(c.class_y)},
                         {"class_z", write(c.class_z)},
                         {"ns_restriction", write(c.ns_restriction)},
                         {"abel_jacobi", write_points(c.abel_jacobi)}};
    }
    if (g.extension) {
        Json values = Json::array();
        for (const auto& v : g.extension->values) values.push_back(write_point(v));
        out["extension"] = {{"p", g.extension->p}, {"classes", write(g.extension->classes)}, {"values", values}};
    }
    if (!g.full.empty()) {
        Json full = Json::array();
        for (const auto& [n, h] : g.full) full.push_back({{"degree", n}, {"structure", write_mhs(h)}});
        out["full"] = full;
    }
    if (!g.notes.empty()) out["notes"] = write_strings(g.notes);
    return out;
}

Json write_one_motive(const OneMotive& m)
{
    Json torus = {{"rank", m.abelian.rank},
                  {"hodge", write(m.abelian.hodge)},
                  {"level_one", m.abelian.level_one},
                  {"provenance", m.abelian.provenance}};
    return {{"lattice_rank", m.lattice_rank},
            {"torus", torus},
            {"values", write_points(m.values)},
            {"torus_part_rank", m.torus_part_rank}};
}

// ---- radicands -------------------------------------------------------------

class RadicandScan {
public:
    void add(const Scalar& s)
    {
        if (!s.has_radical()) return;
        if (d_ != 1 && d_ != s.radicand())
            throw InvalidInput("payload mixes the radicands " + std::to_string(d_) + " and " + std::to_string(s.radicand()));
        d_ = s.radicand();
    }
    void add(const ExactMatrix& m)
    {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t k = 0; k < m.cols(); ++k) add(m(i, k));
    }
    void add(const MixedHodgeStructure& h)
    {
        for (const auto& s : h.hodge_steps()) add(s.basis);
    }
    void add(const std::vector<Scalar>& v)
    {
        for (const auto& x : v) add(x);
    }
    void add(const std::vector<TorusPoint>& v)
    {
        for (const auto& x : v) add(x.rep);
    }
    std::int64_t value() const { return d_; }

private:
    std::int64_t d_ = 1;
};

}  // namespace

std::int64_t payload_radicand(const Payload& p)
{
    RadicandScan scan;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MixedHodgeStructure>) {
                scan.add(x);
            } else if constexpr (std::is_same_v<T, MHSComplex>) {
                for (const auto& t : x.terms) scan.add(t);
            } else if constexpr (std::is_same_v<T, SimplicialCohomologyDatum>) {
                for (const auto& [t, pieces] : x.cohomology)
                    for (const auto& h : pieces) scan.add(h.mhs());
                if (x.cycles)
                    for (const auto& level : x.cycles->abel_jacobi)
                        for (const auto& face : level) scan.add(face);
            } else if constexpr (std::is_same_v<T, GluingSpec>) {
                for (const auto& [t, piece] : x.degrees) {
                    scan.add(piece.y.mhs());
                    scan.add(piece.z.mhs());
                }
                if (x.cycles) scan.add(x.cycles->abel_jacobi);
                if (x.extension)
                    for (const auto& v : x.extension->values) scan.add(v);
                for (const auto& [n, h] : x.full) scan.add(h);
            } else {
                scan.add(x.abelian.hodge);
                scan.add(x.values);
            }
        },
        p);
    return scan.value();
}

Document make_document(Payload p, std::vector<std::string> notes)
{
    Document d;
    d.field = payload_radicand(p);
    d.payload = std::move(p);
    d.notes = std::move(notes);
    return d;
}

void validate_document(const Document& d)
{
    if (d.field < 1 || !is_square_free(d.field))
        throw InvalidInput("field radicand d = " + std::to_string(d.field) + " is not a positive square-free integer");
    const std::int64_t used = payload_radicand(d.payload);
    if (used != 1 && used != d.field)
        throw InvalidInput("payload uses sqrt " + std::to_string(used) + " but the field declares d = " +
                           std::to_string(d.field));
    std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MixedHodgeStructure>) {
                require_valid(x);
            } else if constexpr (std::is_same_v<T, MHSComplex>) {
                require_complex(x);
            } else if constexpr (std::is_same_v<T, SimplicialCohomologyDatum>) {
                require_datum(x);
            } else if constexpr (std::is_same_v<T, GluingSpec>) {
                for (const auto& [n, h] : x.full) require_valid(h, "H^" + std::to_string(n) + "(X)");
                cech_two_gluing(x);
            } else {
                if (x.abelian.hodge.rows() != x.abelian.rank)
                    throw InvalidInput("torus F has " + std::to_string(x.abelian.hodge.rows()) + " rows for a rank " +
                                       std::to_string(x.abelian.rank) + " lattice");
                make_torus(x.abelian.hodge, x.abelian.level_one, x.abelian.provenance);
                if (x.values.size() != x.lattice_rank)
                    throw InvalidInput("one-motive has " + std::to_string(x.values.size()) + " values for a rank " +
                                       std::to_string(x.lattice_rank) + " lattice");
                for (const auto& v : x.values)
                    if (v.rep.size() != x.abelian.rank)
                        throw InvalidInput("one-motive values need " + std::to_string(x.abelian.rank) + " coordinates");
            }
        },
        d.payload);
}

Document parse_document(const std::string& text, const std::string& source)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t k = 0; k < e.byte && k < text.size(); ++k)
            if (text[k] == '\n') ++line;
        throw ParseError(source + ":" + std::to_string(line) + ": syntax error: " + e.what(), "", line);
    }
    try {
        Node root(j, "document", 1);
        root.allow({"schema", "field", "kind", "payload", "notes"});
        Document d;
        d.schema = static_cast<int>(root["schema"].integer());
        if (d.schema != kSchemaVersion)
            root["schema"].fail("unsupported schema version " + std::to_string(d.schema) + " (expected " +
                                std::to_string(kSchemaVersion) + ")");
        Node field = root["field"];
        field.allow({"d"});
        d.field = field["d"].integer();
        if (d.field < 1 || !is_square_free(d.field)) field["d"].fail("d must be a positive square-free integer");
        const std::string kind = root["kind"].string();
        if (!j.contains("payload")) root.fail("missing field 'payload'");
        Node payload(j.at("payload"), "payload", d.field);
        if (kind == "mhs") {
            payload.allow({"structure"});
            d.payload = read_mhs(payload["structure"]);
        } else if (kind == "complex") {
            d.payload = read_complex(payload);
        } else if (kind == "simplicial-datum") {
            d.payload = read_datum(payload);
        } else if (kind == "gluing") {
            d.payload = read_gluing(payload);
        } else if (kind == "one-motive") {
            d.payload = read_one_motive(payload);
        } else {
            root["kind"].fail("unknown kind '" + kind + "' (mhs, complex, simplicial-datum, gluing, one-motive)");
        }
        if (root.has("notes")) d.notes = read_strings(root["notes"]);
        validate_document(d);
        return d;
    } catch (const ParseError& e) {
        throw ParseError(source + ": " + e.what(), e.field(), e.line());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source + ": " + e.what(), "");
    }
}

Document load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path, "");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

namespace {

bool has_object(const Json& j)
{
    if (j.is_object()) return true;
    if (j.is_array())
        for (const auto& e : j)
            if (has_object(e)) return true;
    return false;
}

void pretty(const Json& j, std::string& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            pretty(it.value(), out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
        return;
    }
    if (j.is_array() && !j.empty() && (has_object(j) || j.dump().size() > 100)) {
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k) out += ",\n";
            out += pad;
            pretty(j[k], out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
        return;
    }
    std::string flat = j.dump();
    if (j.is_array()) {
        // Compact arrays read better with a space after each comma.
        std::string spaced;
        bool in_string = false;
        for (std::size_t k = 0; k < flat.size(); ++k) {
            char ch = flat[k];
            if (ch == '"' && (k == 0 || flat[k - 1] != '\\')) in_string = !in_string;
            spaced += ch;
            if (ch == ',' && !in_string) spaced += ' ';
        }
        flat = spaced;
    }
    out += flat;
}

}  // namespace

std::string dump_pretty(const Json& j)
{
    std::string out;
    pretty(j, out, 0);
    return out + "\n";
}

Json scalar_json(const Scalar& s) { return write_scalar(s); }
Json point_json(const std::vector<Scalar>& v) { return write_point(v); }
Json int_matrix_json(const IntMatrix& m) { return write(m); }
Json mhs_json(const MixedHodgeStructure& h) { return write_mhs(h); }

std::string serialize(const Document& d)
{
    Json out;
    out["schema"] = d.schema;
    out["field"] = {{"d", d.field}};
    out["kind"] = kind_name(d.kind());
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, MixedHodgeStructure>)
                out["payload"] = {{"structure", write_mhs(x)}};
            else if constexpr (std::is_same_v<T, MHSComplex>)
                out["payload"] = write_complex(x);
            else if constexpr (std::is_same_v<T, SimplicialCohomologyDatum>)
                out["payload"] = write_datum(x);
            else if constexpr (std::is_same_v<T, GluingSpec>)
                out["payload"] = write_gluing(x);
            else
                out["payload"] = write_one_motive(x);
        },
        d.payload);
    if (!d.notes.empty()) out["notes"] = write_strings(d.notes);
    return dump_pretty(out);
}

}  // namespace hodge1
