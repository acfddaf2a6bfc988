#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hodge1/errors.hpp"
#include "hodge1/report.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"
#include "support/simplicial.hpp"
#include "support/two_step.hpp"

using namespace hodge1;
namespace fs = std::filesystem;

namespace {

const std::string kSource = HODGE1_SOURCE_DIR;
const std::string kTool = HODGE1_TOOL;

std::string fixture_path(const std::string& name) { return kSource + "/data/fixtures/" + name + ".json"; }
std::string corpus_path(const std::string& name) { return kSource + "/tests/data/" + name + ".json"; }

std::string read_file(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome run_tool(const std::string& args, const std::string& env = "")
{
    static int counter = 0;
    fs::path tmp = fs::temp_directory_path() / ("hodge1_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::string cmd = env + " \"" + kTool + "\" " + args + " > \"" + tmp.string() + "\" 2>/dev/null";
    int status = std::system(cmd.c_str());
    Outcome o;
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.out = read_file(tmp);
    fs::remove(tmp);
    return o;
}

OneMotive random_one_motive(gen::Rng& rng)
{
    auto t = gen::random_two_step(rng, static_cast<int>(rng.uniform(1, 2)), 6);
    return hodge_motive(t.h, t.p).motive;
}

Document random_document(gen::Rng& rng, int k)
{
    switch (k % 5) {
    case 0: return make_document(gen::random_two_step(rng, static_cast<int>(rng.uniform(1, 3)), 6).h, {"random"});
    case 1: {
        auto a = gen::random_pure(rng, gen::random_odd_shape(rng, 2, 2));
        IntMatrix d = rng.coin() ? IntMatrix::identity(a.rank()) : IntMatrix(a.rank(), a.rank());
        return make_document(MHSComplex{static_cast<int>(rng.uniform(-2, 2)), {a, a}, {d}});
    }
    case 2: {
        auto d = gen::cech_nerve(rng, static_cast<std::size_t>(rng.uniform(1, 2)), static_cast<std::size_t>(rng.uniform(1, 3)),
                                 1, static_cast<int>(rng.uniform(0, 2)));
        if (rng.coin()) d = gen::srinivas_by_hand();
        d.notes = {"coniveau annotation " + std::to_string(k)};
        return make_document(d);
    }
    case 3: {
        auto g = builtin_fixture(rng.coin() ? "bloch" : "srinivas");
        if (g.extension)
            for (auto& v : g.extension->values)
                for (auto& x : v) x = x * Scalar(gen::small_rational(rng));
        if (rng.coin()) g = swap_copies(g);
        return make_document(g, {"perturbed fixture"});
    }
    default: return make_document(random_one_motive(rng));
    }
}

}  // namespace

TEST_CASE("shipped fixtures load and equal the built-in ones")
{
    for (const auto& name : builtin_fixture_names()) {
        Document d = load_document(fixture_path(name));
        CHECK(d.kind() == DocumentKind::gluing);
        CHECK(d == make_document(builtin_fixture(name)));
        CHECK(serialize(d) == read_file(fixture_path(name)));
    }
}

TEST_CASE("serialization round trip")
{
    for (const auto& name : builtin_fixture_names()) {
        Document d = make_document(builtin_fixture(name));
        CHECK(parse_document(serialize(d)) == d);
    }
    gen::Rng rng(99);
    for (int k = 0; k < 100; ++k) {
        Document d = random_document(rng, k);
        CAPTURE(k);
        const std::string text = serialize(d);
        Document back = parse_document(text);
        CHECK(back == d);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("parse diagnostics")
{
    try {
        load_document(corpus_path("float_entry"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("exact rationals required") != std::string::npos);
        CHECK(e.field() == "payload.structure.weights[0].basis[0][0]");
    }
    try {
        load_document(corpus_path("syntax_error"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 9);
    }
    try {
        load_document(corpus_path("non_nested_w"));
        FAIL("expected a validation failure");
    } catch (const InvalidInput& e) {
        const std::string msg = e.what();
        CHECK(msg.find("W_1") != std::string::npos);
        CHECK(msg.find("W_2") != std::string::npos);
    }
    std::string unknown = serialize(make_document(tate(0)));
    unknown.insert(unknown.find("\"rank\""), "\"ranks\": 1, ");
    try {
        parse_document(unknown);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.field() == "payload.structure.ranks");
    }
    std::string bad_kind = serialize(make_document(tate(0)));
    bad_kind.replace(bad_kind.find("\"mhs\""), 5, "\"motif\"");
    CHECK_THROWS_AS(parse_document(bad_kind), ParseError);
    std::string bad_field = serialize(make_document(tate(0)));
    bad_field.replace(bad_field.find("\"d\": 1"), 6, "\"d\": 4");
    CHECK_THROWS_AS(parse_document(bad_field), ParseError);
    CHECK_THROWS_AS(load_document(corpus_path("no_such_file")), ParseError);
}

TEST_CASE("declared field must match the radicands in use")
{
    Document d = make_document(builtin_fixture("srinivas"));
    CHECK(d.field == 2);
    d.field = 3;
    CHECK_THROWS_AS(validate_document(d), InvalidInput);
    // With d = 1 radical coordinates cannot be written at all.
    std::string text = serialize(make_document(builtin_fixture("srinivas")));
    text.replace(text.find("\"d\": 2"), 6, "\"d\": 1");
    CHECK_THROWS_AS(parse_document(text), ParseError);
}

TEST_CASE("motive reports on the fixtures")
{
    RunOptions o;
    o.p = 2;
    o.n = 4;
    auto srinivas = run_command("motive", load_document(fixture_path("srinivas")), o);
    CHECK(render_text(srinivas).find("lattice rank 2, abelian part 0, full Hodge classes 3") != std::string::npos);
    auto bloch = run_command("motive", load_document(fixture_path("bloch")), o);
    const std::string text = render_text(bloch);
    CHECK(text.find("lattice rank 3 → 0") != std::string::npos);
    CHECK(text.find("λ^0 = 0") != std::string::npos);
    CHECK(bloch["total_rank"] == 3);
}

TEST_CASE("reports are deterministic")
{
    RunOptions o;
    o.p = 2;
    for (const auto& name : builtin_fixture_names())
        for (const auto& command : {"validate", "hodge-numbers", "motive", "glue", "square-check"}) {
            auto a = dump_pretty(run_command(command, load_document(fixture_path(name)), o));
            auto b = dump_pretty(run_command(command, load_document(fixture_path(name)), o));
            CHECK(a == b);
        }
}

TEST_CASE("commands reject documents they do not apply to")
{
    RunOptions o;
    o.p = 1;
    auto elliptic = load_document(corpus_path("elliptic"));
    CHECK_THROWS_AS(run_command("square-check", elliptic, o), UnsupportedInput);
    CHECK_THROWS_AS(run_command("realize", elliptic, o), UnsupportedInput);
    CHECK_THROWS_AS(run_command("glue", elliptic, o), UnsupportedInput);
    CHECK_THROWS_AS(run_command("hodge-numbers", load_document(corpus_path("one_motive")), o), UnsupportedInput);
    CHECK_THROWS_AS(run_command("motive", elliptic, RunOptions{}), UnsupportedInput);
    CHECK_THROWS_AS(run_command("frobnicate", elliptic, o), UnsupportedInput);
}

TEST_CASE("tool exit codes and output")
{
    for (const auto& name : builtin_fixture_names()) {
        auto v = run_tool("validate \"" + fixture_path(name) + "\"");
        CHECK(v.code == 0);
        CHECK(v.out.rfind("OK: gluing", 0) == 0);
    }
    auto srinivas = run_tool("motive -p 2 -n 4 \"" + fixture_path("srinivas") + "\"");
    CHECK(srinivas.code == 0);
    CHECK(srinivas.out.find("lattice rank 2, abelian part 0, full Hodge classes 3") != std::string::npos);
    auto bloch = run_tool("motive -p 2 -n 4 \"" + fixture_path("bloch") + "\"");
    CHECK(bloch.out.find("lattice rank 3 → 0") != std::string::npos);

    CHECK(run_tool("validate \"" + corpus_path("float_entry") + "\"").code == 4);
    CHECK(run_tool("validate \"" + corpus_path("syntax_error") + "\"").code == 4);
    CHECK(run_tool("validate \"" + corpus_path("non_nested_w") + "\"").code == 2);
    CHECK(run_tool("square-check -p 1 \"" + corpus_path("elliptic") + "\"").code == 3);
    CHECK(run_tool("motive \"" + corpus_path("elliptic") + "\"").code == 1);

    auto a = run_tool("--json motive -p 2 \"" + fixture_path("srinivas") + "\"");
    auto b = run_tool("motive -p 2 --json \"" + fixture_path("srinivas") + "\"");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["motive"]["lattice_rank"] == 2);
    auto failed = run_tool("--json validate \"" + corpus_path("non_nested_w") + "\"");
    CHECK(Json::parse(failed.out)["status"] == "invalid");
}

TEST_CASE("output directory from the environment")
{
    fs::path dir = fs::temp_directory_path() / ("hodge1_out_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    auto r = run_tool("realize -p 1 \"" + corpus_path("one_motive") + "\"", "HODGE1_OUTPUT_DIR=\"" + dir.string() + "\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("u(e_1) = (1/3, 0), order 3") != std::string::npos);
    CHECK(r.out.find("order infinite") != std::string::npos);
    REQUIRE(fs::exists(dir / "one_motive.realize.json"));
    REQUIRE(fs::exists(dir / "one_motive.realized.json"));
    Document realized = load_document((dir / "one_motive.realized.json").string());
    REQUIRE(realized.kind() == DocumentKind::mhs);
    CHECK(std::get<MixedHodgeStructure>(realized.payload).rank() == 4);
    auto again = run_tool("motive -p 1 \"" + (dir / "one_motive.realized.json").string() + "\"");
    CHECK(again.out.find("lattice rank 2 → abelian torus of rank 2") != std::string::npos);
    fs::remove_all(dir);
}
