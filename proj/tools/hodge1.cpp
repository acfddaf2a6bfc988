// hodge1: command-line front end for the document format.
//
// Exit codes: 0 success, 2 validation failure, 3 unsupported input,
// 4 unreadable or malformed document, 1 bad command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hodge1/errors.hpp"
#include "hodge1/report.hpp"

namespace fs = std::filesystem;
using namespace hodge1;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitParse = 4;

struct Settings {
    bool json = false;
    std::string output_dir;
};

void write_file(const fs::path& path, const std::string& text)
{
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string(), "");
    out << text;
}

int fail(const Settings& s, const std::string& command, const char* status, const std::string& message, int code)
{
    if (s.json) {
        Json j = {{"schema", kSchemaVersion}, {"command", command}, {"status", status}, {"error", message}};
        std::cout << dump_pretty(j);
    }
    std::cerr << "hodge1 " << command << ": " << status << ": " << message << "\n";
    return code;
}

int run(const Settings& s, const std::string& command, const std::string& file, const RunOptions& opts)
{
    try {
        Document doc = load_document(file);
        Json report = run_command(command, doc, opts);
        report["input"] = fs::path(file).filename().string();
        if (s.json)
            std::cout << dump_pretty(report);
        else
            std::cout << render_text(report);
        if (!s.output_dir.empty()) {
            const std::string stem = fs::path(file).stem().string();
            write_file(fs::path(s.output_dir) / (stem + "." + command + ".json"), dump_pretty(report));
            if (command == "realize")
                write_file(fs::path(s.output_dir) / (stem + ".realized.json"), serialize(realized_document(doc, *opts.p)));
        }
        return 0;
    } catch (const ParseError& e) {
        return fail(s, command, "parse error", e.what(), kExitParse);
    } catch (const InvalidInput& e) {
        return fail(s, command, "invalid", e.what(), kExitInvalid);
    } catch (const InconsistentData& e) {
        return fail(s, command, "invalid", e.what(), kExitInvalid);
    } catch (const UnsupportedInput& e) {
        return fail(s, command, "unsupported", e.what(), kExitUnsupported);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mixed Hodge structures, extension classes and Hodge 1-motives"};
    app.fallthrough();
    app.require_subcommand(1);
    Settings settings;
    if (const char* dir = std::getenv("HODGE1_OUTPUT_DIR")) settings.output_dir = dir;
    app.add_flag("--json", settings.json, "print the machine-readable report instead of text");
    app.add_option("--output-dir", settings.output_dir, "also write reports here (default: $HODGE1_OUTPUT_DIR)");

    std::string file;
    RunOptions opts;
    std::string mode = "isogeny";
    int p = 0, n = 0, i = 0;
    std::string command;

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "input document")->required()->check(CLI::ExistingFile);
        sub->callback([&command, name] { command = name; });
        return sub;
    };
    add("validate", "load and validate a document");
    add("hodge-numbers", "Hodge numbers of a structure, of complex cohomology or of graded pieces");
    CLI::App* motive = add("motive", "Hodge 1-motive of a structure or of H^n of a gluing");
    motive->add_option("-p", p, "level p")->required();
    CLI::Option* n_opt = motive->add_option("-n", n, "cohomological degree (gluings; default 2p)");
    motive->add_option("--mode", mode, "subgroup membership mode")->check(CLI::IsMember({"strict", "isogeny"}));
    add("glue", "row complexes and graded pieces of a gluing or simplicial datum");
    CLI::App* square = add("square-check", "compare the cycle boundary map with the extension class");
    square->add_option("-p", p, "level p")->required();
    CLI::Option* i_opt = square->add_option("-i", i, "degree of H^i(NS) (default 0)");
    CLI::App* realize = add("realize", "mixed Hodge structure of a one-motive");
    realize->add_option("-p", p, "level p")->required();

    std::string fixture_name, fixture_out;
    CLI::App* fixture = app.add_subcommand("fixture", "print a built-in fixture as a document");
    fixture->add_option("name", fixture_name, "bloch or srinivas")->required();
    fixture->add_option("-o,--out", fixture_out, "write to this file instead of stdout");
    fixture->callback([&command] { command = "fixture"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (command == "fixture") {
        try {
            Document d = make_document(builtin_fixture(fixture_name));
            if (fixture_out.empty())
                std::cout << serialize(d);
            else
                write_file(fixture_out, serialize(d));
            return 0;
        } catch (const InvalidInput& e) {
            return fail(settings, command, "invalid", e.what(), kExitInvalid);
        } catch (const ParseError& e) {
            return fail(settings, command, "parse error", e.what(), kExitParse);
        }
    }

    if (command == "motive" || command == "square-check" || command == "realize") opts.p = p;
    if (*n_opt) opts.n = n;
    if (*i_opt) opts.i = i;
    opts.mode = mode == "strict" ? MembershipMode::strict : MembershipMode::isogeny;
    return run(settings, command, file, opts);
}
