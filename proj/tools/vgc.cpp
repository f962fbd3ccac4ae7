// vgc: run the verification suites or inspect a group-definition file.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or fixture error.

#include "vgc/io.hpp"
#include "vgc/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run(const std::vector<std::string>& suites, const std::string& format, const std::string& out, std::string fixtures,
        bool timings) {
    vgc::RunConfig cfg;
    for (const auto& s : suites) {
        std::stringstream ss(s);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty()) cfg.suites.push_back(part);
    }
    cfg.fixtures_dir = fixtures.empty() ? vgc::default_fixtures_dir() : std::filesystem::path(fixtures);
    cfg.format = format;

    const vgc::Report report = vgc::run_suite(cfg);
    const std::string text = format == "json" ? vgc::emit_json(report, timings) : vgc::emit_text(report, timings);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "vgc: cannot write " << out << "\n";
            return 2;
        }
        f << text;
    }
    for (const auto& w : report.warnings) std::cerr << "vgc: warning: " << w << "\n";
    if (!report.all_pass()) {
        // Failing witnesses always reach the terminal, whatever the format and destination.
        for (const auto& c : report.checks) {
            if (c.status != "fail") continue;
            std::cerr << "FAIL " << c.id << ": " << c.claim << "\n" << c.witness.dump(2) << "\n";
        }
        return 1;
    }
    return 0;
}

int group(std::filesystem::path file, bool order, bool classes) {
    // A bare name that is not in the working directory is looked up among the fixtures.
    if (!std::filesystem::exists(file) && file.is_relative() && std::filesystem::exists(vgc::default_fixtures_dir() / file))
        file = vgc::default_fixtures_dir() / file;
    const auto def = vgc::load_group(file);
    std::vector<vgc::GroupElement> gens;
    try {
        gens = def.generators();
    } catch (const std::invalid_argument& e) {
        std::cerr << "vgc: " << e.what() << "\n";
        return 1;
    }
    vgc::MatrixGroup table;
    try {
        table = vgc::closure(gens, vgc::kDefaultClosureCap, def.labels);
    } catch (const vgc::ClosureCapExceeded& e) {
        std::cerr << "vgc: " << def.name << ": " << e.what() << "\n";
        return 1;
    }
    if (order || !classes) std::cout << table.order() << "\n";
    if (classes) {
        auto sizes = vgc::class_sizes(table);
        for (std::size_t i = 0; i < sizes.size(); ++i) std::cout << (i ? " " : "") << sizes[i];
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification suites for the S4 versal-cover computations"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run verification suites");
    std::vector<std::string> suites;
    std::string format = "text", out, fixtures;
    bool timings = false;
    run_cmd->add_option("--suite,-s", suites, "group, orbits, picard, noether, funfield, a5 or all (repeatable, comma separated)")
        ->required();
    run_cmd->add_option("--format,-f", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_option("--out,-o", out, "write the report here instead of stdout");
    run_cmd->add_option("--fixtures", fixtures, "fixture directory (default: $VGC_FIXTURES or the built-in path)");
    run_cmd->add_flag("--timings", timings, "include elapsed_ms per check (breaks byte-identical output)");

    auto* group_cmd = app.add_subcommand("group", "close a group-definition file");
    std::string file;
    bool order = false, classes = false;
    group_cmd->add_option("--file", file, "group-definition JSON (bare names also searched in the fixture directory)")->required();
    group_cmd->add_flag("--order", order, "print the order");
    group_cmd->add_flag("--classes", classes, "print conjugacy class sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) return run(suites, format, out, fixtures, timings);
        if (*group_cmd) return group(file, order, classes);
    } catch (const vgc::FixtureError& e) {
        std::cerr << "vgc: " << e.what() << "\n";
        return 2;
    } catch (const vgc::UnknownSuite& e) {
        std::cerr << "vgc: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
