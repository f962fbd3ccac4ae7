#include <doctest.h>

#include "vgc/io.hpp"
#include "vgc/matrix_group.hpp"
#include "vgc/report.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

using namespace vgc;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("vgc_test_" + std::to_string(::getpid()) + "_" + name);
    fs::create_directories(p.parent_path());
    return p;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string thrown(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("cyclotomic numbers round-trip through json") {
    const std::vector<CycNum> xs{CycNum(0), CycNum(Rational(-3, 7)), CycNum::zeta(3, 1), CycNum::zeta(3, 2),
                                 CycNum(3, {Rational(1, 2), Rational(-5)}), CycNum::zeta(4, 1)};
    for (const auto& x : xs) {
        const CycNum back = cycnum_from_json(to_json(x));
        CHECK(back == x);
    }
    CHECK(cycnum_from_json(nlohmann::ordered_json(5)) == CycNum(5));
    CHECK(cycnum_from_json(nlohmann::ordered_json("-2/6")) == CycNum(Rational(-1, 3)));
    CHECK_THROWS_AS(cycnum_from_json(nlohmann::ordered_json{{"n", 0}, {"coeffs", {"1"}}}), FixtureError);
    CHECK_THROWS_AS(cycnum_from_json(nlohmann::ordered_json{{"coeffs", {"1"}}}), FixtureError);
}

TEST_CASE("malformed json reports line and column") {
    const fs::path p = scratch("bad.json");
    write(p, "{\n  \"name\": \"x\",\n  \"projective\": tru\n}\n");
    const std::string msg = thrown([&] { read_json_file(p); });
    fs::remove(p);
    CHECK(msg.find(p.string() + ":3:") == 0);
    CHECK(msg.find("malformed JSON") != std::string::npos);
}

TEST_CASE("group definition shape errors") {
    auto good = GroupDefinition::from_elements("G216", true, 3, g216_generators(), {"A", "B", "C1", "C2", "D1", "D2"}).to_json();
    CHECK(GroupDefinition::from_json(good).labels.size() == 6);

    auto short_row = good;
    short_row["generators"][0][1].erase(0);
    CHECK(thrown([&] { GroupDefinition::from_json(short_row); }).find("generator A: expected 3 entries per row") !=
          std::string::npos);

    auto missing = good;
    missing.erase("labels");
    CHECK(thrown([&] { GroupDefinition::from_json(missing); }).find("missing key \"labels\"") != std::string::npos);

    auto field = good;
    field["cyclotomic_order"] = 1;
    CHECK(thrown([&] { GroupDefinition::from_json(field); }).find("outside Q(zeta_1)") != std::string::npos);

    auto singular = good;
    for (auto& e : singular["generators"][1][0]) e = 0;
    const GroupDefinition d = GroupDefinition::from_json(singular);
    CHECK(thrown([&] { d.generators(); }).find("generator B") == 0);
}

TEST_CASE("shipped fixtures agree with the built-in generators") {
    const fs::path dir = default_fixtures_dir();
    const auto rho = load_group(dir / "s4_rho.json").as_map();
    const auto builtin_rho = s4_rho_generators();
    for (const auto& [l, m] : builtin_rho) CHECK(rho.at(l) == m);
    const auto g = load_group(dir / "g216.json").as_map();
    for (const auto& [l, m] : g216_generators()) CHECK(g.at(l) == m);
    CHECK(load_points(dir / "lemma13_points.json").points.size() == 18);
}

TEST_CASE("monomial maps read off rho agree with the surface generators") {
    const auto rho = s4_rho_generators();
    const auto surf = s4_surface_generators();
    for (const auto& [l, m] : rho) CHECK(monomial_map_from_matrix(m) == surf.at(l));
    CHECK_THROWS_AS(monomial_map_from_matrix(make_element({CycNum(1), CycNum(1), CycNum(0), CycNum(0), CycNum(1), CycNum(0),
                                                           CycNum(0), CycNum(0), CycNum(1)},
                                                          false)),
                    std::invalid_argument);
}

TEST_CASE("run_suite edge cases") {
    RunConfig cfg;
    cfg.fixtures_dir = default_fixtures_dir();
    const Report empty = run_suite(cfg);
    CHECK(empty.checks.empty());
    CHECK(empty.warnings.size() == 1);
    const auto j = nlohmann::ordered_json::parse(emit_json(empty));
    CHECK(j["suite"] == "");
    CHECK(j["summary"]["status"] == "pass");

    cfg.suites = {"group", "nonsense"};
    CHECK_THROWS_AS(run_suite(cfg), UnknownSuite);

    cfg.suites = {"group"};
    cfg.fixtures_dir = "/nonexistent/vgc";
    CHECK_THROWS_AS(run_suite(cfg), FixtureError);
}

TEST_CASE("a5 suite: deterministic json, sorted ids, no timings by default") {
    RunConfig cfg;
    cfg.suites = {"a5"};
    cfg.fixtures_dir = default_fixtures_dir();
    const Report r = run_suite(cfg);
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 4);
    const std::string a = emit_json(r), b = emit_json(run_suite(cfg));
    CHECK(a == b);
    const auto j = nlohmann::ordered_json::parse(a);
    std::vector<std::string> ids;
    for (const auto& c : j["checks"]) {
        ids.push_back(c["id"]);
        CHECK_FALSE(c.contains("elapsed_ms"));
    }
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(nlohmann::ordered_json::parse(emit_json(r, true))["checks"][0].contains("elapsed_ms"));
    const std::string text = emit_text(r);
    CHECK(text.find("[a5]") == 0);
    CHECK(text.find("4 passed, 0 failed, 0 skipped") != std::string::npos);
}
