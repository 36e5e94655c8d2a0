#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "coho/scenarios.hpp"

using namespace coho;
namespace fs = std::filesystem;

namespace {

// fresh directory holding copies of the verified group fixtures
fs::path fixture_copy(const std::string& tag) {
    fs::path src = fixture_dir_from_env();
    fs::path dst = fs::temp_directory_path() / ("coho-scn-" + tag);
    fs::remove_all(dst);
    fs::create_directories(dst);
    fs::copy_file(src / "a7.grp", dst / "a7.grp");
    fs::copy_file(src / "a6.grp", dst / "a6.grp");
    return dst;
}

ScenarioParams with_dir(const fs::path& d) {
    ScenarioParams p;
    p.fixture_dir = d.string();
    return p;
}

const AltGroups& groups() {
    static AltGroups g = find_alternating_subgroups(2026);
    return g;
}

const NamedClassTable& a6_classes() {
    static NamedClassTable t = extract_named_classes(groups().a6, Profile::A6);
    return t;
}

const NamedClassTable& a7_classes() {
    static NamedClassTable t = extract_named_classes(groups().a7, Profile::A7, 27);
    return t;
}

const AlgebraSpec& p4() {
    static AlgebraSpec alg = ActionScan::make_poly_spec(4);
    return alg;
}

bool has_line(const std::vector<std::string>& lines, const std::string& needle) {
    for (const auto& l : lines)
        if (l.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("every registered scenario passes") {
    std::map<std::string, int> reduced = {
        {"dickson-series", 20}, {"a6-invariants", 20}, {"bockstein-a6", 16}};
    REQUIRE(scenario_registry().size() == 15);
    for (const auto& sc : scenario_registry()) {
        ScenarioParams p;
        auto it = reduced.find(sc.name);
        if (it != reduced.end()) p.max_degree = it->second;
        Report r = run_scenario(sc.name, p);
        INFO(sc.name << ": " << (r.mismatches.empty() ? "" : r.mismatches[0]));
        REQUIRE(r.verdict == "PASS");
        REQUIRE(r.pass());
        REQUIRE(r.scenario == sc.name);
        REQUIRE(r.anchors == std::vector<std::string>{sc.anchor});
        REQUIRE(r.elapsed_ms >= 0);
    }
}

TEST_CASE("dickson series report carries both tables") {
    ScenarioParams p;
    p.max_degree = 16;
    Report r = run_scenario("dickson-series", p);
    REQUIRE(r.pass());
    REQUIRE(r.tables.size() == 2);
    REQUIRE(r.tables[0].name == "gl4-fixed");
    REQUIRE(r.tables[1].name == "dickson4");
    REQUIRE(r.tables[0].dims == expand(named_series("dickson4"), 16));
    REQUIRE(has_line(r.checks, "generator degrees are 8, 12, 14, 15"));
}

TEST_CASE("em e2 report records the action reading") {
    Report r = run_scenario("em-e2");
    REQUIRE(r.pass());
    REQUIRE(r.tables[0].name == "em-e2-ext");
    REQUIRE(r.tables[1].name == "em-e2-algebra");
    REQUIRE(r.tables[0].dims == r.tables[1].dims);
    REQUIRE(has_line(r.checks, "lambda action reading: literal (both readings agree)"));
    REQUIRE(has_line(r.checks, "[1,0,1,2,2,4,5]"));
    REQUIRE(has_line(r.checks, "dimension at n = 8 is 9"));
}

TEST_CASE("em e3 report carries the chart and dimension-5 classes") {
    Report r = run_scenario("em-e3");
    REQUIRE(r.pass());
    REQUIRE(r.tables[0].dims == Coeffs{1, 0, 1, 1, 0, 2, 2, 1, 3});
    REQUIRE(has_line(r.checks, "two distinct classes in dimension 5"));
    REQUIRE(has_line(r.checks, "dimension-5 class: l5"));
    REQUIRE(has_line(r.checks, "dimension-5 class: x5"));
    REQUIRE(r.chart.substr(0, 3) == "e3\n");
    REQUIRE(r.chart.find("total |   1   0   1   1   0   2   2   1   3") != std::string::npos);
}

TEST_CASE("a7 invariants scenario notes the reduced range") {
    Report r = run_scenario("a7-invariants");
    REQUIRE(r.pass());
    REQUIRE(r.tables[0].hi() == 21);
    REQUIRE(has_line(r.checks, "range limited to degree 21"));
    ScenarioParams p;
    p.max_degree = 27;
    Report full = run_scenario("a7-invariants", p);
    REQUIRE(full.pass());
    REQUIRE(has_line(full.checks, "degree-27 dimension confirms the x27 generator"));
}

TEST_CASE("max-degree overrides truncate the tables") {
    ScenarioParams p;
    p.max_degree = 5;
    Report r = run_scenario("psu-expansion", p);
    REQUIRE(r.pass());
    REQUIRE(r.tables[0].dims == Coeffs{1, 0, 0, 1, 0, 2});

    p.max_degree = 3;
    Report c = run_scenario("mcl-connectivity", p);
    REQUIRE(c.pass());  // connectivity window always reaches degree 8
    REQUIRE(c.tables[0].hi() == 8);
}

TEST_CASE("perturbed g5 fixture fails the sq1 identities") {
    fs::path dir = fixture_copy("g5");
    NamedClassTable t = a6_classes();
    t["g5"].element = parse_element(p4(), "x1^5");
    save_named_classes(dir / "a6.classes", p4(), t);
    save_named_classes(dir / "a7.classes", p4(), a7_classes());

    Report r = run_scenario("sq1-identities", with_dir(dir));
    REQUIRE(r.verdict == "FAIL");
    REQUIRE(has_line(r.mismatches, "sq1(g5) = w3^2"));
    REQUIRE(has_line(r.checks, "sq1(d14) = d15"));

    Report d = run_scenario("d14-relation", with_dir(dir));
    REQUIRE(d.verdict == "FAIL");
    REQUIRE(has_line(d.mismatches, "d14 = g5*g9 + w3^2*d8 + w3^3*g5"));
}

TEST_CASE("perturbed g9 reports the satisfying degree-9 candidate") {
    fs::path dir = fixture_copy("g9");
    NamedClassTable t = a6_classes();
    t["g9"].element = power(p4(), t.at("w3").element, 3);
    save_named_classes(dir / "a6.classes", p4(), t);
    save_named_classes(dir / "a7.classes", p4(), a7_classes());

    Report r = run_scenario("sq1-identities", with_dir(dir));
    REQUIRE(r.verdict == "FAIL");
    const std::string tag = "satisfying degree-9 candidate: ";
    std::string cand;
    for (const auto& m : r.mismatches) {
        size_t at = m.find(tag);
        if (at != std::string::npos) cand = m.substr(at + tag.size());
    }
    REQUIRE(cand != "");
    REQUIRE(cand != "none");
    Element e = parse_element(p4(), cand);
    REQUIRE(sq(p4(), 1, e) == power(p4(), a6_classes().at("g5").element, 2));
}

TEST_CASE("perturbed x20 fixture fails the restriction scenario") {
    fs::path dir = fixture_copy("x20");
    NamedClassTable t = a7_classes();
    Element off = mul(p4(), t.at("d8").element, t.at("d12").element);
    t["x20"].element = add(p4(), t.at("x20").element, off);
    save_named_classes(dir / "a7.classes", p4(), t);
    save_named_classes(dir / "a6.classes", p4(), a6_classes());

    Report r = run_scenario("restriction-22", with_dir(dir));
    REQUIRE(r.verdict == "FAIL");
    REQUIRE(has_line(r.mismatches, "x20 restricts to 0"));
    REQUIRE(has_line(r.checks, "x21 restricts to 0"));
}

TEST_CASE("corrupt group fixture raises a fixture error with the discovery hint") {
    fs::path dir = fixture_copy("bad");
    std::ofstream(dir / "a6.grp") << "4 1\n1000\n0100\n0010\n0001\n";
    ScenarioParams p = with_dir(dir);
    p.seed = 99;  // avoid the cached clean groups for this directory
    REQUIRE_THROWS_AS(run_scenario("d14-relation", p), FixtureError);
    try {
        run_scenario("bockstein-a6", p);
        FAIL("expected a FixtureError");
    } catch (const FixtureError& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("order 1, expected 360") != std::string::npos);
        REQUIRE(msg.find("run the discover command") != std::string::npos);
    }
}

TEST_CASE("unknown scenario lists the valid names") {
    try {
        run_scenario("no-such");
        FAIL("expected UnknownScenario");
    } catch (const UnknownScenario& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("unknown scenario 'no-such'") != std::string::npos);
        REQUIRE(msg.find("dickson-series") != std::string::npos);
        REQUIRE(msg.find("discover-subgroups") != std::string::npos);
    }
}

TEST_CASE("mismatch lines name the disagreeing tables") {
    Report r;
    detail::push_compare(r, DimTable{"left", 0, {1, 2, 3}}, DimTable{"right", 0, {1, 5, 3}});
    REQUIRE(r.mismatches == std::vector<std::string>{"left vs right, degree 1: 2 != 5"});
    REQUIRE(r.tables.size() == 2);
}

TEST_CASE("text and csv renderings are frozen") {
    Report r;
    r.scenario = "demo";
    r.verdict = "FAIL";
    r.anchors = {"an \"anchor\""};
    r.checks = {"first check"};
    r.tables = {DimTable{"t", 0, {1, 2}}};
    r.mismatches = {"degree 1: 2 != 3"};
    r.chart = "grid\n";
    r.elapsed_ms = 7;

    REQUIRE(render_text(r) ==
            "scenario: demo\n"
            "verdict: FAIL\n"
            "anchor: an \"anchor\"\n"
            "check: first check\n"
            "table: t [0..1]: 1 2\n"
            "mismatch: degree 1: 2 != 3\n"
            "chart:\ngrid\n"
            "elapsed_ms: 7\n");
    REQUIRE(render_csv(r) ==
            "scenario,demo\n"
            "verdict,FAIL\n"
            "table,t\n"
            "degree,dim\n0,1\n1,2\n\n"
            "mismatch,degree 1: 2 != 3\n"
            "elapsed_ms,7\n");
    REQUIRE(render_json(r) ==
            "{\"scenario\":\"demo\",\"verdict\":\"FAIL\",\"anchors\":[\"an \\\"anchor\\\"\"],"
            "\"tables\":[{\"name\":\"t\",\"degrees\":[0,1],\"dims\":[1,2]}],"
            "\"mismatches\":[\"degree 1: 2 != 3\"],\"elapsed_ms\":7}");
    REQUIRE(render_report(r, "text") == render_text(r));
    REQUIRE_THROWS_WITH(render_report(r, "yaml"),
                        Catch::Matchers::ContainsSubstring("unknown report format"));
}

TEST_CASE("json reports match the schema") {
    Report r = run_scenario("mcl-connectivity");
    nlohmann::json j = nlohmann::json::parse(render_json(r));
    REQUIRE(j.size() == 6);
    REQUIRE(j["scenario"] == "mcl-connectivity");
    REQUIRE(j["verdict"] == "PASS");
    REQUIRE(j["anchors"].is_array());
    REQUIRE(j["anchors"].size() == 1);
    REQUIRE(j["tables"].is_array());
    REQUIRE(j["tables"][0]["name"] == "mcl-closed");
    REQUIRE(j["tables"][0]["degrees"].size() == j["tables"][0]["dims"].size());
    REQUIRE(j["tables"][0]["dims"] == nlohmann::json({1, 0, 0, 0, 0, 0, 0, 1, 1}));
    REQUIRE(j["mismatches"].is_array());
    REQUIRE(j["mismatches"].empty());
    REQUIRE(j["elapsed_ms"].is_number_integer());
}

TEST_CASE("reports are deterministic apart from timing") {
    Report a = run_scenario("ly-n-series");
    Report b = run_scenario("ly-n-series");
    a.elapsed_ms = b.elapsed_ms = 0;
    REQUIRE(render_text(a) == render_text(b));
    REQUIRE(render_csv(a) == render_csv(b));
    REQUIRE(render_json(a) == render_json(b));
}

TEST_CASE("export_report writes the rendered form") {
    Report r = run_scenario("psu-expansion");
    fs::path out = fs::temp_directory_path() / "coho-scn-report.json";
    export_report(r, "json", out);
    std::ifstream is(out);
    std::string body((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    REQUIRE(body == render_json(r));
    REQUIRE_THROWS_WITH(export_report(r, "json", fs::path("/no-such-dir/x.json")),
                        Catch::Matchers::ContainsSubstring("cannot write"));
    fs::remove(out);
}

TEST_CASE("scenario listing is complete") {
    std::string l = list_scenarios();
    size_t lines = std::count(l.begin(), l.end(), '\n');
    REQUIRE(lines == 15);
    REQUIRE(l.find("a7-invariants") != std::string::npos);
    REQUIRE(l.find("slow") != std::string::npos);
    REQUIRE(l.find("lemma-3-1") != std::string::npos);
}

TEST_CASE("config files parse and apply") {
    fs::path cfg = fs::temp_directory_path() / "coho-scn-config.txt";
    std::ofstream(cfg) << "# comment line\n"
                       << "max-degree = 12\n"
                       << "seed = 7\n"
                       << "format = json   # trailing comment\n"
                       << "slow = true\n"
                       << "out = report.json\n"
                       << "fixture-dir = /tmp/fx\n\n";
    CliOptions o;
    apply_config(parse_config(cfg), o);
    REQUIRE(o.params.max_degree == 12);
    REQUIRE(o.params.seed == 7);
    REQUIRE(o.format == "json");
    REQUIRE(o.params.slow);
    REQUIRE(o.out == "report.json");
    REQUIRE(o.params.fixture_dir == "/tmp/fx");

    std::ofstream(cfg) << "colour = red\n";
    CliOptions bad;
    REQUIRE_THROWS_WITH(apply_config(parse_config(cfg), bad),
                        Catch::Matchers::ContainsSubstring("unknown key 'colour'"));
    std::ofstream(cfg) << "format = yaml\n";
    REQUIRE_THROWS_WITH(apply_config(parse_config(cfg), bad),
                        Catch::Matchers::ContainsSubstring("format must be"));
    std::ofstream(cfg) << "slow = maybe\n";
    REQUIRE_THROWS_WITH(apply_config(parse_config(cfg), bad),
                        Catch::Matchers::ContainsSubstring("slow must be true/false"));
    std::ofstream(cfg) << "just words\n";
    REQUIRE_THROWS_WITH(parse_config(cfg),
                        Catch::Matchers::ContainsSubstring("expected key = value"));
    REQUIRE_THROWS_WITH(parse_config(fs::path("/no-such/config")),
                        Catch::Matchers::ContainsSubstring("cannot read"));
    fs::remove(cfg);
}
