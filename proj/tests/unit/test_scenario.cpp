#include <doctest.h>

#include <json.hpp>

#include "beable/errors.hpp"
#include "beable/scenario.hpp"

using namespace beable;

TEST_CASE("builtin list contains the advertised scenarios") {
    const auto builtins = list_builtin_scenarios();
    auto has = [&](const std::string& name) {
        for (const auto& c : builtins)
            if (c.name == name) return true;
        return false;
    };
    CHECK(has("bohm-singlet"));
    CHECK(has("theorem1-2x2"));
    CHECK(has("theorem1-3x3"));
    CHECK(has("lattice-local-algebras"));
    CHECK(has("weyl-d2"));
    CHECK(has("weyl-d3"));
    CHECK(has("weyl-d5"));
}

TEST_CASE("parse_config: minimal valid configs") {
    const auto cfg = parse_config({{"name", "t"},
                                   {"kind", "theorem1"},
                                   {"parameters", {{"dims", {2, 2}}, {"seed", 5}}}});
    CHECK(cfg.kind == "theorem1");
    CHECK(cfg.dims == std::vector<int>{2, 2});
    CHECK(cfg.seed == 5);

    const auto weyl = parse_config(
        {{"name", "w"}, {"kind", "weyl_finite"}, {"parameters", {{"d", 3}, {"u", 1}}}});
    CHECK(weyl.d == 3);
    CHECK(weyl.u == 1);
}

TEST_CASE("parse_config: field-level validation errors") {
    CHECK_THROWS_AS(parse_config({{"kind", "singlet"}}), InvalidInput);
    CHECK_THROWS_AS(parse_config({{"name", "x"}, {"kind", "nope"}}), InvalidInput);
    CHECK_THROWS_AS(parse_config({{"name", "x"}, {"kind", "theorem1"}}), InvalidInput);
    CHECK_THROWS_AS(parse_config({{"name", "x"},
                                  {"kind", "singlet"},
                                  {"tolerances", {{"eps_zero", -1.0}}}}),
                    InvalidInput);
    CHECK_THROWS_AS(
        parse_config({{"name", "x"},
                      {"kind", "custom"},
                      {"parameters",
                       {{"generators1", {{{{1.0, 0.0}}}}},
                        {"generators2", {{{{1.0, 0.0}, {0.0, 0.0}}}}}}}}),  // not square
        InvalidInput);
}

TEST_CASE("parse_config: matrix literals round-trip through a custom scenario") {
    // generators as nested [re, im] arrays: sigma_z x I and I x sigma_z in M4
    auto entry = [](double re) { return nlohmann::json::array({re, 0.0}); };
    nlohmann::json z1 = nlohmann::json::array();
    nlohmann::json z2 = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row1 = nlohmann::json::array();
        nlohmann::json row2 = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) {
            const double d1 = (r == c) ? (r < 2 ? 1.0 : -1.0) : 0.0;
            const double d2 = (r == c) ? (r % 2 == 0 ? 1.0 : -1.0) : 0.0;
            row1.push_back(entry(d1));
            row2.push_back(entry(d2));
        }
        z1.push_back(row1);
        z2.push_back(row2);
    }
    const auto cfg = parse_config({{"name", "custom-diag"},
                                   {"kind", "custom"},
                                   {"parameters",
                                    {{"generators1", nlohmann::json::array({z1})},
                                     {"generators2", nlohmann::json::array({z2})}}}});
    REQUIRE(cfg.generators1.size() == 1);
    CHECK(cfg.generators1[0](0, 0) == Complex(1.0, 0.0));
    CHECK(cfg.generators1[0](2, 2) == Complex(-1.0, 0.0));
}

TEST_CASE("report JSON: schema, tolerances, and per-check anchors") {
    ScenarioConfig cfg;
    cfg.name = "bohm-singlet";
    cfg.kind = "singlet";
    const Report rep = run_scenario(cfg);
    const nlohmann::json j = report_to_json(rep);
    CHECK(j["schema"] == "beable-lab/1");
    CHECK(j["scenario"] == "bohm-singlet");
    CHECK(j["status"] == "pass");
    CHECK(j["tolerances"]["eps_zero"].get<double>() == cfg.tol.eps_zero);
    CHECK(j["tolerances"]["eps_feas"].get<double>() == cfg.tol.eps_feas);
    REQUIRE(j["checks"].is_array());
    CHECK(j["checks"].size() == rep.checks.size());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("anchor"));
        CHECK(c.contains("status"));
        CHECK(c.contains("tolerance"));
    }
    // json round-trips: parse(emit) is the identity on the data model
    const std::string emitted = emit_report(rep, "json");
    CHECK(nlohmann::json::parse(emitted) == j);
}

TEST_CASE("text report has one line per check with its status") {
    ScenarioConfig cfg;
    cfg.name = "weyl-d2";
    cfg.kind = "weyl_finite";
    cfg.d = 2;
    const Report rep = run_scenario(cfg);
    const std::string text = emit_report(rep, "text");
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == rep.checks.size() + 2);  // header + checks + overall
    for (const auto& c : rep.checks) {
        CHECK(text.find(c.id) != std::string::npos);
        CHECK(text.find("[" + c.status + "]") != std::string::npos);
    }
}

TEST_CASE("unknown report format is rejected") {
    ScenarioConfig cfg;
    cfg.name = "bohm-singlet";
    cfg.kind = "singlet";
    CHECK_THROWS_AS(emit_report(run_scenario(cfg), "yaml"), InvalidInput);
}

TEST_CASE("identical (config, seed) produce byte-identical JSON") {
    ScenarioConfig cfg;
    cfg.name = "theorem1-2x2";
    cfg.kind = "theorem1";
    cfg.dims = {2, 2};
    const std::string a = emit_report(run_scenario(cfg), "json");
    const std::string b = emit_report(run_scenario(cfg), "json");
    CHECK(a == b);
}

TEST_CASE("round_sig15 is stable under repeated application") {
    for (double x : {0.1, 1.0 / 3.0, 2.2250738585072014e-308, 12345.6789, -0.25}) {
        const double once = round_sig15(x);
        CHECK(round_sig15(once) == once);
    }
    CHECK(round_sig15(0.0) == 0.0);
}

TEST_CASE("zero tolerances are reported as a named failing check") {
    ScenarioConfig cfg;
    cfg.name = "bohm-singlet";
    cfg.kind = "singlet";
    cfg.tol.eps_rank = 0.0;
    const Report rep = run_scenario(cfg);
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.id == "tolerance-sanity" && c.status == "fail") found = true;
    CHECK(found);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("run_scenario surfaces numerical failures as failed checks") {
    ScenarioConfig cfg;
    cfg.name = "degenerate";
    cfg.kind = "weyl_finite";
    cfg.d = 2;
    cfg.a = 2;  // a*b = 0 mod d: the contradiction check degenerates
    cfg.b = 1;
    const Report rep = run_scenario(cfg);
    bool found_failed_theorem9 = false;
    for (const auto& c : rep.checks)
        if (c.id == "theorem9-contradiction" && c.status == "fail" && !c.note.empty())
            found_failed_theorem9 = true;
    CHECK(found_failed_theorem9);
    CHECK_FALSE(rep.pass());
}
