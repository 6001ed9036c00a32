#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "taskecon/errors.hpp"
#include "taskecon/scenario.hpp"

using namespace taskecon;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("taskecon_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("presets carry the reference parameters") {
    for (const auto& name : preset_names()) {
        const auto s = preset(name);
        CHECK(s.name == name);
        CHECK(s.phi0 == 0.608);
        CHECK(s.K0 == 4.6);
        CHECK(s.economy == EconomyParams{0.5, 0.5, 1.0});
        CHECK(s.preferences == PreferenceParams{0.04, 2.0, 0.1});
    }
    CHECK(preset("business_as_usual").distribution.family == "pareto");
    CHECK(preset("business_as_usual").distribution.lambda_g == 0.01);
    CHECK(preset("baseline_agi").distribution.T == 20.0);
    CHECK(preset("aggressive_agi").distribution.T == 5.0);
    CHECK(preset("mixed").distribution.family == "mixture");
    CHECK_THROWS_AS(preset("nope"), ConfigError);
}

TEST_CASE("config selects a preset and applies overrides in any order") {
    const auto a = parse_config("economy.A = 0.6\nscenario = baseline_agi\n");
    const auto b = parse_config("# comment\nscenario = baseline_agi\n\neconomy.A = 0.6\n");
    CHECK(a == b);
    CHECK(a.economy.A == 0.6);
    CHECK(a.distribution.T == 20.0);
}

TEST_CASE("config round-trips through its canonical dump") {
    for (const auto& name : preset_names()) {
        const auto s = preset(name);
        CHECK(parse_config(dump_config(s)) == s);
    }
    auto custom = preset("business_as_usual");
    custom.name = "custom";
    custom.distribution.lambda_g = 0.0123456789012345;
    custom.policy = PolicyKind::ConstantSavings;
    custom.savings_rate = 0.3;
    custom.nostalgic_cap = 0.07;
    custom.skills_upsilon_lambda = 0.004;
    custom.specific = SpecificSpec{0.2, 12.0};
    custom.svg = true;
    CHECK(parse_config(dump_config(custom)) == custom);
}

TEST_CASE("config errors name the line or key") {
    CHECK_THROWS_WITH_AS(parse_config(""), doctest::Contains("scenario or full distribution spec required"),
                         ConfigError);
    try {
        parse_config("scenario = mixed\nbogus.key = 1\n");
        FAIL("expected error");
    } catch (const ConfigError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("bogus.key") != std::string::npos);
    }
    CHECK_THROWS_WITH_AS(parse_config("scenario = mixed\neconomy.A = abc\n"), doctest::Contains("economy.A"),
                         ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("scenario = mixed\npreferences.eta = 0\n"), doctest::Contains("eta"),
                         ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = mixed\nno equals sign\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
}

TEST_CASE("csv schema and initial row") {
    auto spec = preset("baseline_agi");
    spec.solver.horizon = 30.0;
    const auto result = run(spec);
    const auto dir = scratch("csv");
    emit_csv(result.trajectory, dir / "traj.csv");
    std::ifstream in(dir / "traj.csv");
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "t,I,phi,region,K,C,Y,w,R,labor_share,savings_rate");
    CHECK(first.rfind("0,", 0) == 0);
    CHECK(first.find(",4.5999999999999996,") != std::string::npos);
    std::string events = slurp(dir / "traj.csv.events.csv");
    CHECK(events.rfind("kind,t\n", 0) == 0);
    CHECK(events.find("region2_entry") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("fully automated rows pay labor and capital the same") {
    auto spec = preset("baseline_agi");
    spec.solver.horizon = 40.0;
    const auto traj = run(spec).trajectory;
    for (const auto& p : traj.points) {
        if (p.t < 20.0) continue;
        CHECK(p.region == Region::Two);
        CHECK(p.w == p.R);
    }
}

TEST_CASE("identical configs write identical files") {
    auto spec = preset("mixed");
    spec.solver.horizon = 30.0;
    spec.svg = true;
    const auto a = scratch("det_a");
    const auto b = scratch("det_b");
    write_outputs(run(spec), a);
    write_outputs(run(spec), b);
    for (const auto& f : {"trajectory.csv", "trajectory.csv.events.csv", "trajectory.svg"})
        CHECK(slurp(a / f) == slurp(b / f));
    CHECK(slurp(a / "trajectory.svg").rfind("<svg", 0) == 0);
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
}

TEST_CASE("summary is recomputable from the trajectory") {
    auto spec = preset("mixed");
    spec.solver.horizon = 40.0;
    const auto r = run(spec);
    const auto again = summarize(r.trajectory);
    CHECK(again.collapse_time == r.summary.collapse_time);
    CHECK(again.reentry_time == r.summary.reentry_time);
    CHECK(again.terminal_output_growth == r.summary.terminal_output_growth);
    REQUIRE(r.summary.collapse_time);
    REQUIRE(r.summary.reentry_time);
    CHECK(*r.summary.collapse_time < *r.summary.reentry_time);
    CHECK(format_summary(r) == format_summary(run(spec)));
}

TEST_CASE("pareto runs carry a regime report") {
    auto spec = preset("business_as_usual");
    spec.solver.horizon = 20.0;
    const auto r = run(spec);
    REQUIRE(r.regime);
    CHECK(r.regime->regime == Regime::AutomationConstrained);
    CHECK_FALSE(run(preset("aggressive_agi")).regime);
}

TEST_CASE("extension runs fill their tables") {
    auto spec = parse_config(
        "scenario = business_as_usual\nsolver.horizon = 20\nextension.skills.upsilon_lambda = 0.005\n"
        "extension.specific.delta_mass = 0.1\n");
    const auto r = run(spec);
    CHECK_FALSE(r.skills.empty());
    CHECK_FALSE(r.specific.empty());
    auto nost = parse_config("scenario = baseline_agi\nsolver.horizon = 30\nextension.nostalgic.lambda_g_cap = 0.09\n");
    const auto n = run(nost);
    CHECK(n.uncapped);
    CHECK(n.bind_time);
    auto rnd = parse_config("scenario = business_as_usual\nsolver.horizon = 10\nextension.rnd.theta = 0.2\n");
    CHECK(run(rnd).tech.size() == run(rnd).trajectory.points.size());
}
