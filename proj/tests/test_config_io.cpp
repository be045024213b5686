#include <doctest.h>

#include "nchyl/commands.hpp"
#include "nchyl/config.hpp"
#include "nchyl/report.hpp"

using namespace nchyl;

namespace {

const char* kCanonicalText = R"(
[potential]
V0 = 1.0
a = -4.0
b = 1.0
g = 0.0
alpha = 1.0
r_c = 0.5
M = 1.0

[nc]
theta = 0.001

[field]
e_charge = 1.0
k_const = 1.0
q_source = 0.001

[states]
state = 0 0 0
state = 1 0 0
state = 0 1 1

[solver]
condition = parametric_nu
scan_panels = 2000

[oracle]
n_points = 6000
centrifugal = exact
)";

} // namespace

TEST_CASE("config parses and validates")
{
    auto cfg = io::parse_config_text(kCanonicalText);
    CHECK(cfg.pot.a == -4.0);
    CHECK(cfg.pot.r_c == 0.5);
    CHECK(cfg.theta == 0.001);
    CHECK(cfg.states.size() == 3);
    CHECK(cfg.states[2][1] == 1);
    CHECK(cfg.condition == spectrum::Condition::ParametricNu);
    CHECK(cfg.oracle_n_points == 6000);
}

TEST_CASE("unknown keys are hard errors")
{
    std::string text = kCanonicalText;
    text += "\n[solver]\ntypo_key = 1\n";
    CHECK_THROWS_AS(io::parse_config_text(text), ConfigError);

    std::string bad_section = kCanonicalText;
    bad_section += "\n[mystery]\nx = 1\n";
    CHECK_THROWS_AS(io::parse_config_text(bad_section), ConfigError);
}

TEST_CASE("state invariants are enforced at parse time")
{
    std::string text = kCanonicalText;
    text += "\n[states]\nstate = 0 0 1\n"; // |m_l| > l
    CHECK_THROWS_AS(io::parse_config_text(text), ConfigError);
}

TEST_CASE("malformed values are rejected")
{
    std::string text = kCanonicalText;
    text += "\n[potential]\nV0 = abc\n";
    CHECK_THROWS_AS(io::parse_config_text(text), ConfigError);

    std::string trailing = kCanonicalText;
    trailing += "\n[nc]\ntheta = 0.1 extra\n";
    CHECK_THROWS_AS(io::parse_config_text(trailing), ConfigError);
}

TEST_CASE("effective config round trip")
{
    auto cfg = io::parse_config_text(kCanonicalText);
    std::string rendered = io::render_config(cfg);
    auto cfg2 = io::parse_config_text(rendered);
    CHECK(io::render_config(cfg2) == rendered);
    CHECK(cfg2.states == cfg.states);
    CHECK(cfg2.pot.V0 == cfg.pot.V0);
    CHECK(cfg2.theta == cfg.theta);
}

TEST_CASE("fmt17 is fixed-width scientific with 17 significant digits")
{
    CHECK(io::fmt17(1.0) == "1.0000000000000000e+00");
    CHECK(io::fmt17(-0.4054132710354623) == "-4.0541327103546232e-01");
}

TEST_CASE("validation report carries the mandatory diagnostic sections")
{
    auto cfg = io::parse_config_text(kCanonicalText);
    cfg.oracle_n_points = 1000; // keep the structural check fast
    auto rep = io::run_validation(cfg);
    CHECK(!rep.invariants.empty());
    for (const char* section : {"pekeris", "paper_condition_scan", "condition_vs_oracle",
                                "squared_3f2_discrepancy", "closed_vs_quadrature"})
        CHECK(rep.diagnostics.contains(section));
    auto j = rep.to_json();
    CHECK(j.contains("all_passed"));
}

TEST_CASE("scan rejects bad axes and empty ranges")
{
    auto cfg = io::parse_config_text(kCanonicalText);
    CHECK_THROWS_AS(io::cmd_scan(cfg, "/tmp/nchyl_scan_test", "bogus", 0.0, 1.0, 2), ConfigError);
    CHECK_THROWS_AS(io::cmd_scan(cfg, "/tmp/nchyl_scan_test", "theta", 1.0, 0.0, 2), ConfigError);
    CHECK_THROWS_AS(io::cmd_scan(cfg, "/tmp/nchyl_scan_test", "theta", 0.0, 1.0, 0), ConfigError);
}

TEST_CASE("sidecar carries a re-parsable effective config and no timestamps")
{
    auto cfg = io::parse_config_text(kCanonicalText);
    auto sc1 = io::sidecar_json(cfg);
    auto sc2 = io::sidecar_json(cfg);
    CHECK(sc1.dump() == sc2.dump());
    auto echoed = io::parse_config_text(sc1["effective_config"].get<std::string>());
    CHECK(echoed.pot.a == cfg.pot.a);
}
