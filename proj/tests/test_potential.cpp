#include <doctest.h>

#include <cmath>

#include "nchyl/potential.hpp"
#include "testutil.hpp"

using namespace nchyl;
using nchyl::testutil::canonical_well;

TEST_CASE("v_hylleraas closed-form values")
{
    auto p = canonical_well();
    CHECK(potential::v_hylleraas(p.r_c, p) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(std::abs(potential::v_hylleraas(p.r_c + 45.0 * p.alpha, p)) < 1e-15);
    CHECK(potential::v_hylleraas(p.r_c + p.alpha, p) ==
          doctest::Approx(-1.075765685479980483).epsilon(1e-14));
}

TEST_CASE("v_hylleraas bounds and monotonicity")
{
    auto p = canonical_well();
    double v_inf = p.V0 * p.g / p.b;
    double prev = potential::v_hylleraas(1e-6, p);
    for (int i = 1; i <= 500; ++i) {
        double r = 40.0 * p.alpha * i / 500.0;
        double v = potential::v_hylleraas(r, p);
        CHECK(v <= v_inf + 1e-12); // attractive well rises toward V0 g / b
        CHECK(v >= prev - 1e-12);  // g - a > 0 here, so V increases with r
        prev = v;
    }
}

TEST_CASE("dv_dr closed form vs finite differences")
{
    auto p = canonical_well();
    CHECK(potential::dv_dr(p.r_c, p) == doctest::Approx(1.0).epsilon(1e-15));

    auto flat = p;
    flat.g = flat.a = -1.3;
    for (double r : {0.1, 0.7, 2.5})
        CHECK(potential::dv_dr(r, flat) == 0.0);

    double h = 1e-6 * p.alpha;
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double r = p.r_c / 4.0 + (p.r_c + 30.0 * p.alpha - p.r_c / 4.0) * i / 200.0;
        double fd = (potential::v_hylleraas(r + h, p) - potential::v_hylleraas(r - h, p)) / (2 * h);
        double an = potential::dv_dr(r, p);
        worst = std::max(worst, std::abs(fd - an) / std::max(std::abs(an), 1e-12));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("v_nc_term equals the Bopp composition identically")
{
    auto p = canonical_well();
    potential::NCParams nc{1e-3, 1};

    CHECK(potential::v_nc_term(1.0, p, {0.0, 1}) == 0.0);
    CHECK(potential::v_nc_term(1.0, p, {1e-3, 0}) == 0.0);

    double worst = 0.0;
    for (int i = 0; i <= 300; ++i) {
        double lo = p.r_c / 4.0 + 1e-9, hi = p.r_c + 30.0 * p.alpha;
        double r = lo * std::pow(hi / lo, i / 300.0);
        double lhs = potential::v_nc_term(r, p, nc);
        double rhs = -(nc.theta * nc.m_l / (2.0 * r)) * potential::dv_dr(r, p);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
    }
    CHECK(worst <= 1e-12);

    CHECK_THROWS_AS(potential::v_nc_term(0.0, p, nc), DomainError);
}

TEST_CASE("pekeris_inv_r2 variants")
{
    auto p = canonical_well();
    CHECK(potential::pekeris_inv_r2(p.r_c, p) ==
          doctest::Approx(p.alpha * p.alpha).epsilon(1e-15));
    CHECK(std::abs(potential::pekeris_inv_r2(p.r_c + 50.0 * p.alpha, p)) < 1e-15);
    CHECK(potential::pekeris_inv_r2(1.5, p) ==
          doctest::Approx(0.78644773296592741).epsilon(1e-14));

    // conventional variant: u / (alpha^2 (1-u)^2)
    double r = 2.0;
    double u = std::exp(-(r - p.r_c) / p.alpha);
    CHECK(potential::pekeris_inv_r2(r, p, potential::PekerisVariant::Conventional) ==
          doctest::Approx(u / (p.alpha * p.alpha * (1 - u) * (1 - u))).epsilon(1e-15));
}

TEST_CASE("electric field pieces")
{
    potential::FieldParams f{1.0, 1.0, 0.1};
    potential::NCParams nc{1e-3, 1};

    CHECK(potential::v_efield(2.0, {1.0, 1.0, 0.0}) == 0.0);
    CHECK(potential::v_efield_nc(2.0, {1.0, 1.0, 0.0}, nc) == 0.0);
    CHECK(potential::v_efield(2.0, f) == doctest::Approx(-0.05).epsilon(1e-15));
    CHECK(potential::v_efield_nc(2.0, f, nc) == doctest::Approx(-6.25e-6).epsilon(1e-12));
    CHECK_THROWS_AS(potential::v_efield(0.0, f), DomainError);
}

TEST_CASE("coordinate transform round trip")
{
    auto p = canonical_well();
    CHECK(potential::to_s(p.r_c, p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(potential::to_s(p.r_c + 50.0 * p.alpha, p) < 1e-20);

    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        double r = p.r_c + 40.0 * p.alpha * i / 400.0;
        double back = potential::to_r(potential::to_s(r, p), p);
        worst = std::max(worst, std::abs(back - r) / r);
    }
    CHECK(worst <= 1e-12);

    CHECK_THROWS_AS(potential::to_r(0.0, p), DomainError);
    CHECK_THROWS_AS(potential::to_r(1.5, p), DomainError);
    CHECK_THROWS_AS(potential::to_r(-0.2, p), DomainError);
}

TEST_CASE("parameter validation")
{
    auto p = canonical_well();
    p.b = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = canonical_well();
    p.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = canonical_well();
    p.M = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}
