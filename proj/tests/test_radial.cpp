#include <doctest.h>

#include <cmath>

#include "nchyl/radial.hpp"
#include "nchyl/spectrum.hpp"
#include "testutil.hpp"

using namespace nchyl;
using nchyl::testutil::canonical_well;

TEST_CASE("kappa to (l, j)")
{
    auto [l0, j0] = radial::kappa_to_lj(-1);
    CHECK(l0 == 0);
    CHECK(j0 == doctest::Approx(0.5));
    auto [l1, j1] = radial::kappa_to_lj(1);
    CHECK(l1 == 1);
    CHECK(j1 == doctest::Approx(0.5));
    auto [l2, j2] = radial::kappa_to_lj(2);
    CHECK(l2 == 2);
    CHECK(j2 == doctest::Approx(1.5));
    CHECK_THROWS_AS(radial::kappa_to_lj(0), DomainError);
}

TEST_CASE("quantum state invariants")
{
    CHECK_NOTHROW(radial::make_state(0, 0, 0));
    CHECK_NOTHROW(radial::make_state(1, 2, -2));
    CHECK_THROWS_AS(radial::make_state(0, 1, 2), ConfigError);

    radial::QuantumState st = radial::make_state(0, 1, 1);
    st.kappa = 0;
    CHECK_THROWS_AS(st.validate(), DomainError);
}

TEST_CASE("s_coefficients named values")
{
    auto p = canonical_well();

    auto sc0 = radial::s_coefficients(0.5, p, 0);
    CHECK(sc0.Xi == radial::Complex(0.0, 0.0));
    CHECK(sc0.Lambda == doctest::Approx(0.75).epsilon(1e-15)); // g = 0 kills the V0 term
    CHECK(sc0.xi3 == sc0.Lambda);
    CHECK(sc0.Aleph == doctest::Approx(-sc0.xi1).epsilon(1e-15));

    auto sc1 = radial::s_coefficients(0.5, p, 1);
    CHECK(sc1.Xi.real() == doctest::Approx(0.0));
    CHECK(sc1.Xi.imag() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    // the frozen equation triple reproduces the wavefunction indicial data:
    // 1/4 + xi1_eq - xi2 + xi3 = Xi^2 identically
    for (double E : {-0.7, 0.1, 0.6}) {
        for (int l : {0, 1, 2}) {
            auto sc = radial::s_coefficients(E, p, l);
            double alpha9 = 0.25 + sc.xi1_eq - sc.xi2 + sc.xi3;
            double xi_sq = -std::pow(p.alpha, 4) * l * (l + 1);
            CHECK(alpha9 == doctest::Approx(xi_sq).epsilon(1e-13));
        }
    }
}

TEST_CASE("Lambda is quadratic in E with the expected derivative")
{
    auto p = canonical_well();
    for (double E : {-0.6, 0.0, 0.4}) {
        double h = 1e-6;
        double fd = (radial::s_coefficients(E + h, p, 0).Lambda -
                     radial::s_coefficients(E - h, p, 0).Lambda) /
                    (2.0 * h);
        double an = p.alpha * p.alpha * (2.0 * p.V0 * p.g - 2.0 * p.b * E) / p.b;
        CHECK(std::abs(fd - an) / std::max(std::abs(an), 1.0) < 1e-8);
    }
}

namespace {

Eigen::ArrayXd make_grid(int N, double lo, double hi)
{
    Eigen::ArrayXd g(N);
    for (int i = 0; i < N; ++i)
        g(i) = lo + (hi - lo) * i / (N - 1.0);
    return g;
}

} // namespace

TEST_CASE("s_equation_residual controls")
{
    auto p = canonical_well();
    const int N = 2000;
    Eigen::ArrayXd grid = make_grid(N, 0.05, 0.90);

    // the zero function has zero residual
    Eigen::ArrayXcd zero = Eigen::ArrayXcd::Zero(N);
    CHECK(radial::s_equation_residual(zero, 0.2, p, 0, grid) == 0.0);

    // an arbitrary non-solution at a generic energy is loudly rejected
    Eigen::ArrayXcd lin(N);
    for (int i = 0; i < N; ++i)
        lin(i) = grid(i);
    CHECK(radial::s_equation_residual(lin, 0.2, p, 0, grid) > 1e-2);

    // grid too coarse
    Eigen::ArrayXd coarse = make_grid(100, 0.05, 0.90);
    Eigen::ArrayXcd phi100 = Eigen::ArrayXcd::Ones(100);
    CHECK_THROWS_AS(radial::s_equation_residual(phi100, 0.2, p, 0, coarse), GridTooCoarse);
}

TEST_CASE("constructed closed-form state satisfies the s-space equation")
{
    auto p = canonical_well();
    const int N = 2000;
    Eigen::ArrayXd grid = make_grid(N, 0.05, 0.90);

    for (int n : {0, 1}) {
        auto sol = spectrum::solve_energy(n, 0, p, spectrum::Condition::ParametricNu);
        REQUIRE(sol.roots.size() == 1);
        auto bs = spectrum::build_wavefunction(sol.roots.front(), n, 0, p);
        Eigen::ArrayXcd phi(N);
        for (int i = 0; i < N; ++i)
            phi(i) = bs.phi_s(grid(i));
        double res = radial::s_equation_residual(phi, bs.energy, p, 0, grid);
        CHECK(res <= 1e-6);

        // negative control: the same wavefunction at a detuned energy fails
        double E_bad = bs.energy + 0.05;
        double res_bad = radial::s_equation_residual(phi, E_bad, p, 0, grid);
        CHECK(res_bad > 100.0 * res);
    }
}
