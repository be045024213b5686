#include <doctest.h>

#include <cmath>

#include "nchyl/quadrature.hpp"
#include "nchyl/spectrum.hpp"
#include "testutil.hpp"

using namespace nchyl;
using nchyl::testutil::canonical_well;
using spectrum::Condition;

TEST_CASE("paper-printed condition: free case has no root")
{
    auto p = canonical_well();
    p.V0 = 0.0;
    // residual is 1/2 + sqrt(M^2 - E^2) > 0 throughout the window
    for (double E = -0.99; E < 1.0; E += 0.07) {
        auto f = spectrum::quantization_residual_paper(E, 0, 0, p);
        CHECK(f.real() > 0.0);
        CHECK(f.imag() == 0.0);
    }
    CHECK_THROWS_AS(spectrum::solve_energy(0, 0, p, Condition::PaperPrinted), NoRoot);
}

TEST_CASE("paper-printed condition at the sqrt(Lambda) = 0 boundary")
{
    auto p = canonical_well();
    p.g = p.a = 0.0; // g = a and the g V0 term both vanish
    for (int n : {0, 1, 2}) {
        auto f = spectrum::quantization_residual_paper(p.M, n, 0, p);
        CHECK(f.real() == doctest::Approx(2.0 * n + 0.5 + n * (n - 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("paper-printed condition on the canonical well: scan is archived, no sign change")
{
    auto p = canonical_well();
    auto scan = spectrum::scan_condition(Condition::PaperPrinted, 0, 0, p, -0.999999, 0.999999,
                                         10000);
    int sign_changes = 0;
    for (std::size_t i = 0; i + 1 < scan.size(); ++i)
        if (scan[i].re * scan[i + 1].re < 0.0)
            ++sign_changes;
    CHECK(sign_changes == 0);
}

TEST_CASE("parametric-NU condition: canonical roots")
{
    auto p = canonical_well();

    p.V0 = 0.0;
    CHECK_THROWS_AS(spectrum::solve_energy(0, 0, p, Condition::ParametricNu), NoRoot);
    p = canonical_well();

    auto s0 = spectrum::solve_energy(0, 0, p, Condition::ParametricNu);
    CHECK(s0.sign_changes == 1);
    CHECK(s0.roots.size() == 1);
    CHECK(s0.roots.front() == doctest::Approx(-0.4054132710354623).epsilon(1e-9));
    CHECK(s0.imag_at_roots.front() == 0.0); // real for l = 0

    auto s1 = spectrum::solve_energy(1, 0, p, Condition::ParametricNu);
    CHECK(s1.sign_changes == 1);
    CHECK(s1.roots.front() == doctest::Approx(0.1680471801902184).epsilon(1e-9));
    CHECK(s1.roots.front() > s0.roots.front()); // ordering in n

    // fixed-point bracket returns a known root
    auto fixed = spectrum::solve_energy(0, 0, p, Condition::ParametricNu,
                                        std::make_pair(s0.roots.front(), s0.roots.front()));
    CHECK(fixed.roots.front() == doctest::Approx(s0.roots.front()).epsilon(1e-14));
}

TEST_CASE("deeper wells bind more strongly")
{
    auto p = canonical_well();
    double prev = 1.0;
    for (int i = 0; i < 5; ++i) {
        auto q = p;
        q.a = p.a * (1.0 + 0.2 * i);
        auto sol = spectrum::solve_energy(0, 0, q, Condition::ParametricNu);
        CHECK(sol.roots.front() < prev);
        prev = sol.roots.front();
    }
}

TEST_CASE("scale consistency at l = 0")
{
    auto p = canonical_well();
    auto sol = spectrum::solve_energy(0, 0, p, Condition::ParametricNu);

    double lam = 2.0;
    auto q = p;
    q.r_c *= lam;
    q.alpha *= lam;
    q.M /= lam;
    q.V0 /= lam;
    auto sol2 = spectrum::solve_energy(0, 0, q, Condition::ParametricNu);
    CHECK(std::abs(sol2.roots.front() - sol.roots.front() / lam) /
              std::abs(sol.roots.front() / lam) <
          1e-8);
}

TEST_CASE("build_wavefunction: normalization and shape")
{
    auto p = canonical_well();

    auto s0 = spectrum::solve_energy(0, 0, p, Condition::ParametricNu);
    auto bs0 = spectrum::build_wavefunction(s0.roots.front(), 0, 0, p);
    // n = 0, l = 0: N' = [alpha B(2 sqrtL, 2)]^(-1/2); frozen reference
    CHECK(bs0.nprime == doctest::Approx(2.2739453258069545).epsilon(1e-12));
    // at l = 0 the parallel route reduces to the same integral
    CHECK(bs0.nprime_paper.real() == doctest::Approx(bs0.nprime).epsilon(1e-12));
    CHECK(std::abs(bs0.nprime_paper.imag()) < 1e-12);

    double I0 = oracle::quad_integrate([&](double r) { return bs0.abs2_r(r); }, p.r_c,
                                       p.r_c + 60.0 * p.alpha, 1e-13, 1e-12);
    CHECK(std::abs(I0 - 1.0) <= 1e-8);
    CHECK(spectrum::count_nodes_s(bs0) == 0);

    auto s1 = spectrum::solve_energy(1, 0, p, Condition::ParametricNu);
    auto bs1 = spectrum::build_wavefunction(s1.roots.front(), 1, 0, p);
    CHECK(bs1.nprime == doctest::Approx(5.3712403976300390).epsilon(1e-11));
    double I1 = oracle::quad_integrate([&](double r) { return bs1.abs2_r(r); }, p.r_c,
                                       p.r_c + 60.0 * p.alpha, 1e-13, 1e-12);
    CHECK(std::abs(I1 - 1.0) <= 1e-8);
    CHECK(spectrum::count_nodes_s(bs1) == 1);

    // the interior zero of the n = 1 state sits at s = (1+2sqrtL)/(2+2sqrtL)
    double sL = bs1.sqrt_lambda;
    double node = (1.0 + 2.0 * sL) / (2.0 + 2.0 * sL);
    double below = bs1.phi_s(node - 1e-3).real();
    double above = bs1.phi_s(node + 1e-3).real();
    CHECK(below * above < 0.0);

    // boundary behavior: phi -> 0 at both ends
    CHECK(std::abs(bs0.phi_s(1e-8)) < 1e-6);
    CHECK(std::abs(bs0.phi_s(1.0 - 1e-10)) < 1e-4);
}

TEST_CASE("build_wavefunction rejects non-normalizable energies")
{
    auto p = canonical_well();
    // |E| > M makes Lambda negative for g = 0
    CHECK_THROWS_AS(spectrum::build_wavefunction(1.2, 0, 0, p), NonNormalizable);
}

TEST_CASE("solve_energy honors explicit brackets")
{
    auto p = canonical_well();
    auto sol = spectrum::solve_energy(0, 0, p, Condition::ParametricNu,
                                      std::make_pair(-0.9, 0.0));
    CHECK(sol.roots.front() == doctest::Approx(-0.4054132710354623).epsilon(1e-9));
    CHECK_THROWS_AS(
        spectrum::solve_energy(0, 0, p, Condition::ParametricNu, std::make_pair(0.0, 0.9)),
        NoRoot);
}
