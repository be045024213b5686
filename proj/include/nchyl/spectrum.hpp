#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nchyl/errors.hpp"
#include "nchyl/potential.hpp"
#include "nchyl/radial.hpp"

namespace nchyl::spectrum {

using Complex = std::complex<double>;

enum class Condition { PaperPrinted, ParametricNu };

// The quantization condition exactly as typeset:
//   2n + 1/2 + (2n+1)Xi + n(n-1) - 4 alpha^4 l(l+1)
//     + (2Xi + 2n + 1) sqrt(Lambda) + 2 alpha^2 V0 (E+M)(g-a)/b
// evaluated in complex arithmetic (the square root may leave the real axis
// outside the bound window). Callers treat the real part as the residual and
// report the imaginary part separately.
Complex quantization_residual_paper(double E, int n, int l, const potential::PotentialParams& p);

// The parametric-NU energy relation applied to the frozen s-space coefficient
// triple (xi1_eq, xi2, xi3 = Lambda); algebraically equal to
//   2n + 1/2 + n(n-1) + (2n+1)(Xi + sqrt(Lambda)) - xi2 + 2 Lambda + 2 Xi sqrt(Lambda).
// Real for l = 0.
Complex quantization_residual_nu(double E, int n, int l, const potential::PotentialParams& p);

struct ScanPoint {
    double E;
    double re;
    double im;
};

// Residual scan over a bracket, archived in the discrepancy report.
std::vector<ScanPoint> scan_condition(Condition c, int n, int l,
                                      const potential::PotentialParams& p,
                                      double lo, double hi, int panels);

struct EnergySolution {
    std::vector<double> roots;           // refined roots of the real part, ascending
    std::vector<double> lambda_at_roots; // Lambda(E) at each root (normalizability status)
    std::vector<double> imag_at_roots;   // imaginary part of the residual at each root
    double resid_min = 0.0;              // scan extrema of the real part
    double resid_max = 0.0;
    int sign_changes = 0;
};

// Default accepted energy window: (-M + eps, M_hi - eps) with
// M_hi = M + 2*min(0, V0 g / b) and eps = 1e-6 M. Scan (default 2000 panels)
// plus bisection to |dE| <= 1e-12 M. Throws NoRoot when the scan shows no
// sign change (the message carries the residual extrema). A degenerate
// bracket (lo == hi) returns that point when the residual vanishes there.
EnergySolution solve_energy(int n, int l, const potential::PotentialParams& p,
                            Condition condition,
                            std::optional<std::pair<double, double>> bracket = std::nullopt,
                            int scan_panels = 2000);

// Normalized bound-state wavefunction in the closed form
//   phi(s) = N' s^sqrt(Lambda) (1-s)^(1/2 + Xi) 2F1(-n, n + 2 sqrt(Lambda) + 2 Xi + 1; 1 + 2 sqrt(Lambda); s).
// N' comes from the exact polynomial-Beta integral of (alpha/s)|phi|^2 over
// s in (0,1) (authoritative); the 3F2 route is evaluated in parallel and
// archived in nprime_paper.
struct BoundState {
    radial::QuantumState state;
    double energy = 0.0;
    double nprime = 0.0;          // exact Beta-sum route, > 0
    Complex nprime_paper;         // archived parallel route
    radial::SCoefficients scoef;  // frozen at the solved energy
    Condition condition_used = Condition::ParametricNu;

    double sqrt_lambda = 0.0;
    Complex xi;
    std::vector<Complex> poly;    // 2F1 coefficients, degree n
    std::vector<double> abs2_poly; // |2F1|^2 coefficients, degree 2n
    double alpha = 1.0;
    double r_c = 0.0;

    Complex phi_s(double s) const;
    double abs2_s(double s) const;   // |phi(s)|^2
    Complex phi_r(double r) const;
    double abs2_r(double r) const;   // |phi(r)|^2 as a density in r
};

// Throws NonNormalizable when Re sqrt(Lambda) <= 0 or the norm integral is
// not positive. The post-construction quadrature check lives with the caller
// (tests and the validation suite) to keep this constructor exact.
BoundState build_wavefunction(double E, int n, int l, const potential::PotentialParams& p,
                              Condition condition_used = Condition::ParametricNu);

// Interior zeros of phi on s in (0,1), counted by sign changes of the real
// part on a fine grid (l = 0 validated regime).
int count_nodes_s(const BoundState& bs, int n_grid = 5000);

} // namespace nchyl::spectrum
