#pragma once

#include <complex>

#include <Eigen/Core>

#include "nchyl/errors.hpp"
#include "nchyl/potential.hpp"

namespace nchyl::radial {

using Complex = std::complex<double>;

// (n, kappa, l, j, m_l) bookkeeping. kappa is the spin-orbit eigenvalue of
// K = sigma.L + 1: kappa = j + 1/2 with j = l - 1/2 for kappa > 0, and
// kappa = -(j + 1/2) with j = l + 1/2 for kappa < 0.
struct QuantumState {
    int n = 0;     // radial node index, >= 0
    int kappa = -1; // nonzero
    int l = 0;
    double j = 0.5;
    int m_l = 0;   // |m_l| <= l

    void validate() const;
};

// (l, j) from kappa. Throws DomainError on kappa = 0.
std::pair<int, double> kappa_to_lj(int kappa);

QuantumState make_state(int n, int l, int m_l);

// Coefficients of the s-space equation
//
//   phi'' + (1/s) phi' + [ -xi1_eq s^2 + xi2 s - xi3 ] / (s(1-s))^2 phi = 0
//
// for s = exp(-(r - r_c)/alpha), together with the named combinations
//
//   Lambda = alpha^2 [2 V0 g (E+M) - b(E^2 - M^2)] / b
//   Xi     = sqrt(-alpha^4 l(l+1))              (0 for l = 0, imaginary otherwise)
//   Aleph  = [-2 alpha^2 V0 (E+M) a - b alpha^2 (M^2 - E^2)] / b   (= -xi1; reported, no consumer)
//
// Frozen convention (sign and regrouping conventions vary across
// transcriptions of this equation; one reading is fixed project-wide):
//   xi1 = alpha^2 [2 V0 a (E+M) - b(E^2 - M^2)] / b            (raw numerator readoff, reported)
//   xi2 = -2 alpha^2 [2 alpha^2 b l(l+1) + V0 (g+a)(E+M) + b(M^2 - E^2)] / b
//   xi3 = +Lambda   (sign fixed by the indicial exponent: the wavefunction
//                    behaves as s^sqrt(Lambda) at s -> 0, so the constant
//                    term of the numerator must be -Lambda)
//   xi1_eq = xi2 - Lambda + Xi^2 - 1/4
//            (the unique s^2-coefficient for which the equation's indicial
//             data reproduce the closed-form wavefunction exponents
//             s^sqrt(Lambda) and (1-s)^(1/2 + Xi); with it the standard
//             parametric-NU combination 1/4 + xi1_eq - xi2 + xi3 equals Xi^2
//             identically. The raw readoff xi1 is inconsistent with Xi by
//             the constant 1/4 - 4 alpha^4 l(l+1) + alpha^4 l(l+1) and is
//             kept only as a reported diagnostic.)
struct SCoefficients {
    double Lambda = 0.0;
    Complex Xi;
    double Aleph = 0.0;
    double xi1 = 0.0;    // raw readoff, diagnostic only
    double xi2 = 0.0;
    double xi3 = 0.0;    // = Lambda
    double xi1_eq = 0.0; // s^2-coefficient actually used in the equation
};

SCoefficients s_coefficients(double E, const potential::PotentialParams& p, int l);

// The rational coefficient [ -xi1_eq s^2 + xi2 s - xi3 ] / (s(1-s))^2.
double equation_coefficient(double s, const SCoefficients& sc);

// Scaled max-norm of the discrete residual of the s-space equation for a
// candidate phi sampled on a uniform grid strictly inside (0,1).
// 4th-order central stencils in the interior, one-sided 4th-order stencils
// in the two boundary bands. Throws GridTooCoarse below 200 points.
double s_equation_residual(const Eigen::ArrayXcd& phi, double E,
                           const potential::PotentialParams& p, int l,
                           const Eigen::ArrayXd& s_grid);

} // namespace nchyl::radial
