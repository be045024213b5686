#pragma once

#include <complex>

#include "nchyl/errors.hpp"

namespace nchyl::specfun {

using Complex = std::complex<double>;

// Log-gamma on the complex plane, principal branch, Lanczos approximation
// (g = 7, 9 coefficients) with reflection for Re z < 1/2.
// Throws PoleError at non-positive integers.
Complex ln_gamma(Complex z);

// Gamma via exp(ln_gamma). Throws PoleError at non-positive integers.
Complex gamma(Complex z);

// Rising factorial (x)_k as the explicit finite product (never via Gamma
// ratios, so negative-integer arguments are exact zeros, not poles).
Complex pochhammer(Complex x, int k);

// n! as a double (n small in this project).
double factorial(int n);

// Terminating Gauss series 2F1(-n, b2; c; s) = sum_{k=0}^{n} (-n)_k (b2)_k / ((c)_k k!) s^k.
// Throws DegenerateDenominator when c is in {0, -1, ..., -(n-1)}.
Complex hyp2f1_terminating(int n, Complex b2, Complex c, Complex s);

// Terminating 3F2(-n, a2, a3; b1, b2; 1).
// Throws DegenerateDenominator when a denominator Pochhammer vanishes within reach.
Complex hyp3f2_unit_terminating(int n, Complex a2, Complex a3, Complex b1, Complex b2);

// Jacobi polynomial P_n^(a,b)(1-2s) via the Gamma-prefactor times the
// terminating 2F1, with the prefactor computed as the exact Pochhammer
// product (a+1)_n / n!.
// Throws PoleError when a is an integer <= -1.
Complex jacobi_p(int n, Complex a, Complex b, double s);

// Euler beta B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y) via ln_gamma differences.
Complex beta(Complex x, Complex y);

// True when z sits on a pole of Gamma (non-positive integer on the real axis).
bool is_nonpositive_integer(Complex z);

} // namespace nchyl::specfun
