#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nchyl/errors.hpp"

namespace nchyl::oracle {

using Complex = std::complex<double>;

// Adaptive Gauss-Kronrod 15(7) panel integration.
// Subdivides until the panel error estimate meets max(abs_tol, rel_tol*|I|).
// Throws QuadratureFailure when the subdivision budget is exhausted.
double quad_integrate(const std::function<double(double)>& f, double lo, double hi,
                      double abs_tol = 1e-12, double rel_tol = 1e-10);

// Exact integral_0^1 s^(xi-1) (1-s)^(sigma-1) poly(s) ds = sum_k c_k B(xi+k, sigma),
// poly given by its coefficient list. Throws DivergentIntegral unless
// Re xi > 0 and Re sigma > 0.
Complex exact_poly_beta_integral(Complex xi, Complex sigma, const std::vector<Complex>& poly);

} // namespace nchyl::oracle
