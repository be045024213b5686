#pragma once

#include <stdexcept>
#include <string>

namespace nchyl {

// Error hierarchy shared by all modules. Every throwing operation documents
// which of these it can raise.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gamma-type pole hit (non-positive integer argument).
struct PoleError : Error {
    using Error::Error;
};

// Argument outside the operation's domain (r = 0, s outside (0,1], kappa = 0, ...).
struct DomainError : Error {
    using Error::Error;
};

// Vanishing denominator Pochhammer in a terminating hypergeometric series.
struct DegenerateDenominator : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

// Residual grid has too few points for the 4th-order stencils.
struct GridTooCoarse : Error {
    using Error::Error;
};

// Wavefunction cannot be normalized (Re sqrt(Lambda) <= 0 or divergent integral).
struct NonNormalizable : Error {
    using Error::Error;
};

// Beta-integral convergence condition violated (Re xi <= 0 or Re sigma <= 0).
struct DivergentIntegral : Error {
    using Error::Error;
};

// Root scan found no sign change in the bracket.
struct NoRoot : Error {
    using Error::Error;
};

// Self-consistent oracle found no bound state in the energy window.
struct NoBoundState : Error {
    using Error::Error;
};

// Iterative scheme failed to converge within its iteration budget.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// Configuration file is malformed, has unknown keys, or violates invariants.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace nchyl
