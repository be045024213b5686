#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "nchyl/errors.hpp"
#include "nchyl/potential.hpp"
#include "nchyl/quadrature.hpp"

namespace nchyl::oracle {

// Uniform radial grid with Dirichlet ends. r_min defaults to the wall r_c
// (plus an optional offset eps), r_max to r_c + 60 alpha.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int n_points = 6000; // panels; interior nodes are n_points - 1

    static RadialGrid for_potential(const potential::PotentialParams& p, double eps = 0.0,
                                    double r_max_alphas = 60.0, int n_points = 6000);

    double h() const { return (r_max - r_min) / n_points; }
    double r(int i) const { return r_min + h() * i; } // i = 1 .. n_points-1 interior
};

enum class Centrifugal { Exact, Pekeris };

struct EigenPair {
    double lambda;
    Eigen::VectorXd v; // grid-normalized: h * sum v_i^2 = 1
    int node_count;
};

// `count` lowest eigenpairs of the symmetric tridiagonal discretization of
// -phi'' + W(r) phi = lambda phi (2nd-order central differences, Dirichlet).
// Sturm-count bisection for the eigenvalues, shifted inverse iteration for
// the eigenvectors. Throws ConvergenceFailure if the inverse iteration
// degenerates.
std::vector<EigenPair> grid_eigensolve(const Eigen::VectorXd& W_interior, const RadialGrid& grid,
                                       int count);

enum class SolveMethod { FixedPoint, Bisection };

struct OracleResult {
    double energy = 0.0;        // Richardson-extrapolated over (h, h/2)
    double energy_coarse = 0.0; // fixed-point/bisection value at n_points
    double energy_fine = 0.0;   // value at 2 n_points
    Eigen::VectorXd wavefunction; // finer grid, grid-normalized
    RadialGrid grid_fine;
    int node_count = 0;
    int iterations = 0;
    bool converged = false;
    SolveMethod method = SolveMethod::FixedPoint;
};

struct SelfConsistentOptions {
    Centrifugal centrifugal = Centrifugal::Exact;
    potential::PekerisVariant pekeris_variant = potential::PekerisVariant::AsPrinted;
    double eta = 0.5;        // fixed-point damping
    int max_iterations = 500;
    double tol = 1e-10;      // |dE| < tol * M
    bool richardson = true;
};

// Self-consistent bound state of the effective radial operator
//   W(r; E) = l(l+1)/r^2 (exact or Pekeris) + 2(E+M) V(r),
// eigen-condition lambda_n(E) = E^2 - M^2, E restricted to (-M, M).
// The damped fixed-point iteration E <- E + eta (sign sqrt(lambda_n + M^2) - E)
// is attempted on both sign branches first; when it fails to contract (the
// map is repelling when lambda_n'(E) is large, which happens for strongly
// coupled wells), the same equation is solved by scan + bisection on
// lambda_n(E) - (E^2 - M^2). Throws NoBoundState when no self-consistent
// energy exists in the window and ConvergenceFailure when an iteration
// diverges without the fallback finding a root.
OracleResult self_consistent_energy(int n, int l, const potential::PotentialParams& p,
                                    const RadialGrid& grid,
                                    const SelfConsistentOptions& opts = {});

// The effective operator on the interior nodes of a grid.
Eigen::VectorXd effective_potential(double E, int l, const potential::PotentialParams& p,
                                    const RadialGrid& grid, Centrifugal centrifugal,
                                    potential::PekerisVariant variant);

} // namespace nchyl::oracle
