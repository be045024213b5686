#include "nchyl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nchyl::oracle {

RadialGrid RadialGrid::for_potential(const potential::PotentialParams& p, double eps,
                                     double r_max_alphas, int n_points)
{
    RadialGrid g;
    g.r_min = p.r_c + eps;
    g.r_max = p.r_c + r_max_alphas * p.alpha;
    g.n_points = n_points;
    return g;
}

namespace {

// number of eigenvalues of the (d, e) tridiagonal matrix strictly below x
int sturm_count(const Eigen::VectorXd& d, double e, double x)
{
    const double e2 = e * e;
    int count = 0;
    double q = 1.0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        q = d(i) - x - (i > 0 ? e2 / q : 0.0);
        if (q == 0.0)
            q = -1e-300;
        if (q < 0.0)
            ++count;
    }
    return count;
}

double eigenvalue_k(const Eigen::VectorXd& d, double e, int k)
{
    double lo = d.minCoeff() - 2.0 * std::abs(e);
    double hi = d.maxCoeff() + 2.0 * std::abs(e);
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double tol = 1e-14 * std::max(1.0, scale);
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Thomas solve of (T - shift I) x = rhs for tridiagonal T = (d, e).
// The shift is perturbed off the exact eigenvalue by the caller.
Eigen::VectorXd tridiag_solve(const Eigen::VectorXd& d, double e, double shift,
                              const Eigen::VectorXd& rhs)
{
    const Eigen::Index N = d.size();
    Eigen::VectorXd c_prime(N), d_prime(N);
    double denom = d(0) - shift;
    if (denom == 0.0)
        denom = 1e-300;
    c_prime(0) = e / denom;
    d_prime(0) = rhs(0) / denom;
    for (Eigen::Index i = 1; i < N; ++i) {
        denom = d(i) - shift - e * c_prime(i - 1);
        if (denom == 0.0)
            denom = 1e-300;
        c_prime(i) = e / denom;
        d_prime(i) = (rhs(i) - e * d_prime(i - 1)) / denom;
    }
    Eigen::VectorXd x(N);
    x(N - 1) = d_prime(N - 1);
    for (Eigen::Index i = N - 2; i >= 0; --i)
        x(i) = d_prime(i) - c_prime(i) * x(i + 1);
    return x;
}

int count_sign_changes(const Eigen::VectorXd& v)
{
    int nodes = 0;
    double prev = 0.0;
    bool have = false;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double x = v(i);
        if (x == 0.0)
            continue;
        if (have && prev * x < 0.0)
            ++nodes;
        prev = x;
        have = true;
    }
    return nodes;
}

} // namespace

std::vector<EigenPair> grid_eigensolve(const Eigen::VectorXd& W_interior, const RadialGrid& grid,
                                       int count)
{
    const double h = grid.h();
    const Eigen::Index N = W_interior.size();
    if (N != grid.n_points - 1)
        throw DomainError("grid_eigensolve: W must be sampled on the interior nodes");
    Eigen::VectorXd d = W_interior.array() + 2.0 / (h * h);
    const double e = -1.0 / (h * h);

    std::vector<EigenPair> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        double lam = eigenvalue_k(d, e, k);
        // inverse iteration with a slightly perturbed shift
        const double shift = lam + (std::abs(lam) + 1.0) * 1e-11;
        Eigen::VectorXd v(N);
        for (Eigen::Index i = 0; i < N; ++i)
            v(i) = std::sin((k + 1) * M_PI * (i + 1.0) / (N + 1.0)) + 1e-3 * std::cos(0.7 * i);
        v.normalize();
        for (int it = 0; it < 4; ++it) {
            v = tridiag_solve(d, e, shift, v);
            double nv = v.norm();
            if (!std::isfinite(nv) || nv == 0.0)
                throw ConvergenceFailure("grid_eigensolve: inverse iteration degenerated");
            v /= nv;
        }
        // grid normalization: h * sum v^2 = 1
        v /= std::sqrt(h) * v.norm();
        if (v(0) < 0.0)
            v = -v; // fix overall sign for determinism
        out.push_back({lam, v, count_sign_changes(v)});
    }
    return out;
}

Eigen::VectorXd effective_potential(double E, int l, const potential::PotentialParams& p,
                                    const RadialGrid& grid, Centrifugal centrifugal,
                                    potential::PekerisVariant variant)
{
    const Eigen::Index N = grid.n_points - 1;
    Eigen::VectorXd W(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        double r = grid.r(static_cast<int>(i) + 1);
        double w = 2.0 * (E + p.M) * potential::v_hylleraas(r, p);
        if (l > 0) {
            double cf = (centrifugal == Centrifugal::Exact)
                            ? 1.0 / (r * r)
                            : potential::pekeris_inv_r2(r, p, variant);
            w += l * (l + 1) * cf;
        }
        W(i) = w;
    }
    return W;
}

namespace {

double lambda_n_at(double E, int n, int l, const potential::PotentialParams& p,
                   const RadialGrid& grid, const SelfConsistentOptions& opts)
{
    Eigen::VectorXd W = effective_potential(E, l, p, grid, opts.centrifugal, opts.pekeris_variant);
    const double h = grid.h();
    Eigen::VectorXd d = W.array() + 2.0 / (h * h);
    return eigenvalue_k(d, -1.0 / (h * h), n);
}

struct SingleGridSolve {
    double energy;
    int iterations;
    bool converged;
    SolveMethod method;
};

SingleGridSolve solve_on_grid(int n, int l, const potential::PotentialParams& p,
                              const RadialGrid& grid, const SelfConsistentOptions& opts)
{
    const double M = p.M;
    auto lam = [&](double E) { return lambda_n_at(E, n, l, p, grid, opts); };

    // stage 1: the damped fixed point, both sign branches
    int used_iterations = 0;
    for (double sign : {+1.0, -1.0}) {
        double E = 0.0;
        double prev_step = std::numeric_limits<double>::infinity();
        int non_contracting = 0;
        for (int it = 1; it <= opts.max_iterations; ++it) {
            ++used_iterations;
            double lm = lam(E);
            if (lm + M * M < 0.0)
                break; // sqrt would leave the real axis; try the other branch / fallback
            double target = sign * std::sqrt(lm + M * M);
            double En = E + opts.eta * (target - E);
            double step = std::abs(En - E);
            if (En <= -M || En >= M)
                break; // left the bound window
            if (step < opts.tol * M)
                return {En, used_iterations, true, SolveMethod::FixedPoint};
            non_contracting = (step >= prev_step) ? non_contracting + 1 : 0;
            if (non_contracting >= 8)
                break; // repelling fixed point; fall back to bisection
            prev_step = step;
            E = En;
        }
    }

    // stage 2: branch-free bisection on lambda_n(E) = E^2 - M^2
    const double eps = 1e-6 * M;
    const int scan_points = 40;
    double lo = -M + eps, hi = M - eps;
    double Ea = lo, fa = lam(Ea) - (Ea * Ea - M * M);
    double root = std::numeric_limits<double>::quiet_NaN();
    for (int i = 1; i <= scan_points; ++i) {
        double Eb = lo + (hi - lo) * i / scan_points;
        double fb = lam(Eb) - (Eb * Eb - M * M);
        ++used_iterations;
        if (fa * fb < 0.0) {
            double x0 = Ea, x1 = Eb, f0 = fa;
            while (x1 - x0 > opts.tol * M) {
                double xm = 0.5 * (x0 + x1);
                double fm = lam(xm) - (xm * xm - M * M);
                ++used_iterations;
                if (f0 * fm <= 0.0)
                    x1 = xm;
                else {
                    x0 = xm;
                    f0 = fm;
                }
            }
            root = 0.5 * (x0 + x1);
            break;
        }
        Ea = Eb;
        fa = fb;
    }
    if (!std::isfinite(root))
        throw NoBoundState("self_consistent_energy: no self-consistent energy in (-M, M)");
    return {root, used_iterations, true, SolveMethod::Bisection};
}

} // namespace

OracleResult self_consistent_energy(int n, int l, const potential::PotentialParams& p,
                                    const RadialGrid& grid, const SelfConsistentOptions& opts)
{
    p.validate();
    OracleResult res;

    SingleGridSolve coarse = solve_on_grid(n, l, p, grid, opts);
    res.energy_coarse = coarse.energy;
    res.iterations = coarse.iterations;
    res.method = coarse.method;
    res.converged = coarse.converged;

    RadialGrid fine = grid;
    if (opts.richardson) {
        fine.n_points = 2 * grid.n_points;
        SingleGridSolve fs = solve_on_grid(n, l, p, fine, opts);
        res.energy_fine = fs.energy;
        res.iterations += fs.iterations;
        res.energy = (4.0 * fs.energy - coarse.energy) / 3.0; // 2nd-order extrapolation
    } else {
        res.energy_fine = coarse.energy;
        res.energy = coarse.energy;
    }

    res.grid_fine = fine;
    Eigen::VectorXd W =
        effective_potential(res.energy_fine, l, p, fine, opts.centrifugal, opts.pekeris_variant);
    auto pairs = grid_eigensolve(W, fine, n + 1);
    res.wavefunction = pairs[n].v;
    res.node_count = pairs[n].node_count;
    return res;
}

} // namespace nchyl::oracle
