#include "nchyl/radial.hpp"

#include <cmath>
#include <cstdlib>

namespace nchyl::radial {

void QuantumState::validate() const
{
    if (n < 0)
        throw ConfigError("state: n must be nonnegative");
    if (kappa == 0)
        throw DomainError("state: kappa must be nonzero");
    auto [ll, jj] = kappa_to_lj(kappa);
    if (ll != l || jj != j)
        throw ConfigError("state: (l, j) inconsistent with kappa");
    if (std::abs(m_l) > l)
        throw ConfigError("state: |m_l| must not exceed l");
}

std::pair<int, double> kappa_to_lj(int kappa)
{
    if (kappa == 0)
        throw DomainError("kappa_to_lj: kappa must be nonzero");
    if (kappa > 0) {
        double j = kappa - 0.5; // kappa = j + 1/2
        int l = kappa;          // j = l - 1/2
        return {l, j};
    }
    double j = -kappa - 0.5; // kappa = -(j + 1/2)
    int l = -kappa - 1;      // j = l + 1/2
    return {l, j};
}

QuantumState make_state(int n, int l, int m_l)
{
    QuantumState st;
    st.n = n;
    st.l = l;
    st.m_l = m_l;
    st.kappa = -(l + 1); // j = l + 1/2 branch
    st.j = l + 0.5;
    st.validate();
    return st;
}

SCoefficients s_coefficients(double E, const potential::PotentialParams& p, int l)
{
    const double a2 = p.alpha * p.alpha;
    const double EM = E + p.M;
    const double bM2E2 = p.b * (p.M * p.M - E * E);

    SCoefficients sc;
    sc.Lambda = a2 * (2.0 * p.V0 * p.g * EM + bM2E2) / p.b;
    double xi_sq = -a2 * a2 * l * (l + 1);
    sc.Xi = std::sqrt(Complex(xi_sq, 0.0));
    sc.Aleph = (-2.0 * a2 * p.V0 * EM * p.a - bM2E2 * a2) / p.b;
    sc.xi1 = a2 * (2.0 * p.V0 * p.a * EM + bM2E2) / p.b;
    sc.xi2 = -2.0 * a2 * (2.0 * a2 * p.b * l * (l + 1) + p.V0 * (p.g + p.a) * EM + bM2E2) / p.b;
    sc.xi3 = sc.Lambda;
    sc.xi1_eq = sc.xi2 - sc.Lambda + xi_sq - 0.25;
    return sc;
}

double equation_coefficient(double s, const SCoefficients& sc)
{
    double num = -sc.xi1_eq * s * s + sc.xi2 * s - sc.xi3;
    double den = s * (1.0 - s);
    return num / (den * den);
}

double s_equation_residual(const Eigen::ArrayXcd& phi, double E,
                           const potential::PotentialParams& p, int l,
                           const Eigen::ArrayXd& s_grid)
{
    const Eigen::Index N = s_grid.size();
    if (N < 200)
        throw GridTooCoarse("s_equation_residual: need at least 200 grid points");
    if (phi.size() != N)
        throw DomainError("s_equation_residual: phi and grid sizes differ");
    if (!(s_grid(0) > 0.0) || !(s_grid(N - 1) < 1.0))
        throw DomainError("s_equation_residual: grid must lie strictly inside (0,1)");

    const double h = s_grid(1) - s_grid(0);
    const SCoefficients sc = s_coefficients(E, p, l);

    auto d1 = [&](Eigen::Index i) -> Complex {
        if (i >= 2 && i <= N - 3)
            return (phi(i - 2) - 8.0 * phi(i - 1) + 8.0 * phi(i + 1) - phi(i + 2)) / (12.0 * h);
        if (i < 2) {
            double c1[5] = {-25, 48, -36, 16, -3};
            double c2[5] = {-3, -10, 18, -6, 1};
            const double* c = (i == 0) ? c1 : c2;
            Complex acc = 0.0;
            for (int k = 0; k < 5; ++k)
                acc += c[k] * phi(k);
            return acc / (12.0 * h);
        }
        // mirrored backward stencils
        double c1[5] = {-25, 48, -36, 16, -3};
        double c2[5] = {-3, -10, 18, -6, 1};
        const double* c = (i == N - 1) ? c1 : c2;
        Complex acc = 0.0;
        for (int k = 0; k < 5; ++k)
            acc += c[k] * phi(N - 1 - k);
        return -acc / (12.0 * h);
    };

    auto d2 = [&](Eigen::Index i) -> Complex {
        if (i >= 2 && i <= N - 3)
            return (-phi(i - 2) + 16.0 * phi(i - 1) - 30.0 * phi(i) + 16.0 * phi(i + 1) - phi(i + 2)) /
                   (12.0 * h * h);
        if (i < 2) {
            double c1[6] = {45, -154, 214, -156, 61, -10};
            double c2[6] = {10, -15, -4, 14, -6, 1};
            const double* c = (i == 0) ? c1 : c2;
            Complex acc = 0.0;
            for (int k = 0; k < 6; ++k)
                acc += c[k] * phi(k);
            return acc / (12.0 * h * h);
        }
        double c1[6] = {45, -154, 214, -156, 61, -10};
        double c2[6] = {10, -15, -4, 14, -6, 1};
        const double* c = (i == N - 1) ? c1 : c2;
        Complex acc = 0.0;
        for (int k = 0; k < 6; ++k)
            acc += c[k] * phi(N - 1 - k);
        return acc / (12.0 * h * h);
    };

    const double phimax = phi.abs().maxCoeff();
    if (phimax == 0.0)
        return 0.0;

    double worst = 0.0;
    for (Eigen::Index i = 0; i < N; ++i) {
        double s = s_grid(i);
        double coef = equation_coefficient(s, sc);
        Complex res = d2(i) + d1(i) / s + coef * phi(i);
        double scale = phimax * (1.0 + std::abs(coef) + 1.0 / s);
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

} // namespace nchyl::radial
