#include "nchyl/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "nchyl/quadrature.hpp"
#include "nchyl/specfun.hpp"

namespace nchyl::spectrum {

Complex quantization_residual_paper(double E, int n, int l, const potential::PotentialParams& p)
{
    const double a2 = p.alpha * p.alpha;
    const double a4 = a2 * a2;
    const radial::SCoefficients sc = radial::s_coefficients(E, p, l);
    const Complex sqrtL = std::sqrt(Complex(sc.Lambda, 0.0));
    const Complex Xi = sc.Xi;
    return 2.0 * n + 0.5 + (2.0 * n + 1.0) * Xi + static_cast<double>(n) * (n - 1.0) -
           4.0 * a4 * l * (l + 1) + (2.0 * Xi + 2.0 * n + 1.0) * sqrtL +
           2.0 * a2 * p.V0 * (E + p.M) * (p.g - p.a) / p.b;
}

Complex quantization_residual_nu(double E, int n, int l, const potential::PotentialParams& p)
{
    const radial::SCoefficients sc = radial::s_coefficients(E, p, l);
    const Complex sqrtL = std::sqrt(Complex(sc.Lambda, 0.0));
    const Complex Xi = sc.Xi;
    return 2.0 * n + 0.5 + static_cast<double>(n) * (n - 1.0) +
           (2.0 * n + 1.0) * (Xi + sqrtL) - sc.xi2 + 2.0 * sc.Lambda + 2.0 * Xi * sqrtL;
}

namespace {

Complex residual(Condition c, double E, int n, int l, const potential::PotentialParams& p)
{
    return c == Condition::PaperPrinted ? quantization_residual_paper(E, n, l, p)
                                        : quantization_residual_nu(E, n, l, p);
}

} // namespace

std::vector<ScanPoint> scan_condition(Condition c, int n, int l,
                                      const potential::PotentialParams& p,
                                      double lo, double hi, int panels)
{
    std::vector<ScanPoint> out;
    out.reserve(panels + 1);
    for (int i = 0; i <= panels; ++i) {
        double E = lo + (hi - lo) * i / panels;
        Complex f = residual(c, E, n, l, p);
        out.push_back({E, f.real(), f.imag()});
    }
    return out;
}

EnergySolution solve_energy(int n, int l, const potential::PotentialParams& p,
                            Condition condition,
                            std::optional<std::pair<double, double>> bracket,
                            int scan_panels)
{
    p.validate();
    const double eps = 1e-6 * p.M;
    const double M_hi = p.M + 2.0 * std::min(0.0, p.V0 * p.g / p.b);
    double lo = -p.M + eps;
    double hi = M_hi - eps;
    if (bracket) {
        lo = bracket->first;
        hi = bracket->second;
    }

    auto fre = [&](double E) { return residual(condition, E, n, l, p).real(); };

    EnergySolution sol;
    if (lo == hi) {
        // fixed-point bracket: accept when the residual already vanishes
        if (std::abs(fre(lo)) < 1e-9) {
            sol.roots.push_back(lo);
            sol.lambda_at_roots.push_back(radial::s_coefficients(lo, p, l).Lambda);
            sol.imag_at_roots.push_back(residual(condition, lo, n, l, p).imag());
            sol.resid_min = sol.resid_max = fre(lo);
            return sol;
        }
        throw NoRoot("solve_energy: degenerate bracket with nonzero residual");
    }

    const auto scan = scan_condition(condition, n, l, p, lo, hi, scan_panels);
    sol.resid_min = scan.front().re;
    sol.resid_max = scan.front().re;
    for (const auto& pt : scan) {
        sol.resid_min = std::min(sol.resid_min, pt.re);
        sol.resid_max = std::max(sol.resid_max, pt.re);
    }

    const double tol = 1e-12 * p.M;
    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
        double fa = scan[i].re, fb = scan[i + 1].re;
        if (!(fa == 0.0) && !(fa * fb < 0.0))
            continue;
        double a = scan[i].E, b2 = scan[i + 1].E;
        if (fa == 0.0) {
            sol.roots.push_back(a);
        } else {
            // bisection to |dE| <= tol, then one secant polish
            double fa2 = fa;
            while (b2 - a > tol) {
                double m = 0.5 * (a + b2);
                double fm = fre(m);
                if (fm == 0.0) {
                    a = b2 = m;
                    break;
                }
                if (fa2 * fm < 0.0) {
                    b2 = m;
                } else {
                    a = m;
                    fa2 = fm;
                }
            }
            sol.roots.push_back(0.5 * (a + b2));
        }
        ++sol.sign_changes;
    }

    if (sol.roots.empty())
        throw NoRoot("solve_energy: no sign change in bracket (residual range [" +
                     std::to_string(sol.resid_min) + ", " + std::to_string(sol.resid_max) + "])");

    for (double r : sol.roots) {
        sol.lambda_at_roots.push_back(radial::s_coefficients(r, p, l).Lambda);
        sol.imag_at_roots.push_back(residual(condition, r, n, l, p).imag());
    }
    return sol;
}

Complex BoundState::phi_s(double s) const
{
    Complex f = 0.0;
    double sk = 1.0;
    for (const Complex& c : poly) {
        f += c * sk;
        sk *= s;
    }
    Complex pw = std::pow(Complex(1.0 - s, 0.0), Complex(0.5, 0.0) + xi);
    return nprime * std::pow(s, sqrt_lambda) * pw * f;
}

double BoundState::abs2_s(double s) const
{
    double q = 0.0;
    double sk = 1.0;
    for (double c : abs2_poly) {
        q += c * sk;
        sk *= s;
    }
    // |(1-s)^(1/2+Xi)|^2 = (1-s) for Xi on the imaginary axis
    return nprime * nprime * std::pow(s, 2.0 * sqrt_lambda) * (1.0 - s) * q;
}

Complex BoundState::phi_r(double r) const
{
    return phi_s(std::exp(-(r - r_c) / alpha));
}

double BoundState::abs2_r(double r) const
{
    return abs2_s(std::exp(-(r - r_c) / alpha));
}

BoundState build_wavefunction(double E, int n, int l, const potential::PotentialParams& p,
                              Condition condition_used)
{
    p.validate();
    BoundState bs;
    bs.state = radial::make_state(n, l, 0);
    bs.energy = E;
    bs.condition_used = condition_used;
    bs.scoef = radial::s_coefficients(E, p, l);
    bs.alpha = p.alpha;
    bs.r_c = p.r_c;
    bs.xi = bs.scoef.Xi;

    if (!(bs.scoef.Lambda > 0.0))
        throw NonNormalizable("build_wavefunction: Lambda <= 0, s->0 tail is not decaying");
    bs.sqrt_lambda = std::sqrt(bs.scoef.Lambda);

    // 2F1(-n, n + 2 sqrtL + 2 Xi + 1; 1 + 2 sqrtL; s) coefficients
    const Complex b2 = Complex(n + 2.0 * bs.sqrt_lambda + 1.0, 0.0) + 2.0 * bs.xi;
    const Complex c = Complex(1.0 + 2.0 * bs.sqrt_lambda, 0.0);
    bs.poly.assign(n + 1, Complex(0.0));
    bs.poly[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        double kk = k;
        bs.poly[k + 1] = bs.poly[k] * (Complex(-n) + kk) * (b2 + kk) / ((c + kk) * (kk + 1.0));
    }

    // |F|^2 coefficients (real by conjugate symmetry)
    bs.abs2_poly.assign(2 * n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            bs.abs2_poly[i + j] += (bs.poly[i] * std::conj(bs.poly[j])).real();

    // exact norm: integral_0^1 (alpha/s)|phi|^2 ds
    //   = alpha N'^2 sum_k q_k B(2 sqrtL + k, 2)
    std::vector<Complex> qpoly(bs.abs2_poly.begin(), bs.abs2_poly.end());
    double I = p.alpha * oracle::exact_poly_beta_integral(
                             Complex(2.0 * bs.sqrt_lambda, 0.0), Complex(2.0, 0.0), qpoly)
                             .real();
    if (!(I > 0.0) || !std::isfinite(I))
        throw NonNormalizable("build_wavefunction: norm integral not positive/finite");
    bs.nprime = 1.0 / std::sqrt(I);

    // archived parallel route: alpha B(2 sqrtL, 2 Xi + 2) 3F2(-n, n+2sqrtL+2Xi+1, 2Xi+2; 1+2sqrtL, 2Xi+2+2sqrtL; 1)
    try {
        Complex sL = Complex(2.0 * bs.sqrt_lambda, 0.0);
        Complex sig = 2.0 * bs.xi + 2.0;
        Complex I_paper = p.alpha * specfun::beta(sL, sig) *
                          specfun::hyp3f2_unit_terminating(n, b2, sig, c, sig + sL);
        bs.nprime_paper = 1.0 / std::sqrt(I_paper);
    } catch (const Error&) {
        bs.nprime_paper = Complex(std::nan(""), std::nan(""));
    }
    return bs;
}

int count_nodes_s(const BoundState& bs, int n_grid)
{
    int nodes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 1; i < n_grid; ++i) {
        double s = static_cast<double>(i) / n_grid;
        double v = bs.phi_s(s).real();
        if (have_prev && prev * v < 0.0)
            ++nodes;
        if (v != 0.0) {
            prev = v;
            have_prev = true;
        }
    }
    return nodes;
}

} // namespace nchyl::spectrum
