#include "nchyl/perturbation.hpp"

#include <cmath>

#include "nchyl/quadrature.hpp"
#include "nchyl/specfun.hpp"

namespace nchyl::perturbation {

namespace {

constexpr double kTailAlphas = 60.0;

double expectation(const spectrum::BoundState& bs, const potential::PotentialParams& p,
                   const std::function<double(double)>& op)
{
    auto integrand = [&](double r) { return bs.abs2_r(r) * op(r); };
    return oracle::quad_integrate(integrand, p.r_c, p.r_c + kTailAlphas * p.alpha, 1e-12, 1e-10);
}

double to_dE(const spectrum::BoundState& bs, double d_eps)
{
    if (std::abs(bs.energy) < 1e-12)
        throw DomainError("first-order shift: E0 too close to zero for the eps = E^2 - M^2 conversion");
    return d_eps / (2.0 * bs.energy);
}

} // namespace

double perturbing_operator_theta(double r, const spectrum::BoundState& bs,
                                 const potential::PotentialParams& p,
                                 const potential::NCParams& nc, potential::PekerisVariant variant)
{
    const int l = bs.state.l;
    double pek = potential::pekeris_inv_r2(r, p, variant);
    double centrifugal = l * (l + 1) * nc.theta * nc.m_l * pek * pek;
    double pot = 2.0 * (bs.energy + p.M) * potential::v_nc_term(r, p, nc);
    return centrifugal + pot;
}

double perturbing_operator_efield(double r, const spectrum::BoundState& bs,
                                  const potential::PotentialParams& p,
                                  const potential::NCParams& nc, const potential::FieldParams& f)
{
    return 2.0 * (bs.energy + p.M) *
           (potential::v_efield(r, f) + potential::v_efield_nc(r, f, nc));
}

QuadCorrection delta_e_theta_quad(const spectrum::BoundState& bs,
                                  const potential::PotentialParams& p,
                                  const potential::NCParams& nc, potential::PekerisVariant variant)
{
    if (nc.theta == 0.0 || nc.m_l == 0) {
        return {0.0, 0.0};
    }
    double d_eps = expectation(bs, p, [&](double r) {
        return perturbing_operator_theta(r, bs, p, nc, variant);
    });
    return {to_dE(bs, d_eps), d_eps};
}

QuadCorrection delta_e_efield_quad(const spectrum::BoundState& bs,
                                   const potential::PotentialParams& p,
                                   const potential::NCParams& nc, const potential::FieldParams& f,
                                   potential::PekerisVariant variant)
{
    double d_eps = expectation(bs, p, [&](double r) {
        double du = perturbing_operator_efield(r, bs, p, nc, f);
        if (nc.theta != 0.0 && nc.m_l != 0)
            du += perturbing_operator_theta(r, bs, p, nc, variant);
        return du;
    });
    return {to_dE(bs, d_eps), d_eps};
}

namespace {

using specfun::Complex;

// Gamma with the pole reported under the given term label. Poles of
// denominator Gammas are fine (the ratio tends to zero) and are handled by
// the caller passing only numerator arguments here.
Complex gamma_checked(Complex z, const std::string& term)
{
    if (specfun::is_nonpositive_integer(z))
        throw PoleError(term + ": Gamma argument " + std::to_string(z.real()) +
                        " is a non-positive integer");
    return specfun::gamma(z);
}

} // namespace

ClosedCorrection delta_e_theta_closed(const spectrum::BoundState& bs,
                                      const potential::PotentialParams& p,
                                      const potential::NCParams& nc)
{
    ClosedCorrection out;
    out.terms.assign(2, Complex(0.0));
    if (nc.theta == 0.0) {
        out.total = 0.0;
        return out;
    }

    const int n = bs.state.n;
    const int l = bs.state.l;
    const double thetaL = nc.theta * nc.m_l;
    const double Np2 = bs.nprime * bs.nprime;
    const double a = p.alpha;
    const Complex sL = Complex(2.0 * bs.sqrt_lambda, 0.0); // 2 sqrt(Lambda)
    const Complex Xi = bs.xi;
    const Complex b2 = Complex(n, 0.0) + sL + 2.0 * Xi + 1.0;
    const Complex c = 1.0 + sL;

    // term 1: -16 N'^2 alpha^7 l(l+1) theta.L 3F2(...) Gamma(2sqrtL)Gamma(2Xi-2)/Gamma(2sqrtL+2Xi-2)
    if (l != 0) {
        Complex g1 = gamma_checked(sL, "term 1") * gamma_checked(2.0 * Xi - 2.0, "term 1");
        Complex gd = 0.0;
        if (!specfun::is_nonpositive_integer(sL + 2.0 * Xi - 2.0))
            gd = g1 / specfun::gamma(sL + 2.0 * Xi - 2.0);
        Complex f = specfun::hyp3f2_unit_terminating(n, b2, 2.0 * Xi - 2.0, c, 2.0 * Xi - 2.0 + sL);
        out.terms[0] = -16.0 * Np2 * std::pow(a, 7) * l * (l + 1) * thetaL * f * gd;
    }

    // term 2: -(2i N'^2 alpha^3 (E+M) V0 (g-a) theta.L / b) 3F2(...) Gamma(2sqrtL-1/2)Gamma(2Xi-1)/Gamma(2sqrtL+2Xi-3/2)
    // pole-checked before the coupling prefactor is applied: at l=0 the
    // Gamma(2Xi-1) = Gamma(-1) pole is reported even though theta.L = 0 there.
    {
        Complex gnum = gamma_checked(sL - 0.5, "term 2") * gamma_checked(2.0 * Xi - 1.0, "term 2");
        Complex gd = 0.0;
        if (!specfun::is_nonpositive_integer(sL + 2.0 * Xi - 1.5))
            gd = gnum / specfun::gamma(sL + 2.0 * Xi - 1.5);
        Complex f = specfun::hyp3f2_unit_terminating(n, b2, 2.0 * Xi - 1.0, c, 2.0 * Xi + sL - 1.5);
        out.terms[1] = -Complex(0.0, 2.0) * Np2 * std::pow(a, 3) * (bs.energy + p.M) * p.V0 *
                       (p.g - p.a) * thetaL / p.b * f * gd;
    }

    out.total = out.terms[0] + out.terms[1];
    return out;
}

ClosedCorrection delta_e_efield_closed(const spectrum::BoundState& bs,
                                       const potential::PotentialParams& p,
                                       const potential::NCParams& nc,
                                       const potential::FieldParams& f)
{
    ClosedCorrection out;
    out.terms.assign(4, Complex(0.0));
    const double ekq = f.e_charge * f.k_const * f.q_source;
    if (nc.theta == 0.0 && ekq == 0.0) {
        out.total = 0.0;
        return out;
    }

    // terms 1-2 are the theta-only block
    if (nc.theta != 0.0) {
        ClosedCorrection th = delta_e_theta_closed(bs, p, nc);
        out.terms[0] = th.terms[0];
        out.terms[1] = th.terms[1];
    }

    const int n = bs.state.n;
    const double Np2 = bs.nprime * bs.nprime;
    const double a = p.alpha;
    const Complex sL = Complex(2.0 * bs.sqrt_lambda, 0.0);
    const Complex Xi = bs.xi;
    const Complex b2 = Complex(n, 0.0) + sL + 2.0 * Xi + 1.0;
    const Complex c = 1.0 + sL;

    if (ekq != 0.0) {
        // term 3: +4i e k q alpha^4 (E+M) N'^2 Gamma(2sqrtL-3/2)Gamma(2Xi+1)/Gamma(2sqrtL+2Xi-1/2) 3F2(..., 2Xi+1; ..., 2Xi+2sqrtL-1/2)
        {
            Complex gnum =
                gamma_checked(sL - 1.5, "term 3") * gamma_checked(2.0 * Xi + 1.0, "term 3");
            Complex gd = 0.0;
            if (!specfun::is_nonpositive_integer(sL + 2.0 * Xi - 0.5))
                gd = gnum / specfun::gamma(sL + 2.0 * Xi - 0.5);
            Complex f32 =
                specfun::hyp3f2_unit_terminating(n, b2, 2.0 * Xi + 1.0, c, 2.0 * Xi + sL - 0.5);
            out.terms[2] = Complex(0.0, 4.0) * ekq * std::pow(a, 4) * (bs.energy + p.M) * Np2 *
                           f32 * gd;
        }
        // term 4: -8 alpha^6 i e k q theta.L (E+M) N'^2 Gamma(2sqrtL-1/2)Gamma(2Xi-1)/Gamma(2sqrtL+2Xi-3/2) 3F2(..., 2Xi-1; ..., 2Xi+2sqrtL-3/2)
        if (nc.theta != 0.0) {
            Complex gnum =
                gamma_checked(sL - 0.5, "term 4") * gamma_checked(2.0 * Xi - 1.0, "term 4");
            Complex gd = 0.0;
            if (!specfun::is_nonpositive_integer(sL + 2.0 * Xi - 1.5))
                gd = gnum / specfun::gamma(sL + 2.0 * Xi - 1.5);
            Complex f32 =
                specfun::hyp3f2_unit_terminating(n, b2, 2.0 * Xi - 1.0, c, 2.0 * Xi + sL - 1.5);
            out.terms[3] = -Complex(0.0, 8.0) * std::pow(a, 6) * ekq * nc.theta *
                           static_cast<double>(nc.m_l) * (bs.energy + p.M) * Np2 * f32 * gd;
        }
    }

    out.total = out.terms[0] + out.terms[1] + out.terms[2] + out.terms[3];
    return out;
}

Complex paper_special_integral(int n, Complex c2, Complex c3, Complex xi, Complex sigma)
{
    Complex pref = specfun::gamma(xi) * specfun::gamma(sigma) / specfun::gamma(xi + sigma);
    return pref * specfun::hyp3f2_unit_terminating(n, c2, sigma, c3, sigma + xi);
}

CorrectionReport correction_report(const spectrum::BoundState& bs,
                                   const potential::PotentialParams& p,
                                   const potential::NCParams& nc,
                                   const potential::FieldParams& f,
                                   potential::PekerisVariant variant)
{
    CorrectionReport rep;
    rep.state = bs.state;
    rep.state.m_l = nc.m_l;
    rep.theta = nc.theta;
    rep.field = f;

    auto quad = delta_e_efield_quad(bs, p, nc, f, variant);
    rep.dE_quad = quad.dE;
    rep.d_eps_quad = quad.d_eps;

    const int l = bs.state.l;
    if (nc.theta != 0.0 && nc.m_l != 0) {
        double cf = expectation(bs, p, [&](double r) {
            double pk = potential::pekeris_inv_r2(r, p, variant);
            return l * (l + 1) * nc.theta * nc.m_l * pk * pk;
        });
        double pot = expectation(bs, p, [&](double r) {
            return 2.0 * (bs.energy + p.M) * potential::v_nc_term(r, p, nc);
        });
        rep.term_centrifugal = to_dE(bs, cf);
        rep.term_potential = to_dE(bs, pot);
    }
    if (f.e_charge * f.k_const * f.q_source != 0.0) {
        rep.term_coulomb = to_dE(bs, expectation(bs, p, [&](double r) {
            return 2.0 * (bs.energy + p.M) * potential::v_efield(r, f);
        }));
        if (nc.theta != 0.0 && nc.m_l != 0)
            rep.term_coulomb_theta = to_dE(bs, expectation(bs, p, [&](double r) {
                return 2.0 * (bs.energy + p.M) * potential::v_efield_nc(r, f, nc);
            }));
    }

    try {
        rep.dE_closed = delta_e_efield_closed(bs, p, nc, f).total;
        rep.closed_valid = true;
        rep.closed_status = "ok";
        rep.discrepancy = std::abs(rep.dE_closed.real() - rep.dE_quad);
    } catch (const PoleError& e) {
        rep.closed_valid = false;
        rep.closed_status = std::string("pole:") + e.what();
    }
    return rep;
}

std::vector<SplitRow> split_spectrum(const spectrum::BoundState& bs,
                                     const potential::PotentialParams& p, double theta,
                                     const potential::FieldParams& f,
                                     potential::PekerisVariant variant)
{
    const int l = bs.state.l;
    std::vector<SplitRow> rows;
    rows.reserve(2 * l + 1);
    for (int m = -l; m <= l; ++m) {
        potential::NCParams nc{theta, m};
        SplitRow row;
        row.m_l = m;
        row.E0 = bs.energy;

        if (theta != 0.0 && m != 0) {
            double cf = expectation(bs, p, [&](double r) {
                double pk = potential::pekeris_inv_r2(r, p, variant);
                return l * (l + 1) * theta * m * pk * pk;
            });
            double pot = expectation(bs, p, [&](double r) {
                return 2.0 * (bs.energy + p.M) * potential::v_nc_term(r, p, nc);
            });
            row.term_centrifugal = to_dE(bs, cf);
            row.term_potential = to_dE(bs, pot);
        }
        if (f.e_charge * f.k_const * f.q_source != 0.0) {
            double coul = expectation(bs, p, [&](double r) {
                return 2.0 * (bs.energy + p.M) * potential::v_efield(r, f);
            });
            row.term_coulomb = to_dE(bs, coul);
            if (theta != 0.0 && m != 0) {
                double coul_th = expectation(bs, p, [&](double r) {
                    return 2.0 * (bs.energy + p.M) * potential::v_efield_nc(r, f, nc);
                });
                row.term_coulomb_theta = to_dE(bs, coul_th);
            }
        }
        row.dE_theta = row.term_centrifugal + row.term_potential;
        row.dE_field = row.term_coulomb + row.term_coulomb_theta;
        row.E_split = row.E0 + row.dE_theta + row.dE_field;
        rows.push_back(row);
    }
    return rows;
}

} // namespace nchyl::perturbation
