#include "nchyl/potential.hpp"

#include <cmath>

namespace nchyl::potential {

void PotentialParams::validate() const
{
    if (b == 0.0)
        throw ConfigError("potential: b must be nonzero");
    if (!(alpha > 0.0))
        throw ConfigError("potential: alpha must be positive");
    if (r_c < 0.0)
        throw ConfigError("potential: r_c must be nonnegative");
    if (!(M > 0.0))
        throw ConfigError("potential: M must be positive");
}

void NCParams::validate() const
{
    if (theta < 0.0)
        throw ConfigError("nc: theta must be nonnegative");
}

namespace {

inline double u_of(double r, const PotentialParams& p)
{
    return std::exp(-(r - p.r_c) / p.alpha);
}

} // namespace

double v_hylleraas(double r, const PotentialParams& p)
{
    double u = u_of(r, p);
    return (p.V0 / p.b) * (p.g + p.a * u) / (1.0 + u);
}

double dv_dr(double r, const PotentialParams& p)
{
    double u = u_of(r, p);
    double d = 1.0 + u;
    return p.V0 * (p.g - p.a) * u / (p.b * p.alpha * d * d);
}

double v_nc_term(double r, const PotentialParams& p, const NCParams& nc)
{
    if (r <= 0.0)
        throw DomainError("v_nc_term: r must be positive");
    double u = u_of(r, p);
    double d = 1.0 + u;
    return -nc.theta * nc.m_l * p.V0 * (p.g - p.a) * u / (2.0 * r * p.b * p.alpha * d * d);
}

double pekeris_inv_r2(double r, const PotentialParams& p, PekerisVariant variant)
{
    double u = u_of(r, p);
    if (variant == PekerisVariant::AsPrinted) {
        double d = 1.0 + u;
        return 4.0 * p.alpha * p.alpha * u / (d * d);
    }
    double d = 1.0 - u;
    return u / (p.alpha * p.alpha * d * d);
}

double v_efield(double r, const FieldParams& f)
{
    if (r <= 0.0)
        throw DomainError("v_efield: r must be positive");
    return -f.e_charge * f.k_const * f.q_source / r;
}

double v_efield_nc(double r, const FieldParams& f, const NCParams& nc)
{
    if (r <= 0.0)
        throw DomainError("v_efield_nc: r must be positive");
    return -f.e_charge * f.k_const * f.q_source * nc.theta * nc.m_l / (2.0 * r * r * r);
}

double to_s(double r, const PotentialParams& p)
{
    return std::exp(-(r - p.r_c) / p.alpha);
}

double to_r(double s, const PotentialParams& p)
{
    if (!(s > 0.0) || s > 1.0)
        throw DomainError("to_r: s must lie in (0, 1]");
    return p.r_c - p.alpha * std::log(s);
}

} // namespace nchyl::potential
