#pragma once

#include "nchyl/errors.hpp"

namespace nchyl::potential {

// Modified Hylleraas well plus fermion mass, natural units (hbar = c = 1).
//   V(r) = (V0/b) * (g + a*u) / (1 + u),   u = exp(-(r - r_c)/alpha)
struct PotentialParams {
    double V0 = 0.0;    // well depth scale
    double a = 0.0;     // Hylleraas parameter
    double b = 1.0;     // Hylleraas parameter, b != 0
    double g = 0.0;     // Hylleraas parameter
    double alpha = 1.0; // screening/width scale, > 0
    double r_c = 0.0;   // equilibrium position, >= 0
    double M = 1.0;     // fermion mass, > 0

    void validate() const;
};

// Noncommutativity data: theta_ij = eps_ij * theta, and theta.L evaluated as
// theta * m_l with theta along the quantization axis.
struct NCParams {
    double theta = 0.0; // noncommutativity strength, >= 0
    int m_l = 0;        // magnetic quantum number of the state it is applied to

    void validate() const;
};

// Weak external electric field E = k q / r^2 e_r acting on charge e.
struct FieldParams {
    double e_charge = 0.0;
    double k_const = 0.0;
    double q_source = 0.0;
};

// Which form replaces 1/r^2. AsPrinted keeps the transcribed
// 4 alpha^2 u/(1+u)^2 form verbatim (dimensionally anomalous as written).
// Conventional is the Greene-Aldrich-style u/(alpha^2 (1-u)^2).
enum class PekerisVariant { AsPrinted, Conventional };

double v_hylleraas(double r, const PotentialParams& p);

// dV/dr = V0 (g - a) u / (b alpha (1+u)^2)
double dv_dr(double r, const PotentialParams& p);

// The printed noncommutative potential term
//   -theta*m_l * V0 (g-a) u / (2 r b alpha (1+u)^2)  ==  -(theta m_l / 2r) dV/dr.
// Throws DomainError at r = 0.
double v_nc_term(double r, const PotentialParams& p, const NCParams& nc);

double pekeris_inv_r2(double r, const PotentialParams& p,
                      PekerisVariant variant = PekerisVariant::AsPrinted);

// Coulomb piece -e k q / r. Throws DomainError at r = 0.
double v_efield(double r, const FieldParams& f);

// Theta piece -e k q theta m_l / (2 r^3). Throws DomainError at r = 0.
double v_efield_nc(double r, const FieldParams& f, const NCParams& nc);

// s = exp(-(r - r_c)/alpha); bound-state domain r in [r_c, inf) <-> s in (0, 1].
double to_s(double r, const PotentialParams& p);

// Inverse map; throws DomainError for s outside (0, 1].
double to_r(double s, const PotentialParams& p);

} // namespace nchyl::potential
