#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nchyl/errors.hpp"
#include "nchyl/potential.hpp"
#include "nchyl/spectrum.hpp"

namespace nchyl::perturbation {

using Complex = std::complex<double>;

// Addend to the effective radial operator from the noncommutative terms:
//   dU_theta(r) = l(l+1) theta m_l [pekeris_inv_r2(r)]^2 + 2(E+M) v_nc_term(r).
double perturbing_operator_theta(double r, const spectrum::BoundState& bs,
                                 const potential::PotentialParams& p,
                                 const potential::NCParams& nc,
                                 potential::PekerisVariant variant = potential::PekerisVariant::AsPrinted);

// Field addend: dU_E(r) = 2(E+M) [v_efield(r) + v_efield_nc(r)].
double perturbing_operator_efield(double r, const spectrum::BoundState& bs,
                                  const potential::PotentialParams& p,
                                  const potential::NCParams& nc,
                                  const potential::FieldParams& f);

// First-order shift from adaptive quadrature of the perturbing operator in
// the normalized unperturbed state. The radial equation's spectral parameter
// is eps = E^2 - M^2, so d_eps = <dU> and dE = d_eps / (2 E0). Both are
// returned; dE is primary.
struct QuadCorrection {
    double dE = 0.0;
    double d_eps = 0.0;
};

QuadCorrection delta_e_theta_quad(const spectrum::BoundState& bs,
                                  const potential::PotentialParams& p,
                                  const potential::NCParams& nc,
                                  potential::PekerisVariant variant = potential::PekerisVariant::AsPrinted);

QuadCorrection delta_e_efield_quad(const spectrum::BoundState& bs,
                                   const potential::PotentialParams& p,
                                   const potential::NCParams& nc,
                                   const potential::FieldParams& f,
                                   potential::PekerisVariant variant = potential::PekerisVariant::AsPrinted);

// The closed-form expressions evaluated verbatim (complex-valued; the typeset
// forms carry an explicit imaginary unit and pole-prone Gamma factors, so the
// quadrature value is authoritative and this one is archived next to it).
struct ClosedCorrection {
    Complex total;
    std::vector<Complex> terms; // per printed term
};

// Two terms; at l = 0 the second term's Gamma(2 Xi - 1) = Gamma(-1) pole
// raises PoleError("term 2 ..."). theta = 0 short-circuits to zero.
ClosedCorrection delta_e_theta_closed(const spectrum::BoundState& bs,
                                      const potential::PotentialParams& p,
                                      const potential::NCParams& nc);

// Four terms; terms with a vanishing coupling prefactor (l(l+1) theta m_l for
// term 1, e k q for terms 3-4) are structural zeros and skip their Gammas.
ClosedCorrection delta_e_efield_closed(const spectrum::BoundState& bs,
                                       const potential::PotentialParams& p,
                                       const potential::NCParams& nc,
                                       const potential::FieldParams& f);

// The special-integral formula as typeset,
//   integral_0^1 s^(xi-1)(1-s)^(sigma-1) [2F1(c1,c2;c3;s)]^2 ds
//     ?= Gamma(xi)Gamma(sigma)/Gamma(xi+sigma) 3F2(c1, c2, sigma; c3, sigma+xi; 1),
// kept for the archived discrepancy table (the true single-factor Euler
// identity has xi, not sigma, as the third upper parameter).
Complex paper_special_integral(int n, Complex c2, Complex c3, Complex xi, Complex sigma);

// Everything known about the first-order shift of one (state, m_l): both
// computation paths, their discrepancy, and the per-term breakdown.
struct CorrectionReport {
    radial::QuantumState state;
    double theta = 0.0;
    potential::FieldParams field;
    double dE_quad = 0.0;       // quadrature path (authoritative)
    double d_eps_quad = 0.0;    // raw expectation value, archived
    Complex dE_closed;          // typeset formulas, complex as printed
    bool closed_valid = false;  // false when a Gamma pole was reported
    std::string closed_status;  // "ok" or the pole description
    double discrepancy = 0.0;   // |Re dE_closed - dE_quad| when closed_valid
    double term_centrifugal = 0.0;
    double term_potential = 0.0;
    double term_coulomb = 0.0;
    double term_coulomb_theta = 0.0;
};

CorrectionReport correction_report(const spectrum::BoundState& bs,
                                   const potential::PotentialParams& p,
                                   const potential::NCParams& nc,
                                   const potential::FieldParams& f,
                                   potential::PekerisVariant variant = potential::PekerisVariant::AsPrinted);

// Per-term breakdown of the first-order shift for one m_l.
struct SplitRow {
    int m_l = 0;
    double E0 = 0.0;
    double dE_theta = 0.0;       // centrifugal-theta + potential-theta
    double dE_field = 0.0;       // Coulomb + Coulomb-theta
    double term_centrifugal = 0.0;
    double term_potential = 0.0;
    double term_coulomb = 0.0;
    double term_coulomb_theta = 0.0;
    double E_split = 0.0;        // E0 + dE_theta + dE_field
};

// One row per m_l in {-l, ..., l}.
std::vector<SplitRow> split_spectrum(const spectrum::BoundState& bs,
                                     const potential::PotentialParams& p, double theta,
                                     const potential::FieldParams& f,
                                     potential::PekerisVariant variant = potential::PekerisVariant::AsPrinted);

} // namespace nchyl::perturbation
