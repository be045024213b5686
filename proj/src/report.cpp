#include "nchyl/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <set>

#include "nchyl/perturbation.hpp"
#include "nchyl/quadrature.hpp"
#include "nchyl/rng.hpp"
#include "nchyl/specfun.hpp"
#include "nchyl/version.hpp"

namespace nchyl::io {

using json = nlohmann::json;
using Complex = std::complex<double>;
namespace sf = nchyl::specfun;

bool ValidationReport::all_passed() const
{
    return std::all_of(invariants.begin(), invariants.end(),
                       [](const InvariantResult& r) { return r.passed; });
}

json ValidationReport::to_json() const
{
    json inv = json::array();
    for (const auto& r : invariants)
        inv.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return {{"invariants", inv}, {"diagnostics", diagnostics}, {"all_passed", all_passed()}};
}

namespace {

struct Check {
    std::vector<InvariantResult>& out;

    void add(const std::string& name, bool ok, double worst, double tol)
    {
        out.push_back({name, ok, "worst " + fmt17(worst) + " vs tol " + fmt17(tol)});
    }
    void add_detail(const std::string& name, bool ok, const std::string& detail)
    {
        out.push_back({name, ok, detail});
    }
};

double rel_err(Complex got, Complex want)
{
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

void check_specfun(Check& ck)
{
    SplitMix64 rng(0x5eedf00d);

    // Gamma recurrence on 200 random points, half real, half complex
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Complex z;
        if (i % 2 == 0) {
            z = Complex(rng.uniform(0.1, 20.0), 0.0);
        } else {
            double re = rng.uniform(-20.0, 20.0);
            double im = rng.uniform(0.3, 20.0) * (rng.uniform() < 0.5 ? 1.0 : -1.0);
            z = Complex(re, im);
        }
        Complex g1 = sf::gamma(z + 1.0);
        worst = std::max(worst, rel_err(z * sf::gamma(z), g1));
    }
    ck.add("specfun.gamma_recurrence", worst <= 1e-11, worst, 1e-11);

    // reflection on random non-integer real z in (0,1)
    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        double z = rng.uniform(0.02, 0.98);
        Complex lhs = sf::gamma(Complex(z)) * sf::gamma(Complex(1.0 - z));
        Complex rhs = M_PI / std::sin(M_PI * z);
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    ck.add("specfun.gamma_reflection", worst <= 1e-10, worst, 1e-10);

    // Chu-Vandermonde at unit argument
    worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        int n = rng.uniform_int(0, 10);
        Complex b2(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0));
        Complex c(rng.uniform(0.5, 4.0), rng.uniform(-2.0, 2.0));
        Complex lhs = sf::hyp2f1_terminating(n, b2, c, 1.0);
        Complex rhs = sf::pochhammer(c - b2, n) / sf::pochhammer(c, n);
        worst = std::max(worst, rel_err(lhs, rhs));
    }
    ck.add("specfun.chu_vandermonde", worst <= 1e-12, worst, 1e-12);

    // 2F1 at s = 0 is exactly 1
    bool exact = true;
    for (int n = 0; n <= 12; ++n)
        exact = exact && sf::hyp2f1_terminating(n, Complex(2.3, 0.4), Complex(1.7), 0.0) == 1.0;
    ck.add_detail("specfun.hyp2f1_at_zero", exact, exact ? "exact" : "nonunit value at s=0");

    // Jacobi three-term recurrence, real a, b > -1
    worst = 0.0;
    for (int i = 0; i < 60; ++i) {
        double a = rng.uniform(-0.9, 3.0);
        double b = rng.uniform(-0.9, 3.0);
        double s = rng.uniform(0.02, 0.98);
        double x = 1.0 - 2.0 * s;
        Complex pm1 = 1.0, p0 = 0.5 * (a - b + (a + b + 2.0) * x);
        for (int n = 1; n <= 7; ++n) {
            double a1 = 2.0 * (n + 1) * (n + a + b + 1) * (2 * n + a + b);
            double a2 = (2 * n + a + b + 1) * (a * a - b * b);
            double a3 = (2 * n + a + b) * (2 * n + a + b + 1) * (2 * n + a + b + 2);
            double a4 = 2.0 * (n + a) * (n + b) * (2 * n + a + b + 2);
            Complex p1 = ((a2 + a3 * x) * p0 - a4 * pm1) / a1;
            pm1 = p0;
            p0 = p1;
        }
        worst = std::max(worst, rel_err(sf::jacobi_p(8, a, b, s), p0));
    }
    ck.add("specfun.jacobi_recurrence", worst <= 1e-10, worst, 1e-10);
}

void check_potential(Check& ck, const potential::PotentialParams& p)
{
    potential::NCParams nc{1e-3, 1};

    // Bopp identity on a log-spaced grid
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double lo = p.r_c / 4.0 + 1e-9;
        double hi = p.r_c + 30.0 * p.alpha;
        double r = lo * std::pow(hi / lo, i / 200.0);
        double lhs = potential::v_nc_term(r, p, nc);
        double rhs = -(nc.theta * nc.m_l / (2.0 * r)) * potential::dv_dr(r, p);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    ck.add("potential.bopp_identity", worst <= 1e-14, worst, 1e-14);

    // dV/dr against central finite differences
    worst = 0.0;
    double h = 1e-6 * p.alpha;
    for (int i = 0; i <= 100; ++i) {
        double lo = p.r_c / 4.0 + 1e-9;
        double hi = p.r_c + 30.0 * p.alpha;
        double r = lo * std::pow(hi / lo, i / 100.0);
        double fd = (potential::v_hylleraas(r + h, p) - potential::v_hylleraas(r - h, p)) / (2.0 * h);
        double an = potential::dv_dr(r, p);
        double scale = std::max(std::abs(an), 1e-12);
        worst = std::max(worst, std::abs(fd - an) / scale);
    }
    ck.add("potential.dv_dr_finite_difference", worst <= 1e-6, worst, 1e-6);

    // monotonicity: the numeric derivative never changes sign
    int sign = 0;
    bool mono = true;
    for (int i = 0; i <= 400; ++i) {
        double r = p.r_c / 4.0 + (p.r_c + 20.0 * p.alpha) * i / 400.0;
        double d = potential::dv_dr(r, p);
        if (d == 0.0)
            continue;
        int s = d > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign)
            mono = false;
        sign = s;
    }
    ck.add_detail("potential.hylleraas_monotone", mono || p.g == p.a,
                  mono ? "no sign change of dV/dr" : "derivative changed sign");

    // coordinate round trip
    worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double r = p.r_c + 40.0 * p.alpha * i / 200.0;
        double back = potential::to_r(potential::to_s(r, p), p);
        worst = std::max(worst, std::abs(back - r) / std::max(r, 1e-300));
    }
    ck.add("potential.s_round_trip", worst <= 1e-12, worst, 1e-12);
}

void check_radial(Check& ck, const potential::PotentialParams& p)
{
    // l = 0 coefficients are real and Lambda is quadratic in E with the
    // expected derivative
    double worst = 0.0;
    for (double E : {-0.7, -0.2, 0.3, 0.8}) {
        auto sc = radial::s_coefficients(E, p, 0);
        worst = std::max(worst, std::abs(sc.Xi.imag()) + std::abs(sc.Xi.real()));
        double h = 1e-6;
        auto scp = radial::s_coefficients(E + h, p, 0);
        auto scm = radial::s_coefficients(E - h, p, 0);
        double fd = (scp.Lambda - scm.Lambda) / (2.0 * h);
        double an = p.alpha * p.alpha * (2.0 * p.V0 * p.g - 2.0 * p.b * E) / p.b;
        worst = std::max(worst, std::abs(fd - an) / std::max(std::abs(an), 1.0));
    }
    ck.add("radial.l0_coefficients_real_and_dlambda_de", worst <= 1e-8, worst, 1e-8);
}

spectrum::BoundState solved_state(int n, int l, const potential::PotentialParams& p)
{
    auto sol = spectrum::solve_energy(n, l, p, spectrum::Condition::ParametricNu);
    return spectrum::build_wavefunction(sol.roots.front(), n, l, p);
}

void check_spectrum(Check& ck, const RunConfig& cfg)
{
    const auto& p = cfg.pot;

    // nu condition is real at l = 0
    double worst = 0.0;
    for (double E = -0.95; E < 0.99; E += 0.1)
        worst = std::max(worst, std::abs(spectrum::quantization_residual_nu(E, 0, 0, p).imag()));
    ck.add("spectrum.nu_condition_real_l0", worst == 0.0, worst, 0.0);

    for (int n : {0, 1}) {
        spectrum::BoundState bs;
        try {
            bs = solved_state(n, 0, p);
        } catch (const Error& e) {
            ck.add_detail("spectrum.normalization_n" + std::to_string(n), false, e.what());
            continue;
        }
        double I = oracle::quad_integrate([&](double r) { return bs.abs2_r(r); }, p.r_c,
                                          p.r_c + 60.0 * p.alpha, 1e-13, 1e-12);
        ck.add("spectrum.normalization_quadrature_n" + std::to_string(n),
               std::abs(I - 1.0) <= 1e-8, std::abs(I - 1.0), 1e-8);

        // dual-route N': rebuild the norm from quadrature with N' = 1
        double nprime_quad = bs.nprime / std::sqrt(I);
        double rel = std::abs(bs.nprime / nprime_quad - 1.0);
        ck.add("spectrum.normalization_dual_route_n" + std::to_string(n), rel <= 1e-9, rel, 1e-9);

        int nodes = spectrum::count_nodes_s(bs);
        ck.add_detail("spectrum.node_count_n" + std::to_string(n), nodes == n,
                      "counted " + std::to_string(nodes));

        // the s-space equation residual of the constructed solution
        const int N = 2000;
        Eigen::ArrayXd s_grid(N);
        Eigen::ArrayXcd phi(N);
        double s_lo = 0.05, s_hi = 0.90;
        for (int i = 0; i < N; ++i) {
            s_grid(i) = s_lo + (s_hi - s_lo) * i / (N - 1.0);
            phi(i) = bs.phi_s(s_grid(i));
        }
        double res = radial::s_equation_residual(phi, bs.energy, p, 0, s_grid);
        ck.add("spectrum.s_equation_residual_n" + std::to_string(n), res <= 1e-6, res, 1e-6);
    }

    // deeper well binds more strongly: 5-point depth sweep
    std::vector<double> roots;
    bool mono = true;
    for (int i = 0; i < 5; ++i) {
        potential::PotentialParams q = p;
        q.a = p.a * (1.0 + 0.15 * i);
        try {
            auto sol = spectrum::solve_energy(0, 0, q, spectrum::Condition::ParametricNu);
            roots.push_back(sol.roots.front());
        } catch (const NoRoot&) {
            mono = false;
        }
    }
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        mono = mono && roots[i + 1] < roots[i];
    ck.add_detail("spectrum.depth_sweep_monotone", mono,
                  "roots descend with |a|: " + std::to_string(roots.size()) + " points");

    // natural-units covariance at l = 0: lengths x2, energies /2
    {
        potential::PotentialParams q = p;
        double lam = 2.0;
        q.r_c = p.r_c * lam;
        q.alpha = p.alpha * lam;
        q.M = p.M / lam;
        q.V0 = p.V0 / lam;
        auto s1 = spectrum::solve_energy(0, 0, p, spectrum::Condition::ParametricNu);
        auto s2 = spectrum::solve_energy(0, 0, q, spectrum::Condition::ParametricNu);
        double rel = std::abs(s2.roots.front() - s1.roots.front() / lam) /
                     std::abs(s1.roots.front() / lam);
        ck.add("spectrum.scale_consistency_l0", rel <= 1e-8, rel, 1e-8);
    }
}

void check_oracle(Check& ck, const RunConfig& cfg)
{
    // particle in a box
    {
        oracle::RadialGrid box{0.0, 1.0, 2000};
        Eigen::VectorXd W = Eigen::VectorXd::Zero(box.n_points - 1);
        auto pairs = oracle::grid_eigensolve(W, box, 3);
        double worst = 0.0;
        for (int k = 0; k < 3; ++k) {
            double want = (k + 1) * M_PI * (k + 1) * M_PI;
            worst = std::max(worst, std::abs(pairs[k].lambda - want) / want);
        }
        ck.add("oracle.box_eigenvalues", worst <= 1e-4, worst, 1e-4);
        bool nodes_ok = pairs[0].node_count == 0 && pairs[1].node_count == 1 &&
                        pairs[2].node_count == 2;
        ck.add_detail("oracle.box_node_counts", nodes_ok, "Sturm oscillation ordering");
    }

    // Rayleigh quotient consistency on the canonical effective potential
    {
        oracle::RadialGrid grid = oracle::RadialGrid::for_potential(cfg.pot, 0.0, 60.0, 3000);
        Eigen::VectorXd W = oracle::effective_potential(0.0, 0, cfg.pot, grid,
                                                        oracle::Centrifugal::Exact,
                                                        cfg.pekeris_variant);
        auto pairs = oracle::grid_eigensolve(W, grid, 1);
        const auto& v = pairs[0].v;
        double h = grid.h();
        double num = 0.0;
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            double left = i > 0 ? v(i - 1) : 0.0;
            double right = i + 1 < v.size() ? v(i + 1) : 0.0;
            num += v(i) * ((2.0 * v(i) - left - right) / (h * h) + W(i) * v(i));
        }
        double rq = num / (v.squaredNorm());
        double rel = std::abs(rq - pairs[0].lambda) / std::max(std::abs(pairs[0].lambda), 1e-300);
        ck.add("oracle.rayleigh_quotient", rel <= 1e-10, rel, 1e-10);
    }

    // grid convergence of the canonical self-consistent energy
    {
        oracle::SelfConsistentOptions opts;
        opts.centrifugal = cfg.centrifugal;
        opts.pekeris_variant = cfg.pekeris_variant;
        oracle::RadialGrid g1 =
            oracle::RadialGrid::for_potential(cfg.pot, 0.0, cfg.oracle_r_max_alphas, 3000);
        oracle::RadialGrid g2 = g1;
        g2.n_points = 6000;
        auto r1 = oracle::self_consistent_energy(0, 0, cfg.pot, g1, opts);
        auto r2 = oracle::self_consistent_energy(0, 0, cfg.pot, g2, opts);
        double drift = std::abs(r2.energy - r1.energy);
        ck.add("oracle.grid_convergence", drift < 1e-6, drift, 1e-6);
        ck.add_detail("oracle.node_count_matches_n", r2.node_count == 0,
                      "counted " + std::to_string(r2.node_count));
    }

    // Euler single-factor identity and beta cross-check
    {
        SplitMix64 rng(0xbe7a);
        double worst = 0.0;
        for (int trial = 0; trial < 40; ++trial) {
            int n = rng.uniform_int(0, 6);
            Complex b(rng.uniform(-2.0, 3.0), rng.uniform(-1.0, 1.0));
            Complex c(rng.uniform(0.7, 3.0), 0.0);
            Complex xi(rng.uniform(0.3, 3.0), 0.0);
            Complex sigma(rng.uniform(0.3, 3.0), 0.0);
            // coefficients of 2F1(-n, b; c; s)
            std::vector<Complex> poly(n + 1);
            poly[0] = 1.0;
            for (int k = 0; k < n; ++k)
                poly[k + 1] = poly[k] * (Complex(-n) + static_cast<double>(k)) *
                              (b + static_cast<double>(k)) /
                              ((c + static_cast<double>(k)) * (k + 1.0));
            Complex exact = oracle::exact_poly_beta_integral(xi, sigma, poly);
            Complex euler = sf::beta(xi, sigma) *
                            sf::hyp3f2_unit_terminating(n, b, xi, c, xi + sigma);
            worst = std::max(worst, rel_err(exact, euler));
        }
        ck.add("oracle.euler_3f2_identity", worst <= 1e-12, worst, 1e-12);

        double quad = oracle::quad_integrate(
            [](double s) { return std::pow(s, 1.3) * std::pow(1.0 - s, 2.2); }, 0.0, 1.0, 1e-15,
            1e-13);
        double want = sf::beta(Complex(2.3), Complex(3.2)).real();
        double rel = std::abs(quad - want) / want;
        ck.add("oracle.beta_vs_quadrature", rel <= 1e-11, rel, 1e-11);
    }
}

void check_perturbation(Check& ck, const RunConfig& cfg)
{
    const auto& p = cfg.pot;
    double theta = cfg.theta > 0.0 ? cfg.theta : 1e-3;
    potential::FieldParams f = cfg.field;
    if (f.e_charge * f.k_const * f.q_source == 0.0)
        f = {1.0, 1.0, 1e-3};

    spectrum::BoundState bs;
    try {
        bs = solved_state(0, 1, p);
    } catch (const Error& e) {
        ck.add_detail("perturbation.l1_state", false,
                      std::string("no l=1 state for this well: ") + e.what());
        return;
    }

    // first-order linearity in theta and in e k q
    {
        potential::NCParams nc1{theta, 1}, nc2{2.0 * theta, 1};
        auto d1 = perturbation::delta_e_theta_quad(bs, p, nc1);
        auto d2 = perturbation::delta_e_theta_quad(bs, p, nc2);
        double rel = std::abs(d2.dE - 2.0 * d1.dE) / std::max(std::abs(d2.dE), 1e-300);
        ck.add("perturbation.linearity_theta", rel <= 1e-12, rel, 1e-12);

        potential::NCParams nc0{0.0, 0};
        potential::FieldParams f2 = f;
        f2.q_source *= 2.0;
        auto e1 = perturbation::delta_e_efield_quad(bs, p, nc0, f);
        auto e2 = perturbation::delta_e_efield_quad(bs, p, nc0, f2);
        rel = std::abs(e2.dE - 2.0 * e1.dE) / std::max(std::abs(e2.dE), 1e-300);
        ck.add("perturbation.linearity_field", rel <= 1e-12, rel, 1e-12);
    }

    // odd theta-term, even Coulomb term
    {
        potential::NCParams plus{theta, 1}, minus{theta, -1};
        auto dp = perturbation::delta_e_theta_quad(bs, p, plus);
        auto dm = perturbation::delta_e_theta_quad(bs, p, minus);
        double odd = std::abs(dp.dE + dm.dE) / std::max(std::abs(dp.dE), 1e-300);
        ck.add("perturbation.theta_term_odd_in_m", odd <= 1e-12, odd, 1e-12);

        potential::NCParams nc0p{0.0, 1}, nc0m{0.0, -1};
        auto cp = perturbation::delta_e_efield_quad(bs, p, nc0p, f);
        auto cm = perturbation::delta_e_efield_quad(bs, p, nc0m, f);
        double even = std::abs(cp.dE - cm.dE) / std::max(std::abs(cp.dE), 1e-300);
        ck.add("perturbation.coulomb_term_even_in_m", even <= 1e-12, even, 1e-12);
    }

    // adding the Coulomb term shifts every row equally: gaps are invariant
    {
        potential::FieldParams zero{};
        auto rows_q = perturbation::split_spectrum(bs, p, theta, f);
        auto rows_0 = perturbation::split_spectrum(bs, p, theta, zero);
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < rows_q.size(); ++i) {
            double gap_q = rows_q[i + 1].E_split - rows_q[i].E_split;
            double gap_0 = (rows_0[i + 1].E0 + rows_0[i + 1].dE_theta) -
                           (rows_0[i].E0 + rows_0[i].dE_theta);
            // the theta-Coulomb cross term is itself odd in m and linear in q;
            // gap invariance concerns the pure Coulomb shift
            double cross = rows_q[i + 1].term_coulomb_theta - rows_q[i].term_coulomb_theta;
            worst = std::max(worst, std::abs(gap_q - gap_0 - cross) /
                                        std::max(std::abs(gap_q), 1e-300));
        }
        ck.add("perturbation.gap_invariance_under_coulomb", worst <= 1e-12, worst, 1e-12);

        // direction depends on the sign of the theta coefficient; require strict
        // monotonicity in either direction
        bool up = true, down = true;
        for (std::size_t i = 0; i + 1 < rows_0.size(); ++i) {
            double d = rows_0[i + 1].dE_theta - rows_0[i].dE_theta;
            up = up && d > 0.0;
            down = down && d < 0.0;
        }
        ck.add_detail("perturbation.split_monotone_in_m", up || down,
                      up ? "increasing" : (down ? "decreasing" : "not monotone"));
    }

    // perturbative smallness of the theta correction on the canonical well
    {
        potential::NCParams nc{std::min(theta, 1e-3), 1};
        auto d = perturbation::delta_e_theta_quad(bs, p, nc);
        double ratio = std::abs(d.dE) / std::abs(bs.energy);
        ck.add("perturbation.smallness_theta", ratio < 1e-2, ratio, 1e-2);
    }
}

json pekeris_diagnostic(const RunConfig& cfg)
{
    const auto& p = cfg.pot;
    json out;
    for (auto variant : {potential::PekerisVariant::AsPrinted, potential::PekerisVariant::Conventional}) {
        double worst = 0.0;
        for (int i = 0; i <= 400; ++i) {
            double lo = 0.8 * p.r_c + 1e-9;
            double hi = p.r_c + 10.0 * p.alpha;
            double r = lo + (hi - lo) * i / 400.0;
            worst = std::max(worst, std::abs(potential::pekeris_inv_r2(r, p, variant) - 1.0 / (r * r)));
        }
        out[variant == potential::PekerisVariant::AsPrinted ? "as_printed" : "conventional"] = {
            {"max_abs_error_vs_inv_r2", worst}};
    }

    // oracle energies for an l = 1 state under the three centrifugal readings
    json l1;
    oracle::SelfConsistentOptions opts;
    oracle::RadialGrid grid =
        oracle::RadialGrid::for_potential(p, 0.0, cfg.oracle_r_max_alphas, cfg.oracle_n_points);
    try {
        opts.centrifugal = oracle::Centrifugal::Exact;
        l1["exact"] = oracle::self_consistent_energy(0, 1, p, grid, opts).energy;
        opts.centrifugal = oracle::Centrifugal::Pekeris;
        opts.pekeris_variant = potential::PekerisVariant::AsPrinted;
        l1["pekeris_as_printed"] = oracle::self_consistent_energy(0, 1, p, grid, opts).energy;
        opts.pekeris_variant = potential::PekerisVariant::Conventional;
        l1["pekeris_conventional"] = oracle::self_consistent_energy(0, 1, p, grid, opts).energy;
        if (l1.contains("exact") && l1.contains("pekeris_as_printed"))
            l1["gap_exact_vs_as_printed"] =
                std::abs(l1["exact"].get<double>() - l1["pekeris_as_printed"].get<double>());
    } catch (const Error& e) {
        l1["status"] = std::string("unavailable: ") + e.what();
    }
    out["oracle_l1"] = l1;
    return out;
}

json paper_scan_diagnostic(const RunConfig& cfg)
{
    json out = json::array();
    std::set<std::pair<int, int>> seen;
    for (const auto& st : cfg.states) {
        auto key = std::make_pair(st[0], st[1]);
        if (!seen.insert(key).second)
            continue;
        const double eps = 1e-6 * cfg.pot.M;
        auto scan = spectrum::scan_condition(spectrum::Condition::PaperPrinted, st[0], st[1],
                                             cfg.pot, -cfg.pot.M + eps, cfg.pot.M - eps,
                                             cfg.scan_panels);
        int sign_changes = 0;
        double mn = scan.front().re, mx = scan.front().re;
        for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
            if (scan[i].re * scan[i + 1].re < 0.0)
                ++sign_changes;
            mn = std::min(mn, scan[i + 1].re);
            mx = std::max(mx, scan[i + 1].re);
        }
        json points = json::array();
        std::size_t stride = std::max<std::size_t>(1, scan.size() / 100);
        for (std::size_t i = 0; i < scan.size(); i += stride)
            points.push_back({{"E", scan[i].E}, {"re", scan[i].re}, {"im", scan[i].im}});
        out.push_back({{"n", st[0]},
                       {"l", st[1]},
                       {"sign_changes", sign_changes},
                       {"residual_min", mn},
                       {"residual_max", mx},
                       {"points", points}});
    }
    return out;
}

json condition_vs_oracle_diagnostic(const RunConfig& cfg)
{
    json out = json::array();
    std::set<std::pair<int, int>> seen;
    oracle::SelfConsistentOptions opts;
    opts.centrifugal = cfg.centrifugal;
    opts.pekeris_variant = cfg.pekeris_variant;
    oracle::RadialGrid grid = oracle::RadialGrid::for_potential(cfg.pot, 0.0,
                                                                cfg.oracle_r_max_alphas,
                                                                cfg.oracle_n_points);
    for (const auto& st : cfg.states) {
        auto key = std::make_pair(st[0], st[1]);
        if (!seen.insert(key).second)
            continue;
        json row{{"n", st[0]}, {"l", st[1]}};
        double e_nu = std::nan("");
        try {
            auto sol = spectrum::solve_energy(st[0], st[1], cfg.pot,
                                              spectrum::Condition::ParametricNu, cfg.bracket,
                                              cfg.scan_panels);
            e_nu = sol.roots.front();
            row["E_parametric_nu"] = e_nu;
            row["imag_residual_at_root"] = sol.imag_at_roots.front();
        } catch (const Error& e) {
            row["E_parametric_nu_status"] = e.what();
        }
        try {
            auto orc = oracle::self_consistent_energy(st[0], st[1], cfg.pot, grid, opts);
            row["E_oracle"] = orc.energy;
            if (std::isfinite(e_nu)) {
                row["abs_gap"] = std::abs(e_nu - orc.energy);
                row["abs_gap_over_M"] = std::abs(e_nu - orc.energy) / cfg.pot.M;
            }
        } catch (const Error& e) {
            row["E_oracle_status"] = e.what();
        }
        out.push_back(row);
    }
    return out;
}

json squared_3f2_diagnostic(const RunConfig& cfg)
{
    // exact Beta-sum vs the typeset single-3F2 reading for the squared factor
    json out = json::array();
    SplitMix64 rng(0x3f2);
    for (int trial = 0; trial < 6; ++trial) {
        int n = rng.uniform_int(1, 3);
        double xi = rng.uniform(0.8, 3.0);
        double sigma = rng.uniform(0.8, 3.0);
        double b = rng.uniform(0.5, 3.0);
        double c = rng.uniform(0.8, 3.0);
        std::vector<Complex> f(n + 1);
        f[0] = 1.0;
        for (int k = 0; k < n; ++k)
            f[k + 1] = f[k] * (Complex(-n) + static_cast<double>(k)) *
                       (Complex(b) + static_cast<double>(k)) /
                       ((Complex(c) + static_cast<double>(k)) * (k + 1.0));
        std::vector<Complex> sq(2 * n + 1, Complex(0.0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                sq[i + j] += f[i] * f[j];
        Complex exact = oracle::exact_poly_beta_integral(xi, sigma, sq);
        Complex paper = perturbation::paper_special_integral(n, b, c, xi, sigma);
        out.push_back({{"n", n},
                       {"xi", xi},
                       {"sigma", sigma},
                       {"b", b},
                       {"c", c},
                       {"exact_beta_sum", exact.real()},
                       {"paper_reading_re", paper.real()},
                       {"paper_reading_im", paper.imag()},
                       {"abs_diff", std::abs(exact - paper)}});
    }
    (void)cfg;
    return out;
}

json closed_vs_quadrature_diagnostic(const RunConfig& cfg)
{
    json out = json::array();
    double theta = cfg.theta > 0.0 ? cfg.theta : 1e-3;
    std::set<std::pair<int, int>> seen;
    for (const auto& st : cfg.states) {
        if (!seen.insert({st[0], st[1]}).second)
            continue;
        spectrum::BoundState bs;
        try {
            bs = solved_state(st[0], st[1], cfg.pot);
        } catch (const Error&) {
            continue;
        }
        for (int m = -st[1]; m <= st[1]; ++m) {
            potential::NCParams nc{theta, m};
            json row{{"n", st[0]}, {"l", st[1]}, {"m_l", m}};
            auto quad = perturbation::delta_e_theta_quad(bs, cfg.pot, nc);
            row["dE_quad"] = quad.dE;
            row["d_eps_quad"] = quad.d_eps;
            try {
                auto closed = perturbation::delta_e_theta_closed(bs, cfg.pot, nc);
                row["dE_closed_re"] = closed.total.real();
                row["dE_closed_im"] = closed.total.imag();
                row["discrepancy"] = std::abs(closed.total.real() - quad.dE);
            } catch (const PoleError& e) {
                row["closed_status"] = e.what();
            }
            out.push_back(row);
        }
    }
    return out;
}

} // namespace

ValidationReport run_validation(const RunConfig& cfg)
{
    cfg.validate();
    ValidationReport rep;
    Check ck{rep.invariants};

    check_specfun(ck);
    check_potential(ck, cfg.pot);
    check_radial(ck, cfg.pot);
    check_spectrum(ck, cfg);
    check_oracle(ck, cfg);
    check_perturbation(ck, cfg);

    rep.diagnostics["pekeris"] = pekeris_diagnostic(cfg);
    rep.diagnostics["paper_condition_scan"] = paper_scan_diagnostic(cfg);
    rep.diagnostics["condition_vs_oracle"] = condition_vs_oracle_diagnostic(cfg);
    rep.diagnostics["squared_3f2_discrepancy"] = squared_3f2_diagnostic(cfg);
    rep.diagnostics["closed_vs_quadrature"] = closed_vs_quadrature_diagnostic(cfg);
    return rep;
}

json sidecar_json(const RunConfig& cfg)
{
    return {{"tool", "nchyl"},
            {"version", kVersion},
            {"effective_config", render_config(cfg)}};
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot open for writing: " + path);
    f << content;
}

} // namespace nchyl::io
