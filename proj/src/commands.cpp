#include "nchyl/commands.hpp"

#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "nchyl/perturbation.hpp"
#include "nchyl/report.hpp"

namespace nchyl::io {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

void ensure_dir(const std::string& out_dir)
{
    fs::create_directories(out_dir);
}

void write_sidecar(const RunConfig& cfg, const std::string& out_dir)
{
    write_text_file(out_dir + "/run_sidecar.json", sidecar_json(cfg).dump(2) + "\n");
}

struct SolvedState {
    int n, l, m_l;
    std::string paper_status = "ok";
    double E_paper = std::nan("");
    std::string nu_status = "ok";
    double E_nu = std::nan("");
    double imag_at_root = std::nan("");
    std::string oracle_status = "ok";
    double E_oracle = std::nan("");
    int oracle_nodes = -1;
    double norm_check = std::nan("");
    double nprime = std::nan("");
    spectrum::BoundState bs;
    bool have_bs = false;
};

// Root selection when a condition has several sign changes: prefer the root
// whose constructed state carries exactly n interior nodes.
double select_root(const spectrum::EnergySolution& sol, int n, int l,
                   const potential::PotentialParams& p, std::string& status)
{
    if (sol.roots.size() == 1)
        return sol.roots.front();
    for (double r : sol.roots) {
        try {
            auto bs = spectrum::build_wavefunction(r, n, l, p);
            if (spectrum::count_nodes_s(bs) == n)
                return r;
        } catch (const Error&) {
            continue;
        }
    }
    status = "multiple_roots";
    return sol.roots.front();
}

SolvedState solve_state(const RunConfig& cfg, int n, int l, int m_l)
{
    SolvedState st;
    st.n = n;
    st.l = l;
    st.m_l = m_l;

    try {
        auto sol = spectrum::solve_energy(n, l, cfg.pot, spectrum::Condition::PaperPrinted,
                                          cfg.bracket, cfg.scan_panels);
        st.E_paper = select_root(sol, n, l, cfg.pot, st.paper_status);
    } catch (const NoRoot&) {
        st.paper_status = "no_root";
    }

    try {
        auto sol = spectrum::solve_energy(n, l, cfg.pot, spectrum::Condition::ParametricNu,
                                          cfg.bracket, cfg.scan_panels);
        st.E_nu = select_root(sol, n, l, cfg.pot, st.nu_status);
        st.imag_at_root = sol.imag_at_roots.front();
        try {
            st.bs = spectrum::build_wavefunction(st.E_nu, n, l, cfg.pot);
            st.have_bs = true;
            st.nprime = st.bs.nprime;
            st.norm_check = oracle::quad_integrate([&](double r) { return st.bs.abs2_r(r); },
                                                   cfg.pot.r_c,
                                                   cfg.pot.r_c + 60.0 * cfg.pot.alpha, 1e-13,
                                                   1e-12);
        } catch (const NonNormalizable&) {
            st.nu_status = "non_normalizable";
        }
    } catch (const NoRoot&) {
        st.nu_status = "no_root";
    }

    try {
        oracle::SelfConsistentOptions opts;
        opts.centrifugal = cfg.centrifugal;
        opts.pekeris_variant = cfg.pekeris_variant;
        opts.richardson = cfg.richardson;
        oracle::RadialGrid grid = oracle::RadialGrid::for_potential(
            cfg.pot, 0.0, cfg.oracle_r_max_alphas, cfg.oracle_n_points);
        auto orc = oracle::self_consistent_energy(n, l, cfg.pot, grid, opts);
        st.E_oracle = orc.energy;
        st.oracle_nodes = orc.node_count;
    } catch (const NoBoundState&) {
        st.oracle_status = "no_bound_state";
    } catch (const ConvergenceFailure&) {
        st.oracle_status = "convergence_failure";
    }
    return st;
}

std::string csv_num(double x)
{
    return std::isfinite(x) ? fmt17(x) : "";
}

} // namespace

int cmd_solve(const RunConfig& cfg, const std::string& out_dir)
{
    ensure_dir(out_dir);
    std::ostringstream csv;
    csv << "n,l,m_l,E_paper,paper_status,E_nu,nu_status,imag_residual_nu,E_oracle,oracle_status,"
           "oracle_nodes,abs_diff_nu_oracle,norm_quadrature,nprime\n";

    json discrepancy;
    bool any_solved = false;
    for (const auto& s : cfg.states) {
        SolvedState st = solve_state(cfg, s[0], s[1], s[2]);
        any_solved = any_solved || st.nu_status == "ok" || st.oracle_status == "ok";
        double gap = (std::isfinite(st.E_nu) && std::isfinite(st.E_oracle))
                         ? std::abs(st.E_nu - st.E_oracle)
                         : std::nan("");
        csv << st.n << "," << st.l << "," << st.m_l << "," << csv_num(st.E_paper) << ","
            << st.paper_status << "," << csv_num(st.E_nu) << "," << st.nu_status << ","
            << csv_num(st.imag_at_root) << "," << csv_num(st.E_oracle) << "," << st.oracle_status
            << "," << (st.oracle_nodes >= 0 ? std::to_string(st.oracle_nodes) : "") << ","
            << csv_num(gap) << "," << csv_num(st.norm_check) << "," << csv_num(st.nprime) << "\n";
    }

    {
        json scans = json::array();
        std::set<std::pair<int, int>> seen;
        for (const auto& s : cfg.states) {
            if (!seen.insert({s[0], s[1]}).second)
                continue;
            const double eps = 1e-6 * cfg.pot.M;
            auto scan = spectrum::scan_condition(spectrum::Condition::PaperPrinted, s[0], s[1],
                                                 cfg.pot, -cfg.pot.M + eps, cfg.pot.M - eps,
                                                 cfg.scan_panels);
            int sign_changes = 0;
            for (std::size_t i = 0; i + 1 < scan.size(); ++i)
                if (scan[i].re * scan[i + 1].re < 0.0)
                    ++sign_changes;
            scans.push_back({{"n", s[0]}, {"l", s[1]}, {"sign_changes", sign_changes}});
        }
        discrepancy["paper_condition_scan"] = scans;
    }

    write_text_file(out_dir + "/solve.csv", csv.str());
    write_text_file(out_dir + "/discrepancy.json", discrepancy.dump(2) + "\n");
    write_sidecar(cfg, out_dir);
    return any_solved ? kExitOk : kExitSolverFailure;
}

int cmd_correct(const RunConfig& cfg, const std::string& out_dir)
{
    ensure_dir(out_dir);
    std::ostringstream csv;
    csv << "n,l,m_l,E0,dE_theta_quad,dE_field_quad,dE_total_quad,E_split,d_eps_theta,"
           "term_centrifugal,term_potential,term_coulomb,term_coulomb_theta,"
           "dE_closed_re,dE_closed_im,closed_status,discrepancy\n";

    json closed_table = json::array();
    bool any = false;
    std::set<std::pair<int, int>> split_done;
    for (const auto& s : cfg.states) {
        int n = s[0], l = s[1];
        if (!split_done.insert({n, l}).second)
            continue;
        spectrum::BoundState bs;
        try {
            auto sol = spectrum::solve_energy(n, l, cfg.pot, cfg.condition, cfg.bracket,
                                              cfg.scan_panels);
            bs = spectrum::build_wavefunction(sol.roots.front(), n, l, cfg.pot, cfg.condition);
        } catch (const NoRoot&) {
            csv << n << "," << l << ",,,,,,,,,,,,,,no_root,\n";
            continue;
        } catch (const NonNormalizable&) {
            csv << n << "," << l << ",,,,,,,,,,,,,,non_normalizable,\n";
            continue;
        }
        any = true;
        for (int m = -l; m <= l; ++m) {
            potential::NCParams nc{cfg.theta, m};
            auto rep = perturbation::correction_report(bs, cfg.pot, nc, cfg.field,
                                                       cfg.pekeris_variant);
            auto quad_theta = perturbation::delta_e_theta_quad(bs, cfg.pot, nc, cfg.pekeris_variant);
            double dE_theta = rep.term_centrifugal + rep.term_potential;
            double dE_field = rep.term_coulomb + rep.term_coulomb_theta;
            csv << n << "," << l << "," << m << "," << csv_num(bs.energy) << ","
                << csv_num(dE_theta) << "," << csv_num(dE_field) << "," << csv_num(rep.dE_quad)
                << "," << csv_num(bs.energy + rep.dE_quad) << "," << csv_num(quad_theta.d_eps)
                << "," << csv_num(rep.term_centrifugal) << "," << csv_num(rep.term_potential)
                << "," << csv_num(rep.term_coulomb) << "," << csv_num(rep.term_coulomb_theta)
                << "," << (rep.closed_valid ? csv_num(rep.dE_closed.real()) : "") << ","
                << (rep.closed_valid ? csv_num(rep.dE_closed.imag()) : "") << ","
                << rep.closed_status << ","
                << (rep.closed_valid ? csv_num(rep.discrepancy) : "") << "\n";
            closed_table.push_back({{"n", n},
                                    {"l", l},
                                    {"m_l", m},
                                    {"dE_quad", rep.dE_quad},
                                    {"closed_status", rep.closed_status}});
        }
    }

    write_text_file(out_dir + "/corrections.csv", csv.str());
    write_text_file(out_dir + "/discrepancy.json",
                    json{{"closed_vs_quadrature", closed_table}}.dump(2) + "\n");
    write_sidecar(cfg, out_dir);
    return any ? kExitOk : kExitSolverFailure;
}

int cmd_validate(const RunConfig& cfg, const std::string& out_dir)
{
    ensure_dir(out_dir);
    ValidationReport rep = run_validation(cfg);
    write_text_file(out_dir + "/validation.json", rep.to_json().dump(2) + "\n");
    write_sidecar(cfg, out_dir);
    return rep.all_passed() ? kExitOk : kExitValidationFailure;
}

int cmd_scan(const RunConfig& cfg, const std::string& out_dir, const std::string& axis,
             double lo, double hi, int steps)
{
    static const std::set<std::string> kAxes = {"theta", "V0", "alpha", "q", "r_c"};
    if (kAxes.find(axis) == kAxes.end())
        throw ConfigError("scan: axis must be one of theta, V0, alpha, q, r_c");
    if (steps < 1 || !(hi >= lo))
        throw ConfigError("scan: empty range");

    ensure_dir(out_dir);
    std::ostringstream csv;
    csv << "axis,value,n,l,m_l,E_nu,nu_status,E_oracle,oracle_status,dE_theta_quad,"
           "dE_field_quad\n";

    json meta;
    std::vector<double> theta_values, theta_dEs;

    for (int i = 0; i <= steps; ++i) {
        double x = lo + (hi - lo) * (steps == 0 ? 0.0 : static_cast<double>(i) / steps);
        RunConfig c = cfg;
        if (axis == "theta")
            c.theta = x;
        else if (axis == "V0")
            c.pot.V0 = x;
        else if (axis == "alpha")
            c.pot.alpha = x;
        else if (axis == "q")
            c.field.q_source = x;
        else if (axis == "r_c")
            c.pot.r_c = x;
        c.validate();

        for (const auto& s : cfg.states) {
            int n = s[0], l = s[1], m = s[2];
            std::string nu_status = "ok", oracle_status = "ok";
            double E_nu = std::nan(""), E_orc = std::nan("");
            double dE_theta = std::nan(""), dE_field = std::nan("");
            try {
                auto sol = spectrum::solve_energy(n, l, c.pot, spectrum::Condition::ParametricNu,
                                                  c.bracket, c.scan_panels);
                E_nu = sol.roots.front();
                auto bs = spectrum::build_wavefunction(E_nu, n, l, c.pot);
                potential::NCParams nc{c.theta, m};
                dE_theta = perturbation::delta_e_theta_quad(bs, c.pot, nc, c.pekeris_variant).dE;
                dE_field = perturbation::delta_e_efield_quad(bs, c.pot, nc, c.field,
                                                             c.pekeris_variant).dE;
            } catch (const NoRoot&) {
                nu_status = "no_root";
            } catch (const NonNormalizable&) {
                nu_status = "non_normalizable";
            }
            try {
                oracle::SelfConsistentOptions opts;
                opts.centrifugal = c.centrifugal;
                opts.pekeris_variant = c.pekeris_variant;
                oracle::RadialGrid grid = oracle::RadialGrid::for_potential(
                    c.pot, 0.0, c.oracle_r_max_alphas, c.oracle_n_points);
                E_orc = oracle::self_consistent_energy(n, l, c.pot, grid, opts).energy;
            } catch (const NoBoundState&) {
                oracle_status = "no_bound_state";
            } catch (const ConvergenceFailure&) {
                oracle_status = "convergence_failure";
            }
            csv << axis << "," << fmt17(x) << "," << n << "," << l << "," << m << ","
                << csv_num(E_nu) << "," << nu_status << "," << csv_num(E_orc) << ","
                << oracle_status << "," << csv_num(dE_theta) << "," << csv_num(dE_field) << "\n";
            if (axis == "theta" && s == cfg.states.front() && std::isfinite(dE_theta)) {
                theta_values.push_back(x);
                theta_dEs.push_back(dE_theta);
            }
        }
    }

    // first-order contract: dE vs theta is proportional through the origin
    if (axis == "theta" && theta_values.size() >= 2) {
        double slope = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < theta_values.size(); ++i)
            if (theta_values[i] != 0.0) {
                slope += theta_dEs[i] / theta_values[i];
                ++count;
            }
        if (count > 0) {
            slope /= count;
            double worst = 0.0;
            for (std::size_t i = 0; i < theta_values.size(); ++i) {
                double want = slope * theta_values[i];
                double scale = std::max(std::abs(want), 1e-300);
                worst = std::max(worst, std::abs(theta_dEs[i] - want) / scale);
            }
            meta["theta_linearity_max_rel_dev"] = worst;
            meta["theta_linearity_ok"] = worst <= 1e-10;
        }
    }

    write_text_file(out_dir + "/scan.csv", csv.str());
    if (!meta.empty())
        write_text_file(out_dir + "/scan_meta.json", meta.dump(2) + "\n");
    write_sidecar(cfg, out_dir);
    return kExitOk;
}

} // namespace nchyl::io
