#include "nchyl/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace nchyl::io {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size())
            throw ConfigError("config: trailing characters in value of '" + key + "'");
        return x;
    } catch (const std::invalid_argument&) {
        throw ConfigError("config: cannot parse number for '" + key + "': " + v);
    }
}

int parse_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size())
            throw ConfigError("config: trailing characters in value of '" + key + "'");
        return x;
    } catch (const std::invalid_argument&) {
        throw ConfigError("config: cannot parse integer for '" + key + "': " + v);
    }
}

bool parse_bool(const std::string& key, const std::string& v)
{
    if (v == "true")
        return true;
    if (v == "false")
        return false;
    throw ConfigError("config: '" + key + "' must be true or false, got: " + v);
}

} // namespace

void RunConfig::validate() const
{
    pot.validate();
    if (theta < 0.0)
        throw ConfigError("config: nc.theta must be nonnegative");
    if (states.empty())
        throw ConfigError("config: at least one state is required");
    for (const auto& s : states) {
        auto [n, l, m] = s;
        if (n < 0 || l < 0)
            throw ConfigError("config: state indices must be nonnegative");
        if (std::abs(m) > l)
            throw ConfigError("config: state |m_l| must not exceed l");
    }
    if (scan_panels < 2)
        throw ConfigError("config: solver.scan_panels must be at least 2");
    if (oracle_n_points < 1000)
        throw ConfigError("config: oracle.n_points must be at least 1000");
    if (!(oracle_r_max_alphas > 0.0))
        throw ConfigError("config: oracle.r_max_alphas must be positive");
}

RunConfig parse_config_text(const std::string& text)
{
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    bool have_bracket_lo = false, have_bracket_hi = false;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    bool saw_potential = false;

    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section header at line " + std::to_string(lineno));
            section = line.substr(1, line.size() - 2);
            if (section != "potential" && section != "nc" && section != "field" &&
                section != "states" && section != "solver" && section != "oracle")
                throw ConfigError("config: unknown section [" + section + "]");
            if (section == "potential")
                saw_potential = true;
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        std::string fq = section + "." + key;

        if (fq == "potential.V0") cfg.pot.V0 = parse_double(fq, val);
        else if (fq == "potential.a") cfg.pot.a = parse_double(fq, val);
        else if (fq == "potential.b") cfg.pot.b = parse_double(fq, val);
        else if (fq == "potential.g") cfg.pot.g = parse_double(fq, val);
        else if (fq == "potential.alpha") cfg.pot.alpha = parse_double(fq, val);
        else if (fq == "potential.r_c") cfg.pot.r_c = parse_double(fq, val);
        else if (fq == "potential.M") cfg.pot.M = parse_double(fq, val);
        else if (fq == "nc.theta") cfg.theta = parse_double(fq, val);
        else if (fq == "field.e_charge") cfg.field.e_charge = parse_double(fq, val);
        else if (fq == "field.k_const") cfg.field.k_const = parse_double(fq, val);
        else if (fq == "field.q_source") cfg.field.q_source = parse_double(fq, val);
        else if (fq == "states.state") {
            std::istringstream sv(val);
            int n, l, m;
            if (!(sv >> n >> l >> m))
                throw ConfigError("config: state must be three integers 'n l m_l', got: " + val);
            std::string rest;
            if (sv >> rest)
                throw ConfigError("config: trailing characters in state: " + val);
            cfg.states.push_back({n, l, m});
        }
        else if (fq == "solver.condition") {
            if (val == "parametric_nu") cfg.condition = spectrum::Condition::ParametricNu;
            else if (val == "paper_printed") cfg.condition = spectrum::Condition::PaperPrinted;
            else throw ConfigError("config: solver.condition must be parametric_nu or paper_printed");
        }
        else if (fq == "solver.scan_panels") cfg.scan_panels = parse_int(fq, val);
        else if (fq == "solver.bracket_lo") { if (!val.empty()) { bracket_lo = parse_double(fq, val); have_bracket_lo = true; } }
        else if (fq == "solver.bracket_hi") { if (!val.empty()) { bracket_hi = parse_double(fq, val); have_bracket_hi = true; } }
        else if (fq == "oracle.n_points") cfg.oracle_n_points = parse_int(fq, val);
        else if (fq == "oracle.r_max_alphas") cfg.oracle_r_max_alphas = parse_double(fq, val);
        else if (fq == "oracle.centrifugal") {
            if (val == "exact") cfg.centrifugal = oracle::Centrifugal::Exact;
            else if (val == "pekeris") cfg.centrifugal = oracle::Centrifugal::Pekeris;
            else throw ConfigError("config: oracle.centrifugal must be exact or pekeris");
        }
        else if (fq == "oracle.pekeris_variant") {
            if (val == "as_printed") cfg.pekeris_variant = potential::PekerisVariant::AsPrinted;
            else if (val == "conventional") cfg.pekeris_variant = potential::PekerisVariant::Conventional;
            else throw ConfigError("config: oracle.pekeris_variant must be as_printed or conventional");
        }
        else if (fq == "oracle.richardson") cfg.richardson = parse_bool(fq, val);
        else
            throw ConfigError("config: unknown key '" + fq + "'");
    }

    if (!saw_potential)
        throw ConfigError("config: missing [potential] section");
    if (have_bracket_lo != have_bracket_hi)
        throw ConfigError("config: bracket_lo and bracket_hi must be given together");
    if (have_bracket_lo)
        cfg.bracket = std::make_pair(bracket_lo, bracket_hi);

    cfg.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

std::string render_config(const RunConfig& cfg)
{
    std::ostringstream o;
    o << "[potential]\n";
    o << "V0 = " << fmt17(cfg.pot.V0) << "\n";
    o << "a = " << fmt17(cfg.pot.a) << "\n";
    o << "b = " << fmt17(cfg.pot.b) << "\n";
    o << "g = " << fmt17(cfg.pot.g) << "\n";
    o << "alpha = " << fmt17(cfg.pot.alpha) << "\n";
    o << "r_c = " << fmt17(cfg.pot.r_c) << "\n";
    o << "M = " << fmt17(cfg.pot.M) << "\n";
    o << "\n[nc]\ntheta = " << fmt17(cfg.theta) << "\n";
    o << "\n[field]\n";
    o << "e_charge = " << fmt17(cfg.field.e_charge) << "\n";
    o << "k_const = " << fmt17(cfg.field.k_const) << "\n";
    o << "q_source = " << fmt17(cfg.field.q_source) << "\n";
    o << "\n[states]\n";
    for (const auto& s : cfg.states)
        o << "state = " << s[0] << " " << s[1] << " " << s[2] << "\n";
    o << "\n[solver]\n";
    o << "condition = "
      << (cfg.condition == spectrum::Condition::ParametricNu ? "parametric_nu" : "paper_printed")
      << "\n";
    o << "scan_panels = " << cfg.scan_panels << "\n";
    o << "bracket_lo = " << (cfg.bracket ? fmt17(cfg.bracket->first) : "") << "\n";
    o << "bracket_hi = " << (cfg.bracket ? fmt17(cfg.bracket->second) : "") << "\n";
    o << "\n[oracle]\n";
    o << "n_points = " << cfg.oracle_n_points << "\n";
    o << "r_max_alphas = " << fmt17(cfg.oracle_r_max_alphas) << "\n";
    o << "centrifugal = " << (cfg.centrifugal == oracle::Centrifugal::Exact ? "exact" : "pekeris")
      << "\n";
    o << "pekeris_variant = "
      << (cfg.pekeris_variant == potential::PekerisVariant::AsPrinted ? "as_printed" : "conventional")
      << "\n";
    o << "richardson = " << (cfg.richardson ? "true" : "false") << "\n";
    return o.str();
}

} // namespace nchyl::io
