#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nchyl/oracle.hpp"
#include "nchyl/potential.hpp"
#include "nchyl/spectrum.hpp"

namespace nchyl::io {

// Parsed run configuration. The file format is a flat, sectioned, typed
// key-value text (see docs/formats); unknown sections or keys are hard
// errors, `state` is the only repeatable key.
struct RunConfig {
    potential::PotentialParams pot;
    double theta = 0.0;
    potential::FieldParams field;
    std::vector<std::array<int, 3>> states; // (n, l, m_l)

    spectrum::Condition condition = spectrum::Condition::ParametricNu;
    int scan_panels = 2000;
    std::optional<std::pair<double, double>> bracket;

    int oracle_n_points = 6000;
    double oracle_r_max_alphas = 60.0;
    oracle::Centrifugal centrifugal = oracle::Centrifugal::Exact;
    potential::PekerisVariant pekeris_variant = potential::PekerisVariant::AsPrinted;
    bool richardson = true;

    void validate() const; // throws ConfigError
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Effective configuration (defaults resolved), re-parsable by parse_config_text.
std::string render_config(const RunConfig& cfg);

// 17-significant-digit fixed formatting used by every data file.
std::string fmt17(double x);

} // namespace nchyl::io
