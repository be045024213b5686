#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nchyl/config.hpp"

namespace nchyl::io {

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<InvariantResult> invariants;
    nlohmann::json diagnostics;

    bool all_passed() const;
    nlohmann::json to_json() const;
};

// Runs every asserted module invariant on the given configuration and
// collects the diagnostic sections (Pekeris error, printed-condition scan,
// squared-3F2 discrepancy, closed-vs-quadrature table, condition-vs-oracle
// energy gaps).
ValidationReport run_validation(const RunConfig& cfg);

// Run sidecar: effective config echo plus library version. No timestamps;
// identical configs produce byte-identical sidecars.
nlohmann::json sidecar_json(const RunConfig& cfg);

void write_text_file(const std::string& path, const std::string& content);

} // namespace nchyl::io
