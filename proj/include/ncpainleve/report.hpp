#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncpainleve/series.hpp"

namespace ncp {

// One verification record: a named residual check with its parameters,
// the order it was verified to, and the location of the first nonzero
// coefficient when it failed.
struct CheckResult {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    int valid_order = -1;
    bool passed = false;
    std::optional<RingElem::Nonzero> first_nonzero;
    // Exploratory records are informational and excluded from the
    // aggregate pass/fail (used for the matrix-valued negative-chain
    // orientation question, which is left open).
    bool exploratory = false;
    double wall_ms = 0.0;  // text output only, never serialized to JSON

    nlohmann::json to_json() const;
};

struct Report {
    nlohmann::json config_echo = nlohmann::json::object();
    std::vector<CheckResult> checks;
    bool all_passed = true;
    std::string version;

    void add(CheckResult r);

    // Canonical serialization: keys sorted, rationals as "p/q" strings,
    // wall times excluded.  Byte-identical across runs with the same
    // configuration.
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Builds a record from a residual that is expected to vanish
// identically (or, with expect_zero = false, a negative control that
// must not vanish).
CheckResult residual_check(std::string name, nlohmann::json params, const RingElem& residual,
                           bool expect_zero = true);

// Builds a failed record from a captured mathematical error.
CheckResult error_check(std::string name, nlohmann::json params, const std::exception& err);

}  // namespace ncp
