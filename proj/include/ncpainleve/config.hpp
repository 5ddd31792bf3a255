#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncpainleve/series.hpp"

namespace ncp {

enum class SeedMode { Random, Trivial, Explicit };

// Run configuration, parsed from a flat key = value file ('#' starts a
// comment).  Rationals are written "p" or "p/q"; matrices as rows
// separated by ';' with ','-separated entries; series as '|'-separated
// coefficient matrices, degree 0 first.  The full grammar is spelled
// out in the README.
struct Config {
    Rational base_point{1};
    int matrix_dim = 2;
    int series_order = 20;
    std::uint64_t rng_seed = 1;
    Rational beta{1, 2};
    int chain_depth = 3;
    std::vector<std::string> checks;
    SeedMode seed_mode = SeedMode::Random;
    // seed_mode == Explicit: candidate seed pair as coefficient lists
    std::optional<std::vector<CoefMatrix>> phi_coeffs;
    std::optional<std::vector<CoefMatrix>> psi_coeffs;

    // Canonical echo for reports: sorted keys, rationals as "p/q".
    nlohmann::json echo() const;
};

// Suite names accepted in the `checks` list.
const std::vector<std::string>& known_checks();

Config parse_config(std::istream& in);
Config parse_config_text(const std::string& text);

// Ready-made configurations: "quick" (small orders, subset of suites)
// and "full" (every suite at production depth).
std::string gen_config(const std::string& preset);

}  // namespace ncp
