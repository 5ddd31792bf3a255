#include "ncpainleve/config.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <set>
#include <sstream>

namespace ncp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

CoefMatrix parse_matrix(const std::string& text, int line_no) {
    auto rows = split(text, ';');
    const int dim = static_cast<int>(rows.size());
    CoefMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        auto entries = split(rows[r], ',');
        if (static_cast<int>(entries.size()) != dim)
            throw ConfigError("line " + std::to_string(line_no) +
                              ": matrix rows must all have " + std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c) {
            try {
                m.at(r, c) = Rational::parse(entries[c]);
            } catch (const Error& e) {
                throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }
    return m;
}

std::vector<CoefMatrix> parse_series(const std::string& text, int line_no) {
    std::vector<CoefMatrix> out;
    for (const auto& part : split(text, '|')) out.push_back(parse_matrix(part, line_no));
    for (const auto& m : out)
        if (m.dim() != out.front().dim())
            throw ConfigError("line " + std::to_string(line_no) +
                              ": series coefficients of mixed dimension");
    return out;
}

Rational parse_rational_value(const std::string& text, const std::string& key, int line_no) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw ConfigError("line " + std::to_string(line_no) + ": key '" + key + "': " + e.what());
    }
}

long parse_int_value(const std::string& text, const std::string& key, int line_no, long lo,
                     long hi) {
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        if (v < lo || v > hi) throw std::out_of_range("out of range");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                          "': expected an integer in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got '" + text + "'");
    }
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "quasidet",      "toda-pos",  "toda-neg",    "almost-hankel",
        "lemma22",       "cor24",     "lemma25",     "bilinear",
        "painleve-seed", "theorem32", "hamiltonian", "commutative-p2"};
    return names;
}

Config parse_config(std::istream& in) {
    Config cfg;
    std::set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!seen.insert(key).second)
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key +
                              "'");
        if (key == "base_point")
            cfg.base_point = parse_rational_value(value, key, line_no);
        else if (key == "beta")
            cfg.beta = parse_rational_value(value, key, line_no);
        else if (key == "matrix_dim")
            cfg.matrix_dim = static_cast<int>(parse_int_value(value, key, line_no, 1, 8));
        else if (key == "series_order")
            cfg.series_order = static_cast<int>(parse_int_value(value, key, line_no, 0, 512));
        else if (key == "chain_depth")
            cfg.chain_depth = static_cast<int>(parse_int_value(value, key, line_no, 1, 16));
        else if (key == "rng_seed")
            cfg.rng_seed = static_cast<std::uint64_t>(
                parse_int_value(value, key, line_no, 0, std::numeric_limits<long>::max()));
        else if (key == "seed_mode") {
            if (value == "random")
                cfg.seed_mode = SeedMode::Random;
            else if (value == "trivial")
                cfg.seed_mode = SeedMode::Trivial;
            else if (value == "explicit")
                cfg.seed_mode = SeedMode::Explicit;
            else
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": seed_mode must be random, trivial or explicit");
        } else if (key == "checks") {
            for (const auto& tok : split(value, ',')) {
                if (tok.empty())
                    throw ConfigError("line " + std::to_string(line_no) +
                                      ": empty entry in checks list");
                cfg.checks.push_back(tok);
            }
        } else if (key == "phi")
            cfg.phi_coeffs = parse_series(value, line_no);
        else if (key == "psi")
            cfg.psi_coeffs = parse_series(value, line_no);
        else
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }

    // cross-field validation
    if (cfg.checks.empty()) throw ConfigError("no checks selected");
    const auto& known = known_checks();
    for (const auto& c : cfg.checks)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw ConfigError("unknown check '" + c + "'");
    auto selected = [&](const char* name) {
        return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
    };
    if (selected("theorem32") || selected("toda-pos") || selected("toda-neg")) {
        const int need = 2 * cfg.chain_depth + 6;
        if (cfg.series_order < need)
            throw ConfigError("series_order = " + std::to_string(cfg.series_order) +
                              " is too small for chain_depth = " +
                              std::to_string(cfg.chain_depth) +
                              " with theorem32/toda suites selected; need series_order >= " +
                              std::to_string(need));
    }
    if (cfg.seed_mode == SeedMode::Explicit) {
        if (!cfg.phi_coeffs || !cfg.psi_coeffs)
            throw ConfigError("seed_mode = explicit requires both phi and psi");
        for (const auto* s : {&*cfg.phi_coeffs, &*cfg.psi_coeffs}) {
            if (s->front().dim() != cfg.matrix_dim)
                throw ConfigError("explicit seed dimension " +
                                  std::to_string(s->front().dim()) +
                                  " does not match matrix_dim = " +
                                  std::to_string(cfg.matrix_dim));
            if (static_cast<int>(s->size()) > cfg.series_order + 1)
                throw ConfigError("explicit seed has more coefficients than series_order allows");
        }
    } else if (cfg.phi_coeffs || cfg.psi_coeffs) {
        throw ConfigError("phi/psi are only accepted with seed_mode = explicit");
    }
    return cfg;
}

Config parse_config_text(const std::string& text) {
    std::istringstream is(text);
    return parse_config(is);
}

nlohmann::json Config::echo() const {
    nlohmann::json j;
    j["base_point"] = base_point.str_frac();
    j["beta"] = beta.str_frac();
    j["chain_depth"] = chain_depth;
    j["checks"] = checks;
    j["matrix_dim"] = matrix_dim;
    j["rng_seed"] = rng_seed;
    j["seed_mode"] = seed_mode == SeedMode::Random
                         ? "random"
                         : (seed_mode == SeedMode::Trivial ? "trivial" : "explicit");
    j["series_order"] = series_order;
    auto series_json = [](const std::vector<CoefMatrix>& coeffs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : coeffs) {
            nlohmann::json mat = nlohmann::json::array();
            for (int r = 0; r < m.dim(); ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str_frac());
                mat.push_back(row);
            }
            arr.push_back(mat);
        }
        return arr;
    };
    if (phi_coeffs) j["phi"] = series_json(*phi_coeffs);
    if (psi_coeffs) j["psi"] = series_json(*psi_coeffs);
    return j;
}

std::string gen_config(const std::string& preset) {
    if (preset == "quick")
        return "# quick verification run: trivial seed, shallow chains\n"
               "base_point = 2\n"
               "matrix_dim = 2\n"
               "series_order = 12\n"
               "rng_seed = 1\n"
               "beta = 1/2\n"
               "chain_depth = 2\n"
               "seed_mode = trivial\n"
               "checks = quasidet, toda-pos, toda-neg, bilinear, painleve-seed, theorem32, "
               "hamiltonian, commutative-p2\n";
    if (preset == "full")
        return "# full verification run: every suite, random seeds\n"
               "base_point = 1\n"
               "matrix_dim = 2\n"
               "series_order = 20\n"
               "rng_seed = 1\n"
               "beta = 1/2\n"
               "chain_depth = 3\n"
               "seed_mode = random\n"
               "checks = quasidet, toda-pos, toda-neg, almost-hankel, lemma22, cor24, lemma25, "
               "bilinear, painleve-seed, theorem32, hamiltonian, commutative-p2\n";
    throw ConfigError("unknown preset '" + preset + "' (expected quick or full)");
}

}  // namespace ncp
