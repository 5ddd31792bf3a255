#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncpainleve/harness.hpp"

using namespace ncp;

namespace {

const char* kSmallConfig =
    "# comment line\n"
    "base_point = 3/2\n"
    "matrix_dim = 2\n"
    "series_order = 8\n"
    "rng_seed = 42\n"
    "beta = -1/2\n"
    "chain_depth = 1\n"
    "seed_mode = random\n"
    "checks = bilinear, hamiltonian\n";

}  // namespace

TEST_CASE("config parsing") {
    Config cfg = parse_config_text(kSmallConfig);
    CHECK(cfg.base_point == Rational(3, 2));
    CHECK(cfg.matrix_dim == 2);
    CHECK(cfg.series_order == 8);
    CHECK(cfg.rng_seed == 42);
    CHECK(cfg.beta == Rational(-1, 2));
    CHECK(cfg.chain_depth == 1);
    CHECK(cfg.seed_mode == SeedMode::Random);
    CHECK(cfg.checks == std::vector<std::string>{"bilinear", "hamiltonian"});
}

TEST_CASE("config defaults") {
    Config cfg = parse_config_text("checks = bilinear\n");
    CHECK(cfg.base_point == Rational(1));
    CHECK(cfg.matrix_dim == 2);
    CHECK(cfg.series_order == 20);
    CHECK(cfg.chain_depth == 3);
    CHECK(cfg.seed_mode == SeedMode::Random);
}

TEST_CASE("config rejection") {
    SUBCASE("unknown key") {
        CHECK_THROWS_AS(parse_config_text("wibble = 3\nchecks = bilinear\n"), ConfigError);
    }
    SUBCASE("bad rational") {
        CHECK_THROWS_AS(parse_config_text("beta = 1.5\nchecks = bilinear\n"), ConfigError);
    }
    SUBCASE("duplicate key") {
        CHECK_THROWS_AS(parse_config_text("beta = 1\nbeta = 2\nchecks = bilinear\n"),
                        ConfigError);
    }
    SUBCASE("no checks") { CHECK_THROWS_AS(parse_config_text("beta = 1\n"), ConfigError); }
    SUBCASE("unknown check") {
        CHECK_THROWS_AS(parse_config_text("checks = nonsense\n"), ConfigError);
    }
    SUBCASE("series order too small for the chain depth") {
        try {
            parse_config_text("checks = theorem32\nchain_depth = 3\nseries_order = 10\n");
            FAIL("expected rejection");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("series_order") != std::string::npos);
        }
    }
    SUBCASE("explicit mode needs both seeds") {
        CHECK_THROWS_AS(parse_config_text("checks = bilinear\nseed_mode = explicit\nphi = 1\n"),
                        ConfigError);
    }
    SUBCASE("explicit seeds must match the configured dimension") {
        CHECK_THROWS_AS(parse_config_text("checks = bilinear\nseed_mode = explicit\n"
                                          "matrix_dim = 2\nphi = 1\npsi = 1\n"),
                        ConfigError);
    }
    SUBCASE("explicit seeds are rejected outside explicit mode") {
        CHECK_THROWS_AS(parse_config_text("checks = bilinear\nphi = 1,0;0,1\npsi = 1,0;0,1\n"),
                        ConfigError);
    }
}

TEST_CASE("explicit series grammar") {
    Config cfg = parse_config_text(
        "checks = toda-pos\n"
        "matrix_dim = 2\n"
        "chain_depth = 1\n"
        "series_order = 8\n"
        "seed_mode = explicit\n"
        "phi = 1, 0; 0, 1 | 0, 1/2; -1, 0\n"
        "psi = 2, 0; 0, 2\n");
    REQUIRE(cfg.phi_coeffs.has_value());
    CHECK(cfg.phi_coeffs->size() == 2);
    CHECK(cfg.phi_coeffs->at(1).at(0, 1) == Rational(1, 2));
    CHECK(cfg.phi_coeffs->at(1).at(1, 0) == Rational(-1));
    CHECK(cfg.psi_coeffs->size() == 1);
}

TEST_CASE("generated presets parse back") {
    for (const char* preset : {"quick", "full"}) {
        Config cfg = parse_config_text(gen_config(preset));
        CHECK(!cfg.checks.empty());
    }
    CHECK_THROWS_AS(gen_config("bogus"), ConfigError);
}

TEST_CASE("reports are byte-deterministic") {
    Config cfg = parse_config_text(kSmallConfig);
    std::string a = run(cfg).to_json().dump(2);
    std::string b = run(cfg).to_json().dump(2);
    CHECK(a == b);
}

TEST_CASE("report shape") {
    Config cfg = parse_config_text(kSmallConfig);
    Report rep = run(cfg);
    CHECK(rep.all_passed);
    nlohmann::json j = rep.to_json();
    CHECK(j.contains("config"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("all_passed"));
    CHECK(j.contains("version"));
    CHECK(j["config"]["base_point"] == "3/2");
    CHECK(j["config"]["beta"] == "-1/2");
    REQUIRE(j["checks"].is_array());
    REQUIRE(!j["checks"].empty());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("params"));
        CHECK(c.contains("valid_order"));
        CHECK(c.contains("passed"));
        CHECK(c.contains("first_nonzero"));
        CHECK(!c.contains("wall_ms"));
    }
    CHECK(rep.to_text().find("pass") != std::string::npos);
}

TEST_CASE("honest failures are captured, not thrown") {
    // a candidate pair that is not a solution: phi = psi = 1, beta = 1/2
    Config cfg = parse_config_text(
        "checks = painleve-seed\n"
        "matrix_dim = 1\n"
        "series_order = 8\n"
        "beta = 1/2\n"
        "seed_mode = explicit\n"
        "phi = 1\n"
        "psi = 1\n");
    Report rep = run(cfg);
    CHECK(!rep.all_passed);
    bool found_nonzero = false;
    for (const auto& c : rep.checks)
        if (!c.passed && c.first_nonzero) found_nonzero = true;
    CHECK(found_nonzero);
}

TEST_CASE("a failing suite does not block the others") {
    Config cfg = parse_config_text(
        "checks = theorem32, bilinear\n"
        "matrix_dim = 1\n"
        "series_order = 12\n"
        "chain_depth = 1\n"
        "beta = 1/2\n"
        "seed_mode = explicit\n"
        "phi = 1\n"
        "psi = 1\n");
    Report rep = run(cfg);
    CHECK(!rep.all_passed);
    int bilinear_pass = 0;
    for (const auto& c : rep.checks)
        if (c.name == "bilinear" && c.passed) ++bilinear_pass;
    CHECK(bilinear_pass > 0);
}

TEST_CASE("trivial seed run passes end to end") {
    Config cfg = parse_config_text(
        "checks = theorem32\n"
        "base_point = 2\n"
        "matrix_dim = 1\n"
        "series_order = 10\n"
        "chain_depth = 2\n"
        "seed_mode = trivial\n");
    Report rep = run(cfg);
    CHECK(rep.all_passed);
    int pos = 0, neg = 0, lemma = 0;
    for (const auto& c : rep.checks) {
        if (c.name == "theorem32-pos") ++pos;
        if (c.name == "theorem32-neg") ++neg;
        if (c.name.rfind("lemma33", 0) == 0) ++lemma;
    }
    CHECK(pos == 2);
    CHECK(neg == 4);
    CHECK(lemma == 8);
}
