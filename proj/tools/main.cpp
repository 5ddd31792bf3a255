// Command-line driver: runs verification suites from a config file and
// emits deterministic reports.
//
//   verify      run the selected suites; exit 0 when every gating check
//               passes, 1 on any mathematical failure, 2 on bad usage
//   gen-config  print a ready-made configuration to stdout
//   version     print the artifact version

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ncpainleve/harness.hpp"
#include "ncpainleve/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification of quasideterminant Toda and Painleve identities"};
    app.require_subcommand(1);

    std::string config_path;
    std::string json_path;
    bool text = false;
    auto* verify = app.add_subcommand("verify", "run the checks selected by a config file");
    verify->add_option("--config", config_path, "path to the config file")->required();
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_flag("--text", text, "print the human-readable summary table");

    std::string preset;
    auto* gen = app.add_subcommand("gen-config", "print a ready-made config to stdout");
    gen->add_option("--preset", preset, "quick or full")->required();

    auto* version = app.add_subcommand("version", "print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (version->parsed()) {
            std::cout << "ncpainleve " << ncp::kVersion << "\n";
            return 0;
        }
        if (gen->parsed()) {
            std::cout << ncp::gen_config(preset);
            return 0;
        }
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config file '" << config_path << "'\n";
            return 2;
        }
        ncp::Config cfg = ncp::parse_config(in);
        ncp::Report report = ncp::run(cfg);
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out) {
                std::cerr << "error: cannot write '" << json_path << "'\n";
                return 2;
            }
            out << report.to_json().dump(2) << "\n";
        }
        if (text || json_path.empty()) std::cout << report.to_text();
        return report.all_passed ? 0 : 1;
    } catch (const ncp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
