#include "ncpainleve/report.hpp"

#include <iomanip>
#include <sstream>

namespace ncp {

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["params"] = params;
    j["valid_order"] = valid_order;
    j["passed"] = passed;
    if (first_nonzero)
        j["first_nonzero"] = {{"coeff", first_nonzero->coeff},
                              {"row", first_nonzero->row},
                              {"col", first_nonzero->col}};
    else
        j["first_nonzero"] = nullptr;
    return j;
}

void Report::add(CheckResult r) {
    if (!r.exploratory && !r.passed) all_passed = false;
    checks.push_back(std::move(r));
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["config"] = config_echo;
    j["version"] = version;
    j["all_passed"] = all_passed;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back(c.to_json());
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "verification report (version " << version << ")\n";
    std::size_t width = 4;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    int failed = 0, exploratory = 0;
    for (const auto& c : checks) {
        os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << c.name;
        os << (c.passed ? "pass" : "FAIL");
        if (c.exploratory) {
            os << " (exploratory)";
            ++exploratory;
        } else if (!c.passed) {
            ++failed;
        }
        os << "  order=" << c.valid_order;
        if (c.first_nonzero)
            os << "  first_nonzero=(t^" << c.first_nonzero->coeff << ", " << c.first_nonzero->row
               << "," << c.first_nonzero->col << ")";
        if (c.params.contains("error")) os << "  error: " << c.params["error"].get<std::string>();
        os << "  [" << std::fixed << std::setprecision(1) << c.wall_ms << " ms]";
        os << "\n";
    }
    os << (all_passed ? "all checks passed" : "FAILED") << " (" << checks.size() << " checks, "
       << failed << " failures";
    if (exploratory) os << ", " << exploratory << " exploratory";
    os << ")\n";
    return os.str();
}

CheckResult residual_check(std::string name, nlohmann::json params, const RingElem& residual,
                           bool expect_zero) {
    CheckResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.valid_order = residual.valid_order();
    const bool zero = residual.is_zero();
    r.passed = expect_zero ? zero : !zero;
    if (expect_zero && !zero) r.first_nonzero = residual.first_nonzero();
    return r;
}

CheckResult error_check(std::string name, nlohmann::json params, const std::exception& err) {
    CheckResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.params["error"] = std::string(err.what());
    r.valid_order = -1;
    r.passed = false;
    return r;
}

}  // namespace ncp
