#pragma once

#include "ncpainleve/config.hpp"
#include "ncpainleve/report.hpp"

namespace ncp {

// Runs every selected suite and collects the records.  Mathematical
// failures inside a check are captured in its record; a failing suite
// never prevents the remaining suites from running.  Given identical
// configurations the report is byte-identical (wall times are kept out
// of the JSON form).
Report run(const Config& cfg);

}  // namespace ncp
