#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "adictop/certificate.hpp"

namespace adictop {

// Run-wide knobs; seed and precision are stamped into every report.
struct RunConfig {
    std::uint64_t seed = 0;
    long precision = 2;
    bool json_output = true;
};

// Envelope for one CLI invocation: schema "adictop/1".  `claim` doubles as
// the report's statement identifier (the "paper_ref" field of the schema).
struct Report {
    std::string command;
    std::string claim;
    Json inputs = Json::object();
    Json outcome = Json::object();
    Certificate certificate;
    std::uint64_t seed = 0;
    long precision = 0;

    Json to_json(bool with_timestamp = true) const;
    std::string text_summary() const;
};

// Re-validate a serialized report (or bare certificate): every check is
// recomputed from its own arguments.  Returns 0 when everything agrees,
// 2 otherwise; diagnostics go to `log`.
int verify_report_json(const Json& doc, std::ostream& log);

}  // namespace adictop
