#include "adictop/report.hpp"

#include <ctime>
#include <ostream>
#include <sstream>

#include "adictop/verify.hpp"

namespace adictop {

Json Report::to_json(bool with_timestamp) const {
    Json j;
    j["schema"] = "adictop/1";
    j["command"] = command;
    j["paper_ref"] = claim;
    j["inputs"] = inputs;
    j["outcome"] = outcome;
    j["certificate"] = certificate.to_json();
    j["seed"] = seed;
    j["precision"] = precision;
    if (with_timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["timestamp"] = buf;
    }
    return j;
}

std::string Report::text_summary() const {
    std::ostringstream out;
    out << command << ": " << claim << "\n";
    for (auto it = outcome.begin(); it != outcome.end(); ++it)
        out << "  " << it.key() << " = " << it.value().dump() << "\n";
    for (const auto& [name, value] : certificate.witnesses)
        out << "  " << name << " = " << value << "\n";
    size_t held = 0;
    for (const Check& c : certificate.checks)
        if (c.holds) ++held;
    out << "  checks: " << held << "/" << certificate.checks.size() << " hold\n";
    return out.str();
}

int verify_report_json(const Json& doc, std::ostream& log) {
    Json certj = doc.contains("certificate") ? doc.at("certificate") : doc;
    Certificate cert = Certificate::from_json(certj);
    VerifyOutcome out = verify_certificate(cert);
    log << "claim: " << cert.claim << "\n";
    log << "checks recomputed: " << out.checked << "\n";
    if (out.ok) {
        log << "certificate re-validates\n";
        return 0;
    }
    for (const std::string& f : out.failures) log << "FAILED " << f << "\n";
    return 2;
}

}  // namespace adictop
