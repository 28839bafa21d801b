#include "adictop/certificate.hpp"

#include "adictop/errors.hpp"

namespace adictop {

Json Check::to_json() const {
    Json j;
    j["op"] = op;
    j["args"] = args;
    j["holds"] = holds;
    if (!note.empty()) j["note"] = note;
    return j;
}

Check Check::from_json(const Json& j) {
    Check c;
    if (!j.contains("op") || !j.contains("args") || !j.contains("holds"))
        throw DomainError("check record needs op/args/holds");
    c.op = j.at("op").get<std::string>();
    c.args = j.at("args");
    c.holds = j.at("holds").get<bool>();
    if (j.contains("note")) c.note = j.at("note").get<std::string>();
    return c;
}

Json Certificate::to_json() const {
    Json j;
    j["claim"] = claim;
    Json w = Json::array();
    for (const auto& [name, value] : witnesses) {
        Json entry;
        entry["name"] = name;
        entry["value"] = value;
        w.push_back(entry);
    }
    j["witnesses"] = w;
    Json cs = Json::array();
    for (const Check& c : checks) cs.push_back(c.to_json());
    j["checks"] = cs;
    return j;
}

Certificate Certificate::from_json(const Json& j) {
    Certificate cert;
    if (!j.contains("claim")) throw DomainError("certificate record needs a claim");
    cert.claim = j.at("claim").get<std::string>();
    if (j.contains("witnesses"))
        for (const Json& w : j.at("witnesses"))
            cert.witnesses.emplace_back(w.at("name").get<std::string>(),
                                        w.at("value").get<std::string>());
    if (j.contains("checks"))
        for (const Json& c : j.at("checks")) cert.checks.push_back(Check::from_json(c));
    return cert;
}

}  // namespace adictop
