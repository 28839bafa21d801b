#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace adictop {

using Json = nlohmann::ordered_json;

// One machine-checkable fact.  `op` selects a verifier (see verify.hpp);
// `args` is the op-specific payload, self-contained so that re-checking
// needs no context beyond this object.  `holds` is the result at emission
// time; emitters must re-verify before returning, so a false entry can only
// denote a *negative* fact that the claim explicitly asserts (none of the
// current ops do this -- negatives are phrased as positive ops like
// val_lt).
struct Check {
    std::string op;
    Json args;
    bool holds = false;
    std::string note;  // optional human label

    Json to_json() const;
    static Check from_json(const Json& j);
};

// Self-contained verifiable evidence: witness elements plus the exact
// (in)equalities they satisfy.
struct Certificate {
    std::string claim;  // stable statement identifier, e.g. "indep.one-in-sum"
    std::vector<std::pair<std::string, std::string>> witnesses;  // name -> printed value
    std::vector<Check> checks;

    void witness(const std::string& name, const std::string& value) {
        witnesses.emplace_back(name, value);
    }

    bool all_hold() const {
        for (const Check& c : checks)
            if (!c.holds) return false;
        return true;
    }

    Json to_json() const;
    static Certificate from_json(const Json& j);
};

}  // namespace adictop
