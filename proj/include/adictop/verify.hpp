#pragma once

#include <map>
#include <string>
#include <vector>

#include "adictop/certificate.hpp"
#include "adictop/ground.hpp"
#include "adictop/valuation.hpp"

namespace adictop {

// Re-evaluate one check from its self-contained args.  Unknown ops raise
// DomainError; arithmetic failures propagate as exceptions rather than
// returning false, so a malformed certificate is distinguishable from a
// false one.
bool verify_check(const Check& check);

struct VerifyOutcome {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // description per failed/diverging check
};

// Recompute every check; `ok` requires each recomputation to succeed and to
// agree with the recorded `holds` flag.
VerifyOutcome verify_certificate(const Certificate& cert);

using Bindings = std::map<std::string, std::string>;

// Factories: build the args payload, run the verifier once, and record the
// result in `holds`.  Emitting code asserts `holds` (or deliberately keeps a
// negative fact phrased positively, e.g. val_lt).
Check check_eq(Field field, const std::string& lhs, const std::string& rhs,
               const Bindings& bindings = {}, const std::string& note = "");
Check check_val_ge(const std::string& x, const ValuationSpec& place, long bound,
                   const Bindings& bindings = {}, const std::string& note = "");
Check check_val_eq(const std::string& x, const ValuationSpec& place, long bound,
                   const Bindings& bindings = {}, const std::string& note = "");
Check check_val_lt(const std::string& x, const ValuationSpec& place, long bound,
                   const Bindings& bindings = {}, const std::string& note = "");
Check check_val_inf(const std::string& x, const ValuationSpec& place,
                    const Bindings& bindings = {}, const std::string& note = "");
Check check_in_ring(const std::string& ring, const std::string& x,
                    const Bindings& bindings = {}, const std::string& note = "");
Check check_not_in_ring(const std::string& ring, const std::string& x,
                        const Bindings& bindings = {}, const std::string& note = "");
Check check_in_nbhd(const std::string& ring, const std::string& scale,
                    const std::string& center, const std::string& x,
                    const Bindings& bindings = {}, const std::string& note = "");
Check check_not_in_nbhd(const std::string& ring, const std::string& scale,
                        const std::string& center, const std::string& x,
                        const Bindings& bindings = {}, const std::string& note = "");
Check check_place_in_support(const std::string& topology, const ValuationSpec& place,
                             const std::string& note = "");
Check check_membership_conjunction(const std::string& ring,
                                   const std::vector<std::string>& components,
                                   const std::string& x, const std::string& note = "");
Check check_linear_infeasible(const std::vector<std::vector<Rat>>& matrix,
                              const std::vector<Rat>& rhs, const std::string& note = "");
Check check_is_prime(const Int& n, const std::string& note = "");
Check check_distinct(Field field, const std::vector<std::string>& values,
                     const std::string& note = "");

// Divisor facts about a rational function of x (see curve.hpp).
Check check_ord_at(const std::string& f, const std::string& point, long ord,
                   const std::string& note = "");
Check check_poles_within(const std::string& f, const std::vector<std::string>& points,
                         const std::string& note = "");
Check check_degree_is(const std::string& f, long n, const std::string& note = "");

}  // namespace adictop
