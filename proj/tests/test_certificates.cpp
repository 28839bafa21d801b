#include <doctest.h>

#include "adictop/curve.hpp"
#include "adictop/independence.hpp"
#include "adictop/parser.hpp"
#include "adictop/report.hpp"
#include "adictop/rings.hpp"
#include "adictop/verify.hpp"

#include <sstream>

using namespace adictop;

namespace {

Ground q(const std::string& s) { return Ground(parse_rational(s)); }

NeighborhoodDescriptor ball(long p, long exp) {
    return NeighborhoodDescriptor(RingDescriptor::multi_adic_int({Int(p)}),
                                  Ground(pow_rat(Rat(p), exp)), q("0"));
}

}  // namespace

TEST_CASE("certificates survive a JSON round trip") {
    OneInSumResult r = one_in_sum(ball(5, 2), ball(7, 1));
    Json j = r.certificate.to_json();
    Certificate back = Certificate::from_json(j);
    CHECK(back.claim == r.certificate.claim);
    CHECK(back.checks.size() == r.certificate.checks.size());
    VerifyOutcome out = verify_certificate(back);
    CHECK(out.ok);
    CHECK(out.checked == r.certificate.checks.size());
    // serialization is stable
    CHECK(back.to_json().dump() == j.dump());
}

TEST_CASE("tampered certificates fail verification") {
    OneInSumResult r = one_in_sum(ball(5, 2), ball(7, 1));

    Certificate flipped = r.certificate;
    flipped.checks[0].holds = false;  // recorded result no longer matches
    CHECK_FALSE(verify_certificate(flipped).ok);

    Certificate doctored = Certificate::from_json(r.certificate.to_json());
    doctored.checks[0].args["bindings"]["u"] = "51";  // 51 + v != 1
    CHECK_FALSE(verify_certificate(doctored).ok);

    Certificate garbled = r.certificate;
    garbled.checks[0].op = "no-such-op";
    CHECK_FALSE(verify_certificate(garbled).ok);
}

TEST_CASE("reports re-validate through the file-level entry point") {
    NonHenselResult nh = non_gt_hensel_certificate(Int(5), Int(7), 1, 1);
    Report rep;
    rep.command = "nonhensel-demo";
    rep.claim = nh.certificate.claim;
    rep.certificate = nh.certificate;
    rep.seed = 7;
    rep.precision = 2;
    std::ostringstream log;
    CHECK(verify_report_json(rep.to_json(), log) == 0);

    // bare certificates re-validate too
    std::ostringstream log2;
    CHECK(verify_report_json(nh.certificate.to_json(), log2) == 0);

    // a doctored report is rejected
    Json bad = rep.to_json();
    bad["certificate"]["checks"][1]["args"]["bindings"]["a"] = "22";
    std::ostringstream log3;
    CHECK(verify_report_json(bad, log3) == 2);
}

TEST_CASE("reports are deterministic modulo the timestamp") {
    auto make = [] {
        OneInSumResult r = one_in_sum(ball(5, 2), ball(7, 1));
        Report rep;
        rep.command = "independence";
        rep.claim = r.certificate.claim;
        rep.inputs["p"] = "5";
        rep.inputs["q"] = "7";
        rep.outcome["u"] = r.u.to_string();
        rep.outcome["v"] = r.v.to_string();
        rep.certificate = r.certificate;
        rep.seed = 42;
        rep.precision = 2;
        return rep.to_json(/*with_timestamp=*/false).dump();
    };
    CHECK(make() == make());
}

TEST_CASE("report fields carry the schema, claim id, seed and precision") {
    OneInSumResult r = one_in_sum(ball(3, 1), ball(7, 1));
    Report rep;
    rep.command = "independence";
    rep.claim = r.certificate.claim;
    rep.certificate = r.certificate;
    rep.seed = 9;
    rep.precision = 4;
    Json j = rep.to_json();
    CHECK(j["schema"] == "adictop/1");
    CHECK(j["paper_ref"] == "indep.one-in-sum");
    CHECK(j["seed"] == 9);
    CHECK(j["precision"] == 4);
    CHECK(j.contains("timestamp"));
    CHECK(j.contains("inputs"));
    CHECK(j.contains("outcome"));
}

TEST_CASE("verify distinguishes malformed from false") {
    Certificate cert;
    cert.claim = "test";
    Check c;
    c.op = "eq";
    c.args["field"] = "Q";
    c.args["lhs"] = "1 + 1";
    c.args["rhs"] = "2";
    c.holds = true;
    cert.checks.push_back(c);
    CHECK(verify_certificate(cert).ok);

    cert.checks[0].args["rhs"] = "3";
    CHECK_FALSE(verify_certificate(cert).ok);

    cert.checks[0].args["rhs"] = "not + a + @valid";
    VerifyOutcome out = verify_certificate(cert);
    CHECK_FALSE(out.ok);
    REQUIRE(out.failures.size() == 1);
}
