// adictop: exact arithmetic on locally bounded field topologies over Q and
// Q(t).  Every subcommand emits a self-contained JSON certificate that
// `adictop verify` re-checks without recomputation context.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "adictop/breadth.hpp"
#include "adictop/curve.hpp"
#include "adictop/hensel.hpp"
#include "adictop/independence.hpp"
#include "adictop/local.hpp"
#include "adictop/parser.hpp"
#include "adictop/report.hpp"
#include "adictop/rings.hpp"
#include "adictop/verify.hpp"

using namespace adictop;

namespace {

struct GlobalOpts {
    RunConfig config;
    std::string out_file;
    bool text = false;
};

void emit(const Report& report, const GlobalOpts& g) {
    Json j = report.to_json();
    if (!g.out_file.empty()) {
        std::ofstream f(g.out_file);
        f << j.dump(2) << "\n";
    }
    if (g.text)
        std::cout << report.text_summary();
    else
        std::cout << j.dump(2) << "\n";
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

LocalContext make_context(const Int& prime, bool tadic, long precision) {
    if (tadic) return LocalContext(ValuationSpec::t_adic(), precision);
    return LocalContext(ValuationSpec::p_adic(prime), precision);
}

Field context_field(bool tadic) { return tadic ? Field::Qt : Field::Q; }

std::vector<Ground> parse_point_list(const std::string& s, Field f) {
    std::vector<Ground> out;
    for (const std::string& part : split_list(s)) out.push_back(parse_ground(part, f));
    return out;
}

PolySystem parse_system(const std::string& text, size_t n, size_t m, Field f) {
    PolySystem sys;
    sys.n = n;
    sys.m = m;
    std::vector<std::string> names = sys.var_names();
    for (const std::string& part : split_list(text, ';'))
        sys.polys.push_back(parse_multipoly(part, names, f));
    sys.validate();
    return sys;
}

Report root_report(const std::string& command, const std::string& claim,
                   const RootCertificate& rc, const GlobalOpts& g, Json inputs) {
    Report r;
    r.command = command;
    r.claim = claim;
    r.inputs = std::move(inputs);
    Json roots = Json::array();
    for (const LocalExpansion& e : rc.roots) {
        Json je;
        je["representative"] = e.representative().to_string();
        je["digits"] = e.digit_strings();
        je["lo"] = e.lo();
        je["precision"] = e.precision();
        roots.push_back(je);
    }
    r.outcome["status"] = "root-found";
    r.outcome["roots"] = roots;
    r.outcome["residual_valuation"] = rc.residual.to_string();
    r.outcome["derivative_valuation"] = rc.derivative_valuation;
    r.outcome["iterations"] = rc.iterations;
    r.certificate = rc.certificate;
    r.seed = g.config.seed;
    r.precision = g.config.precision;
    return r;
}

Report cert_report(const std::string& command, const Certificate& cert, Json inputs,
                   Json outcome, const GlobalOpts& g) {
    Report r;
    r.command = command;
    r.claim = cert.claim;
    r.inputs = std::move(inputs);
    r.outcome = std::move(outcome);
    r.certificate = cert;
    r.seed = g.config.seed;
    r.precision = g.config.precision;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for R-adic field topologies over Q and Q(t)"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand

    GlobalOpts g;
    if (const char* env = std::getenv("ADICTOP_SEED")) g.config.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--seed", g.config.seed, "RNG seed stamped into reports");
    app.add_option("--precision", g.config.precision, "default working precision");
    app.add_flag("--text", g.text, "human-readable output instead of JSON");
    app.add_option("--out", g.out_file, "also write the JSON report to this file");

    // ---- hensel ----
    auto* hensel_cmd = app.add_subcommand("hensel", "lift a univariate root by Newton iteration");
    std::string hensel_poly, hensel_seed;
    std::string hensel_prime{"5"};
    bool hensel_tadic = false;
    hensel_cmd->add_option("--poly", hensel_poly, "polynomial in X")->required();
    hensel_cmd->add_option("--at", hensel_seed, "seed point a0")->required();
    hensel_cmd->add_option("--prime", hensel_prime, "p-adic context");
    hensel_cmd->add_flag("--tadic", hensel_tadic, "t-adic context");

    // ---- probe ----
    auto* probe_cmd = app.add_subcommand("probe", "root of X^n + X^(n-1) + sum c_i X^i near -1");
    long probe_n = 2, probe_gamma = 1;
    std::string probe_coeffs;
    std::string probe_prime{"5"};
    bool probe_tadic = false;
    probe_cmd->add_option("--n", probe_n, "degree")->required();
    probe_cmd->add_option("--coeffs", probe_coeffs, "c_0,...,c_(n-2)")->required();
    probe_cmd->add_option("--gamma", probe_gamma, "minimal coefficient valuation");
    probe_cmd->add_option("--prime", probe_prime, "p-adic context");
    probe_cmd->add_flag("--tadic", probe_tadic, "t-adic context");

    // ---- implicit ----
    auto* implicit_cmd = app.add_subcommand("implicit", "solve F(x, y) = 0 for y near a base point");
    std::string impl_system, impl_base_x, impl_base_y, impl_x;
    long impl_n = 1, impl_m = 1;
    std::string impl_prime{"5"};
    bool impl_tadic = false;
    implicit_cmd->add_option("--system", impl_system, "polynomials in x1..xn,y1..ym, ';'-separated")
        ->required();
    implicit_cmd->add_option("--nx", impl_n, "number of x-variables");
    implicit_cmd->add_option("--ny", impl_m, "number of y-variables");
    implicit_cmd->add_option("--base-x", impl_base_x, "base point x (comma list)")->required();
    implicit_cmd->add_option("--base-y", impl_base_y, "base point y (comma list)")->required();
    implicit_cmd->add_option("--x", impl_x, "evaluation point (comma list)")->required();
    implicit_cmd->add_option("--prime", impl_prime, "p-adic context");
    implicit_cmd->add_flag("--tadic", impl_tadic, "t-adic context");

    // ---- breadth ----
    auto* breadth_cmd = app.add_subcommand("breadth", "exact breadth of a multi-adic ring");
    std::string breadth_ring;
    long breadth_samples = 10000;
    breadth_cmd->add_option("--ring", breadth_ring, "ring descriptor")->required();
    breadth_cmd->add_option("--samples", breadth_samples, "validation sample count");

    // ---- wn-test ----
    auto* wn_cmd = app.add_subcommand("wn-test", "randomized covering-condition harness");
    std::string wn_ring;
    long wn_n = 1, wn_samples = 1000;
    wn_cmd->add_option("--ring", wn_ring, "ring descriptor")->required();
    wn_cmd->add_option("--n", wn_n, "tuple length minus one")->required();
    wn_cmd->add_option("--samples", wn_samples, "number of tuples");

    // ---- independence ----
    auto* indep_cmd = app.add_subcommand("independence", "decompose 1 across two neighborhoods");
    std::string indep_p{"5"}, indep_q{"7"};
    long indep_mp = 1, indep_mq = 1;
    std::string indep_center_u, indep_center_v;
    indep_cmd->add_option("--p", indep_p, "first prime")->required();
    indep_cmd->add_option("--q", indep_q, "second prime")->required();
    indep_cmd->add_option("--mp", indep_mp, "exponent at p");
    indep_cmd->add_option("--mq", indep_mq, "exponent at q");
    indep_cmd->add_option("--center-u", indep_center_u, "center of U (witness mode)");
    indep_cmd->add_option("--center-v", indep_center_v, "center of V (witness mode)");

    // ---- split ----
    auto* split_cmd = app.add_subcommand("split", "Bezout-split a fraction across two localizations");
    std::string split_p{"2"}, split_q{"3"};
    std::string split_x;
    split_cmd->add_option("--p", split_p, "first prime")->required();
    split_cmd->add_option("--q", split_q, "second prime")->required();
    split_cmd->add_option("--x", split_x, "rational to split")->required();

    // ---- nonhensel-demo ----
    auto* nh_cmd = app.add_subcommand("nonhensel-demo",
                                      "x^2 - x defeats root lifting for a sum topology");
    std::string nh_p{"5"}, nh_q{"7"};
    long nh_m = 1, nh_n = 1;
    nh_cmd->add_option("--p", nh_p, "first prime")->required();
    nh_cmd->add_option("--q", nh_q, "second prime")->required();
    nh_cmd->add_option("--m", nh_m, "exponent at p");
    nh_cmd->add_option("--n", nh_n, "exponent at q");

    // ---- problematic ----
    auto* prob_cmd = app.add_subcommand("problematic",
                                        "two-maximal-ideal ring pipeline with certificates");
    std::string prob_p{"2"}, prob_q{"3"};
    prob_cmd->add_option("--p", prob_p, "first prime")->required();
    prob_cmd->add_option("--q", prob_q, "second prime")->required();

    // ---- rr-space ----
    auto* rr_cmd = app.add_subcommand("rr-space", "basis of H^0(D) on the projective line");
    std::string rr_divisor;
    rr_cmd->add_option("--divisor", rr_divisor, "JSON: [{\"point\":\"0\",\"mult\":2},...]")
        ->required();

    // ---- prescribe ----
    auto* pre_cmd = app.add_subcommand("prescribe",
                                       "function with prescribed simple poles and zero");
    std::string pre_poles, pre_zero;
    pre_cmd->add_option("--poles", pre_poles, "comma list of points (rationals or inf)")
        ->required();
    pre_cmd->add_option("--zero", pre_zero, "the prescribed zero")->required();

    // ---- weak-approx ----
    auto* wa_cmd = app.add_subcommand("weak-approx", "simultaneous p-adic approximation on the line");
    std::string wa_constraints;
    wa_cmd->add_option("--constraints", wa_constraints, "p:target:precision, comma separated")
        ->required();

    // ---- conic ----
    auto* conic_cmd = app.add_subcommand("conic", "sign-pattern witness on b^2 = 1 + c*a");
    std::string conic_c{"2"};
    std::string conic_p{"5"}, conic_q{"7"};
    int conic_sp = 1, conic_sq = 1;
    long conic_mp = 1, conic_mq = 1;
    conic_cmd->add_option("--c", conic_c, "conic parameter")->required();
    conic_cmd->add_option("--p", conic_p, "first odd prime")->required();
    conic_cmd->add_option("--q", conic_q, "second odd prime")->required();
    conic_cmd->add_option("--sign-p", conic_sp, "+1 or -1 at p");
    conic_cmd->add_option("--sign-q", conic_sq, "+1 or -1 at q");
    conic_cmd->add_option("--mp", conic_mp, "precision at p");
    conic_cmd->add_option("--mq", conic_mq, "precision at q");

    // ---- verify-ip ----
    auto* vip_cmd = app.add_subcommand("verify-ip", "check a sign-pattern candidate");
    std::string vip_spec, vip_a, vip_b;
    vip_cmd->add_option("--spec", vip_spec, "PatternSpec JSON")->required();
    vip_cmd->add_option("--a", vip_a, "candidate a")->required();
    vip_cmd->add_option("--b", vip_b, "candidate b_1,...,b_n")->required();

    // ---- compare ----
    auto* cmp_cmd = app.add_subcommand("compare", "finer-or-equal vs independent trichotomy");
    std::string cmp_t0, cmp_t1;
    cmp_cmd->add_option("--t0", cmp_t0, "single-place topology")->required();
    cmp_cmd->add_option("--t1", cmp_t1, "topology descriptor")->required();

    // ---- semilocal ----
    auto* semi_cmd = app.add_subcommand("semilocal", "number of maximal ideals of a descriptor");
    std::string semi_ring;
    semi_cmd->add_option("--ring", semi_ring, "ring descriptor")->required();

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "re-validate a JSON certificate file");
    std::string verify_file;
    verify_cmd->add_option("file", verify_file, "report or certificate JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (hensel_cmd->parsed()) {
            Field f = context_field(hensel_tadic);
            LocalContext ctx = make_context(Int(hensel_prime), hensel_tadic, g.config.precision);
            RootCertificate rc =
                hensel_lift(parse_univariate(hensel_poly, f), parse_ground(hensel_seed, f), ctx);
            Json in;
            in["poly"] = hensel_poly;
            in["at"] = hensel_seed;
            in["context"] = ctx.label();
            emit(root_report("hensel", "hensel.univariate-lift", rc, g, in), g);
        } else if (probe_cmd->parsed()) {
            Field f = context_field(probe_tadic);
            LocalContext ctx = make_context(Int(probe_prime), probe_tadic, g.config.precision);
            std::vector<Ground> cs;
            for (const std::string& part : split_list(probe_coeffs))
                cs.push_back(parse_ground(part, f));
            RootCertificate rc = gt_hensel_probe(probe_n, cs, ctx, probe_gamma);
            Json in;
            in["n"] = probe_n;
            in["coeffs"] = probe_coeffs;
            in["gamma"] = probe_gamma;
            in["context"] = ctx.label();
            emit(root_report("probe", "hensel.monic-probe", rc, g, in), g);
        } else if (implicit_cmd->parsed()) {
            Field f = context_field(impl_tadic);
            LocalContext ctx = make_context(Int(impl_prime), impl_tadic, g.config.precision);
            PolySystem sys = parse_system(impl_system, impl_n, impl_m, f);
            RootCertificate rc = implicit_solve(sys, parse_point_list(impl_base_x, f),
                                                parse_point_list(impl_base_y, f),
                                                parse_point_list(impl_x, f), ctx);
            Json in;
            in["system"] = impl_system;
            in["base_x"] = impl_base_x;
            in["base_y"] = impl_base_y;
            in["x"] = impl_x;
            in["context"] = ctx.label();
            emit(root_report("implicit", "hensel.implicit-function", rc, g, in), g);
        } else if (breadth_cmd->parsed()) {
            RingDescriptor r = parse_ring(breadth_ring);
            BreadthResult res = breadth_multiadic(r, g.config.seed, breadth_samples);
            Json in;
            in["ring"] = breadth_ring;
            in["samples"] = breadth_samples;
            Json outcome;
            outcome["status"] = "computed";
            outcome["breadth"] = res.breadth;
            outcome["samples_held"] = res.samples_held;
            emit(cert_report("breadth", res.certificate, in, outcome, g), g);
        } else if (wn_cmd->parsed()) {
            RingDescriptor r = parse_ring(wn_ring);
            WnReport rep = wn_random_test(r, wn_n, wn_samples, g.config.seed);
            Json in;
            in["ring"] = wn_ring;
            in["n"] = wn_n;
            in["samples"] = wn_samples;
            Json outcome = rep.to_json();
            outcome["status"] = rep.fails == 0 ? "no-failures" : "failures-found";
            Certificate cert;
            cert.claim = "breadth.wn-random";
            cert.witness("ring", r.to_string());
            cert.witness("report", rep.to_json().dump());
            Report report = cert_report("wn-test", cert, in, outcome, g);
            report.claim = "breadth.wn-random";
            emit(report, g);
        } else if (indep_cmd->parsed()) {
            RingDescriptor rp = RingDescriptor::multi_adic_int({Int(indep_p)});
            RingDescriptor rq = RingDescriptor::multi_adic_int({Int(indep_q)});
            Ground cu{Rat(pow_int(Int(indep_p), indep_mp))};
            Ground cv{Rat(pow_int(Int(indep_q), indep_mq))};
            Json in;
            in["p"] = indep_p;
            in["q"] = indep_q;
            in["mp"] = indep_mp;
            in["mq"] = indep_mq;
            if (indep_center_u.empty() && indep_center_v.empty()) {
                OneInSumResult res = one_in_sum(NeighborhoodDescriptor(rp, cu, Ground(0L)),
                                                NeighborhoodDescriptor(rq, cv, Ground(0L)));
                Json outcome;
                outcome["status"] = "decomposed";
                outcome["u"] = res.u.to_string();
                outcome["v"] = res.v.to_string();
                emit(cert_report("independence", res.certificate, in, outcome, g), g);
            } else {
                Ground bu = indep_center_u.empty() ? Ground(0L)
                                                   : parse_ground(indep_center_u, Field::Q);
                Ground bv = indep_center_v.empty() ? Ground(0L)
                                                   : parse_ground(indep_center_v, Field::Q);
                in["center_u"] = bu.to_string();
                in["center_v"] = bv.to_string();
                CommonPointResult res =
                    independence_witness(NeighborhoodDescriptor(rp, cu, bu),
                                         NeighborhoodDescriptor(rq, cv, bv));
                Json outcome;
                outcome["status"] = "common-point";
                outcome["x"] = res.point.to_string();
                emit(cert_report("independence", res.certificate, in, outcome, g), g);
            }
        } else if (split_cmd->parsed()) {
            RingDescriptor a = RingDescriptor::multi_adic_int({Int(split_p), Int(split_q)});
            SplitResult res = split_fraction(a, parse_rational(split_x));
            Json in;
            in["p"] = split_p;
            in["q"] = split_q;
            in["x"] = split_x;
            Json outcome;
            outcome["status"] = "split";
            outcome["part_p"] = res.part_p.to_string();
            outcome["part_q"] = res.part_q.to_string();
            emit(cert_report("split", res.certificate, in, outcome, g), g);
        } else if (nh_cmd->parsed()) {
            NonHenselResult res = non_gt_hensel_certificate(Int(nh_p), Int(nh_q), nh_m, nh_n);
            Json in;
            in["p"] = nh_p;
            in["q"] = nh_q;
            in["m"] = nh_m;
            in["n"] = nh_n;
            Json outcome;
            outcome["status"] = "certified";
            outcome["witness"] = rat_to_string(res.a);
            outcome["f_witness"] = rat_to_string(res.fa);
            emit(cert_report("nonhensel-demo", res.certificate, in, outcome, g), g);
        } else if (prob_cmd->parsed()) {
            ProblematicReport res = problematic_instance(Int(prob_p), Int(prob_q), g.config.seed);
            Json in;
            in["p"] = prob_p;
            in["q"] = prob_q;
            Json outcome;
            outcome["status"] = "verified";
            outcome["ring"] = res.ring.to_string();
            outcome["jacobson_generator"] = res.jacobson.to_string();
            outcome["one_in_sum_u"] = res.independence.u.to_string();
            outcome["one_in_sum_v"] = res.independence.v.to_string();
            Certificate merged = res.certificate;
            for (const Check& c : res.independence.certificate.checks)
                merged.checks.push_back(c);
            emit(cert_report("problematic", merged, in, outcome, g), g);
        } else if (rr_cmd->parsed()) {
            Divisor d = Divisor::from_json(Json::parse(rr_divisor));
            RrBasisResult res = rr_space_p1(d);
            Json in;
            in["divisor"] = d.to_json();
            Json outcome;
            outcome["status"] = "computed";
            outcome["dimension"] = res.basis.size();
            Json basis = Json::array();
            for (const RatFunc& f : res.basis) basis.push_back(f.to_string("x"));
            outcome["basis"] = basis;
            emit(cert_report("rr-space", res.certificate, in, outcome, g), g);
        } else if (pre_cmd->parsed()) {
            std::vector<P1Point> poles;
            for (const std::string& part : split_list(pre_poles))
                poles.push_back(P1Point::parse(part));
            PrescribedResult res = prescribed_function(poles, P1Point::parse(pre_zero));
            Json in;
            in["poles"] = pre_poles;
            in["zero"] = pre_zero;
            Json outcome;
            outcome["status"] = "constructed";
            outcome["function"] = res.function.to_string("x");
            emit(cert_report("prescribe", res.certificate, in, outcome, g), g);
        } else if (wa_cmd->parsed()) {
            std::vector<WeakApproxConstraint> constraints;
            for (const std::string& part : split_list(wa_constraints)) {
                std::vector<std::string> bits = split_list(part, ':');
                if (bits.size() != 3)
                    throw ParseError("constraint must be p:target:precision", 0);
                constraints.push_back(
                    {Int(bits[0]), parse_rational(bits[1]), std::stol(bits[2])});
            }
            WeakApproxResult res = weak_approx_line(constraints);
            Json in;
            in["constraints"] = wa_constraints;
            Json outcome;
            outcome["status"] = "solved";
            outcome["x"] = rat_to_string(res.value);
            emit(cert_report("weak-approx", res.certificate, in, outcome, g), g);
        } else if (conic_cmd->parsed()) {
            ConicWitnessResult res =
                conic_sign_witness(parse_rational(conic_c), Int(conic_p), Int(conic_q), conic_sp,
                                   conic_sq, conic_mp, conic_mq);
            Json in;
            in["c"] = conic_c;
            in["p"] = conic_p;
            in["q"] = conic_q;
            in["sign_p"] = conic_sp;
            in["sign_q"] = conic_sq;
            in["mp"] = conic_mp;
            in["mq"] = conic_mq;
            Json outcome;
            outcome["status"] = "constructed";
            outcome["a"] = rat_to_string(res.a);
            outcome["b"] = rat_to_string(res.b);
            emit(cert_report("conic", res.certificate, in, outcome, g), g);
        } else if (vip_cmd->parsed()) {
            PatternSpec spec = PatternSpec::from_json(Json::parse(vip_spec));
            std::vector<Rat> bs;
            for (const std::string& part : split_list(vip_b))
                bs.push_back(parse_rational(part));
            PatternVerifyResult res = ip_pattern_verify(spec, parse_rational(vip_a), bs);
            Json in;
            in["spec"] = spec.to_json();
            in["a"] = vip_a;
            in["b"] = vip_b;
            Json outcome;
            outcome["status"] = res.ok ? "pattern-realized" : "pattern-violated";
            outcome["verdict"] = res.ok;
            emit(cert_report("verify-ip", res.certificate, in, outcome, g), g);
        } else if (cmp_cmd->parsed()) {
            CompareResult res = compare(parse_topology(cmp_t0), parse_topology(cmp_t1));
            Json in;
            in["t0"] = cmp_t0;
            in["t1"] = cmp_t1;
            Json outcome;
            outcome["status"] = "decided";
            outcome["relation"] = res.outcome == CompareOutcome::FinerOrEqual
                                      ? "finer-or-equal"
                                      : "independent";
            emit(cert_report("compare", res.certificate, in, outcome, g), g);
        } else if (semi_cmd->parsed()) {
            RingDescriptor r = parse_ring(semi_ring);
            SemilocalResult res = semilocal_degree(r, g.config.seed);
            Json in;
            in["ring"] = semi_ring;
            Json outcome;
            outcome["status"] = "computed";
            outcome["degree"] = res.degree;
            emit(cert_report("semilocal", res.certificate, in, outcome, g), g);
        } else if (verify_cmd->parsed()) {
            std::ifstream f(verify_file);
            if (!f) {
                std::cerr << "cannot open " << verify_file << "\n";
                return 2;
            }
            Json doc = Json::parse(f);
            return verify_report_json(doc, std::cout);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const UnboundedError& e) {
        std::cerr << "unbounded: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const SingularError& e) {
        std::cerr << "singular: " << e.what() << "\n";
        return 2;
    } catch (const NoConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
