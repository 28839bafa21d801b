#include <doctest.h>

#include "adictop/hensel.hpp"
#include "adictop/parser.hpp"
#include "adictop/verify.hpp"

using namespace adictop;

namespace {

Ground q(const std::string& s) { return Ground(parse_rational(s)); }

std::vector<Ground> poly_q(const std::string& text) {
    return parse_univariate(text, Field::Q);
}

std::vector<Ground> poly_qt(const std::string& text) {
    return parse_univariate(text, Field::Qt);
}

// Exhaustive root search modulo p^N, restricted to a congruence class mod
// p^k.  Independent of the Newton path: plain evaluation over residues.
std::vector<Int> roots_mod(const std::vector<Ground>& poly, const Int& p, long n,
                           const Int& seed_class, long k) {
    Int modulus = pow_int(p, n);
    Int cls = pow_int(p, k);
    std::vector<Int> out;
    for (Int x = 0; x < modulus; ++x) {
        if (mod_floor(x - seed_class, cls) != 0) continue;
        Rat acc = 0;
        for (size_t i = poly.size(); i-- > 0;) acc = acc * Rat(x) + poly[i].as_rational();
        Int num = rat_num(acc);
        Int den = rat_den(acc);
        // poly coefficients here are p-integral rationals
        if (mod_floor(num * mod_inverse(den, modulus), modulus) == 0) out.push_back(x);
    }
    return out;
}

Int rep_mod(const RootCertificate& rc, const Int& p, long n) {
    return rat_mod_pn(rc.root().representative().as_rational(), p, n);
}

void check_cert(const Certificate& cert) {
    VerifyOutcome out = verify_certificate(cert);
    CHECK(out.ok);
    CHECK(cert.all_hold());
}

}  // namespace

TEST_CASE("hensel_lift: sqrt(6) at 5, N=2") {
    LocalContext ctx(ValuationSpec::p_adic(Int(5)), 2);
    RootCertificate rc = hensel_lift(poly_q("X^2 - 6"), q("1"), ctx);
    std::vector<Int> oracle = roots_mod(poly_q("X^2 - 6"), Int(5), 2, Int(1), 1);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0] == 16);
    CHECK(rep_mod(rc, Int(5), 2) == 16);
    CHECK(rc.residual.at_least(2));
    CHECK(rc.derivative_valuation == 0);
    check_cert(rc.certificate);
}

TEST_CASE("hensel_lift: linear polynomial is exact") {
    LocalContext ctx(ValuationSpec::p_adic(Int(7)), 3);
    RootCertificate rc = hensel_lift(poly_q("X - 11"), q("11"), ctx);
    CHECK(rc.root().representative() == q("11"));
    CHECK(rc.residual.is_infinite());
    CHECK(rc.iterations == 0);
}

TEST_CASE("hensel_lift: binomial series over Q[[t]]") {
    // Independent oracle: solve (sum c_i t^i)^2 = 1 + t coefficientwise.
    std::vector<Rat> c{Rat(1)};
    for (int k = 1; k < 3; ++k) {
        // coefficient of t^k in square: sum_{i+j=k} c_i c_j = [k == 1]
        Rat acc = 0;
        for (int i = 1; i < k; ++i) acc += c[static_cast<size_t>(i)] * c[static_cast<size_t>(k - i)];
        Rat target = k == 1 ? Rat(1) : Rat(0);
        c.push_back((target - acc) / (Rat(2) * c[0]));
    }
    CHECK(c == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(-1, 8)});

    LocalContext ctx(ValuationSpec::t_adic(), 3);
    RootCertificate rc = hensel_lift(poly_qt("X^2 - (1 + t)"), Ground(RatFunc(Rat(1))), ctx);
    CHECK(rc.root().representative() == Ground(RatFunc(Poly(c), Poly(Rat(1)))));
    check_cert(rc.certificate);
}

TEST_CASE("hensel_lift error paths") {
    LocalContext ctx(ValuationSpec::p_adic(Int(5)), 2);
    // val f(a0) = 0 is not above 2 val f'(a0)
    CHECK_THROWS_AS(hensel_lift(poly_q("X^2 - 7"), q("1"), ctx), NoConvergenceError);
    // derivative vanishes identically at the seed
    CHECK_THROWS_AS(hensel_lift(poly_q("X^2"), q("0"), ctx), SingularError);
    // non-integral seed
    CHECK_THROWS_AS(hensel_lift(poly_q("X^2 - 6"), q("1/5"), ctx), PrecisionError);
}

TEST_CASE("hensel_lift handles positive derivative valuation") {
    // f = X^2 - 150 at seed 5: val f(5) = val(-125) = 3 > 2 = 2*val f'(5)
    LocalContext ctx(ValuationSpec::p_adic(Int(5)), 4);
    RootCertificate rc = hensel_lift(poly_q("X^2 - 150"), q("5"), ctx);
    CHECK(rc.derivative_valuation == 1);
    CHECK(rc.residual.at_least(4));
    // refines the seed modulo p^(e+1) = 25
    CHECK(val(rc.root().representative() - q("5"), ctx.place).at_least(2));
    check_cert(rc.certificate);
    // the strict margin is required: val f(5) = 2 for X^2 - 50 is rejected
    CHECK_THROWS_AS(hensel_lift(poly_q("X^2 - 50"), q("5"), ctx), NoConvergenceError);
}

TEST_CASE("gt_hensel_probe examples") {
    LocalContext ctx(ValuationSpec::p_adic(Int(5)), 2);
    RootCertificate rc = gt_hensel_probe(2, {q("5")}, ctx, 1);
    std::vector<Int> oracle = roots_mod(poly_q("X^2 + X + 5"), Int(5), 2, Int(4), 1);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0] == 4);
    CHECK(rep_mod(rc, Int(5), 2) == 4);
    check_cert(rc.certificate);

    // X^3 + X^2 vanishes at -1 exactly
    RootCertificate cube = gt_hensel_probe(3, {q("0"), q("0")}, ctx, 1);
    CHECK(val(cube.root().representative() - q("-1"), ctx.place).at_least(2));
    CHECK(cube.residual.at_least(2));

    // t-adic: root of X^2 + X + t near -1; substitution forces -1 + t
    LocalContext tctx(ValuationSpec::t_adic(), 2);
    RootCertificate troot = gt_hensel_probe(2, {Ground(RatFunc::variable())}, tctx, 1);
    RatFunc expected = parse_ratfunc("-1 + t");
    CHECK(troot.root().representative() == Ground(expected));
    // oracle: f(-1 + t) = t^2 vanishes mod t^2, and no series with the same
    // constant digit differs below t^2
    RatFunc f_at = expected * expected + expected + RatFunc::variable();
    CHECK(f_at.order_at_zero() >= 2);
    check_cert(troot.certificate);

    CHECK_THROWS_AS(gt_hensel_probe(2, {q("1")}, ctx, 1), PreconditionError);
    CHECK_THROWS_AS(gt_hensel_probe(1, {}, ctx, 1), DomainError);
}

TEST_CASE("probe monotonicity: larger N refines the same root") {
    for (long n : {1L, 2L, 3L, 4L}) {
        LocalContext lo(ValuationSpec::p_adic(Int(7)), n);
        LocalContext hi(ValuationSpec::p_adic(Int(7)), n + 2);
        RootCertificate a = gt_hensel_probe(3, {q("7"), q("14")}, lo, 1);
        RootCertificate b = gt_hensel_probe(3, {q("7"), q("14")}, hi, 1);
        CHECK(val(a.root().representative() - b.root().representative(),
                  ValuationSpec::p_adic(Int(7)))
                  .at_least(n));
    }
}

TEST_CASE("agreement with exhaustive search across p and N") {
    for (Int p : {Int(3), Int(5), Int(7)}) {
        for (long n = 1; n <= 4; ++n) {
            LocalContext ctx(ValuationSpec::p_adic(p), n);
            // probes with assorted coefficients of valuation >= 1
            std::vector<std::vector<Ground>> coeff_sets = {
                {Ground(Rat(p))},
                {Ground(Rat(p * 2)), Ground(Rat(p * p))},
                {Ground(Rat(-p)), Ground(Rat(0)), Ground(Rat(3 * p))}};
            for (const auto& cs : coeff_sets) {
                long deg = static_cast<long>(cs.size()) + 1;
                RootCertificate rc = gt_hensel_probe(deg, cs, ctx, 1);
                std::vector<Ground> poly(static_cast<size_t>(deg) + 1, Ground(0L));
                for (size_t i = 0; i < cs.size(); ++i) poly[i] = cs[i];
                poly[static_cast<size_t>(deg - 1)] = Ground(1L);
                poly[static_cast<size_t>(deg)] = Ground(1L);
                std::vector<Int> oracle = roots_mod(poly, p, n, p - 1, 1);
                REQUIRE(oracle.size() == 1);
                CHECK(rep_mod(rc, p, n) == oracle[0]);
            }
        }
    }
}

TEST_CASE("newton_inverse examples") {
    LocalContext ctx(ValuationSpec::p_adic(Int(5)), 2);
    // F(y) = y^2, invert at target 6 from seed 1
    PolySystem square;
    square.n = 0;
    square.m = 1;
    square.polys = {parse_multipoly("y1^2", {"y1"}, Field::Q)};
    RootCertificate rc = newton_inverse(square, {q("1")}, {q("6")}, ctx);
    CHECK(rep_mod(rc, Int(5), 2) == 16);
    check_cert(rc.certificate);

    // identity map returns the target exactly
    PolySystem ident;
    ident.n = 0;
    ident.m = 1;
    ident.polys = {parse_multipoly("y1", {"y1"}, Field::Q)};
    RootCertificate id = newton_inverse(ident, {q("3")}, {q("3")}, ctx);
    CHECK(id.root().representative() == q("3"));

    // 2x2: (y1 + y2, y1*y2) = (8, 2) near (1, 2)
    PolySystem sym;
    sym.n = 0;
    sym.m = 2;
    sym.polys = {parse_multipoly("y1 + y2", {"y1", "y2"}, Field::Q),
                 parse_multipoly("y1*y2", {"y1", "y2"}, Field::Q)};
    RootCertificate pair = newton_inverse(sym, {q("1"), q("2")}, {q("8"), q("2")}, ctx);
    Int r1 = rat_mod_pn(pair.roots[0].representative().as_rational(), Int(5), 2);
    Int r2 = rat_mod_pn(pair.roots[1].representative().as_rational(), Int(5), 2);
    // brute-force oracle over the seed's congruence class mod 5
    std::vector<std::pair<Int, Int>> found;
    for (Int a = 1; a < 25; a += 5)
        for (Int b = 2; b < 25; b += 5)
            if ((a + b) % 25 == 8 && (a * b) % 25 == 2) found.emplace_back(a, b);
    REQUIRE(found.size() == 1);
    CHECK(found[0].first == r1);
    CHECK(found[0].second == r2);
    check_cert(pair.certificate);

    // singular Jacobian
    PolySystem bad;
    bad.n = 0;
    bad.m = 1;
    bad.polys = {parse_multipoly("y1^2", {"y1"}, Field::Q)};
    CHECK_THROWS_AS(newton_inverse(bad, {q("5")}, {q("25")}, ctx), SingularError);
}

TEST_CASE("implicit_solve examples") {
    LocalContext ctx(ValuationSpec::p_adic(Int(5)), 2);
    PolySystem f;
    f.n = 1;
    f.m = 1;
    f.polys = {parse_multipoly("y1^2 - x1", {"x1", "y1"}, Field::Q)};
    RootCertificate rc = implicit_solve(f, {q("4")}, {q("2")}, {q("9")}, ctx);
    // oracle: unique y mod 25 with y^2 = 9 mod 25 and y = 2 mod 5
    std::vector<Int> matches;
    for (Int y = 2; y < 25; y += 5)
        if (y * y % 25 == 9 % 25) matches.push_back(y);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0] == 22);  // -3: the exact root in the seed's class
    CHECK(rep_mod(rc, Int(5), 2) == 22);
    check_cert(rc.certificate);

    // y - x: g(x) = x
    PolySystem lin;
    lin.n = 1;
    lin.m = 1;
    lin.polys = {parse_multipoly("y1 - x1", {"x1", "y1"}, Field::Q)};
    RootCertificate l = implicit_solve(lin, {q("0")}, {q("0")}, {q("35")}, ctx);
    bool matches_target = val(l.root().representative() - q("35"), ctx.place).at_least(2);
    CHECK(matches_target);

    // t-adic binomial branch through (0, 1)
    LocalContext tctx(ValuationSpec::t_adic(), 3);
    PolySystem g;
    g.n = 1;
    g.m = 1;
    g.polys = {parse_multipoly("y1^2 - (1 + x1)", {"x1", "y1"}, Field::Qt)};
    RootCertificate t = implicit_solve(g, {Ground(RatFunc(Rat(0)))}, {Ground(RatFunc(Rat(1)))},
                                       {Ground(RatFunc::variable())}, tctx);
    CHECK(t.root().representative() == Ground(parse_ratfunc("1 + 1/2*t - 1/8*t^2")));
    check_cert(t.certificate);

    // x outside the convergence neighborhood
    CHECK_THROWS_AS(implicit_solve(f, {q("4")}, {q("2")}, {q("3")}, ctx),
                    NoConvergenceError);
    // singular y-Jacobian at the base
    PolySystem s;
    s.n = 1;
    s.m = 1;
    s.polys = {parse_multipoly("y1^2 - x1", {"x1", "y1"}, Field::Q)};
    CHECK_THROWS_AS(implicit_solve(s, {q("0")}, {q("0")}, {q("5")}, ctx), SingularError);
}

TEST_CASE("seed congruence and iteration bound invariants") {
    for (Int p : {Int(3), Int(5), Int(7)}) {
        for (long n = 1; n <= 4; ++n) {
            LocalContext ctx(ValuationSpec::p_adic(p), n);
            RootCertificate rc = gt_hensel_probe(2, {Ground(Rat(p))}, ctx, 1);
            CHECK(val(rc.root().representative() - q("-1"), ctx.place).at_least(1));
            long cap = 1;
            long t = 1;
            while (t < n) {
                t *= 2;
                ++cap;
            }
            CHECK(rc.iterations <= cap);
            CHECK(rc.residual.at_least(n));
        }
    }
}
