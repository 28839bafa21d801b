#include <doctest.h>

#include "adictop/local.hpp"
#include "adictop/parser.hpp"
#include "adictop/rng.hpp"
#include "adictop/valuation.hpp"

using namespace adictop;

namespace {

Rat random_rational(Rng& rng) {
    Int num = rng.range(-400, 400);
    Int den = rng.range(1, 60);
    return Rat(num, den);
}

RatFunc random_ratfunc(Rng& rng) {
    std::vector<Rat> nc, dc;
    for (int i = 0; i <= rng.range(0, 3); ++i) nc.emplace_back(rng.range(-5, 5));
    for (int i = 0; i <= rng.range(0, 2); ++i) dc.emplace_back(rng.range(-5, 5));
    Poly num(nc), den(dc);
    if (den.is_zero()) den = Poly(Rat(1));
    return RatFunc(num, den);
}

}  // namespace

TEST_CASE("rationals are canonical") {
    Rat x(3, 6);
    CHECK(rat_num(x) == 1);
    CHECK(rat_den(x) == 2);
    Rat y = Rat(-3) / Rat(-6);
    CHECK(rat_num(y) == 1);
    CHECK(rat_den(y) == 2);
    Rat z = Rat(3) / Rat(-6);
    CHECK(rat_num(z) == -1);
    CHECK(rat_den(z) == 2);  // denominator stays positive
    CHECK(rat_to_string(z) == "-1/2");
}

TEST_CASE("valuation examples") {
    CHECK(val_p(Rat(50), Int(5)) == ValOrInf::of(2));
    CHECK(val_p(Rat(0), Int(5)).is_infinite());
    // t^2/(1-t): numerator order minus denominator order
    RatFunc f(Poly::variable().pow(2), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
    CHECK(val(Ground(f), ValuationSpec::t_adic()) == ValOrInf::of(2));
    // mismatched ground field
    CHECK_THROWS_AS(val(Ground(RatFunc::variable()), ValuationSpec::p_adic(Int(5))),
                    FieldMismatchError);
    CHECK_THROWS_AS(ValuationSpec::p_adic(Int(6)), DomainError);
}

TEST_CASE("valuation of 0 is a real infinity token") {
    ValOrInf inf = val(Ground(0L), ValuationSpec::p_adic(Int(5)));
    CHECK(inf.is_infinite());
    CHECK(inf > ValOrInf::of(1000000));
    CHECK(ValOrInf::min(inf, ValOrInf::of(3)) == ValOrInf::of(3));
    CHECK_THROWS_AS(inf.finite(), DomainError);
}

TEST_CASE("ultrametric inequality on random pairs") {
    ValuationSpec v5 = ValuationSpec::p_adic(Int(5));
    Rng rng(11);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        Rat x = random_rational(rng);
        Rat y = random_rational(rng);
        ValOrInf vx = val(Ground(x), v5);
        ValOrInf vy = val(Ground(y), v5);
        ValOrInf vsum = val(Ground(Rat(x + y)), v5);
        CHECK(vsum >= ValOrInf::min(vx, vy));
        if (vx != vy) CHECK(vsum == ValOrInf::min(vx, vy));
        if (x != 0 && y != 0) CHECK(val(Ground(Rat(x * y)), v5) == vx + vy);
        ++checked;
    }
    CHECK(checked == 10000);
}

TEST_CASE("derivation examples") {
    DerivationSpec d{RatFunc(Poly(Rat(1)), Poly::variable())};  // t -> 1/t
    RatFunc t = RatFunc::variable();
    CHECK(derive(t * t, d) == RatFunc(Rat(2)));
    CHECK(derive(RatFunc(Rat(7)), d).is_zero());
    CHECK(derive(RatFunc(Rat(1)) + t, d) == RatFunc(Poly(Rat(1)), Poly::variable()));
}

TEST_CASE("Leibniz rule holds exactly on random pairs") {
    DerivationSpec d{RatFunc(Poly(Rat(1)), Poly::variable())};
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        RatFunc f = random_ratfunc(rng);
        RatFunc g = random_ratfunc(rng);
        CHECK(derive(f * g, d) == derive(f, d) * g + f * derive(g, d));
    }
}

TEST_CASE("crt_solve examples against exhaustive search") {
    auto exhaustive = [](const std::vector<Congruence>& cs, const Int& bound) {
        for (Int x = 0; x < bound; ++x) {
            bool ok = true;
            for (const Congruence& c : cs)
                if (mod_floor(x - c.residue, c.modulus) != 0) ok = false;
            if (ok) return x;
        }
        return Int(-1);
    };
    std::vector<Congruence> a{{Int(25), Int(1)}, {Int(7), Int(0)}};
    CHECK(crt_solve(a) == exhaustive(a, Int(175)));
    CHECK(crt_solve(a) == 126);
    CHECK(crt_solve({{Int(5), Int(0)}}) == 0);
    std::vector<Congruence> b{{Int(5), Int(1)}, {Int(7), Int(0)}};
    CHECK(crt_solve(b) == exhaustive(b, Int(35)));
    CHECK(crt_solve(b) == 21);
    CHECK(crt_solve({{Int(4), Int(2)}, {Int(6), Int(2)}}) == 2);
    CHECK_THROWS_AS(crt_solve({{Int(4), Int(1)}, {Int(6), Int(2)}}), InfeasibleError);
}

TEST_CASE("bezout identities") {
    BezoutTriple t = bezout(Int(3), Int(2));
    CHECK(t.g == 1);
    CHECK(Int(3) * t.x + Int(2) * t.y == 1);
    t = bezout(Int(5), Int(0));
    CHECK(t.g == 5);
    CHECK(t.x == 1);
    CHECK(t.y == 0);
    t = bezout(Int(25), Int(49));
    CHECK(t.g == 1);
    CHECK(Int(25) * t.x + Int(49) * t.y == 1);
    CHECK_THROWS_AS(bezout(Int(0), Int(0)), DomainError);
}

TEST_CASE("local_expand examples") {
    // 1/7 mod 25: exhaustive inverse oracle
    Int inv7 = 0;
    for (Int k = 0; k < 25; ++k)
        if (Int(7) * k % 25 == 1) inv7 = k;
    CHECK(inv7 == 18);
    LocalContext c5(ValuationSpec::p_adic(Int(5)), 2);
    LocalExpansion e = local_expand(Ground(Rat(1, 7)), c5);
    CHECK(e.representative() == Ground(Rat(18)));

    LocalExpansion z = local_expand(Ground(0L), c5);
    CHECK(z.is_zero_mod_precision());
    CHECK(z.digit_strings().empty());

    // geometric series oracle: sum_(i<3) t^i
    LocalContext ct(ValuationSpec::t_adic(), 3);
    RatFunc geom(Poly(Rat(1)), Poly(std::vector<Rat>{Rat(1), Rat(-1)}));
    LocalExpansion g = local_expand(Ground(geom), ct);
    Poly expected(std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    CHECK(g.representative() == Ground(RatFunc(expected, Poly(Rat(1)))));

    // negative valuation needs Laurent mode
    CHECK_THROWS_AS(local_expand(Ground(Rat(1, 5)), c5), PrecisionError);
    LocalExpansion l = local_expand(Ground(Rat(1, 5)), c5, true);
    CHECK(l.lo() == -1);
    CHECK(l.representative() == Ground(Rat(1, 5)));
    CHECK_THROWS_AS(local_expand(Ground(Rat(1, 10)), c5), PrecisionError);
}

TEST_CASE("round-trip: expansion agrees with the rational modulo p^N") {
    LocalContext c5(ValuationSpec::p_adic(Int(5)), 4);
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        Rat x = random_rational(rng);
        if (val_p(x, Int(5)) < ValOrInf::of(0)) continue;
        if (rat_den(x) % 5 == 0) continue;
        LocalExpansion e = local_expand(Ground(x), c5);
        CHECK(rat_mod_pn(e.representative().as_rational(), Int(5), 4) ==
              rat_mod_pn(x, Int(5), 4));
    }
}

TEST_CASE("expansion arithmetic commutes with local_expand at stated precision") {
    LocalContext c5(ValuationSpec::p_adic(Int(5)), 4);
    ValuationSpec v5 = ValuationSpec::p_adic(Int(5));
    Rng rng(37);
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rational(rng);
        Rat y = random_rational(rng);
        if (rat_den(x) % 5 == 0 || rat_den(y) % 5 == 0) continue;
        if (val_p(x, Int(5)) < ValOrInf::of(0) || val_p(y, Int(5)) < ValOrInf::of(0)) continue;
        LocalExpansion ex = local_expand(Ground(x), c5);
        LocalExpansion ey = local_expand(Ground(y), c5);

        LocalExpansion sum = ex.add(ey);
        CHECK(val(sum.representative() - Ground(Rat(x + y)), v5).at_least(sum.precision()));

        LocalExpansion prod = ex.mul(ey);
        CHECK(val(prod.representative() - Ground(Rat(x * y)), v5).at_least(prod.precision()));

        if (x != 0 && val_p(x, Int(5)) == ValOrInf::of(0)) {
            LocalExpansion inv = ex.invert();
            CHECK(inv.precision() == ex.precision());  // unit inversion keeps N
            CHECK(val(inv.representative() - Ground(Rat(1) / Rat(x)), v5)
                      .at_least(inv.precision()));
        }
    }
}

TEST_CASE("non-unit inversion lowers precision honestly") {
    LocalContext c5(ValuationSpec::p_adic(Int(5)), 4);
    LocalExpansion e = local_expand(Ground(Rat(25)), c5);
    CHECK(e.invert().precision() == 0);  // N - 2*val = 4 - 4
    LocalExpansion e2 = local_expand(Ground(Rat(5)), c5);
    CHECK(e2.invert().precision() == 2);
}

TEST_CASE("element parser round trips") {
    CHECK(parse_rational("3/2") == Rat(3, 2));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("2^10") == Rat(1024));
    RatFunc f = parse_ratfunc("(t^2 - 1)/(t + 2)");
    CHECK(f == RatFunc(Poly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}),
                       Poly(std::vector<Rat>{Rat(2), Rat(1)})));
    // juxtaposition, as printed forms use
    RatFunc g = parse_ratfunc("(x - 2)/(x(x - 1))", "x");
    CHECK(g.den() == Poly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        RatFunc h = random_ratfunc(rng);
        CHECK(parse_ratfunc(h.to_string()) == h);
    }
    CHECK_THROWS_AS(parse_rational("3 +"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
