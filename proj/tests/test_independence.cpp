#include <doctest.h>

#include "adictop/independence.hpp"
#include "adictop/parser.hpp"
#include "adictop/verify.hpp"

using namespace adictop;

namespace {

Ground q(const std::string& s) { return Ground(parse_rational(s)); }

RingDescriptor zloc(std::initializer_list<long> primes) {
    std::vector<Int> ps;
    for (long p : primes) ps.emplace_back(p);
    return RingDescriptor::multi_adic_int(ps);
}

NeighborhoodDescriptor ball(long p, long exp, const std::string& center = "0") {
    return NeighborhoodDescriptor(zloc({p}), Ground(pow_rat(Rat(p), exp)), q(center));
}

void check_cert(const Certificate& cert) {
    VerifyOutcome out = verify_certificate(cert);
    CHECK(out.ok);
    CHECK(cert.all_hold());
}

}  // namespace

TEST_CASE("one_in_sum examples") {
    OneInSumResult a = one_in_sum(ball(5, 2), ball(7, 1));
    CHECK(a.u == q("50"));
    CHECK(a.v == q("-49"));
    check_cert(a.certificate);

    OneInSumResult b = one_in_sum(ball(5, 1), ball(7, 1));
    CHECK(b.u == q("15"));
    CHECK(b.v == q("-14"));
    check_cert(b.certificate);

    // trivial scales: any exact decomposition with the memberships is valid
    OneInSumResult c = one_in_sum(ball(5, 0), ball(7, 0));
    CHECK(c.u + c.v == Ground(1L));
    CHECK(in_neighborhood(ball(5, 0), c.u));
    CHECK(in_neighborhood(ball(7, 0), c.v));
    check_cert(c.certificate);

    CHECK_THROWS_AS(one_in_sum(ball(5, 1), ball(5, 2)), PreconditionError);
    CHECK_THROWS_AS(one_in_sum(ball(5, 1, "1"), ball(7, 1)), PreconditionError);
}

TEST_CASE("one_in_sum handles scales with negative valuation") {
    NeighborhoodDescriptor u(zloc({5}), q("1/5"), q("0"));
    OneInSumResult r = one_in_sum(u, ball(7, 2));
    CHECK(r.u + r.v == Ground(1L));
    CHECK(in_neighborhood(u, r.u));
    check_cert(r.certificate);
}

TEST_CASE("independence_witness examples") {
    CommonPointResult a = independence_witness(ball(5, 1, "1"), ball(7, 1));
    CHECK(a.point == q("21"));
    check_cert(a.certificate);

    // identical descriptors: the center works
    CommonPointResult same = independence_witness(ball(5, 2, "3"), ball(5, 2, "3"));
    CHECK(same.point == q("3"));

    // rational centers: cleared denominators
    CommonPointResult c =
        independence_witness(ball(5, 2, "1/2"), ball(7, 1, "3"));
    CHECK(in_neighborhood(ball(5, 2, "1/2"), c.point));
    CHECK(in_neighborhood(ball(7, 1, "3"), c.point));
    check_cert(c.certificate);
}

TEST_CASE("one_in_sum decompositions give common points after recentering") {
    // x := u is a point of (0 + U) and of (1 - V)
    for (long p : {3L, 5L, 11L}) {
        for (long qq : {7L, 13L}) {
            OneInSumResult r = one_in_sum(ball(p, 2), ball(qq, 2));
            CHECK(in_neighborhood(ball(p, 2), r.u));
            CHECK(in_neighborhood(ball(qq, 2), Ground(1L) - r.u));
        }
    }
}

TEST_CASE("split_fraction examples") {
    SplitResult a = split_fraction(zloc({2, 3}), parse_rational("1/6"));
    CHECK(a.part_p == q("-1/3"));  // integral at 2
    CHECK(a.part_q == q("1/2"));   // integral at 3
    CHECK(a.part_p + a.part_q == q("1/6"));
    check_cert(a.certificate);

    SplitResult b = split_fraction(zloc({2, 3}), parse_rational("5"));
    CHECK(b.part_p + b.part_q == q("5"));
    CHECK(b.part_q.is_zero());  // integer: no p-pole to move
    check_cert(b.certificate);

    SplitResult c = split_fraction(zloc({5, 7}), parse_rational("1/35"));
    CHECK(c.part_p == q("3/7"));
    CHECK(c.part_q == q("-2/5"));
    CHECK(c.part_p + c.part_q == q("1/35"));
    check_cert(c.certificate);

    CHECK_THROWS_AS(split_fraction(zloc({5}), parse_rational("1/5")), PreconditionError);
}

TEST_CASE("split_fraction on random inputs keeps the memberships") {
    Rng rng(5);
    RingDescriptor a23 = zloc({2, 3});
    for (int i = 0; i < 200; ++i) {
        Rat x(rng.range(-500, 500), rng.range(1, 400));
        SplitResult s = split_fraction(a23, x);
        CHECK(s.part_p + s.part_q == Ground(x));
        CHECK(val_p(s.part_p.as_rational(), Int(2)).at_least(0));
        CHECK(val_p(s.part_q.as_rational(), Int(3)).at_least(0));
    }
}

TEST_CASE("sum topology membership is componentwise") {
    NeighborhoodDescriptor u1(zloc({5}), q("5"), q("1"));
    NeighborhoodDescriptor u2(zloc({7}), q("7"), q("6"));
    CHECK(in_basic_sum_neighborhood(u1, u2, q("6")));
    CHECK_FALSE(in_basic_sum_neighborhood(u1, u2, q("7")));

    // sum(tau, tau) behaves as tau on membership queries
    Rng rng(8);
    RingDescriptor z5 = zloc({5});
    for (int i = 0; i < 100; ++i) {
        Ground x = sample_field_element(Field::Q, z5.support(), rng);
        NeighborhoodDescriptor n(z5, q("25"), q("0"));
        CHECK(in_basic_sum_neighborhood(n, n, x) == in_neighborhood(n, x));
    }

    TopologyDescriptor s = sum_topology(TopologyDescriptor::r_adic(zloc({5})),
                                        TopologyDescriptor::r_adic(zloc({7})));
    CHECK(bounded_ring(s).ring == zloc({5, 7}));
}

TEST_CASE("non-gt-henselianity certificates") {
    NonHenselResult a = non_gt_hensel_certificate(Int(5), Int(7), 1, 1);
    CHECK(a.a == Rat(21));
    CHECK(a.fa == Rat(420));
    CHECK(val_p(a.fa, Int(5)) == ValOrInf::of(1));
    CHECK(val_p(a.fa, Int(7)) == ValOrInf::of(1));
    check_cert(a.certificate);

    NonHenselResult b = non_gt_hensel_certificate(Int(5), Int(7), 2, 1);
    CHECK(b.a == Rat(126));
    check_cert(b.certificate);

    NonHenselResult c = non_gt_hensel_certificate(Int(3), Int(5), 1, 1);
    CHECK(c.a == Rat(10));
    check_cert(c.certificate);

    CHECK_THROWS_AS(non_gt_hensel_certificate(Int(5), Int(5), 1, 1), DomainError);
    CHECK_THROWS_AS(non_gt_hensel_certificate(Int(5), Int(7), 0, 1), DomainError);
}

TEST_CASE("non-gt-hensel facts re-verify by hand") {
    NonHenselResult r = non_gt_hensel_certificate(Int(5), Int(7), 1, 1);
    // f(a) = f(1-a) exactly
    Rat a = r.a;
    CHECK(a * a - a == (1 - a) * (1 - a) - (1 - a));
    // a in (1 - U'_1) cap U'_2
    CHECK(val_p(1 - a, Int(5)).at_least(1));
    CHECK(val_p(a, Int(7)).at_least(1));
    // both preimages excluded from U_1 cap U_2
    CHECK_FALSE(val_p(a, Int(5)).at_least(1));
    CHECK_FALSE(val_p(1 - a, Int(7)).at_least(1));
}

TEST_CASE("problematic instance pipeline") {
    ProblematicReport r = problematic_instance(Int(2), Int(3), 11);
    CHECK(r.ring == zloc({2, 3}));
    CHECK(r.jacobson == q("6"));
    CHECK(r.independence.u + r.independence.v == Ground(1L));
    check_cert(r.certificate);
    check_cert(r.independence.certificate);

    // the spec's sample factorization: 12 = s*t with s = 3, t = 4
    Rat x(12);
    long alpha = val_p(x, Int(2)).finite();
    Rat t = pow_rat(Rat(2), alpha);
    Rat s = x / t;
    CHECK(s == 3);
    CHECK(t == 4);
    CHECK(val_p(s, Int(2)) == ValOrInf::of(0));
    CHECK(val_p(t, Int(3)) == ValOrInf::of(0));

    ProblematicReport r57 = problematic_instance(Int(5), Int(7), 11);
    CHECK(r57.independence.u == q("50"));
    CHECK(r57.independence.v == q("-49"));
    CHECK_THROWS_AS(problematic_instance(Int(5), Int(5), 1), DomainError);
}

TEST_CASE("weak approximation never fails for prime pairs up to 50") {
    std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j) {
            OneInSumResult r = one_in_sum(ball(primes[i], 3), ball(primes[j], 2));
            CHECK(r.u + r.v == Ground(1L));
        }
}
