#include "adictop/independence.hpp"

#include "adictop/verify.hpp"

namespace adictop {

namespace {

void push_check(Certificate& cert, Check c) {
    if (!c.holds)
        throw Error("certificate self-check failed: " + c.op +
                    (c.note.empty() ? "" : " (" + c.note + ")"));
    cert.checks.push_back(std::move(c));
}

void require_disjoint_multiadic(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.kind() == RingDescriptor::Kind::Differential ||
        b.kind() == RingDescriptor::Kind::Differential)
        throw PreconditionError("operation needs multi-adic rings");
    if (a.field() != b.field())
        throw FieldMismatchError("rings on different ground fields");
    for (const ValuationSpec& v : a.support())
        for (const ValuationSpec& w : b.support())
            if (v == w)
                throw PreconditionError("supports overlap at " + v.label() +
                                        "; the topologies are not independent");
}

// Constraints of the form val_place(x - target) >= bound, solved by
// congruences after clearing denominators.  Integer/polynomial outputs are
// preferred when every target is integral.
struct Constraint {
    ValuationSpec place;
    Ground target;
    long bound;
};

Ground solve_constraints_q(const std::vector<Constraint>& constraints) {
    // Clearing factor D at each constrained prime.
    Int d(1);
    for (const Constraint& c : constraints) {
        ValOrInf v = val(c.target, c.place);
        long need = (!v.is_infinite() && v.finite() < 0) ? -v.finite() : 0;
        if (need > 0) d *= pow_int(c.place.prime(), need);
    }
    std::vector<Congruence> cs;
    for (const Constraint& c : constraints) {
        long e = int_valuation(d, c.place.prime());
        long k = c.bound + e;
        if (k <= 0) continue;
        Int modulus = pow_int(c.place.prime(), k);
        Rat dt = Rat(d) * c.target.as_rational();
        Int num = rat_num(dt);
        Int den = rat_den(dt);  // prime to the constraint prime by choice of d
        Int residue = mod_floor(num, modulus) * mod_inverse(den, modulus) % modulus;
        cs.push_back({modulus, residue});
    }
    Int y = crt_solve(cs);
    return Ground(Rat(y) / Rat(d));
}

Ground solve_constraints_qt(const std::vector<Constraint>& constraints) {
    RatFunc d{Rat(1)};
    for (const Constraint& c : constraints) {
        ValOrInf v = val(c.target, c.place);
        long need = (!v.is_infinite() && v.finite() < 0) ? -v.finite() : 0;
        if (need > 0) d = d * RatFunc(c.place.pi().pow(need), Poly(Rat(1)));
    }
    std::vector<std::pair<Poly, Poly>> congruences;
    for (const Constraint& c : constraints) {
        RatFunc dt = d * c.target.as_function();
        long e = d.is_zero() ? 0 : (d.num().multiplicity_of(c.place.pi()));
        long k = c.bound + e;
        if (k <= 0) continue;
        Poly modulus = c.place.pi().pow(k);
        // dt = num/den with den prime to pi; residue = num * den^{-1} mod pi^k
        Poly num = dt.num().divmod(modulus).second;
        Poly den_inv = poly_mod_inverse(dt.den(), modulus);
        Poly residue = (num * den_inv).divmod(modulus).second;
        congruences.emplace_back(modulus, residue);
    }
    Poly y = poly_crt(congruences);
    return Ground(RatFunc(y, Poly(Rat(1))) / d);
}

Ground solve_constraints(Field f, const std::vector<Constraint>& constraints) {
    if (constraints.empty()) return Ground(0L);
    return f == Field::Q ? solve_constraints_q(constraints) : solve_constraints_qt(constraints);
}

}  // namespace

OneInSumResult one_in_sum(const NeighborhoodDescriptor& u_nbhd,
                          const NeighborhoodDescriptor& v_nbhd) {
    if (!u_nbhd.center.is_zero() || !v_nbhd.center.is_zero())
        throw PreconditionError("one_in_sum: both neighborhoods must be centered at 0");
    require_disjoint_multiadic(u_nbhd.ring, v_nbhd.ring);
    Field f = u_nbhd.ring.field();

    std::vector<Constraint> constraints;
    for (const ValuationSpec& place : u_nbhd.ring.support())
        constraints.push_back({place, Ground(0L), val(u_nbhd.scale, place).finite()});
    for (const ValuationSpec& place : v_nbhd.ring.support())
        constraints.push_back({place, Ground(1L), val(v_nbhd.scale, place).finite()});
    Ground u = solve_constraints(f, constraints);
    Ground v = Ground(1L) - u;

    OneInSumResult out{u, v, {}};
    Certificate& cert = out.certificate;
    cert.claim = "indep.one-in-sum";
    cert.witness("U", u_nbhd.to_string());
    cert.witness("V", v_nbhd.to_string());
    cert.witness("u", u.to_string());
    cert.witness("v", v.to_string());
    Bindings b{{"u", u.to_string()}, {"v", v.to_string()}};
    push_check(cert, check_eq(f, "u + v", "1", b, "exact decomposition of 1"));
    push_check(cert, check_in_nbhd(u_nbhd.ring.to_string(), u_nbhd.scale.to_string(),
                                   u_nbhd.center.to_string(), "u", b, "u lies in U"));
    push_check(cert, check_in_nbhd(v_nbhd.ring.to_string(), v_nbhd.scale.to_string(),
                                   v_nbhd.center.to_string(), "v", b, "v lies in V"));
    return out;
}

CommonPointResult independence_witness(const NeighborhoodDescriptor& u_nbhd,
                                       const NeighborhoodDescriptor& v_nbhd) {
    // Identical descriptors meet at their own center.
    if (u_nbhd.ring == v_nbhd.ring && u_nbhd.scale == v_nbhd.scale &&
        u_nbhd.center == v_nbhd.center) {
        CommonPointResult out{u_nbhd.center, {}};
        out.certificate.claim = "indep.common-point";
        out.certificate.witness("x", u_nbhd.center.to_string());
        Bindings b{{"x", u_nbhd.center.to_string()}};
        push_check(out.certificate,
                   check_in_nbhd(u_nbhd.ring.to_string(), u_nbhd.scale.to_string(),
                                 u_nbhd.center.to_string(), "x", b, "center lies in U"));
        return out;
    }
    require_disjoint_multiadic(u_nbhd.ring, v_nbhd.ring);
    Field f = u_nbhd.ring.field();
    std::vector<Constraint> constraints;
    for (const ValuationSpec& place : u_nbhd.ring.support())
        constraints.push_back({place, u_nbhd.center, val(u_nbhd.scale, place).finite()});
    for (const ValuationSpec& place : v_nbhd.ring.support())
        constraints.push_back({place, v_nbhd.center, val(v_nbhd.scale, place).finite()});
    Ground x = solve_constraints(f, constraints);

    CommonPointResult out{x, {}};
    Certificate& cert = out.certificate;
    cert.claim = "indep.common-point";
    cert.witness("U", u_nbhd.to_string());
    cert.witness("V", v_nbhd.to_string());
    cert.witness("x", x.to_string());
    Bindings b{{"x", x.to_string()}};
    push_check(cert, check_in_nbhd(u_nbhd.ring.to_string(), u_nbhd.scale.to_string(),
                                   u_nbhd.center.to_string(), "x", b, "x lies in U"));
    push_check(cert, check_in_nbhd(v_nbhd.ring.to_string(), v_nbhd.scale.to_string(),
                                   v_nbhd.center.to_string(), "x", b, "x lies in V"));
    return out;
}

SplitResult split_fraction(const RingDescriptor& a_ring, const Rat& x) {
    if (a_ring.kind() != RingDescriptor::Kind::MultiAdicInt || a_ring.primes().size() != 2)
        throw PreconditionError("split_fraction needs a two-prime localization of Z");
    const Int p = a_ring.primes()[0];
    const Int q = a_ring.primes()[1];

    Int num = rat_num(x);
    Int den = rat_den(x);
    long alpha = den % p == 0 ? int_valuation(den, p) : 0;
    // t carries the whole p-part of the denominator, s everything else, so
    // s is prime to p and t is prime to q.
    Int t_part = pow_int(p, alpha);
    Int s_part = den / t_part;
    BezoutTriple bz = bezout(s_part, t_part);  // s*u + t*v = 1
    if (bz.g != 1) throw Error("split_fraction: denominator parts are not coprime");
    // num = s*(u*num) + t*(v*num); divide by den = s*t.
    Rat part_p(bz.y * num, s_part);  // (v*num)/s: denominator prime to p
    Rat part_q(bz.x * num, t_part);  // (u*num)/t: denominator prime to q

    SplitResult out{Ground(part_p), Ground(part_q), {}};
    Certificate& cert = out.certificate;
    cert.claim = "indep.fraction-split";
    cert.witness("ring", a_ring.to_string());
    cert.witness("x", rat_to_string(x));
    cert.witness("s", int_to_string(s_part));
    cert.witness("t", int_to_string(t_part));
    cert.witness("part_in_Zloc(" + int_to_string(p) + ")", rat_to_string(part_p));
    cert.witness("part_in_Zloc(" + int_to_string(q) + ")", rat_to_string(part_q));
    Bindings b{{"x", rat_to_string(x)},
               {"xp", rat_to_string(part_p)},
               {"xq", rat_to_string(part_q)}};
    push_check(cert, check_eq(Field::Q, "xp + xq", "x", b, "exact splitting identity"));
    push_check(cert, check_in_ring("Zloc(" + int_to_string(p) + ")", "xp", b,
                                   "first part is integral at p"));
    push_check(cert, check_in_ring("Zloc(" + int_to_string(q) + ")", "xq", b,
                                   "second part is integral at q"));
    return out;
}

TopologyDescriptor sum_topology(const TopologyDescriptor& t1, const TopologyDescriptor& t2) {
    return TopologyDescriptor::sum_of(t1, t2);
}

bool in_basic_sum_neighborhood(const NeighborhoodDescriptor& u1,
                               const NeighborhoodDescriptor& u2, const Ground& x) {
    return in_neighborhood(u1, x) && in_neighborhood(u2, x);
}

NonHenselResult non_gt_hensel_certificate(const Int& p, const Int& q, long m, long n) {
    if (p == q) throw DomainError("non_gt_hensel_certificate: primes must be distinct");
    if (!is_prime(p) || !is_prime(q)) throw DomainError("inputs must be prime");
    if (m < 1 || n < 1) throw DomainError("exponents must be positive");

    Int pm = pow_int(p, m);
    Int qn = pow_int(q, n);
    Rat a(crt_solve({{pm, Int(1)}, {qn, Int(0)}}));
    Rat fa = a * a - a;

    NonHenselResult out{p, q, m, n, a, fa, {}};
    Certificate& cert = out.certificate;
    cert.claim = "indep.non-gt-hensel";
    cert.witness("p^m", int_to_string(pm));
    cert.witness("q^n", int_to_string(qn));
    cert.witness("a", rat_to_string(a));
    cert.witness("f(a)", rat_to_string(fa));
    ValuationSpec vp = ValuationSpec::p_adic(p);
    ValuationSpec vq = ValuationSpec::p_adic(q);
    Bindings b{{"a", rat_to_string(a)}};
    push_check(cert,
               check_eq(Field::Q, "a^2 - a", "(1-a)^2 - (1-a)", b,
                        "the two preimages of f(a) are exactly a and 1-a"));
    push_check(cert, check_val_ge("1 - a", vp, m, b, "a lies in 1 - U'_1"));
    push_check(cert, check_val_ge("a", vq, n, b, "a lies in U'_2"));
    push_check(cert, check_val_ge("a^2 - a", vp, m, b, "f(a) lies in V_1 = f(U_1)"));
    push_check(cert, check_val_ge("a^2 - a", vq, n, b, "f(a) lies in V_2 = f(U_2)"));
    push_check(cert, check_val_lt("a", vp, m, b,
                                  "preimage a misses U_1, hence misses U_1 cap U_2"));
    push_check(cert, check_val_lt("1 - a", vq, n, b,
                                  "preimage 1-a misses U_2, hence misses U_1 cap U_2"));
    return out;
}

ProblematicReport problematic_instance(const Int& p, const Int& q, std::uint64_t seed) {
    if (p == q) throw DomainError("problematic_instance: primes must be distinct");
    RingDescriptor ring = RingDescriptor::multi_adic_int({p, q});

    Certificate cert;
    cert.claim = "indep.problematic-ring";
    cert.witness("ring", ring.to_string());
    push_check(cert, check_is_prime(p, "first maximal ideal generator"));
    push_check(cert, check_is_prime(q, "second maximal ideal generator"));
    cert.witness("maximal_ideals",
                 int_to_string(p) + "*A, " + int_to_string(q) + "*A");
    cert.witness("saturation_prime", "0");

    // Sampled saturation: every nonzero x in A factors as s*t with s prime
    // to p and t prime to q (t = p-power part, s = the rest).
    Rng rng(seed);
    ValuationSpec vp = ValuationSpec::p_adic(p);
    ValuationSpec vq = ValuationSpec::p_adic(q);
    for (int i = 0; i < 10; ++i) {
        Ground x(0L);
        do {
            x = sample_ring_element(ring, rng);
        } while (x.is_zero());
        Rat xr = x.as_rational();
        long alpha = val_p(xr, p).finite();
        Rat t = pow_rat(Rat(p), alpha);
        Rat s = xr / t;
        Bindings b{{"x", rat_to_string(xr)}, {"s", rat_to_string(s)}, {"t", rat_to_string(t)}};
        push_check(cert, check_eq(Field::Q, "x", "s*t", b, "sampled factorization"));
        push_check(cert, check_val_eq("s", vp, 0, b, "s avoids the first maximal ideal"));
        push_check(cert, check_val_eq("t", vq, 0, b, "t avoids the second maximal ideal"));
        push_check(cert, check_in_ring(ring.to_string(), "s", b, "s stays in A"));
        push_check(cert, check_in_ring(ring.to_string(), "t", b, "t stays in A"));
    }

    JacobsonResult jac = jacobson_with_certificate(ring, seed + 1);
    for (Check& c : jac.certificate.checks) cert.checks.push_back(std::move(c));

    // Independence of the two induced localizations, with the sample
    // exponent pair (2, 1).
    NeighborhoodDescriptor u(RingDescriptor::multi_adic_int({p}), Ground(Rat(pow_int(p, 2))),
                             Ground(0L));
    NeighborhoodDescriptor v(RingDescriptor::multi_adic_int({q}), Ground(Rat(q)), Ground(0L));
    OneInSumResult indep = one_in_sum(u, v);

    return ProblematicReport{ring, jac.generator, std::move(indep), std::move(cert)};
}

}  // namespace adictop
