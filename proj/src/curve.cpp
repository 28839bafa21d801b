#include "adictop/curve.hpp"

#include <algorithm>

#include "adictop/parser.hpp"
#include "adictop/valuation.hpp"
#include "adictop/verify.hpp"

namespace adictop {

namespace {

void push_check(Certificate& cert, Check c) {
    if (!c.holds)
        throw Error("certificate self-check failed: " + c.op +
                    (c.note.empty() ? "" : " (" + c.note + ")"));
    cert.checks.push_back(std::move(c));
}

Poly linear_at(const Rat& a) {  // x - a
    return Poly(std::vector<Rat>{Rat(-a), Rat(1)});
}

std::string fstr(const RatFunc& f) { return f.to_string("x"); }

}  // namespace

P1Point P1Point::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    return at(parse_rational(text));
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [p, m] : entries) d += m;
    return d;
}

long Divisor::multiplicity_at(const P1Point& p) const {
    for (const auto& [q, m] : entries)
        if (q == p) return m;
    return 0;
}

void Divisor::validate() const {
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second == 0) throw DomainError("divisor has a zero multiplicity");
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].first == entries[j].first)
                throw DomainError("divisor has a repeated point");
    }
}

Divisor Divisor::minus_point(const P1Point& p) const {
    Divisor out;
    bool found = false;
    for (const auto& [q, m] : entries) {
        long mm = m;
        if (q == p) {
            found = true;
            mm -= 1;
        }
        if (mm != 0) out.entries.emplace_back(q, mm);
    }
    if (!found) out.entries.emplace_back(p, -1);
    return out;
}

std::string Divisor::to_string() const {
    if (entries.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& [p, m] = entries[i];
        if (i) s += " + ";
        s += std::to_string(m) + "*(" + p.to_string() + ")";
    }
    return s;
}

Json Divisor::to_json() const {
    Json arr = Json::array();
    for (const auto& [p, m] : entries) {
        Json e;
        e["point"] = p.to_string();
        e["mult"] = m;
        arr.push_back(e);
    }
    return arr;
}

Divisor Divisor::from_json(const Json& j) {
    Divisor d;
    for (const Json& e : j)
        d.entries.emplace_back(P1Point::parse(e.at("point").get<std::string>()),
                               e.at("mult").get<long>());
    d.validate();
    return d;
}

long ord_at(const RatFunc& f, const P1Point& p) {
    if (f.is_zero()) throw DomainError("ord_at: the zero function");
    if (p.infinite) return f.den().degree() - f.num().degree();
    Poly lin = linear_at(p.value);
    return f.num().multiplicity_of(lin) - f.den().multiplicity_of(lin);
}

bool poles_within(const RatFunc& f, const std::vector<P1Point>& pts) {
    if (f.is_zero()) return true;
    Poly den = f.den();
    for (const P1Point& p : pts) {
        if (p.infinite) continue;
        Poly lin = linear_at(p.value);
        while (lin.divides(den)) den = den.divmod(lin).first;
    }
    if (den.degree() > 0) return false;  // a finite pole somewhere else
    bool inf_allowed = false;
    for (const P1Point& p : pts)
        if (p.infinite) inf_allowed = true;
    return inf_allowed || ord_at(f, P1Point::infinity()) >= 0;
}

long map_degree(const RatFunc& f) {
    if (f.is_zero()) throw DomainError("map_degree: the zero function");
    return std::max(f.num().degree(), f.den().degree());
}

RatVector avoid_subspaces(long dim, const std::vector<std::vector<RatVector>>& subspaces) {
    if (dim < 1) throw DomainError("avoid_subspaces: dimension must be positive");
    for (const auto& span : subspaces) {
        for (const RatVector& v : span)
            if (static_cast<long>(v.size()) != dim)
                throw DomainError("avoid_subspaces: vector length mismatch");
        if (rank(span) >= dim)
            throw PreconditionError("avoid_subspaces: a subspace is not proper");
    }
    // Coordinate values ordered 0, 1, -1, 2, -2, ...; shells by max-norm.
    auto nth_value = [](long idx) -> long {
        if (idx == 0) return 0;
        long k = (idx + 1) / 2;
        return idx % 2 == 1 ? k : -k;
    };
    for (long r = 0; r <= 64; ++r) {
        long values = 2 * r + 1;
        std::vector<long> idx(static_cast<size_t>(dim), 0);
        for (;;) {
            long maxnorm = 0;
            for (long i : idx) {
                long v = nth_value(i);
                maxnorm = std::max(maxnorm, v < 0 ? -v : v);
            }
            if (maxnorm == r) {
                RatVector cand;
                for (long i : idx) cand.emplace_back(nth_value(i));
                bool hit = false;
                for (const auto& span : subspaces)
                    if (in_span(span, cand)) {
                        hit = true;
                        break;
                    }
                if (!hit) return cand;
            }
            // lexicographic increment over value indices
            long pos = dim - 1;
            while (pos >= 0) {
                if (++idx[static_cast<size_t>(pos)] < values) break;
                idx[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    throw Error("avoid_subspaces: sweep exhausted (should not happen over Q)");
}

RrBasisResult rr_space_p1(const Divisor& d) {
    d.validate();
    RrBasisResult out;
    Certificate& cert = out.certificate;
    cert.claim = "curve.rr-basis";
    cert.witness("divisor", d.to_string());
    long deg = d.degree();
    cert.witness("degree", std::to_string(deg));
    cert.witness("dimension", std::to_string(std::max(0L, deg + 1)));
    if (deg < 0) return out;

    // Allowed poles at finite points feed the denominator; required zeros
    // (negative multiplicities) feed the numerator.  The bound at infinity
    // caps the free polynomial degree at deg D.
    Poly den(Rat(1));
    Poly forced(Rat(1));
    for (const auto& [p, m] : d.entries) {
        if (p.infinite) continue;
        if (m > 0) den = den * linear_at(p.value).pow(m);
        if (m < 0) forced = forced * linear_at(p.value).pow(-m);
    }
    std::vector<P1Point> allowed_poles;
    for (const auto& [p, m] : d.entries)
        if (m > 0) allowed_poles.push_back(p);

    for (long j = 0; j <= deg; ++j) {
        RatFunc f(Poly::monomial(Rat(1), j) * forced, den);
        out.basis.push_back(f);
        for (const auto& [p, m] : d.entries)
            push_check(cert, check_ord_at(fstr(f), p.to_string(), ord_at(f, p),
                                          "bound >= " + std::to_string(-m) + " at " +
                                              p.to_string()));
        push_check(cert, check_poles_within(fstr(f), allowed_poles.empty()
                                                         ? std::vector<std::string>{}
                                                         : [&] {
                                                               std::vector<std::string> s;
                                                               for (const P1Point& p :
                                                                    allowed_poles)
                                                                   s.push_back(p.to_string());
                                                               return s;
                                                           }(),
                                            "no poles outside the divisor"));
    }
    // Divisor bounds above show containment; linear independence is by the
    // distinct numerator degrees j = 0..deg.
    for (const auto& [p, m] : d.entries) {
        for (const RatFunc& f : out.basis)
            if (ord_at(f, p) < -m) throw Error("rr_space_p1: divisor bound violated");
    }
    return out;
}

PrescribedResult prescribed_function(const std::vector<P1Point>& poles, const P1Point& zero) {
    if (poles.empty()) throw DomainError("prescribed_function: needs at least one pole");
    for (size_t i = 0; i < poles.size(); ++i) {
        if (poles[i] == zero) throw DomainError("prescribed_function: zero coincides with a pole");
        for (size_t j = i + 1; j < poles.size(); ++j)
            if (poles[i] == poles[j]) throw DomainError("prescribed_function: repeated pole");
    }
    size_t n = poles.size();

    Divisor d;
    for (const P1Point& p : poles) d.entries.emplace_back(p, 1);
    d.entries.emplace_back(zero, -1);
    RrBasisResult h0 = rr_space_p1(d);  // dimension n

    // Coordinates of g in the basis f_j = x^j * forced/den: the coefficient
    // vector of (g * den / forced), a polynomial of degree <= n-1.
    Poly den(Rat(1));
    Poly forced(Rat(1));
    for (const auto& [p, m] : d.entries) {
        if (p.infinite) continue;
        if (m > 0) den = den * linear_at(p.value).pow(m);
        if (m < 0) forced = forced * linear_at(p.value).pow(-m);
    }
    auto coordinates = [&](const RatFunc& g) {
        RatFunc h = g * RatFunc(den, forced);
        if (h.den() != Poly(Rat(1)))
            throw Error("prescribed_function: coordinate extraction failed");
        RatVector coords(n, Rat(0));
        for (size_t j = 0; j < n; ++j) coords[j] = h.num().coeff(static_cast<long>(j));
        return coords;
    };

    std::vector<std::vector<RatVector>> subspaces;
    {
        std::vector<RatVector> span;
        for (const RatFunc& g : rr_space_p1(d.minus_point(zero)).basis)
            span.push_back(coordinates(g));
        subspaces.push_back(std::move(span));
    }
    for (const P1Point& p : poles) {
        std::vector<RatVector> span;
        for (const RatFunc& g : rr_space_p1(d.minus_point(p)).basis)
            span.push_back(coordinates(g));
        subspaces.push_back(std::move(span));
    }

    RatVector coeffs = avoid_subspaces(static_cast<long>(n), subspaces);
    Poly g(coeffs);
    RatFunc f(g * forced, den);

    PrescribedResult out{f, {}};
    Certificate& cert = out.certificate;
    cert.claim = "curve.prescribed-divisor";
    cert.witness("function", fstr(f));
    cert.witness("zero", zero.to_string());
    std::vector<std::string> pole_names;
    for (const P1Point& p : poles) pole_names.push_back(p.to_string());
    for (const P1Point& p : poles)
        push_check(cert, check_ord_at(fstr(f), p.to_string(), -1,
                                      "simple pole at " + p.to_string()));
    push_check(cert, check_ord_at(fstr(f), zero.to_string(), 1,
                                  "simple zero at " + zero.to_string()));
    push_check(cert, check_poles_within(fstr(f), pole_names, "no other poles"));
    push_check(cert, check_degree_is(fstr(f), static_cast<long>(n),
                                     "degree n as a map to P^1, so n-1 further zeros"));
    return out;
}

WeakApproxResult weak_approx_line(const std::vector<WeakApproxConstraint>& constraints) {
    for (size_t i = 0; i < constraints.size(); ++i)
        for (size_t j = i + 1; j < constraints.size(); ++j)
            if (constraints[i].prime == constraints[j].prime)
                throw DomainError("weak_approx_line: repeated prime");

    // Clearing factor for targets with denominators at the constraint primes.
    Int d(1);
    for (const WeakApproxConstraint& c : constraints) {
        if (!is_prime(c.prime)) throw DomainError("weak_approx_line: modulus must be prime");
        ValOrInf v = val_p(c.target, c.prime);
        if (!v.is_infinite() && v.finite() < 0) d *= pow_int(c.prime, -v.finite());
    }
    std::vector<Congruence> cs;
    for (const WeakApproxConstraint& c : constraints) {
        long e = int_valuation(d, c.prime);
        long k = c.precision + e;
        if (k <= 0) continue;
        Int modulus = pow_int(c.prime, k);
        Rat dt = Rat(d) * c.target;
        Int residue = mod_floor(rat_num(dt), modulus) *
                      mod_inverse(rat_den(dt), modulus) % modulus;
        cs.push_back({modulus, residue});
    }
    Rat x = Rat(crt_solve(cs)) / Rat(d);

    WeakApproxResult out{x, {}};
    Certificate& cert = out.certificate;
    cert.claim = "curve.weak-approximation";
    cert.witness("x", rat_to_string(x));
    for (const WeakApproxConstraint& c : constraints) {
        Bindings b{{"x", rat_to_string(x)}, {"a", rat_to_string(c.target)}};
        push_check(cert, check_val_ge("x - a", ValuationSpec::p_adic(c.prime), c.precision, b,
                                      "approximates " + rat_to_string(c.target) + " at " +
                                          int_to_string(c.prime)));
    }
    return out;
}

ConicWitnessResult conic_sign_witness(const Rat& c, const Int& p, const Int& q, int eps_p,
                                      int eps_q, long m, long n) {
    if (c == 0) throw DomainError("conic_sign_witness: c must be nonzero");
    if (p == q) throw DomainError("conic_sign_witness: primes must be distinct");
    if (p == 2 || q == 2) throw DomainError("conic_sign_witness: primes must be odd");
    if (!is_prime(p) || !is_prime(q)) throw DomainError("conic_sign_witness: inputs must be prime");
    if (eps_p * eps_p != 1 || eps_q * eps_q != 1)
        throw DomainError("conic_sign_witness: signs must be +1 or -1");
    if (m < 1 || n < 1) throw DomainError("conic_sign_witness: precisions must be positive");
    if (!(val_p(c, p) == ValOrInf::of(0)) || !(val_p(c, q) == ValOrInf::of(0)))
        throw PreconditionError("conic_sign_witness: p and q must not divide c");

    Int pm = pow_int(p, m);
    Int qn = pow_int(q, n);
    Int b = crt_solve({{pm, Int(eps_p)}, {qn, Int(eps_q)}});
    Int modulus = pm * qn;
    while (b * b == 1) b += modulus;  // skip a = 0
    Rat a = (Rat(b) * Rat(b) - 1) / c;

    ConicWitnessResult out{a, Rat(b), {}};
    Certificate& cert = out.certificate;
    cert.claim = "curve.conic-sign-witness";
    cert.witness("a", rat_to_string(a));
    cert.witness("b", int_to_string(b));
    cert.witness("c", rat_to_string(c));
    ValuationSpec vp = ValuationSpec::p_adic(p);
    ValuationSpec vq = ValuationSpec::p_adic(q);
    Bindings bind{{"a", rat_to_string(a)}, {"b", int_to_string(b)}, {"c", rat_to_string(c)}};
    push_check(cert, check_eq(Field::Q, "b^2", "1 + c*a", bind, "point lies on the conic"));
    push_check(cert, check_val_ge("b - (" + std::to_string(eps_p) + ")", vp, m, bind,
                                  "sign " + std::to_string(eps_p) + " at " + int_to_string(p)));
    push_check(cert, check_val_ge("b - (" + std::to_string(eps_q) + ")", vq, n, bind,
                                  "sign " + std::to_string(eps_q) + " at " + int_to_string(q)));
    push_check(cert, check_val_ge("a", vp, m, bind, "a vanishes to order >= m at p"));
    push_check(cert, check_val_ge("a", vq, n, bind, "a vanishes to order >= n at q"));
    push_check(cert, check_val_eq("a", vp, val_p(a, p).finite(), bind,
                                  "exact valuation achieved at p"));
    push_check(cert, check_val_eq("a", vq, val_p(a, q).finite(), bind,
                                  "exact valuation achieved at q"));
    return out;
}

void PatternSpec::validate() const {
    if (constants.empty()) throw DomainError("pattern needs at least one constant");
    for (size_t i = 0; i < constants.size(); ++i) {
        if (constants[i] == 0) throw DomainError("pattern constants must be nonzero");
        for (size_t j = i + 1; j < constants.size(); ++j)
            if (constants[i] == constants[j])
                throw DomainError("pattern constants must be distinct");
    }
    if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
        throw DomainError("pattern needs odd distinct primes");
    if (mp < 1 || mq < 1) throw DomainError("pattern precisions must be positive");
    for (size_t i : subset)
        if (i == 0 || i > constants.size())
            throw DomainError("pattern subset index out of range");
}

Json PatternSpec::to_json() const {
    Json j;
    Json cs = Json::array();
    for (const Rat& c : constants) cs.push_back(rat_to_string(c));
    j["constants"] = cs;
    Json ss = Json::array();
    for (size_t i : subset) ss.push_back(i);
    j["subset"] = ss;
    j["p"] = int_to_string(p);
    j["q"] = int_to_string(q);
    j["mp"] = mp;
    j["mq"] = mq;
    return j;
}

PatternSpec PatternSpec::from_json(const Json& j) {
    PatternSpec s;
    for (const Json& c : j.at("constants"))
        s.constants.push_back(parse_rational(c.get<std::string>()));
    if (j.contains("subset"))
        for (const Json& i : j.at("subset")) s.subset.insert(i.get<size_t>());
    s.p = Int(j.at("p").get<std::string>());
    s.q = Int(j.at("q").get<std::string>());
    s.mp = j.at("mp").get<long>();
    s.mq = j.at("mq").get<long>();
    s.validate();
    return s;
}

PatternVerifyResult ip_pattern_verify(const PatternSpec& spec, const Rat& a,
                                      const std::vector<Rat>& bs) {
    spec.validate();
    if (bs.size() != spec.constants.size())
        throw DomainError("ip_pattern_verify: candidate arity mismatch");
    Certificate cert;
    cert.claim = "curve.ip-pattern";
    cert.witness("spec", spec.to_json().dump());
    cert.witness("a", rat_to_string(a));
    ValuationSpec vp = ValuationSpec::p_adic(spec.p);
    ValuationSpec vq = ValuationSpec::p_adic(spec.q);
    bool ok = true;
    for (size_t i = 0; i < bs.size(); ++i) {
        std::string tag = std::to_string(i + 1);
        cert.witness("b" + tag, rat_to_string(bs[i]));
        Bindings bind{{"a", rat_to_string(a)},
                      {"b", rat_to_string(bs[i])},
                      {"c", rat_to_string(spec.constants[i])}};
        Check on_conic = check_eq(Field::Q, "b^2", "1 + a*c", bind,
                                  "b_" + tag + "^2 = 1 + a*c_" + tag);
        ok = ok && on_conic.holds;
        cert.checks.push_back(std::move(on_conic));
        Check in_u = check_val_ge("b - 1", vp, spec.mp, bind, "b_" + tag + " lies in U");
        ok = ok && in_u.holds;
        cert.checks.push_back(std::move(in_u));
        bool member = spec.subset.count(i + 1) > 0;
        Check sign = member
                         ? check_val_ge("b - 1", vq, spec.mq, bind,
                                        "b_" + tag + " lies in U' (index in S)")
                         : check_val_ge("b + 1", vq, spec.mq, bind,
                                        "-b_" + tag + " lies in U' (index not in S)");
        ok = ok && sign.holds;
        cert.checks.push_back(std::move(sign));
    }
    cert.witness("verdict", ok ? "true" : "false");
    return {ok, cert};
}

}  // namespace adictop
