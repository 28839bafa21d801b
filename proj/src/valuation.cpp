#include "adictop/valuation.hpp"

#include "adictop/parser.hpp"

namespace adictop {

namespace {

// Irreducibility over Q is decided exactly up to degree 3 (no rational
// root); for higher degree we settle for square-free + no rational root,
// which covers every modulus this artifact actually uses.
bool has_rational_root(const Poly& f) {
    // Clear denominators to an integer polynomial.
    Int lcm = 1;
    for (const Rat& c : f.coeffs()) lcm = lcm_int(lcm, rat_den(c));
    std::vector<Int> a;
    for (const Rat& c : f.coeffs()) a.push_back(rat_num(c) * (lcm / rat_den(c)));
    if (a.front() == 0) return true;  // root at 0
    Int a0 = a.front();
    Int an = a.back();
    auto divisors = [](Int n) {
        if (n < 0) n = -n;
        std::vector<Int> ds;
        for (Int d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                ds.push_back(d);
                ds.push_back(n / d);
            }
            if (d > 1000000) break;  // inputs here are tiny; guard anyway
        }
        return ds;
    };
    for (const Int& r : divisors(a0))
        for (const Int& s : divisors(an))
            for (int sgn : {1, -1}) {
                Rat cand(r * sgn, s);
                if (f.eval(cand) == 0) return true;
            }
    return false;
}

bool plausibly_irreducible(const Poly& pi) {
    if (pi.degree() < 1) return false;
    if (pi.degree() == 1) return true;
    if (!Poly::gcd(pi, pi.derivative()).is_constant()) return false;  // not square-free
    if (has_rational_root(pi)) return false;
    return true;  // exact for degree <= 3
}

}  // namespace

ValuationSpec ValuationSpec::p_adic(const Int& p) {
    if (!is_prime(p)) throw DomainError("p-adic place needs a prime, got " + int_to_string(p));
    return ValuationSpec(true, p, Poly());
}

ValuationSpec ValuationSpec::t_adic() { return pi_adic(Poly::variable()); }

ValuationSpec ValuationSpec::pi_adic(const Poly& pi) {
    if (!pi.is_monic()) throw DomainError("pi-adic place needs a monic polynomial");
    if (!plausibly_irreducible(pi))
        throw DomainError("pi-adic place needs an irreducible polynomial, got " + pi.to_string());
    return ValuationSpec(false, Int(0), pi);
}

const Int& ValuationSpec::prime() const {
    if (!p_adic_) throw DomainError("not a p-adic place");
    return p_;
}

const Poly& ValuationSpec::pi() const {
    if (p_adic_) throw DomainError("not a pi-adic place");
    return pi_;
}

Ground ValuationSpec::uniformizer() const {
    if (p_adic_) return Ground(Rat(p_));
    return Ground(RatFunc(pi_, Poly(Rat(1))));
}

bool ValuationSpec::operator==(const ValuationSpec& o) const {
    if (p_adic_ != o.p_adic_) return false;
    return p_adic_ ? p_ == o.p_ : pi_ == o.pi_;
}

std::string ValuationSpec::label() const {
    if (p_adic_) return "p:" + int_to_string(p_);
    if (is_t_adic()) return "t";
    return "pi:" + pi_.to_string();
}

ValuationSpec ValuationSpec::from_label(const std::string& label) {
    if (label == "t") return t_adic();
    if (label.rfind("p:", 0) == 0) return p_adic(Int(label.substr(2)));
    if (label.rfind("pi:", 0) == 0) return pi_adic(parse_poly(label.substr(3)));
    throw ParseError("unknown valuation label '" + label + "'", 0);
}

ValOrInf val_p(const Rat& x, const Int& p) {
    if (x == 0) return ValOrInf::infinity();
    long v = 0;
    Int num = rat_num(x);
    Int den = rat_den(x);
    if (num % p == 0) v = int_valuation(num, p);
    if (den % p == 0) v -= int_valuation(den, p);
    return ValOrInf::of(v);
}

ValOrInf val(const Ground& x, const ValuationSpec& v) {
    if (v.is_p_adic()) return val_p(x.as_rational(), v.prime());
    RatFunc f = x.as_function();
    if (f.is_zero()) return ValOrInf::infinity();
    if (v.is_t_adic()) return ValOrInf::of(f.order_at_zero());
    return ValOrInf::of(f.order_at(v.pi()));
}

RatFunc derive(const RatFunc& x, const DerivationSpec& d) {
    return x.derivative_dt() * d.image_of_t;
}

}  // namespace adictop
