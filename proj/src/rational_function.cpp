#include "adictop/rational_function.hpp"

#include "adictop/errors.hpp"

namespace adictop {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("RatFunc: zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (!g.is_constant()) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rat lead = den.leading();
    num_ = num * (Rat(1) / lead);
    den_ = den * (Rat(1) / lead);
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("RatFunc: not a constant");
    return num_.coeff(0);  // den_ is the monic constant 1
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DomainError("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e >= 0) return RatFunc(num_.pow(e), den_.pow(e));
    if (is_zero()) throw DomainError("RatFunc: zero base with negative exponent");
    return RatFunc(den_.pow(-e), num_.pow(-e));
}

RatFunc RatFunc::derivative_dt() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

long RatFunc::order_at_zero() const {
    if (is_zero()) throw DomainError("RatFunc: zero has no finite order");
    return num_.order_at_zero() - den_.order_at_zero();
}

long RatFunc::order_at(const Poly& pi) const {
    if (is_zero()) throw DomainError("RatFunc: zero has no finite order");
    // num and den are coprime, so at most one of the two multiplicities is nonzero.
    return num_.multiplicity_of(pi) - den_.multiplicity_of(pi);
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == Poly(Rat(1))) {
        if (num_.is_constant() || num_.degree() >= 0) return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace adictop
