#include "adictop/ground.hpp"

namespace adictop {

const Rat& Ground::rational() const {
    if (!is_rational()) throw FieldMismatchError("expected an element of Q");
    return std::get<Rat>(v_);
}

const RatFunc& Ground::function() const {
    if (is_rational()) throw FieldMismatchError("expected an element of Q(t)");
    return std::get<RatFunc>(v_);
}

RatFunc Ground::as_function() const {
    if (is_rational()) return RatFunc(std::get<Rat>(v_));
    return std::get<RatFunc>(v_);
}

Rat Ground::as_rational() const {
    if (is_rational()) return std::get<Rat>(v_);
    const RatFunc& f = std::get<RatFunc>(v_);
    if (f.is_constant()) return f.constant_value();
    throw FieldMismatchError("element of Q(t) used where Q was required");
}

bool Ground::is_zero() const {
    return is_rational() ? std::get<Rat>(v_) == 0 : std::get<RatFunc>(v_).is_zero();
}

namespace {

// Apply op over the joint field of a and b.
template <class OpQ, class OpQt>
Ground binop(const Ground& a, const Ground& b, OpQ opq, OpQt opqt) {
    if (a.is_rational() && b.is_rational()) return Ground(opq(a.rational(), b.rational()));
    return Ground(opqt(a.as_function(), b.as_function()));
}

}  // namespace

Ground Ground::operator-() const {
    if (is_rational()) return Ground(Rat(-std::get<Rat>(v_)));
    return Ground(-std::get<RatFunc>(v_));
}

Ground Ground::operator+(const Ground& o) const {
    return binop(*this, o, [](const Rat& x, const Rat& y) { return Rat(x + y); },
                 [](const RatFunc& x, const RatFunc& y) { return x + y; });
}

Ground Ground::operator-(const Ground& o) const {
    return binop(*this, o, [](const Rat& x, const Rat& y) { return Rat(x - y); },
                 [](const RatFunc& x, const RatFunc& y) { return x - y; });
}

Ground Ground::operator*(const Ground& o) const {
    return binop(*this, o, [](const Rat& x, const Rat& y) { return Rat(x * y); },
                 [](const RatFunc& x, const RatFunc& y) { return x * y; });
}

Ground Ground::operator/(const Ground& o) const {
    if (o.is_zero()) throw DomainError("division by zero");
    return binop(*this, o, [](const Rat& x, const Rat& y) { return Rat(x / y); },
                 [](const RatFunc& x, const RatFunc& y) { return x / y; });
}

bool Ground::operator==(const Ground& o) const {
    if (is_rational() && o.is_rational()) return rational() == o.rational();
    return as_function() == o.as_function();
}

Ground Ground::pow(long e) const {
    if (is_rational()) return Ground(pow_rat(rational(), e));
    return Ground(function().pow(e));
}

std::string Ground::to_string() const {
    if (is_rational()) return rat_to_string(std::get<Rat>(v_));
    return std::get<RatFunc>(v_).to_string();
}

}  // namespace adictop
