#pragma once

#include <string>

#include "adictop/polynomial.hpp"

namespace adictop {

// Element of Q(t), kept canonical: numerator and denominator coprime, the
// denominator monic.  Zero is 0/1.  Equality is syntactic.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT: implicit by design
    RatFunc(Poly num, Poly den);

    static RatFunc variable() { return RatFunc(Poly::variable(), Poly(Rat(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;  // requires is_constant()

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc pow(long e) const;

    // d/dt by the quotient rule.
    RatFunc derivative_dt() const;

    // Order of vanishing at t = 0 (poles negative); element must be nonzero.
    long order_at_zero() const;

    // Order at a monic irreducible pi (poles negative); element must be nonzero.
    long order_at(const Poly& pi) const;

    std::string to_string(const std::string& var = "t") const;

private:
    Poly num_;
    Poly den_;
};

}  // namespace adictop
