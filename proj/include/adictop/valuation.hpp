#pragma once

#include <string>

#include "adictop/ground.hpp"
#include "adictop/polynomial.hpp"

namespace adictop {

// Value of a valuation: an integer or the distinguished +infinity of 0.
// Infinity is a real token here, never a sentinel integer, so the
// ultrametric laws can be asserted literally.
class ValOrInf {
public:
    static ValOrInf infinity() { return ValOrInf(true, 0); }
    static ValOrInf of(long v) { return ValOrInf(false, v); }

    bool is_infinite() const { return inf_; }
    long finite() const {
        if (inf_) throw DomainError("valuation is +infinity");
        return v_;
    }

    bool operator==(const ValOrInf& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const ValOrInf& o) const { return !(*this == o); }
    bool operator<(const ValOrInf& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const ValOrInf& o) const { return *this < o || *this == o; }
    bool operator>=(const ValOrInf& o) const { return !(*this < o); }
    bool operator>(const ValOrInf& o) const { return o < *this; }

    ValOrInf operator+(const ValOrInf& o) const {
        if (inf_ || o.inf_) return infinity();
        return of(v_ + o.v_);
    }

    bool at_least(long bound) const { return inf_ || v_ >= bound; }

    static ValOrInf min(const ValOrInf& a, const ValOrInf& b) { return a < b ? a : b; }

    std::string to_string() const { return inf_ ? "+inf" : std::to_string(v_); }

private:
    ValOrInf(bool inf, long v) : inf_(inf), v_(v) {}
    bool inf_;
    long v_;
};

// A place of Q (p-adic) or of Q(t) (pi-adic; t-adic is pi = t).
class ValuationSpec {
public:
    static ValuationSpec p_adic(const Int& p);
    static ValuationSpec t_adic();
    static ValuationSpec pi_adic(const Poly& pi);

    bool is_p_adic() const { return p_adic_; }
    Field field() const { return p_adic_ ? Field::Q : Field::Qt; }
    const Int& prime() const;
    const Poly& pi() const;
    bool is_t_adic() const { return !p_adic_ && pi_ == Poly::variable(); }

    // Uniformizer as a ground element: p, or pi(t).
    Ground uniformizer() const;

    bool operator==(const ValuationSpec& o) const;

    // Compact label used in certificates: "p:5", "t", "pi:t^2+1".
    std::string label() const;
    static ValuationSpec from_label(const std::string& label);

private:
    ValuationSpec(bool padic, Int p, Poly pi)
        : p_adic_(padic), p_(std::move(p)), pi_(std::move(pi)) {}
    bool p_adic_;
    Int p_;
    Poly pi_;
};

// Exact valuation; +infinity iff x = 0.  Applying a p-adic place to a
// genuine Q(t) element (or a pi-adic place to a Q context where the
// constant does not embed) raises FieldMismatchError.
ValOrInf val(const Ground& x, const ValuationSpec& v);

ValOrInf val_p(const Rat& x, const Int& p);

// A derivation of Q(t) determined by the image of t:
// d(g) = (dg/dt) * image_of_t.
struct DerivationSpec {
    RatFunc image_of_t;

    std::string to_string() const { return "dt=" + image_of_t.to_string(); }
};

RatFunc derive(const RatFunc& x, const DerivationSpec& d);

}  // namespace adictop
