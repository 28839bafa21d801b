#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adictop/numbers.hpp"

namespace adictop {

// Dense univariate polynomial over Rat, coefficients stored ascending.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static Poly monomial(const Rat& c, long degree);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(long i) const {
        return (i >= 0 && i < static_cast<long>(coeffs_.size())) ? coeffs_[static_cast<size_t>(i)]
                                                                 : Rat(0);
    }
    Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    bool divides(const Poly& dividend) const;

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly pow(long e) const;

    // Multiplicity of the zero polynomial t = 0 (index of first nonzero
    // coefficient); asking for the order of the zero polynomial is an error.
    long order_at_zero() const;

    // Multiplicity of a nonconstant factor pi (repeated exact division).
    long multiplicity_of(const Poly& pi) const;

    // Scale so the leading coefficient is 1.
    Poly monic() const;

    // Monic gcd via the Euclidean algorithm over Q.
    static Poly gcd(Poly a, Poly b);

    // Printed with descending powers, e.g. "t^2 - 2*t + 1".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

struct PolyBezout {
    Poly g;  // monic gcd
    Poly x;
    Poly y;  // a*x + b*y = g
};

PolyBezout poly_bezout(const Poly& a, const Poly& b);

// Inverse of a modulo m, for gcd(a, m) = 1 and deg m >= 1.
Poly poly_mod_inverse(const Poly& a, const Poly& m);

// Simultaneous polynomial congruences with pairwise coprime moduli; returns
// the canonical representative of degree < sum of the moduli degrees.
Poly poly_crt(const std::vector<std::pair<Poly, Poly>>& congruences);

}  // namespace adictop
