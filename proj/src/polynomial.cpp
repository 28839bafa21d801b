#include "adictop/polynomial.hpp"

#include <sstream>

#include "adictop/errors.hpp"

namespace adictop {

Poly Poly::monomial(const Rat& c, long degree) {
    if (degree < 0) throw DomainError("Poly::monomial: negative degree");
    if (c == 0) return Poly();
    std::vector<Rat> v(static_cast<size_t>(degree) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (Rat& c : v) c = -c;
    return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& c) const {
    std::vector<Rat> v(coeffs_);
    for (Rat& x : v) x *= c;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DomainError("Poly::divmod: division by zero polynomial");
    std::vector<Rat> rem = coeffs_;
    long dd = divisor.degree();
    long rd = static_cast<long>(rem.size()) - 1;
    if (rd < dd) return {Poly(), *this};
    std::vector<Rat> quo(static_cast<size_t>(rd - dd) + 1, Rat(0));
    const Rat lead = divisor.leading();
    for (long k = rd; k >= dd; --k) {
        Rat c = rem[static_cast<size_t>(k)];
        if (c == 0) continue;
        Rat q = c / lead;
        quo[static_cast<size_t>(k - dd)] = q;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool Poly::divides(const Poly& dividend) const {
    if (is_zero()) return dividend.is_zero();
    return dividend.divmod(*this).second.is_zero();
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw DomainError("Poly::pow: negative exponent");
    Poly acc{Rat(1)};
    Poly b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

long Poly::order_at_zero() const {
    if (is_zero()) throw DomainError("Poly::order_at_zero: zero polynomial");
    long i = 0;
    while (coeffs_[static_cast<size_t>(i)] == 0) ++i;
    return i;
}

long Poly::multiplicity_of(const Poly& pi) const {
    if (is_zero()) throw DomainError("Poly::multiplicity_of: zero polynomial");
    if (pi.degree() < 1) throw DomainError("Poly::multiplicity_of: factor must be nonconstant");
    long m = 0;
    Poly cur = *this;
    for (;;) {
        auto [q, r] = cur.divmod(pi);
        if (!r.is_zero()) return m;
        cur = q;
        ++m;
    }
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("Poly::monic: zero polynomial");
    return *this * (Rat(1) / leading());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

PolyBezout poly_bezout(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("poly_bezout: gcd(0, 0) undefined");
    Poly old_r = a, r = b;
    Poly old_x{Rat(1)}, x;
    Poly old_y, y{Rat(1)};
    while (!r.is_zero()) {
        auto [q, rem] = old_r.divmod(r);
        old_r = r;
        r = rem;
        Poly tx = old_x - q * x;
        old_x = x;
        x = tx;
        Poly ty = old_y - q * y;
        old_y = y;
        y = ty;
    }
    Rat lead = old_r.leading();
    PolyBezout out{old_r * (Rat(1) / lead), old_x * (Rat(1) / lead), old_y * (Rat(1) / lead)};
    if (a * out.x + b * out.y != out.g) throw Error("poly_bezout: identity check failed");
    return out;
}

Poly poly_mod_inverse(const Poly& a, const Poly& m) {
    if (m.degree() < 1) throw DomainError("poly_mod_inverse: modulus must be nonconstant");
    PolyBezout t = poly_bezout(a.divmod(m).second, m);
    if (t.g.degree() != 0) throw DomainError("poly_mod_inverse: not a unit modulo " + m.to_string());
    // t.g is the constant 1 after normalization
    return t.x.divmod(m).second;
}

Poly poly_crt(const std::vector<std::pair<Poly, Poly>>& congruences) {
    Poly modulus{Rat(1)};
    Poly residue;
    for (const auto& [m, r] : congruences) {
        if (m.degree() < 1) throw DomainError("poly_crt: modulus must be nonconstant");
        // Merge x = residue (mod modulus) with x = r (mod m).
        PolyBezout t = poly_bezout(modulus, m);
        Poly diff = r - residue;
        auto [q, rem] = diff.divmod(t.g);
        if (!rem.is_zero()) throw InfeasibleError("poly_crt: inconsistent congruences");
        Poly m_reduced = m.divmod(t.g).first;   // m / gcd
        Poly l = modulus * m_reduced;           // lcm
        // (modulus/g)*t.x = 1 (mod m/g), so modulus*(q*t.x) = diff (mod lcm-part)
        Poly step = m_reduced.degree() >= 1 ? (q * t.x).divmod(m_reduced).second : Poly();
        residue = (residue + modulus * step).divmod(l).second;
        modulus = l;
    }
    for (const auto& [m, r] : congruences)
        if (!(residue - r).divmod(m).second.is_zero())
            throw Error("poly_crt: solution check failed");
    return residue;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << rat_to_string(mag);
        } else {
            if (mag != 1) out << rat_to_string(mag) << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace adictop
