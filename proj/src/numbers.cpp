#include "adictop/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace adictop {

Int gcd_int(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int l = boost::multiprecision::lcm(a, b);
    return l < 0 ? Int(-l) : l;
}

Int pow_int(const Int& base, long e) {
    if (e < 0) throw DomainError("pow_int: negative exponent");
    Int acc = 1;
    Int b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DomainError("pow_rat: zero base with negative exponent");
        return Rat(0);
    }
    bool invert = e < 0;
    long k = invert ? -e : e;
    Rat acc = 1, b = base;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (invert) acc = Rat(1) / acc;
    return acc;
}

Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw DomainError("mod_floor: modulus must be positive");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

long int_valuation(Int n, const Int& p) {
    if (n == 0) throw DomainError("int_valuation: zero has no finite valuation");
    if (p < 2) throw DomainError("int_valuation: place must be >= 2");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

BezoutTriple bezout(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw DomainError("bezout: gcd(0, 0) undefined");
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated division is fine: the identity is maintained exactly
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
        tmp = old_y - q * y;
        old_y = y;
        y = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    BezoutTriple out{old_r, old_x, old_y};
    if (a * out.x + b * out.y != out.g || out.g <= 0)
        throw Error("bezout: identity check failed");
    return out;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m <= 1) throw DomainError("mod_inverse: modulus must exceed 1");
    BezoutTriple t = bezout(mod_floor(a, m), m);
    if (t.g != 1) throw DomainError("mod_inverse: not a unit modulo " + int_to_string(m));
    return mod_floor(t.x, m);
}

Int crt_solve(const std::vector<Congruence>& congruences) {
    Int modulus = 1;
    Int residue = 0;
    for (const Congruence& c : congruences) {
        if (c.modulus <= 0) throw DomainError("crt_solve: modulus must be positive");
        // Merge x = residue (mod modulus) with x = c.residue (mod c.modulus).
        BezoutTriple t = bezout(modulus, c.modulus);
        Int diff = c.residue - residue;
        if (diff % t.g != 0)
            throw InfeasibleError("crt_solve: inconsistent congruences at modulus " +
                                  int_to_string(c.modulus));
        Int l = modulus / t.g * c.modulus;
        Int step = mod_floor(diff / t.g * t.x, c.modulus / t.g);
        residue = mod_floor(residue + modulus * step, l);
        modulus = l;
    }
    for (const Congruence& c : congruences) {
        if (mod_floor(residue - c.residue, c.modulus) != 0)
            throw Error("crt_solve: solution check failed");
    }
    return residue;
}

namespace {

bool miller_rabin_round(const Int& n, const Int& a, const Int& d, int s) {
    Int x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These witnesses are deterministic far beyond any input this tool sees.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin_round(n, Int(a), d, s)) return false;
    }
    return true;
}

std::string int_to_string(const Int& n) { return n.str(); }

std::string rat_to_string(const Rat& x) {
    Int d = rat_den(x);
    if (d == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + d.str();
}

}  // namespace adictop
