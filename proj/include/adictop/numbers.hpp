#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "adictop/errors.hpp"

namespace adictop {

// Exact scalars.  Int is an arbitrary-precision integer; Rat is kept fully
// reduced with positive denominator by the backend, so equality is
// syntactic and printed forms are canonical.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// base^e for e >= 0.
Int pow_int(const Int& base, long e);
Rat pow_rat(const Rat& base, long e);  // negative e allowed for nonzero base

// Floored remainder in [0, m) for m > 0.
Int mod_floor(const Int& a, const Int& m);

// Exact p-adic valuation of a nonzero integer.
long int_valuation(Int n, const Int& p);

struct BezoutTriple {
    Int g;  // gcd(a, b) > 0
    Int x;
    Int y;  // a*x + b*y = g
};

// Extended Euclid with the identity re-verified before returning.
// Both arguments zero -> DomainError.
BezoutTriple bezout(const Int& a, const Int& b);

// Inverse of a modulo m (m > 1, gcd(a, m) = 1).
Int mod_inverse(const Int& a, const Int& m);

struct Congruence {
    Int modulus;  // > 0
    Int residue;
};

// Simultaneous congruences, merged pairwise.  Moduli need not be coprime;
// inconsistent residues raise InfeasibleError.  Result is the least
// non-negative solution, taken modulo lcm of the moduli.
Int crt_solve(const std::vector<Congruence>& congruences);

// Deterministic Miller-Rabin for the word-sized range, probabilistic with a
// fixed witness set above it (inputs in this artifact are tiny).
bool is_prime(const Int& n);

std::string int_to_string(const Int& n);
std::string rat_to_string(const Rat& x);

}  // namespace adictop
