#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adictop/certificate.hpp"
#include "adictop/linalg.hpp"
#include "adictop/rational_function.hpp"

namespace adictop {

// Point of P^1(Q): a rational number or the point at infinity.
struct P1Point {
    bool infinite = false;
    Rat value;

    static P1Point at(const Rat& v) { return P1Point{false, v}; }
    static P1Point infinity() { return P1Point{true, Rat(0)}; }
    bool operator==(const P1Point& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string to_string() const { return infinite ? "inf" : rat_to_string(value); }
    static P1Point parse(const std::string& text);
};

// Finite formal sum of distinct points with integer multiplicities.
struct Divisor {
    std::vector<std::pair<P1Point, long>> entries;

    long degree() const;
    long multiplicity_at(const P1Point& p) const;
    void validate() const;  // distinct points, nonzero multiplicities
    Divisor minus_point(const P1Point& p) const;  // lower one multiplicity
    std::string to_string() const;
    Json to_json() const;
    static Divisor from_json(const Json& j);
};

// Exact order of a nonzero rational function (in the display variable x) at
// a point of P^1; poles are negative.
long ord_at(const RatFunc& f, const P1Point& p);

// True when every pole of f lies among the given points.
bool poles_within(const RatFunc& f, const std::vector<P1Point>& pts);

// Degree of f as a morphism P^1 -> P^1.
long map_degree(const RatFunc& f);

// Vector with exact integer coordinates avoiding every one of the proper
// subspaces (given by spanning sets), found by a deterministic sweep of
// integer vectors ordered by max-norm with a fixed tie-break.
RatVector avoid_subspaces(long dim, const std::vector<std::vector<RatVector>>& subspaces);

struct RrBasisResult {
    std::vector<RatFunc> basis;  // dimension = max(0, deg D + 1)
    Certificate certificate;
};

// Basis of H^0(D) = { f : div(f) + D >= 0 } on P^1 over Q; every basis
// element's divisor bound is re-verified by exact factorization.
RrBasisResult rr_space_p1(const Divisor& d);

struct PrescribedResult {
    RatFunc function;
    Certificate certificate;
};

// Function with simple poles exactly at the given points, a simple zero at
// q, and total degree n (so n-1 further zeros), built from the
// Riemann-Roch basis by subspace avoidance.
PrescribedResult prescribed_function(const std::vector<P1Point>& poles, const P1Point& zero);

struct WeakApproxConstraint {
    Int prime;
    Rat target;
    long precision;
};

struct WeakApproxResult {
    Rat value;
    Certificate certificate;
};

// Simultaneous approximation on the line: val_p(x - target_p) >= precision_p
// for each constraint; always solvable over Q.
WeakApproxResult weak_approx_line(const std::vector<WeakApproxConstraint>& constraints);

struct ConicWitnessResult {
    Rat a;
    Rat b;  // b^2 = 1 + c*a, b = eps_p mod p^m, b = eps_q mod q^n
    Certificate certificate;
};

// Point on the conic b^2 = 1 + c*a realizing a prescribed sign pattern at
// two odd primes; a = 0 solutions are skipped.
ConicWitnessResult conic_sign_witness(const Rat& c, const Int& p, const Int& q, int eps_p,
                                      int eps_q, long m, long n);

// Sign-pattern specification for the quadratic membership predicate: U is
// the multiplicative ball 1 + p^m Z_(p), U' its q-adic analogue; a candidate
// realizes subset S when b_i lands in U always, in U' for i in S, and -b_i
// in U' otherwise.
struct PatternSpec {
    std::vector<Rat> constants;   // distinct, nonzero
    std::set<size_t> subset;      // 1-based indices
    Int p, q;                     // odd distinct primes
    long mp = 1, mq = 1;

    void validate() const;
    Json to_json() const;
    static PatternSpec from_json(const Json& j);
};

struct PatternVerifyResult {
    bool ok;
    Certificate certificate;  // checks record each condition, holding or not
};

PatternVerifyResult ip_pattern_verify(const PatternSpec& spec, const Rat& a,
                                      const std::vector<Rat>& bs);

}  // namespace adictop
