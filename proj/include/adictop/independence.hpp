#pragma once

#include <cstdint>

#include "adictop/certificate.hpp"
#include "adictop/rings.hpp"

namespace adictop {

struct OneInSumResult {
    Ground u;
    Ground v;  // u + v = 1, u in U, v in V
    Certificate certificate;
};

// Decomposition 1 = u + v across two zero-neighborhoods over multi-adic
// rings with disjoint supports.
OneInSumResult one_in_sum(const NeighborhoodDescriptor& u_nbhd,
                          const NeighborhoodDescriptor& v_nbhd);

struct CommonPointResult {
    Ground point;
    Certificate certificate;
};

// A point of U cap V for neighborhoods with arbitrary centers (disjoint
// multi-adic supports), by simultaneous congruences after clearing
// denominators.
CommonPointResult independence_witness(const NeighborhoodDescriptor& u_nbhd,
                                       const NeighborhoodDescriptor& v_nbhd);

struct SplitResult {
    Ground part_p;  // integral at p (carries the q-pole)
    Ground part_q;  // integral at q
    Certificate certificate;
};

// Bezout splitting x = x_p + x_q across the two localizations of a two-prime
// ring: the denominator factors as s*t with s prime to p and t prime to q,
// and the Bezout identity for (s, t) splits the fraction.
SplitResult split_fraction(const RingDescriptor& a, const Rat& x);

// Join of two topologies (basis: pairwise intersections).
TopologyDescriptor sum_topology(const TopologyDescriptor& t1, const TopologyDescriptor& t2);

// Membership in a basic open of the sum topology, decided componentwise.
bool in_basic_sum_neighborhood(const NeighborhoodDescriptor& u1,
                               const NeighborhoodDescriptor& u2, const Ground& x);

struct NonHenselResult {
    Int p, q;
    long m, n;
    Rat a;       // crt witness: a = 1 mod p^m, a = 0 mod q^n
    Rat fa;      // a^2 - a
    Certificate certificate;
};

// Witness that the join of the p-adic and q-adic topologies fails the local
// root-lifting property: f(x) = x^2 - x maps the neighborhood
// U = p^m Z_(p) cap q^n Z_(q) of 0 onto a set missing points of every
// candidate image neighborhood, exhibited by a with f(a) = f(1-a) whose two
// preimages both miss U.
NonHenselResult non_gt_hensel_certificate(const Int& p, const Int& q, long m, long n);

struct ProblematicReport {
    RingDescriptor ring;           // Z localized at the complement of pZ u qZ
    Ground jacobson;               // generator of the radical
    OneInSumResult independence;   // for the sample pair of neighborhoods
    Certificate certificate;       // factorization samples + ideal facts
};

// The two-maximal-ideal pipeline: builds A = Z_(p,q), verifies the
// saturation (A minus p-part) * (A minus q-part) = A minus {0} on samples by
// explicit factorization, reports the maximal ideals and radical, and emits
// an independence certificate for the induced localizations.
ProblematicReport problematic_instance(const Int& p, const Int& q, std::uint64_t seed);

}  // namespace adictop
