#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "adictop/certificate.hpp"
#include "adictop/rings.hpp"

namespace adictop {

enum class Verdict { Holds, Fails, Unknown };

std::string verdict_name(Verdict v);

// Bounds for the differential-ring semi-decision: witness polynomials of
// degree <= max_degree, refutation by truncation at t^k for k <= max_truncation.
struct SearchBounds {
    long max_degree = 8;
    long max_truncation = 16;
};

struct MembershipResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<Ground> witnesses;  // a = sum gens[j] * witnesses[j] when Holds
    Certificate certificate;
};

// Is a in b_1*R + ... + b_k*R?  Exact for multi-adic rings (valuation
// criterion, witnesses by splitting a across the generators); semi-decided
// for the differential ring (polynomial ansatz, truncated refutation).
MembershipResult sum_ideal_membership(const RingDescriptor& r, const Ground& a,
                                      const std::vector<Ground>& gens,
                                      const SearchBounds& bounds = {});

struct WnResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<size_t> index;  // least i with a_i in the span of the others
    std::vector<MembershipResult> per_index;
    Certificate certificate;
};

// The covering condition on a (n+1)-tuple: some a_i lies in the sum of the
// other entries' R-multiples.
WnResult wn_check_tuple(const RingDescriptor& r, const std::vector<Ground>& tuple,
                        const SearchBounds& bounds = {});

struct BreadthResult {
    long breadth;
    std::vector<Ground> non_wk_tuple;  // k elements defeating the (k-1) condition
    long samples_run = 0;
    long samples_held = 0;
    Certificate certificate;
};

// Exact breadth of a multi-adic ring: k = size of the support, certified by
// a tuple with pairwise incomparable valuation vectors (no entry covered by
// the others) plus a randomized validation that (k+1)-tuples always reduce.
BreadthResult breadth_multiadic(const RingDescriptor& r, std::uint64_t seed,
                                long samples = 10000);

struct WnReport {
    long holds = 0;
    long fails = 0;
    long unknown = 0;
    std::vector<std::vector<Ground>> counterexamples;
    std::uint64_t seed = 0;
    long n = 0;
    long samples = 0;

    Json to_json() const;
};

// Randomized harness: sample (n+1)-tuples from the documented distribution
// (products of uniformizer powers with exponents in [-3,3], small unit
// multipliers) and tally verdicts.
WnReport wn_random_test(const RingDescriptor& r, long n, long samples, std::uint64_t seed,
                        const SearchBounds& bounds = {});

// Witness family for an independence pattern: one element per subset of
// {1..n}, keyed by bitmask.
struct FamilyWitness {
    std::map<unsigned, Ground> by_subset;
};

using MembershipOracle = std::function<bool(const Ground&)>;

// True iff every witness realizes exactly its pattern: a_S in V_i <=> i in S.
bool independent_family_check(const std::vector<MembershipOracle>& oracles,
                              const FamilyWitness& witness);

}  // namespace adictop
