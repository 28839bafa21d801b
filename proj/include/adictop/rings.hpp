#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adictop/certificate.hpp"
#include "adictop/ground.hpp"
#include "adictop/rng.hpp"
#include "adictop/valuation.hpp"

namespace adictop {

// Finite symbolic description of a subring R of K with decidable
// membership.  Sets are descriptors, never enumerations: all decisions are
// valuation inequalities on the symbols; sampling only corroborates
// certificates.
class RingDescriptor {
public:
    enum class Kind { MultiAdicInt, MultiAdicPoly, Differential };

    // Intersection of Z_(p) over a nonempty set of distinct primes.
    static RingDescriptor multi_adic_int(std::vector<Int> primes);
    // Intersection of Q[t]_(pi) over monic irreducibles.
    static RingDescriptor multi_adic_poly(std::vector<Poly> irreducibles);
    // { x : v(x) >= 0 and v(dx) >= 0 } for the t-adic v and the given
    // derivation.  The default derivation sends t to 1/t, which is
    // incompatible with v; with d = d/dt the second condition would be
    // implied by the first and the ring would collapse to the valuation
    // ring.
    static RingDescriptor differential(DerivationSpec d = default_derivation());

    static DerivationSpec default_derivation();

    Kind kind() const { return kind_; }
    Field field() const { return kind_ == Kind::MultiAdicInt ? Field::Q : Field::Qt; }
    const std::vector<Int>& primes() const;
    const std::vector<Poly>& irreducibles() const;
    const DerivationSpec& derivation() const;

    // The places at which membership constrains valuations.  For the
    // differential ring this is {t} (the derivation condition rides along).
    std::vector<ValuationSpec> support() const;

    bool operator==(const RingDescriptor& o) const;

    std::string to_string() const;  // "Zloc(5,7)", "Ploc(t,t-1)", "Rdiff(dt=1/t)"

private:
    explicit RingDescriptor(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<Int> primes_;
    std::vector<Poly> irreducibles_;
    std::optional<DerivationSpec> derivation_;
};

RingDescriptor parse_ring(const std::string& text);

// Exact membership decision.
bool contains(const RingDescriptor& r, const Ground& x);

// The set c*R + b.
struct NeighborhoodDescriptor {
    RingDescriptor ring;
    Ground scale;   // nonzero
    Ground center;

    NeighborhoodDescriptor(RingDescriptor r, Ground c, Ground b);
    std::string to_string() const;
    bool is_zero_neighborhood() const;  // contains 0, i.e. center in scale*R
};

bool in_neighborhood(const NeighborhoodDescriptor& n, const Ground& x);

// Nonzero g with g*R inside the Jacobson radical of R.
Ground jacobson_generator(const RingDescriptor& r);

// Same, with the sampled unit certificate: for `samples` random j in g*R,
// 1 + j is verified to be a unit of R.
struct JacobsonResult {
    Ground generator;
    Certificate certificate;
};
JacobsonResult jacobson_with_certificate(const RingDescriptor& r, std::uint64_t seed,
                                         int samples = 10);

// Continuity of inversion at 1: for x in 1 + gR, certifies 1/x in R and
// 1/x - 1 in gR.
Certificate inversion_witness(const RingDescriptor& r, const Ground& x);

// Descriptor of a set to be scaled into a neighborhood.
struct WholeFieldTag {
    Field field;
};
using BoundedSetDescriptor =
    std::variant<std::vector<Ground>, NeighborhoodDescriptor, RingDescriptor, WholeFieldTag>;

struct ScaleResult {
    Ground scale;
    Certificate certificate;
};

// Nonzero c with c*B inside U; U must be a neighborhood of 0.  The whole
// field is unbounded and raises UnboundedError.
ScaleResult scale_into(const BoundedSetDescriptor& b, const NeighborhoodDescriptor& u);

// R-adic topology of a ring, or the join of two topologies (basis: pairwise
// intersections of basic opens).
class TopologyDescriptor {
public:
    static TopologyDescriptor r_adic(RingDescriptor r);
    static TopologyDescriptor sum_of(TopologyDescriptor a, TopologyDescriptor b);

    bool is_sum() const { return left_ != nullptr; }
    const RingDescriptor& ring() const;  // RAdic only
    const TopologyDescriptor& left() const;
    const TopologyDescriptor& right() const;
    Field field() const;

    std::vector<ValuationSpec> support() const;

    std::string to_string() const;

private:
    TopologyDescriptor() = default;
    std::optional<RingDescriptor> ring_;
    std::shared_ptr<TopologyDescriptor> left_, right_;
};

TopologyDescriptor parse_topology(const std::string& text);

struct BoundedRingResult {
    RingDescriptor ring;
    Certificate certificate;
};

// The canonical bounded neighborhood-of-0 ring of a topology descriptor.
BoundedRingResult bounded_ring(const TopologyDescriptor& t, std::uint64_t seed = 1);

enum class CompareOutcome { FinerOrEqual, Independent };

struct CompareResult {
    CompareOutcome outcome;
    Certificate certificate;
};

// Trichotomy against a V-topology: either every t0-neighborhood contains a
// t1-neighborhood (t1 is finer or equal), or the two are independent, with
// an explicit common point as witness.  t0 must be a single-place R-adic
// topology.
CompareResult compare(const TopologyDescriptor& t0, const TopologyDescriptor& t1);

struct SemilocalResult {
    long degree;
    Certificate certificate;
};

// Number of maximal ideals of the descriptor's ring.
SemilocalResult semilocal_degree(const RingDescriptor& r, std::uint64_t seed = 1);

// Sampling used by certificates: a random element of R (exercising
// denominators and all support places), and a random element of K.
Ground sample_ring_element(const RingDescriptor& r, Rng& rng);
Ground sample_field_element(Field f, const std::vector<ValuationSpec>& places, Rng& rng);

}  // namespace adictop
