#include "adictop/rings.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "adictop/parser.hpp"
#include "adictop/verify.hpp"

namespace adictop {

namespace {

void push_check(Certificate& cert, Check c) {
    if (!c.holds)
        throw Error("certificate self-check failed: " + c.op +
                    (c.note.empty() ? "" : " (" + c.note + ")"));
    cert.checks.push_back(std::move(c));
}

ValOrInf val_at(const Ground& x, const ValuationSpec& place) { return val(x, place); }

}  // namespace

DerivationSpec RingDescriptor::default_derivation() {
    return DerivationSpec{RatFunc(Poly(Rat(1)), Poly::variable())};  // t |-> 1/t
}

RingDescriptor RingDescriptor::multi_adic_int(std::vector<Int> primes) {
    if (primes.empty()) throw DomainError("multi-adic ring needs at least one prime");
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw DomainError("not a prime: " + int_to_string(primes[i]));
        if (i > 0 && primes[i] == primes[i - 1])
            throw DomainError("repeated prime: " + int_to_string(primes[i]));
    }
    RingDescriptor r(Kind::MultiAdicInt);
    r.primes_ = std::move(primes);
    return r;
}

RingDescriptor RingDescriptor::multi_adic_poly(std::vector<Poly> irreducibles) {
    if (irreducibles.empty()) throw DomainError("multi-adic ring needs at least one irreducible");
    std::vector<ValuationSpec> specs;
    for (const Poly& pi : irreducibles) specs.push_back(ValuationSpec::pi_adic(pi));  // validates
    std::sort(irreducibles.begin(), irreducibles.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.to_string() < b.to_string();
    });
    for (size_t i = 1; i < irreducibles.size(); ++i)
        if (irreducibles[i] == irreducibles[i - 1])
            throw DomainError("repeated irreducible: " + irreducibles[i].to_string());
    RingDescriptor r(Kind::MultiAdicPoly);
    r.irreducibles_ = std::move(irreducibles);
    return r;
}

RingDescriptor RingDescriptor::differential(DerivationSpec d) {
    RingDescriptor r(Kind::Differential);
    r.derivation_ = std::move(d);
    return r;
}

const std::vector<Int>& RingDescriptor::primes() const {
    if (kind_ != Kind::MultiAdicInt) throw DomainError("descriptor has no prime support");
    return primes_;
}

const std::vector<Poly>& RingDescriptor::irreducibles() const {
    if (kind_ != Kind::MultiAdicPoly) throw DomainError("descriptor has no polynomial support");
    return irreducibles_;
}

const DerivationSpec& RingDescriptor::derivation() const {
    if (kind_ != Kind::Differential) throw DomainError("descriptor has no derivation");
    return *derivation_;
}

std::vector<ValuationSpec> RingDescriptor::support() const {
    std::vector<ValuationSpec> out;
    switch (kind_) {
        case Kind::MultiAdicInt:
            for (const Int& p : primes_) out.push_back(ValuationSpec::p_adic(p));
            break;
        case Kind::MultiAdicPoly:
            for (const Poly& pi : irreducibles_) out.push_back(ValuationSpec::pi_adic(pi));
            break;
        case Kind::Differential:
            out.push_back(ValuationSpec::t_adic());
            break;
    }
    return out;
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::MultiAdicInt:
            return primes_ == o.primes_;
        case Kind::MultiAdicPoly:
            return irreducibles_ == o.irreducibles_;
        case Kind::Differential:
            return derivation_->image_of_t == o.derivation_->image_of_t;
    }
    return false;
}

std::string RingDescriptor::to_string() const {
    switch (kind_) {
        case Kind::MultiAdicInt: {
            std::string s = "Zloc(";
            for (size_t i = 0; i < primes_.size(); ++i)
                s += (i ? "," : "") + int_to_string(primes_[i]);
            return s + ")";
        }
        case Kind::MultiAdicPoly: {
            std::string s = "Ploc(";
            for (size_t i = 0; i < irreducibles_.size(); ++i)
                s += (i ? "," : "") + irreducibles_[i].to_string();
            return s + ")";
        }
        case Kind::Differential:
            return "Rdiff(" + derivation_->to_string() + ")";
    }
    return "";
}

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip_ws(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

RingDescriptor parse_ring(const std::string& text_in) {
    std::string text = strip_ws(text_in);
    auto inner = [&](size_t prefix) {
        if (text.back() != ')') throw ParseError("expected ')'", text.size());
        return text.substr(prefix, text.size() - prefix - 1);
    };
    if (text.rfind("Zloc(", 0) == 0) {
        std::vector<Int> primes;
        for (const std::string& part : split_top_level(inner(5)))
            primes.push_back(rat_num(parse_rational(strip_ws(part))));
        return RingDescriptor::multi_adic_int(std::move(primes));
    }
    if (text.rfind("Ploc(", 0) == 0) {
        std::vector<Poly> pis;
        for (const std::string& part : split_top_level(inner(5)))
            pis.push_back(parse_poly(strip_ws(part)));
        return RingDescriptor::multi_adic_poly(std::move(pis));
    }
    if (text.rfind("Rdiff(", 0) == 0) {
        std::string body = strip_ws(inner(6));
        if (body.rfind("dt=", 0) != 0) throw ParseError("expected Rdiff(dt=...)", 0);
        return RingDescriptor::differential(DerivationSpec{parse_ratfunc(body.substr(3))});
    }
    throw ParseError("unknown ring descriptor '" + text + "'", 0);
}

bool contains(const RingDescriptor& r, const Ground& x) {
    switch (r.kind()) {
        case RingDescriptor::Kind::MultiAdicInt: {
            Rat q = x.as_rational();  // FieldMismatchError for genuine functions
            for (const Int& p : r.primes())
                if (!val_p(q, p).at_least(0)) return false;
            return true;
        }
        case RingDescriptor::Kind::MultiAdicPoly: {
            RatFunc f = x.as_function();
            if (f.is_zero()) return true;
            for (const Poly& pi : r.irreducibles())
                if (f.order_at(pi) < 0) return false;
            return true;
        }
        case RingDescriptor::Kind::Differential: {
            RatFunc f = x.as_function();
            if (f.is_zero()) return true;
            if (f.order_at_zero() < 0) return false;
            RatFunc df = derive(f, r.derivation());
            return df.is_zero() || df.order_at_zero() >= 0;
        }
    }
    throw Error("contains: unreachable");
}

NeighborhoodDescriptor::NeighborhoodDescriptor(RingDescriptor r, Ground c, Ground b)
    : ring(std::move(r)), scale(std::move(c)), center(std::move(b)) {
    if (scale.is_zero()) throw DomainError("neighborhood scale must be nonzero");
    if (ring.field() == Field::Q && (!scale.is_rational() || !center.is_rational())) {
        // as_rational throws unless the function is constant
        scale = Ground(scale.as_rational());
        center = Ground(center.as_rational());
    }
}

std::string NeighborhoodDescriptor::to_string() const {
    std::string s = "(" + scale.to_string() + ")*" + ring.to_string();
    if (!center.is_zero()) s += " + (" + center.to_string() + ")";
    return s;
}

bool NeighborhoodDescriptor::is_zero_neighborhood() const {
    return contains(ring, center / scale);
}

bool in_neighborhood(const NeighborhoodDescriptor& n, const Ground& x) {
    return contains(n.ring, (x - n.center) / n.scale);
}

Ground jacobson_generator(const RingDescriptor& r) {
    switch (r.kind()) {
        case RingDescriptor::Kind::MultiAdicInt: {
            Int g = 1;
            for (const Int& p : r.primes()) g *= p;
            return Ground(Rat(g));
        }
        case RingDescriptor::Kind::MultiAdicPoly: {
            Poly g(Rat(1));
            for (const Poly& pi : r.irreducibles()) g = g * pi;
            return Ground(RatFunc(g, Poly(Rat(1))));
        }
        case RingDescriptor::Kind::Differential:
            // The maximal ideal is {x in R : v(x) >= 1}; t^2 lies in it and
            // t^2*R stays inside (t itself is not a member of R).
            return Ground(RatFunc(Poly::variable().pow(2), Poly(Rat(1))));
    }
    throw Error("jacobson_generator: unreachable");
}

Ground sample_ring_element(const RingDescriptor& r, Rng& rng) {
    switch (r.kind()) {
        case RingDescriptor::Kind::MultiAdicInt: {
            Rat x(1);
            for (const Int& p : r.primes()) x *= pow_rat(Rat(p), rng.range(0, 3));
            // small multiplier with denominator prime to the support
            for (int attempt = 0; attempt < 64; ++attempt) {
                Int num = rng.range(1, 9);
                Int den = rng.range(1, 9);
                bool ok = true;
                for (const Int& p : r.primes())
                    if (den % p == 0) ok = false;
                if (!ok) continue;
                Rat m(num, den);
                if (rng.flip()) m = -m;
                return Ground(Rat(x * m));
            }
            return Ground(x);
        }
        case RingDescriptor::Kind::MultiAdicPoly: {
            RatFunc x(Rat(1));
            for (const Poly& pi : r.irreducibles()) {
                long e = rng.range(0, 2);
                x = x * RatFunc(pi.pow(e), Poly(Rat(1)));
            }
            for (int attempt = 0; attempt < 64; ++attempt) {
                Poly den(std::vector<Rat>{Rat(rng.range(1, 4)), Rat(rng.range(0, 3))});
                bool ok = true;
                for (const Poly& pi : r.irreducibles())
                    if (den.multiplicity_of(pi) > 0) ok = false;
                if (!ok) continue;
                Rat c(rng.range(1, 5));
                if (rng.flip()) c = -c;
                return Ground(x * RatFunc(Poly(c), den));
            }
            return Ground(x);
        }
        case RingDescriptor::Kind::Differential: {
            // c0 + c2 t^2 + c3 t^3 with small rational coefficients is always
            // a member for any derivation that multiplies d/dt by 1/t.
            auto small_rat = [&] { return Rat(rng.range(-4, 4), rng.range(1, 3)); };
            std::vector<Rat> coeffs{small_rat(), Rat(0), small_rat(), small_rat()};
            Ground g{RatFunc(Poly(coeffs), Poly(Rat(1)))};
            if (!contains(r, g)) return Ground(RatFunc(Rat(1)));  // custom derivations: fall back to 1
            return g;
        }
    }
    throw Error("sample_ring_element: unreachable");
}

Ground sample_field_element(Field f, const std::vector<ValuationSpec>& places, Rng& rng) {
    if (f == Field::Q) {
        Rat x(rng.range(1, 9));
        if (rng.flip()) x = -x;
        for (const ValuationSpec& v : places) x *= pow_rat(Rat(v.prime()), rng.range(-3, 3));
        return Ground(x);
    }
    RatFunc x{Rat(rng.range(1, 5))};
    for (const ValuationSpec& v : places) {
        RatFunc pi(v.pi(), Poly(Rat(1)));
        x = x * pi.pow(rng.range(-3, 3));
    }
    return Ground(x);
}

JacobsonResult jacobson_with_certificate(const RingDescriptor& r, std::uint64_t seed,
                                         int samples) {
    Ground g = jacobson_generator(r);
    Certificate cert;
    cert.claim = "radic.jacobson-generator";
    cert.witness("ring", r.to_string());
    cert.witness("generator", g.to_string());
    for (const ValuationSpec& place : r.support()) {
        long expect = r.kind() == RingDescriptor::Kind::Differential ? 2 : 1;
        push_check(cert, check_val_eq("g", place, expect, {{"g", g.to_string()}},
                                      "generator sits inside the maximal ideal at " +
                                          place.label()));
    }
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        Ground j = g * sample_ring_element(r, rng);
        Bindings b{{"j", j.to_string()}};
        push_check(cert, check_in_ring(r.to_string(), "1 + j", b, "1+j lies in R"));
        push_check(cert, check_in_ring(r.to_string(), "1/(1 + j)", b, "1+j is a unit of R"));
    }
    return {g, cert};
}

Certificate inversion_witness(const RingDescriptor& r, const Ground& x) {
    if (x.is_zero()) throw DomainError("inversion_witness: x = 0");
    Ground g = jacobson_generator(r);
    Bindings b{{"x", x.to_string()}, {"g", g.to_string()}};
    if (!contains(r, (x - Ground(1L)) / g))
        throw PreconditionError("inversion_witness: x is not in 1 + g*R");
    Certificate cert;
    cert.claim = "radic.inversion-continuity";
    cert.witness("ring", r.to_string());
    cert.witness("x", x.to_string());
    cert.witness("inverse", (Ground(1L) / x).to_string());
    cert.witness("generator", g.to_string());
    push_check(cert, check_in_ring(r.to_string(), "(x - 1)/g", b, "x lies in 1 + g*R"));
    push_check(cert, check_in_ring(r.to_string(), "1/x", b, "1/x lies in R"));
    push_check(cert,
               check_in_ring(r.to_string(), "(1/x - 1)/g", b, "1/x lies in 1 + g*R"));
    return cert;
}

namespace {

// Smallest valuation the set descriptor can reach at the given place;
// nullopt means +infinity (e.g. {0}).  Unbounded descriptors throw.
std::optional<long> inf_valuation(const BoundedSetDescriptor& b, const ValuationSpec& place) {
    if (std::holds_alternative<WholeFieldTag>(b))
        throw UnboundedError("the whole field is unbounded: no scaling exists");
    if (const auto* pts = std::get_if<std::vector<Ground>>(&b)) {
        std::optional<long> m;
        for (const Ground& x : *pts) {
            ValOrInf v = val_at(x, place);
            if (v.is_infinite()) continue;
            if (!m || v.finite() < *m) m = v.finite();
        }
        return m;
    }
    auto ring_inf = [&](const RingDescriptor& r) -> long {
        for (const ValuationSpec& s : r.support())
            if (s == place) return 0;
        throw UnboundedError("descriptor " + r.to_string() +
                             " is unbounded at place " + place.label());
    };
    if (const auto* ring = std::get_if<RingDescriptor>(&b)) return ring_inf(*ring);
    const auto& nb = std::get<NeighborhoodDescriptor>(b);
    long base = ring_inf(nb.ring);
    ValOrInf vc = val_at(nb.scale, place);
    long m = vc.finite() + base;
    ValOrInf vb = val_at(nb.center, place);
    if (!vb.is_infinite()) m = std::min(m, vb.finite());
    return m;
}

Field descriptor_field(const BoundedSetDescriptor& b) {
    if (const auto* pts = std::get_if<std::vector<Ground>>(&b)) {
        for (const Ground& x : *pts)
            if (!x.is_rational()) return Field::Qt;
        return Field::Q;
    }
    if (const auto* ring = std::get_if<RingDescriptor>(&b)) return ring->field();
    if (const auto* nb = std::get_if<NeighborhoodDescriptor>(&b)) return nb->ring.field();
    return std::get<WholeFieldTag>(b).field;
}

std::string describe(const BoundedSetDescriptor& b) {
    if (const auto* pts = std::get_if<std::vector<Ground>>(&b)) {
        std::string s = "{";
        for (size_t i = 0; i < pts->size(); ++i) s += (i ? ", " : "") + (*pts)[i].to_string();
        return s + "}";
    }
    if (const auto* ring = std::get_if<RingDescriptor>(&b)) return ring->to_string();
    if (const auto* nb = std::get_if<NeighborhoodDescriptor>(&b)) return nb->to_string();
    return "K";
}

}  // namespace

ScaleResult scale_into(const BoundedSetDescriptor& b, const NeighborhoodDescriptor& u) {
    if (!u.is_zero_neighborhood())
        throw PreconditionError("scale_into: target is not a neighborhood of 0");
    Field f = u.ring.field();
    if (descriptor_field(b) == Field::Qt && f == Field::Q)
        throw FieldMismatchError("scale_into: set lives on Q(t), target on Q");
    bool differential_target = u.ring.kind() == RingDescriptor::Kind::Differential;
    long margin = differential_target ? 2 : 0;

    Ground c(1L);
    Certificate cert;
    cert.claim = "radic.bounded-scaling";
    cert.witness("set", describe(b));
    cert.witness("target", u.to_string());
    std::vector<std::pair<ValuationSpec, long>> demanded;
    for (const ValuationSpec& place : u.ring.support()) {
        long need = val_at(u.scale, place).finite();
        std::optional<long> inf = inf_valuation(b, place);
        long e = inf ? std::max(0L, need - *inf + margin) : 0;
        if (e > 0) c = c * place.uniformizer().pow(e);
        demanded.emplace_back(place, need);
    }
    cert.witness("scale", c.to_string());

    if (const auto* pts = std::get_if<std::vector<Ground>>(&b)) {
        for (size_t i = 0; i < pts->size(); ++i) {
            Bindings bind{{"c", c.to_string()}, {"x", (*pts)[i].to_string()}};
            push_check(cert, check_in_nbhd(u.ring.to_string(), u.scale.to_string(),
                                           u.center.to_string(), "c*x", bind,
                                           "scaled point " + std::to_string(i)));
        }
    } else {
        for (const auto& [place, need] : demanded)
            push_check(cert,
                       check_val_ge("c", place, need, {{"c", c.to_string()}},
                                    "every member of the set has valuation >= " +
                                        std::to_string(need - val_at(c, place).finite()) +
                                        " at " + place.label() +
                                        ", so scaling by c reaches the target"));
        // sampled corroboration
        if (const auto* ring = std::get_if<RingDescriptor>(&b)) {
            Rng rng(7);
            for (int i = 0; i < 3; ++i) {
                Ground x = sample_ring_element(*ring, rng);
                Bindings bind{{"c", c.to_string()}, {"x", x.to_string()}};
                push_check(cert, check_in_nbhd(u.ring.to_string(), u.scale.to_string(),
                                               u.center.to_string(), "c*x", bind,
                                               "sampled member"));
            }
        }
    }
    return {c, cert};
}

TopologyDescriptor TopologyDescriptor::r_adic(RingDescriptor r) {
    TopologyDescriptor t;
    t.ring_ = std::move(r);
    return t;
}

TopologyDescriptor TopologyDescriptor::sum_of(TopologyDescriptor a, TopologyDescriptor b) {
    if (a.field() != b.field())
        throw FieldMismatchError("sum topology: components live on different ground fields");
    TopologyDescriptor t;
    t.left_ = std::make_shared<TopologyDescriptor>(std::move(a));
    t.right_ = std::make_shared<TopologyDescriptor>(std::move(b));
    return t;
}

const RingDescriptor& TopologyDescriptor::ring() const {
    if (is_sum()) throw DomainError("sum topology has no single ring");
    return *ring_;
}

const TopologyDescriptor& TopologyDescriptor::left() const {
    if (!is_sum()) throw DomainError("not a sum topology");
    return *left_;
}

const TopologyDescriptor& TopologyDescriptor::right() const {
    if (!is_sum()) throw DomainError("not a sum topology");
    return *right_;
}

Field TopologyDescriptor::field() const {
    return is_sum() ? left_->field() : ring_->field();
}

std::vector<ValuationSpec> TopologyDescriptor::support() const {
    if (!is_sum()) return ring_->support();
    std::vector<ValuationSpec> out = left_->support();
    for (const ValuationSpec& v : right_->support()) {
        bool seen = false;
        for (const ValuationSpec& w : out)
            if (w == v) seen = true;
        if (!seen) out.push_back(v);
    }
    return out;
}

std::string TopologyDescriptor::to_string() const {
    if (!is_sum()) return ring_->to_string();
    return "sum(" + left_->to_string() + "," + right_->to_string() + ")";
}

TopologyDescriptor parse_topology(const std::string& text_in) {
    std::string text = strip_ws(text_in);
    if (text.rfind("sum(", 0) == 0 && text.back() == ')') {
        auto parts = split_top_level(text.substr(4, text.size() - 5));
        if (parts.size() != 2) throw ParseError("sum(...) takes two topologies", 0);
        return TopologyDescriptor::sum_of(parse_topology(parts[0]), parse_topology(parts[1]));
    }
    if (text == "tadic") return TopologyDescriptor::r_adic(
        RingDescriptor::multi_adic_poly({Poly::variable()}));
    if (text.size() > 1 && text[0] == 'p' && std::isdigit(static_cast<unsigned char>(text[1])))
        return TopologyDescriptor::r_adic(RingDescriptor::multi_adic_int({Int(text.substr(1))}));
    if (text.rfind("pi(", 0) == 0 && text.back() == ')')
        return TopologyDescriptor::r_adic(
            RingDescriptor::multi_adic_poly({parse_poly(text.substr(3, text.size() - 4))}));
    return TopologyDescriptor::r_adic(parse_ring(text));
}

namespace {

RingDescriptor combine_bounded(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("sum topology components on different ground fields");
    using K = RingDescriptor::Kind;
    if (a.kind() == K::MultiAdicInt && b.kind() == K::MultiAdicInt) {
        std::set<Int> primes(a.primes().begin(), a.primes().end());
        primes.insert(b.primes().begin(), b.primes().end());
        return RingDescriptor::multi_adic_int({primes.begin(), primes.end()});
    }
    if (a.kind() == K::MultiAdicPoly && b.kind() == K::MultiAdicPoly) {
        std::vector<Poly> pis = a.irreducibles();
        for (const Poly& pi : b.irreducibles())
            if (std::find(pis.begin(), pis.end(), pi) == pis.end()) pis.push_back(pi);
        return RingDescriptor::multi_adic_poly(std::move(pis));
    }
    // Differential cases: the differential ring already sits inside the
    // t-adic valuation ring, so intersecting with Ploc(t) changes nothing.
    auto diff_with = [&](const RingDescriptor& diff,
                         const RingDescriptor& other) -> RingDescriptor {
        if (other.kind() == K::MultiAdicPoly && other.irreducibles().size() == 1 &&
            other.irreducibles()[0] == Poly::variable())
            return diff;
        throw UnsupportedError(
            "bounded ring of a sum with " + diff.to_string() + " and " + other.to_string() +
            " is not representable by a supported descriptor");
    };
    if (a.kind() == K::Differential && b.kind() == K::Differential) {
        if (a == b) return a;
        throw UnsupportedError("sum of two distinct differential rings is unsupported");
    }
    if (a.kind() == K::Differential) return diff_with(a, b);
    return diff_with(b, a);
}

}  // namespace

BoundedRingResult bounded_ring(const TopologyDescriptor& t, std::uint64_t seed) {
    RingDescriptor ring = [&]() {
        if (!t.is_sum()) return t.ring();
        RingDescriptor l = bounded_ring(t.left(), seed).ring;
        RingDescriptor r = bounded_ring(t.right(), seed).ring;
        return combine_bounded(l, r);
    }();

    Certificate cert;
    cert.claim = "radic.bounded-ring";
    cert.witness("topology", t.to_string());
    cert.witness("ring", ring.to_string());

    // Boundedness: scale the ring into a sample basic neighborhood.
    Ground sample_scale(1L);
    for (const ValuationSpec& place : ring.support())
        sample_scale = sample_scale * place.uniformizer().pow(2);
    NeighborhoodDescriptor sample_nbhd(ring, sample_scale, Ground(0L));
    ScaleResult sc = scale_into(BoundedSetDescriptor(ring), sample_nbhd);
    for (Check& c : sc.certificate.checks) cert.checks.push_back(std::move(c));

    // Extensional agreement with the component rings, sampled: membership in
    // the returned ring must equal simultaneous membership in all components.
    if (t.is_sum()) {
        std::vector<std::string> components;
        std::vector<const RingDescriptor*> comp_rings;
        std::vector<RingDescriptor> storage;
        std::function<void(const TopologyDescriptor&)> collect =
            [&](const TopologyDescriptor& node) {
                if (!node.is_sum()) {
                    storage.push_back(node.ring());
                    return;
                }
                collect(node.left());
                collect(node.right());
            };
        collect(t);
        for (const RingDescriptor& r : storage) components.push_back(r.to_string());
        Rng rng(seed);
        for (int i = 0; i < 4; ++i) {
            Ground in = sample_ring_element(ring, rng);
            push_check(cert, check_membership_conjunction(ring.to_string(), components,
                                                          in.to_string(), "sampled member"));
            Ground out = sample_field_element(ring.field(), ring.support(), rng);
            push_check(cert, check_membership_conjunction(ring.to_string(), components,
                                                          out.to_string(), "sampled point"));
        }
    }
    return {ring, cert};
}

CompareResult compare(const TopologyDescriptor& t0, const TopologyDescriptor& t1) {
    if (t0.is_sum()) throw PreconditionError("compare: t0 must be a single-place topology");
    const RingDescriptor& r0 = t0.ring();
    std::vector<ValuationSpec> s0 = r0.support();
    if (r0.kind() == RingDescriptor::Kind::Differential || s0.size() != 1)
        throw PreconditionError("compare: t0 must be induced by a single valuation ring");
    if (t0.field() != t1.field())
        throw FieldMismatchError("compare: topologies on different ground fields");
    const ValuationSpec place = s0[0];

    std::vector<ValuationSpec> s1 = t1.support();
    bool finer = false;
    for (const ValuationSpec& v : s1)
        if (v == place) finer = true;

    bool has_differential = false;
    {
        std::function<void(const TopologyDescriptor&)> scan = [&](const TopologyDescriptor& n) {
            if (!n.is_sum()) {
                if (n.ring().kind() == RingDescriptor::Kind::Differential)
                    has_differential = true;
                return;
            }
            scan(n.left());
            scan(n.right());
        };
        scan(t1);
    }

    Certificate cert;
    cert.claim = "radic.topology-trichotomy";
    cert.witness("t0", t0.to_string());
    cert.witness("t1", t1.to_string());

    if (finer) {
        cert.witness("outcome", "finer-or-equal");
        push_check(cert, check_place_in_support(t1.to_string(), place,
                                                "every basic t1-ring is integral at " +
                                                    place.label()));
        Ground prod(1L);
        for (const ValuationSpec& v : s1) prod = prod * v.uniformizer();
        for (long m = 1; m <= 3; ++m) {
            Ground c = prod.pow(m);
            push_check(cert,
                       check_val_ge("c", place, m, {{"c", c.to_string()}},
                                    "c * (bounded ring of t1) lies inside the " +
                                        place.label() + "-ball of radius " + std::to_string(m)));
        }
        return {CompareOutcome::FinerOrEqual, cert};
    }

    // Independent: produce a common point of (1 + u^m * ball) and a basic
    // t1-neighborhood, via simultaneous congruences.
    const long m = 2;
    cert.witness("outcome", "independent");
    Ground witness(0L);
    if (t1.field() == Field::Q) {
        std::vector<Congruence> cs;
        cs.push_back({pow_int(place.prime(), m), Int(1)});
        for (const ValuationSpec& v : s1) cs.push_back({pow_int(v.prime(), m), Int(0)});
        witness = Ground(Rat(crt_solve(cs)));
    } else {
        // Polynomial congruences: x = 1 mod pi0^m, x = 0 mod pi^m for pi in
        // the t1 support.  If a differential ring participates, the x = 0
        // congruence at t with exponent >= 2 already forces the derivative
        // condition (no linear term).
        Poly modulus(Rat(1));
        Poly x0;
        {
            std::vector<std::pair<Poly, Poly>> congruences;
            congruences.emplace_back(place.pi().pow(m), Poly(Rat(1)));
            long texp = has_differential ? std::max(m, 2L) + 2 : m;
            for (const ValuationSpec& v : s1)
                congruences.emplace_back(v.pi().pow(v.is_t_adic() ? texp : m), Poly());
            x0 = poly_crt(congruences);
        }
        witness = Ground(RatFunc(x0, Poly(Rat(1))));
    }
    Bindings b{{"x", witness.to_string()}};
    cert.witness("common_point", witness.to_string());
    push_check(cert, check_val_ge("x - 1", place, m, b,
                                  "x lies in the t0-neighborhood 1 + u^" + std::to_string(m)));
    {
        std::function<void(const TopologyDescriptor&)> emit = [&](const TopologyDescriptor& n) {
            if (n.is_sum()) {
                emit(n.left());
                emit(n.right());
                return;
            }
            const RingDescriptor& r = n.ring();
            Ground c(1L);
            for (const ValuationSpec& v : r.support()) c = c * v.uniformizer().pow(m);
            Bindings bb{{"x", witness.to_string()}, {"c", c.to_string()}};
            push_check(cert, check_in_ring(r.to_string(), "x/(c)", bb,
                                           "x lies in the basic t1-neighborhood c*" +
                                               r.to_string()));
        };
        emit(t1);
    }
    return {CompareOutcome::Independent, cert};
}

SemilocalResult semilocal_degree(const RingDescriptor& r, std::uint64_t seed) {
    Certificate cert;
    cert.claim = "radic.semilocal-degree";
    cert.witness("ring", r.to_string());
    if (r.kind() == RingDescriptor::Kind::Differential) {
        cert.witness("degree", "1");
        // Local: the nonunits {x in R : v(x) >= 1} are closed under addition
        // and under multiplication by R, sampled.
        Rng rng(seed);
        Ground t2 = jacobson_generator(r);
        for (int i = 0; i < 8; ++i) {
            Ground x = t2 * sample_ring_element(r, rng);
            Ground y = t2 * sample_ring_element(r, rng);
            Ground s = sample_ring_element(r, rng);
            ValuationSpec tv = ValuationSpec::t_adic();
            Bindings b{{"x", x.to_string()}, {"y", y.to_string()}, {"s", s.to_string()}};
            if (!(x + y).is_zero())
                push_check(cert, check_val_ge("x + y", tv, 1, b, "sum of nonunits is a nonunit"));
            push_check(cert, check_in_ring(r.to_string(), "x + y", b, "sum stays in R"));
            if (!(s * x).is_zero())
                push_check(cert, check_val_ge("s*x", tv, 1, b,
                                              "R-multiple of a nonunit is a nonunit"));
            push_check(cert, check_in_ring(r.to_string(), "s*x", b, "multiple stays in R"));
        }
        return {1, cert};
    }
    std::vector<ValuationSpec> support = r.support();
    cert.witness("degree", std::to_string(support.size()));
    for (const ValuationSpec& v : support) {
        Ground u = v.uniformizer();
        Bindings b{{"u", u.to_string()}};
        push_check(cert, check_in_ring(r.to_string(), "u", b,
                                       "maximal-ideal generator " + v.label() + " lies in R"));
        push_check(cert, check_not_in_ring(r.to_string(), "1/u", b,
                                           "generator " + v.label() + " is not a unit"));
    }
    // Distinctness: each generator is a unit at every other place.
    for (const ValuationSpec& v : support)
        for (const ValuationSpec& w : support) {
            if (v == w) continue;
            push_check(cert, check_val_eq("u", w, 0, {{"u", v.uniformizer().to_string()}},
                                          "ideals at " + v.label() + " and " + w.label() +
                                              " are distinct"));
        }
    return {static_cast<long>(support.size()), cert};
}

}  // namespace adictop
