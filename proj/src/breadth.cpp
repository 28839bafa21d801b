#include "adictop/breadth.hpp"

#include <sstream>

#include "adictop/linalg.hpp"
#include "adictop/verify.hpp"

namespace adictop {

namespace {

void push_check(Certificate& cert, Check c) {
    if (!c.holds)
        throw Error("certificate self-check failed: " + c.op +
                    (c.note.empty() ? "" : " (" + c.note + ")"));
    cert.checks.push_back(std::move(c));
}

std::string tuple_to_string(const std::vector<Ground>& tuple) {
    std::string s = "(";
    for (size_t i = 0; i < tuple.size(); ++i) s += (i ? ", " : "") + tuple[i].to_string();
    return s + ")";
}

// ---- multi-adic witnesses -------------------------------------------------

struct IntOps {
    using Elem = Int;
    static Elem one() { return Int(1); }
    static Elem lcm_den(const std::vector<Ground>& xs) {
        Int l = 1;
        for (const Ground& x : xs) l = lcm_int(l, rat_den(x.as_rational()));
        return l;
    }
    static Elem num_after_clearing(const Ground& x, const Elem& d) {
        Rat y = x.as_rational() * Rat(d);
        if (rat_den(y) != 1) throw Error("clearing denominators failed");
        return rat_num(y);
    }
    static Ground to_ground(const Elem& e) { return Ground(Rat(e)); }
    static Elem gcd2(const Elem& a, const Elem& b, Elem& u, Elem& v) {
        BezoutTriple t = bezout(a, b);
        u = t.x;
        v = t.y;
        return t.g;
    }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
};

struct PolyOps {
    using Elem = Poly;
    static Elem one() { return Poly(Rat(1)); }
    static Elem lcm_den(const std::vector<Ground>& xs) {
        Poly l(Rat(1));
        for (const Ground& x : xs) {
            Poly d = x.as_function().den();
            Poly g = Poly::gcd(l, d);
            l = (l * d).divmod(g).first;
        }
        return l;
    }
    static Elem num_after_clearing(const Ground& x, const Elem& d) {
        RatFunc y = x.as_function() * RatFunc(d, Poly(Rat(1)));
        if (y.den() != Poly(Rat(1))) throw Error("clearing denominators failed");
        return y.num();
    }
    static Ground to_ground(const Elem& e) { return Ground(RatFunc(e, Poly(Rat(1)))); }
    static Elem gcd2(const Elem& a, const Elem& b, Elem& u, Elem& v) {
        PolyBezout t = poly_bezout(a, b);
        u = t.x;
        v = t.y;
        return t.g;
    }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
};

// Split a across the generators: a = sum_j gens[j] * r_j with every r_j in
// R.  Requires the valuation criterion val(a) >= min_j val(gens[j]) at every
// support place.
template <class Ops>
std::vector<Ground> multiadic_witnesses(const Ground& a, const std::vector<Ground>& gens,
                                        const std::vector<ValuationSpec>& places,
                                        const std::vector<long>& vmin) {
    Ground g(1L);
    for (size_t s = 0; s < places.size(); ++s)
        g = g * places[s].uniformizer().pow(vmin[s]);
    std::vector<Ground> xs;
    for (const Ground& b : gens) xs.push_back(b / g);  // R-integral, gcd 1 at the support

    using Elem = typename Ops::Elem;
    Elem d = Ops::lcm_den(xs);  // unit of R: reduced denominators avoid the support
    std::vector<Elem> ys;
    for (const Ground& x : xs) ys.push_back(Ops::num_after_clearing(x, d));

    // Iterated extended gcd: sum_j ys[j] * ts[j] = G, a unit of R.
    std::vector<Elem> ts{Ops::one()};
    Elem big = ys[0];
    for (size_t j = 1; j < ys.size(); ++j) {
        Elem u, v;
        Elem g2 = Ops::gcd2(big, ys[j], u, v);
        for (Elem& t : ts) t = Ops::mul(t, u);
        ts.push_back(v);
        big = g2;
    }
    // sum_j x_j * (d/G) t_j = 1, hence a = sum_j gens[j] * (a/g)(d/G) t_j.
    Ground scale = a / g * Ops::to_ground(d) / Ops::to_ground(big);
    std::vector<Ground> witnesses;
    for (const Elem& t : ts) witnesses.push_back(Ops::to_ground(t) * scale);
    return witnesses;
}

void certify_holds(Certificate& cert, const RingDescriptor& r, const Ground& a,
                   const std::vector<Ground>& gens, const std::vector<Ground>& witnesses) {
    Bindings b{{"a", a.to_string()}};
    std::string rhs;
    for (size_t j = 0; j < gens.size(); ++j) {
        std::string bj = "b" + std::to_string(j + 1);
        std::string rj = "r" + std::to_string(j + 1);
        b[bj] = gens[j].to_string();
        b[rj] = witnesses[j].to_string();
        if (j) rhs += " + ";
        rhs += bj + "*" + rj;
    }
    push_check(cert, check_eq(r.field(), "a", rhs, b, "membership identity"));
    for (size_t j = 0; j < witnesses.size(); ++j)
        push_check(cert, check_in_ring(r.to_string(), "r" + std::to_string(j + 1),
                                       {{"r" + std::to_string(j + 1),
                                         witnesses[j].to_string()}},
                                       "witness lies in R"));
}

MembershipResult multiadic_membership(const RingDescriptor& r, const Ground& a,
                                      const std::vector<Ground>& gens) {
    std::vector<ValuationSpec> places = r.support();
    MembershipResult out;
    Certificate& cert = out.certificate;
    cert.claim = "breadth.sum-ideal-membership";
    cert.witness("ring", r.to_string());
    cert.witness("element", a.to_string());
    for (size_t j = 0; j < gens.size(); ++j)
        cert.witness("b" + std::to_string(j + 1), gens[j].to_string());

    std::vector<long> vmin(places.size());
    for (size_t s = 0; s < places.size(); ++s) {
        long m = val(gens[0], places[s]).finite();
        for (size_t j = 1; j < gens.size(); ++j)
            m = std::min(m, val(gens[j], places[s]).finite());
        vmin[s] = m;
    }

    if (!a.is_zero()) {
        for (size_t s = 0; s < places.size(); ++s) {
            ValOrInf va = val(a, places[s]);
            if (va.at_least(vmin[s])) continue;
            out.verdict = Verdict::Fails;
            cert.witness("verdict", "fails");
            cert.witness("separating_place", places[s].label());
            push_check(cert, check_val_lt("a", places[s], vmin[s], {{"a", a.to_string()}},
                                          "element valuation is below every generator's"));
            for (size_t j = 0; j < gens.size(); ++j)
                push_check(cert,
                           check_val_ge("b", places[s], vmin[s],
                                        {{"b", gens[j].to_string()}},
                                        "any combination sum b_j*r_j has valuation >= " +
                                            std::to_string(vmin[s]) + " at " +
                                            places[s].label()));
            return out;
        }
    }

    out.verdict = Verdict::Holds;
    cert.witness("verdict", "holds");
    if (a.is_zero()) {
        out.witnesses.assign(gens.size(), Ground(0L));
    } else if (r.field() == Field::Q) {
        out.witnesses = multiadic_witnesses<IntOps>(a, gens, places, vmin);
    } else {
        out.witnesses = multiadic_witnesses<PolyOps>(a, gens, places, vmin);
    }
    for (size_t j = 0; j < out.witnesses.size(); ++j)
        cert.witness("r" + std::to_string(j + 1), out.witnesses[j].to_string());
    certify_holds(cert, r, a, gens, out.witnesses);
    return out;
}

// ---- differential-ring semi-decision ---------------------------------------

// Coefficients of f at exponents [from, to).
std::vector<Rat> laurent_coeffs(const RatFunc& f, long from, long to) {
    std::vector<Rat> out(static_cast<size_t>(std::max(0L, to - from)), Rat(0));
    if (f.is_zero() || to <= from) return out;
    long v = f.order_at_zero();
    long nshift = f.num().order_at_zero();
    long need = to - v;  // unit-series coefficients required
    if (need <= 0) return out;
    std::vector<Rat> num(static_cast<size_t>(need), Rat(0));
    std::vector<Rat> den(static_cast<size_t>(need), Rat(0));
    for (long i = 0; i < need; ++i) {
        num[static_cast<size_t>(i)] = f.num().coeff(nshift + i);
        den[static_cast<size_t>(i)] = f.den().coeff(nshift - v + i);
    }
    std::vector<Rat> unit(static_cast<size_t>(need), Rat(0));
    for (long k = 0; k < need; ++k) {
        Rat acc = num[static_cast<size_t>(k)];
        for (long i = 0; i < k; ++i)
            acc -= unit[static_cast<size_t>(i)] * den[static_cast<size_t>(k - i)];
        unit[static_cast<size_t>(k)] = acc / den[0];
    }
    for (long m = from; m < to; ++m) {
        long i = m - v;
        if (i >= 0 && i < need) out[static_cast<size_t>(m - from)] = unit[static_cast<size_t>(i)];
    }
    return out;
}

// Series indices a member of the differential ring must vanish at: i in
// [1, -w] where w is the t-adic valuation of the derivation's image of t.
// For the default image 1/t this is exactly {1}.
std::vector<long> forbidden_indices(const RingDescriptor& r, long up_to) {
    long w = 0;
    const RatFunc& img = r.derivation().image_of_t;
    if (!img.is_zero()) w = img.order_at_zero();
    std::vector<long> out;
    for (long i = 1; i <= -w && i <= up_to; ++i) out.push_back(i);
    return out;
}

MembershipResult differential_membership(const RingDescriptor& r, const Ground& a,
                                         const std::vector<Ground>& gens,
                                         const SearchBounds& bounds) {
    MembershipResult out;
    Certificate& cert = out.certificate;
    cert.claim = "breadth.sum-ideal-membership";
    cert.witness("ring", r.to_string());
    cert.witness("element", a.to_string());
    for (size_t j = 0; j < gens.size(); ++j)
        cert.witness("b" + std::to_string(j + 1), gens[j].to_string());

    RatFunc af = a.as_function();
    std::vector<RatFunc> bf;
    for (const Ground& g : gens) bf.push_back(g.as_function());

    // Witness search: polynomial ansatz s_j of degree <= d whose forbidden
    // series coefficients vanish, escalating d.
    for (long d = 1; d <= bounds.max_degree; ++d) {
        std::vector<long> forbidden = forbidden_indices(r, d);
        auto allowed = [&](long i) {
            for (long f : forbidden)
                if (f == i) return false;
            return true;
        };
        std::vector<std::pair<size_t, long>> unknowns;  // (generator, exponent)
        for (size_t j = 0; j < gens.size(); ++j)
            for (long i = 0; i <= d; ++i)
                if (allowed(i)) unknowns.emplace_back(j, i);

        // Clear denominators: A = sum_j B_j s_j as polynomials.
        Poly clear(Rat(1));
        {
            PolyOps ops;
            std::vector<Ground> all{a};
            all.insert(all.end(), gens.begin(), gens.end());
            clear = ops.lcm_den(all);
        }
        Poly big_a = (af * RatFunc(clear, Poly(Rat(1)))).num();
        std::vector<Poly> big_b;
        for (const RatFunc& b : bf) big_b.push_back((b * RatFunc(clear, Poly(Rat(1)))).num());
        long maxdeg = big_a.degree();
        for (const Poly& b : big_b) maxdeg = std::max(maxdeg, b.degree() + d);
        size_t rows = static_cast<size_t>(maxdeg + 1);
        RatMatrix mat(rows, RatVector(unknowns.size(), Rat(0)));
        RatVector rhs(rows, Rat(0));
        for (size_t row = 0; row < rows; ++row) rhs[row] = big_a.coeff(static_cast<long>(row));
        for (size_t col = 0; col < unknowns.size(); ++col) {
            auto [j, i] = unknowns[col];
            for (long m = 0; m + i <= maxdeg; ++m)
                mat[static_cast<size_t>(m + i)][col] = big_b[j].coeff(m);
        }
        auto sol = solve_linear(mat, rhs);
        if (!sol) continue;
        std::vector<Poly> sj(gens.size());
        for (size_t col = 0; col < unknowns.size(); ++col) {
            auto [j, i] = unknowns[col];
            sj[j] = sj[j] + Poly::monomial((*sol)[col], i);
        }
        out.verdict = Verdict::Holds;
        cert.witness("verdict", "holds");
        cert.witness("ansatz_degree", std::to_string(d));
        for (size_t j = 0; j < sj.size(); ++j) {
            out.witnesses.push_back(Ground(RatFunc(sj[j], Poly(Rat(1)))));
            cert.witness("r" + std::to_string(j + 1), out.witnesses[j].to_string());
        }
        certify_holds(cert, r, a, gens, out.witnesses);
        return out;
    }

    // Refutation: the linear conditions imposed modulo t^k on arbitrary
    // series coefficients (forbidden indices removed) must be feasible for
    // every true membership; an infeasible truncation certifies "no".
    for (long k = 1; k <= bounds.max_truncation; ++k) {
        std::vector<long> vb(gens.size());
        for (size_t j = 0; j < gens.size(); ++j) {
            if (bf[j].is_zero()) throw DomainError("zero generator");
            vb[j] = bf[j].order_at_zero();
        }
        long lowm = af.is_zero() ? 0 : af.order_at_zero();
        for (long v : vb) lowm = std::min(lowm, v);
        lowm = std::min(lowm, 0L);
        std::vector<long> forbidden = forbidden_indices(r, k);
        auto allowed = [&](long i) {
            if (i < 0) return false;
            for (long f : forbidden)
                if (f == i) return false;
            return true;
        };
        std::vector<std::pair<size_t, long>> unknowns;
        for (size_t j = 0; j < gens.size(); ++j)
            for (long i = 0; i <= k - 1 - vb[j]; ++i)
                if (allowed(i)) unknowns.emplace_back(j, i);
        size_t rows = static_cast<size_t>(k - lowm);
        RatMatrix mat(rows, RatVector(unknowns.size(), Rat(0)));
        std::vector<Rat> acoeffs = laurent_coeffs(af, lowm, k);
        RatVector rhs(acoeffs);
        std::vector<std::vector<Rat>> bcoeffs;
        for (const RatFunc& b : bf) bcoeffs.push_back(laurent_coeffs(b, lowm - k, k));
        for (size_t col = 0; col < unknowns.size(); ++col) {
            auto [j, i] = unknowns[col];
            for (long m = lowm; m < k; ++m) {
                // coefficient of t^m in b_j * t^i
                long idx = m - i - (lowm - k);
                if (idx < 0 || idx >= static_cast<long>(bcoeffs[j].size())) continue;
                mat[static_cast<size_t>(m - lowm)][col] = bcoeffs[j][static_cast<size_t>(idx)];
            }
        }
        if (linear_infeasible(mat, rhs)) {
            out.verdict = Verdict::Fails;
            cert.witness("verdict", "fails");
            cert.witness("truncation", std::to_string(k));
            push_check(cert,
                       check_linear_infeasible(mat, rhs,
                                               "series coefficients modulo t^" +
                                                   std::to_string(k) +
                                                   " admit no solution, so no members of R "
                                                   "can combine to the element"));
            return out;
        }
    }

    out.verdict = Verdict::Unknown;
    cert.witness("verdict", "unknown");
    cert.witness("ansatz_degree_bound", std::to_string(bounds.max_degree));
    cert.witness("truncation_bound", std::to_string(bounds.max_truncation));
    return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds:
            return "holds";
        case Verdict::Fails:
            return "fails";
        case Verdict::Unknown:
            return "unknown";
    }
    return "";
}

MembershipResult sum_ideal_membership(const RingDescriptor& r, const Ground& a,
                                      const std::vector<Ground>& gens,
                                      const SearchBounds& bounds) {
    for (const Ground& g : gens)
        if (g.is_zero()) throw DomainError("sum_ideal_membership: zero generator");
    if (gens.empty()) {
        MembershipResult out;
        out.verdict = a.is_zero() ? Verdict::Holds : Verdict::Fails;
        out.certificate.claim = "breadth.sum-ideal-membership";
        out.certificate.witness("element", a.to_string());
        out.certificate.witness("verdict", verdict_name(out.verdict));
        return out;
    }
    if (r.kind() == RingDescriptor::Kind::Differential)
        return differential_membership(r, a, gens, bounds);
    return multiadic_membership(r, a, gens);
}

WnResult wn_check_tuple(const RingDescriptor& r, const std::vector<Ground>& tuple,
                        const SearchBounds& bounds) {
    if (tuple.empty()) throw DomainError("wn_check_tuple: empty tuple");
    for (const Ground& a : tuple)
        if (a.is_zero()) throw DomainError("wn_check_tuple: zero entry");
    WnResult out;
    out.certificate.claim = "breadth.wn-tuple";
    out.certificate.witness("ring", r.to_string());
    out.certificate.witness("tuple", tuple_to_string(tuple));
    bool any_unknown = false;
    for (size_t i = 0; i < tuple.size(); ++i) {
        std::vector<Ground> gens;
        for (size_t j = 0; j < tuple.size(); ++j)
            if (j != i) gens.push_back(tuple[j]);
        MembershipResult m = sum_ideal_membership(r, tuple[i], gens, bounds);
        if (m.verdict == Verdict::Holds) {
            out.verdict = Verdict::Holds;
            out.index = i;
            out.certificate.witness("index", std::to_string(i));
            for (Check& c : m.certificate.checks) out.certificate.checks.push_back(std::move(c));
            out.per_index.push_back(std::move(m));
            return out;
        }
        if (m.verdict == Verdict::Unknown) any_unknown = true;
        out.per_index.push_back(std::move(m));
    }
    out.verdict = any_unknown ? Verdict::Unknown : Verdict::Fails;
    out.certificate.witness("outcome", verdict_name(out.verdict));
    if (out.verdict == Verdict::Fails)
        for (MembershipResult& m : out.per_index)
            for (Check& c : m.certificate.checks) out.certificate.checks.push_back(std::move(c));
    return out;
}

BreadthResult breadth_multiadic(const RingDescriptor& r, std::uint64_t seed, long samples) {
    if (r.kind() == RingDescriptor::Kind::Differential)
        throw PreconditionError("breadth_multiadic needs a multi-adic descriptor");
    std::vector<ValuationSpec> places = r.support();
    long k = static_cast<long>(places.size());

    BreadthResult out;
    out.breadth = k;
    Certificate& cert = out.certificate;
    cert.claim = "breadth.multiadic-breadth";
    cert.witness("ring", r.to_string());
    cert.witness("breadth", std::to_string(k));

    // Tuple defeating the W_(k-1) condition: complementary uniformizer
    // products give pairwise incomparable valuation vectors.
    if (k == 1) {
        out.non_wk_tuple = {places[0].uniformizer()};
        cert.witness("non_w0_tuple", tuple_to_string(out.non_wk_tuple));
        push_check(cert, check_val_lt("a", places[0], 1000000,
                                      {{"a", out.non_wk_tuple[0].to_string()}},
                                      "a nonzero element never lies in the empty sum"));
    } else {
        for (long i = 0; i < k; ++i) {
            Ground prod(1L);
            for (long j = 0; j < k; ++j)
                if (j != i) prod = prod * places[static_cast<size_t>(j)].uniformizer();
            out.non_wk_tuple.push_back(prod);
        }
        cert.witness("non_wk_tuple", tuple_to_string(out.non_wk_tuple));
        WnResult fail = wn_check_tuple(r, out.non_wk_tuple);
        if (fail.verdict != Verdict::Fails)
            throw Error("breadth_multiadic: certificate tuple unexpectedly covered");
        for (Check& c : fail.certificate.checks) cert.checks.push_back(std::move(c));
    }

    // W_k validation on random (k+1)-tuples; the valuation-vector pigeonhole
    // guarantees a covered index, and wn_check_tuple re-verifies witnesses.
    Rng rng(seed);
    bool embedded_example = false;
    for (long s = 0; s < samples; ++s) {
        std::vector<Ground> tuple;
        for (long i = 0; i <= k; ++i) {
            Ground x(0L);
            do {
                x = sample_field_element(r.field(), places, rng);
            } while (x.is_zero());
            tuple.push_back(x);
        }
        WnResult res = wn_check_tuple(r, tuple);
        ++out.samples_run;
        if (res.verdict == Verdict::Holds) {
            ++out.samples_held;
            if (!embedded_example) {
                cert.witness("sample_tuple", tuple_to_string(tuple));
                for (Check& c : res.certificate.checks) cert.checks.push_back(std::move(c));
                embedded_example = true;
            }
        } else {
            throw Error("breadth_multiadic: sampled tuple defeated the W_k condition");
        }
    }
    cert.witness("samples_held", std::to_string(out.samples_held) + "/" +
                                     std::to_string(out.samples_run));
    return out;
}

WnReport wn_random_test(const RingDescriptor& r, long n, long samples, std::uint64_t seed,
                        const SearchBounds& bounds) {
    if (n < 0) throw DomainError("wn_random_test: n must be nonnegative");
    WnReport report;
    report.seed = seed;
    report.n = n;
    report.samples = samples;
    Rng rng(seed);
    std::vector<ValuationSpec> places = r.support();
    for (long s = 0; s < samples; ++s) {
        std::vector<Ground> tuple;
        for (long i = 0; i <= n; ++i) {
            Ground x(0L);
            do {
                x = sample_field_element(r.field(), places, rng);
            } while (x.is_zero());
            tuple.push_back(x);
        }
        WnResult res = wn_check_tuple(r, tuple, bounds);
        switch (res.verdict) {
            case Verdict::Holds:
                ++report.holds;
                break;
            case Verdict::Fails:
                ++report.fails;
                if (report.counterexamples.size() < 8) report.counterexamples.push_back(tuple);
                break;
            case Verdict::Unknown:
                ++report.unknown;
                break;
        }
    }
    return report;
}

Json WnReport::to_json() const {
    Json j;
    j["verdicts"]["holds"] = holds;
    j["verdicts"]["fails"] = fails;
    j["verdicts"]["unknown"] = unknown;
    Json ce = Json::array();
    for (const auto& tuple : counterexamples) {
        Json t = Json::array();
        for (const Ground& g : tuple) t.push_back(g.to_string());
        ce.push_back(t);
    }
    j["counterexamples"] = ce;
    j["seed"] = seed;
    j["n"] = n;
    j["samples"] = samples;
    return j;
}

bool independent_family_check(const std::vector<MembershipOracle>& oracles,
                              const FamilyWitness& witness) {
    size_t n = oracles.size();
    unsigned total = 1u << n;
    for (unsigned mask = 0; mask < total; ++mask) {
        auto it = witness.by_subset.find(mask);
        if (it == witness.by_subset.end()) return false;
        for (size_t i = 0; i < n; ++i) {
            bool should = (mask >> i) & 1u;
            if (oracles[i](it->second) != should) return false;
        }
    }
    return true;
}

}  // namespace adictop
