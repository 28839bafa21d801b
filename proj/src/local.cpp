#include "adictop/local.hpp"

#include <sstream>

namespace adictop {

Int rat_mod_pn(const Rat& x, const Int& p, long n) {
    if (n < 0) throw DomainError("rat_mod_pn: negative precision");
    Int modulus = pow_int(p, n);
    if (modulus == 1) return 0;
    Int num = mod_floor(rat_num(x), modulus);
    Int den = rat_den(x);
    if (den % p == 0) throw PrecisionError("denominator not invertible modulo " + int_to_string(p));
    return num * mod_inverse(den, modulus) % modulus;
}

LocalExpansion LocalExpansion::zero(const LocalContext& ctx) {
    return LocalExpansion(ctx.place, 0, ctx.precision);
}

LocalExpansion LocalExpansion::expand_at(const Ground& x, const ValuationSpec& place, long prec,
                                         bool laurent) {
    ValOrInf v = val(x, place);
    if (!v.is_infinite() && v.finite() < 0 && !laurent)
        throw PrecisionError("negative valuation requires Laurent mode");
    LocalExpansion out(place, 0, prec);
    if (v.is_infinite() || v.finite() >= prec) return out;  // all-zero digits
    long lo = v.finite();
    out.lo_ = lo;
    long ndigits = prec - lo;
    if (place.is_p_adic()) {
        const Int& p = place.prime();
        Rat unit = x.as_rational() / pow_rat(Rat(p), lo);
        Int r = rat_mod_pn(unit, p, ndigits);
        out.pdigits_.resize(static_cast<size_t>(ndigits));
        for (long i = 0; i < ndigits; ++i) {
            out.pdigits_[static_cast<size_t>(i)] = r % p;
            r /= p;
        }
    } else {
        RatFunc f = x.as_function();
        // f = t^lo * num/den with den(0) != 0; truncated series division.
        std::vector<Rat> num(static_cast<size_t>(ndigits), Rat(0));
        std::vector<Rat> den(static_cast<size_t>(ndigits), Rat(0));
        long nshift = f.num().order_at_zero();
        for (long i = 0; i < ndigits; ++i) {
            num[static_cast<size_t>(i)] = f.num().coeff(nshift + i);
            den[static_cast<size_t>(i)] = f.den().coeff(nshift - lo + i);
        }
        out.tcoeffs_.resize(static_cast<size_t>(ndigits));
        for (long k = 0; k < ndigits; ++k) {
            Rat acc = num[static_cast<size_t>(k)];
            for (long i = 0; i < k; ++i)
                acc -= out.tcoeffs_[static_cast<size_t>(i)] * den[static_cast<size_t>(k - i)];
            out.tcoeffs_[static_cast<size_t>(k)] = acc / den[0];
        }
    }
    // Trim so the first digit is nonzero and nothing extends past precision.
    auto is_zero_digit = [&](long i) {
        return place.is_p_adic() ? out.pdigits_[static_cast<size_t>(i)] == 0
                                 : out.tcoeffs_[static_cast<size_t>(i)] == 0;
    };
    long len = ndigits;
    long skip = 0;
    while (skip < len && is_zero_digit(skip)) ++skip;
    if (skip == len) {
        out.pdigits_.clear();
        out.tcoeffs_.clear();
        out.lo_ = 0;
    } else if (skip > 0) {
        if (place.is_p_adic())
            out.pdigits_.erase(out.pdigits_.begin(), out.pdigits_.begin() + skip);
        else
            out.tcoeffs_.erase(out.tcoeffs_.begin(), out.tcoeffs_.begin() + skip);
        out.lo_ += skip;
    }
    return out;
}

LocalExpansion LocalExpansion::expand(const Ground& x, const LocalContext& ctx, bool laurent) {
    return expand_at(x, ctx.place, ctx.precision, laurent);
}

bool LocalExpansion::is_zero_mod_precision() const {
    return pdigits_.empty() && tcoeffs_.empty();
}

long LocalExpansion::known_valuation() const {
    if (is_zero_mod_precision())
        throw PrecisionError("valuation undetermined: zero modulo uniformizer^" +
                             std::to_string(precision_));
    return lo_;
}

Ground LocalExpansion::representative() const {
    if (place_.is_p_adic()) {
        Rat acc = 0;
        Rat power = pow_rat(Rat(place_.prime()), lo_);
        for (const Int& d : pdigits_) {
            acc += Rat(d) * power;
            power *= Rat(place_.prime());
        }
        return Ground(acc);
    }
    RatFunc acc;
    RatFunc tpow = RatFunc::variable().pow(lo_);
    for (const Rat& c : tcoeffs_) {
        acc = acc + RatFunc(c) * tpow;
        tpow = tpow * RatFunc::variable();
    }
    return Ground(acc);
}

namespace {

long effective_valuation(const LocalExpansion& e) {
    return e.is_zero_mod_precision() ? e.precision() : e.known_valuation();
}

}  // namespace

LocalExpansion LocalExpansion::add(const LocalExpansion& o) const {
    if (!(place_ == o.place_)) throw DomainError("LocalExpansion: mixed completions");
    long prec = std::min(precision_, o.precision_);
    return expand_at(representative() + o.representative(), place_, prec, true);
}

LocalExpansion LocalExpansion::sub(const LocalExpansion& o) const {
    if (!(place_ == o.place_)) throw DomainError("LocalExpansion: mixed completions");
    long prec = std::min(precision_, o.precision_);
    return expand_at(representative() - o.representative(), place_, prec, true);
}

LocalExpansion LocalExpansion::mul(const LocalExpansion& o) const {
    if (!(place_ == o.place_)) throw DomainError("LocalExpansion: mixed completions");
    long prec = std::min(precision_ + effective_valuation(o),
                         o.precision_ + effective_valuation(*this));
    return expand_at(representative() * o.representative(), place_, prec, true);
}

LocalExpansion LocalExpansion::invert() const {
    long v = known_valuation();  // throws when indistinguishable from zero
    long prec = precision_ - 2 * v;
    return expand_at(Ground(1L) / representative(), place_, prec, true);
}

std::vector<std::string> LocalExpansion::digit_strings() const {
    std::vector<std::string> out;
    if (place_.is_p_adic())
        for (const Int& d : pdigits_) out.push_back(int_to_string(d));
    else
        for (const Rat& c : tcoeffs_) out.push_back(rat_to_string(c));
    return out;
}

std::string LocalExpansion::to_string() const {
    std::ostringstream os;
    os << representative().to_string() << " (mod " << place_.label() << "^" << precision_ << ")";
    return os.str();
}

LocalExpansion local_expand(const Ground& x, const LocalContext& ctx, bool laurent) {
    return LocalExpansion::expand(x, ctx, laurent);
}

}  // namespace adictop
