#pragma once

#include <string>
#include <variant>
#include <vector>

#include "adictop/ground.hpp"
#include "adictop/valuation.hpp"

namespace adictop {

// Completion with a working precision: Z_p to modulus p^N, or Q[[t]] to
// truncation t^N.
struct LocalContext {
    ValuationSpec place;
    long precision;

    LocalContext(ValuationSpec v, long n) : place(std::move(v)), precision(n) {
        if (precision < 1) throw DomainError("LocalContext: precision must be >= 1");
        if (!place.is_p_adic() && !place.is_t_adic())
            throw DomainError("LocalContext: only p-adic and t-adic completions are supported");
    }

    std::string label() const {
        return place.label() + "^" + std::to_string(precision);
    }
};

// Truncated expansion of a field element in a completion.  A value with
// digits d_i starting at exponent lo asserts
//     x = sum_i d_i * u^(lo+i)   (mod u^precision)
// and nothing more; arithmetic computes the exact precision of its output
// rather than reusing the inputs'.  Negative lo (Laurent digits) appears
// only when requested explicitly.
class LocalExpansion {
public:
    static LocalExpansion expand(const Ground& x, const LocalContext& ctx, bool laurent = false);
    static LocalExpansion zero(const LocalContext& ctx);

    const ValuationSpec& place() const { return place_; }
    long precision() const { return precision_; }
    long lo() const { return lo_; }

    // True when every digit below the precision vanishes.
    bool is_zero_mod_precision() const;

    // Valuation of the representative; PrecisionError when indistinguishable
    // from zero at this precision.
    long known_valuation() const;

    // The exact field element the digits denote.
    Ground representative() const;

    LocalExpansion add(const LocalExpansion& o) const;
    LocalExpansion sub(const LocalExpansion& o) const;
    LocalExpansion mul(const LocalExpansion& o) const;

    // Multiplicative inverse; output precision is precision - 2*valuation.
    LocalExpansion invert() const;

    // Digits in the canonical residue range, as strings (p-adic: integers in
    // [0,p); t-adic: rationals).
    std::vector<std::string> digit_strings() const;

    std::string to_string() const;

private:
    LocalExpansion(ValuationSpec place, long lo, long prec)
        : place_(std::move(place)), lo_(lo), precision_(prec) {}

    static LocalExpansion expand_at(const Ground& x, const ValuationSpec& place, long prec,
                                    bool laurent);

    ValuationSpec place_;
    long lo_;
    long precision_;
    std::vector<Int> pdigits_;   // p-adic case
    std::vector<Rat> tcoeffs_;   // t-adic case
};

// Embed x into the completion.  Negative valuation requires laurent = true,
// otherwise PrecisionError.
LocalExpansion local_expand(const Ground& x, const LocalContext& ctx, bool laurent = false);

// Canonical residue of a p-integral rational modulo p^N.
Int rat_mod_pn(const Rat& x, const Int& p, long n);

}  // namespace adictop
