#pragma once

#include <vector>

#include "adictop/certificate.hpp"
#include "adictop/local.hpp"
#include "adictop/multipoly.hpp"
#include "adictop/valuation.hpp"

namespace adictop {

// Outcome of a lifting operation.  The approximation is exact data (digits
// of the truncated expansion); `residual` is the exact valuation of F at the
// printed representative, which the construction guarantees to be at least
// the working precision; `derivative_valuation` is the valuation of f' (or
// of det of the y-Jacobian) at the representative, 0 meaning a unit.
struct RootCertificate {
    std::vector<LocalExpansion> roots;
    ValOrInf residual = ValOrInf::infinity();
    long derivative_valuation = 0;
    int iterations = 0;
    Certificate certificate;

    const LocalExpansion& root() const { return roots.at(0); }
};

// Univariate Newton lifting: from a seed with val f(a0) > 2 val f'(a0),
// produce a root modulo uniformizer^N congruent to the seed modulo
// uniformizer^(val f'(a0) + 1).  Coefficients and seed must be integral in
// the context.  Convergence is quadratic; the iteration count is capped at
// ceil(log2 N) + 1.
RootCertificate hensel_lift(const std::vector<Ground>& poly, const Ground& a0,
                            const LocalContext& ctx);

// Root of X^n + X^(n-1) + c_(n-2) X^(n-2) + ... + c_1 X + c_0 near -1, for
// coefficients of valuation >= gamma >= 1.  The seed -1 makes the constant
// part of the derivative a unit, so hensel_lift applies.
RootCertificate gt_hensel_probe(long n, const std::vector<Ground>& coeffs,
                                const LocalContext& ctx, long gamma);

// Solve F(b) = target for a polynomial map F : K^m -> K^m (a PolySystem with
// no x-variables) with unit Jacobian at the seed a and
// val(target - F(a)) >= 1 componentwise.
RootCertificate newton_inverse(const PolySystem& system, const std::vector<Ground>& a,
                               const std::vector<Ground>& target, const LocalContext& ctx);

// Implicit function: given F(a, b) = 0 mod uniformizer^N with the y-Jacobian
// a unit at (a, b), and x with val(x - a) >= 1 componentwise, solve
// F(x, y) = 0 for y congruent to b modulo the uniformizer.
RootCertificate implicit_solve(const PolySystem& system, const std::vector<Ground>& base_x,
                               const std::vector<Ground>& base_y,
                               const std::vector<Ground>& x, const LocalContext& ctx);

// y-Jacobian determinant as a polynomial in all variables.
MultiPoly jacobian_det(const PolySystem& system);

// Canonical text of a univariate polynomial in X over the ground field.
std::string univariate_text(const std::vector<Ground>& poly);

// Parse back (shared with the CLI): coefficients ascending in X.
std::vector<Ground> parse_univariate(const std::string& text, Field field);

}  // namespace adictop
