#include "adictop/hensel.hpp"

#include <sstream>

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

int iteration_cap(long n) {
    int cap = 1;
    long t = 1;
    while (t < n) {
        t *= 2;
        ++cap;
    }
    return cap;
}

Ground eval_univariate(const std::vector<Ground>& poly, const Ground& x) {
    Ground acc(0L);
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

std::vector<Ground> derivative_univariate(const std::vector<Ground>& poly) {
    std::vector<Ground> d;
    for (size_t i = 1; i < poly.size(); ++i)
        d.push_back(poly[i] * Ground(static_cast<long>(i)));
    if (d.empty()) d.push_back(Ground(0L));
    return d;
}

void require_integral(const Ground& x, const ValuationSpec& place, const std::string& what) {
    if (!val(x, place).at_least(0))
        throw PrecisionError(what + " must be integral in the local context");
}

// Exact solve of M * delta = r over the ground field, pivoting on entries of
// valuation 0.  A column with no unit pivot means the matrix is not
// invertible over the local ring.
std::vector<Ground> solve_unit_system(std::vector<std::vector<Ground>> m, std::vector<Ground> r,
                                      const ValuationSpec& place) {
    size_t k = m.size();
    for (size_t c = 0; c < k; ++c) {
        size_t sel = k;
        for (size_t i = c; i < k; ++i) {
            if (m[i][c].is_zero()) continue;
            if (val(m[i][c], place).finite() == 0) {
                sel = i;
                break;
            }
        }
        if (sel == k) throw SingularError("Jacobian has no unit pivot in column " +
                                          std::to_string(c + 1));
        std::swap(m[c], m[sel]);
        std::swap(r[c], r[sel]);
        for (size_t i = 0; i < k; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Ground f = m[i][c] / m[c][c];
            for (size_t j = c; j < k; ++j) m[i][j] = m[i][j] - f * m[c][j];
            r[i] = r[i] - f * r[c];
        }
    }
    std::vector<Ground> x(k, Ground(0L));
    for (size_t i = 0; i < k; ++i) x[i] = r[i] / m[i][i];
    return x;
}

struct NewtonOutcome {
    std::vector<Ground> solution;
    int iterations;
};

// Multivariate Newton on a square system G(y) = 0 in exact arithmetic,
// terminating when every component has valuation >= N.
NewtonOutcome newton_core(const std::vector<MultiPoly>& g, std::vector<Ground> y,
                          const ValuationSpec& place, long n) {
    size_t m = g.size();
    std::vector<std::vector<MultiPoly>> jac(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) jac[i].push_back(g[i].partial(j));
    int cap = iteration_cap(n);
    int iter = 0;
    for (;;) {
        std::vector<Ground> res(m);
        bool done = true;
        for (size_t i = 0; i < m; ++i) {
            res[i] = g[i].eval(y);
            if (!val(res[i], place).at_least(n)) done = false;
        }
        if (done) return {y, iter};
        if (iter >= cap)
            throw NoConvergenceError("Newton iteration did not reach valuation " +
                                     std::to_string(n) + " in " + std::to_string(cap) +
                                     " steps");
        std::vector<std::vector<Ground>> jval(m, std::vector<Ground>(m, Ground(0L)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) jval[i][j] = jac[i][j].eval(y);
        std::vector<Ground> delta = solve_unit_system(std::move(jval), res, place);
        for (size_t j = 0; j < m; ++j) y[j] = y[j] - delta[j];
        ++iter;
    }
}

MultiPoly det_recursive(const std::vector<std::vector<MultiPoly>>& m, std::vector<size_t> cols,
                        size_t row, size_t nvars) {
    if (cols.size() == 1) return m[row][cols[0]];
    MultiPoly acc(nvars);
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<size_t> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        MultiPoly minor = det_recursive(m, rest, row + 1, nvars);
        MultiPoly term = m[row][cols[k]] * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MultiPoly jacobian_det(const PolySystem& system) {
    system.validate();
    size_t nv = system.n + system.m;
    std::vector<std::vector<MultiPoly>> jac(system.m);
    for (size_t i = 0; i < system.m; ++i)
        for (size_t j = 0; j < system.m; ++j)
            jac[i].push_back(system.polys[i].partial(system.n + j));
    std::vector<size_t> cols(system.m);
    for (size_t j = 0; j < system.m; ++j) cols[j] = j;
    return det_recursive(jac, cols, 0, nv);
}

std::string univariate_text(const std::vector<Ground>& poly) {
    MultiPoly p(1);
    std::vector<MultiPoly::Term> terms;
    for (size_t i = 0; i < poly.size(); ++i)
        if (!poly[i].is_zero())
            terms.push_back(MultiPoly::Term{poly[i], {static_cast<long>(i)}});
    return MultiPoly(1, std::move(terms)).to_text({"X"});
}

std::vector<Ground> parse_univariate(const std::string& text, Field field) {
    return parse_poly_over_ground(text, "X", field);
}

RootCertificate hensel_lift(const std::vector<Ground>& poly, const Ground& a0,
                            const LocalContext& ctx) {
    const ValuationSpec& place = ctx.place;
    for (const Ground& c : poly) require_integral(c, place, "coefficient");
    require_integral(a0, place, "seed");

    std::vector<Ground> dpoly = derivative_univariate(poly);
    Ground f0 = eval_univariate(poly, a0);
    Ground fp0 = eval_univariate(dpoly, a0);
    ValOrInf vf = val(f0, place);
    ValOrInf vfp = val(fp0, place);
    if (vfp.is_infinite()) throw SingularError("derivative vanishes at the seed");
    long e = vfp.finite();
    if (!(vf > ValOrInf::of(2 * e)))
        throw NoConvergenceError("val f(a0) = " + vf.to_string() + " is not above 2*val f'(a0) = " +
                                 std::to_string(2 * e));

    NewtonOutcome out = [&] {
        Ground a = a0;
        int cap = iteration_cap(ctx.precision);
        int iter = 0;
        for (;;) {
            Ground fa = eval_univariate(poly, a);
            if (val(fa, place).at_least(ctx.precision)) return NewtonOutcome{{a}, iter};
            if (iter >= cap)
                throw NoConvergenceError("univariate Newton stalled after " +
                                         std::to_string(iter) + " steps");
            Ground fpa = eval_univariate(dpoly, a);
            a = a - fa / fpa;
            ++iter;
        }
    }();

    RootCertificate rc;
    rc.iterations = out.iterations;
    LocalExpansion root = local_expand(out.solution[0], ctx);
    rc.roots.push_back(root);
    Ground rep = root.representative();
    rc.residual = val(eval_univariate(poly, rep), place);
    rc.derivative_valuation = e;

    std::string ftext = univariate_text(poly);
    std::string fptext = univariate_text(dpoly);
    Certificate& cert = rc.certificate;
    cert.claim = "hensel.univariate-lift";
    cert.witness("polynomial", ftext);
    cert.witness("context", ctx.label());
    cert.witness("seed", a0.to_string());
    cert.witness("root", rep.to_string());
    cert.witness("iterations", std::to_string(out.iterations));
    Bindings b{{"X", rep.to_string()}, {"a0", a0.to_string()}};
    push_check(cert, check_val_ge(ftext, place, ctx.precision, b,
                                  "residual vanishes to the working precision"));
    push_check(cert, check_val_ge("X - (a0)", place, e + 1, b,
                                  "root refines the seed"));
    push_check(cert, check_val_eq(fptext, place, e, b, "derivative valuation at the root"));
    return rc;
}

RootCertificate gt_hensel_probe(long n, const std::vector<Ground>& coeffs,
                                const LocalContext& ctx, long gamma) {
    if (n < 2) throw DomainError("probe degree must be at least 2");
    if (gamma < 1) throw DomainError("gamma must be at least 1");
    if (coeffs.size() != static_cast<size_t>(n - 1))
        throw DomainError("expected " + std::to_string(n - 1) + " coefficients c_0..c_(n-2)");
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!val(coeffs[i], ctx.place).at_least(gamma))
            throw PreconditionError("val(c_" + std::to_string(i) + ") < gamma");

    std::vector<Ground> poly(static_cast<size_t>(n) + 1, Ground(0L));
    for (size_t i = 0; i + 2 <= static_cast<size_t>(n); ++i) poly[i] = coeffs[i];
    poly[static_cast<size_t>(n - 1)] = Ground(1L);
    poly[static_cast<size_t>(n)] = Ground(1L);

    RootCertificate rc = hensel_lift(poly, Ground(-1L), ctx);
    Certificate cert;
    cert.claim = "hensel.monic-probe";
    cert.witness("degree", std::to_string(n));
    cert.witness("gamma", std::to_string(gamma));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        cert.witness("c_" + std::to_string(i), coeffs[i].to_string());
        push_check(cert, check_val_ge("c", ctx.place, gamma, {{"c", coeffs[i].to_string()}},
                                      "coefficient c_" + std::to_string(i) +
                                          " is small enough for the probe"));
    }
    for (auto& [name, value] : rc.certificate.witnesses) cert.witness(name, value);
    for (Check& c : rc.certificate.checks) cert.checks.push_back(std::move(c));
    rc.certificate = std::move(cert);
    return rc;
}

namespace {

MultiPoly substitute_x(const MultiPoly& p, size_t n, const std::vector<Ground>& xs) {
    size_t m = p.nvars() - n;
    std::vector<MultiPoly::Term> terms;
    for (const MultiPoly::Term& t : p.terms()) {
        Ground c = t.coeff;
        for (size_t i = 0; i < n; ++i)
            if (t.exps[i] != 0) c = c * xs[i].pow(t.exps[i]);
        if (c.is_zero()) continue;
        std::vector<long> e(t.exps.begin() + static_cast<long>(n), t.exps.end());
        terms.push_back(MultiPoly::Term{c, std::move(e)});
    }
    return MultiPoly(m, std::move(terms));
}

std::vector<std::string> y_names(size_t m) {
    std::vector<std::string> names;
    for (size_t j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
    return names;
}

}  // namespace

RootCertificate newton_inverse(const PolySystem& system, const std::vector<Ground>& a,
                               const std::vector<Ground>& target, const LocalContext& ctx) {
    system.validate();
    if (system.n != 0)
        throw DomainError("newton_inverse expects a map K^m -> K^m with no x-variables");
    size_t m = system.m;
    if (a.size() != m || target.size() != m)
        throw DomainError("newton_inverse: point arity mismatch");
    const ValuationSpec& place = ctx.place;
    for (const MultiPoly& p : system.polys)
        for (const MultiPoly::Term& t : p.terms()) require_integral(t.coeff, place, "coefficient");
    for (const Ground& g : a) require_integral(g, place, "seed point");
    for (const Ground& g : target) require_integral(g, place, "target point");

    MultiPoly det = jacobian_det(system);
    ValOrInf vdet = val(det.eval(a), place);
    if (!(vdet == ValOrInf::of(0)))
        throw SingularError("Jacobian determinant is not a unit at the seed");
    for (size_t i = 0; i < m; ++i)
        if (!val(target[i] - system.polys[i].eval(a), place).at_least(1))
            throw PreconditionError("target is not close to F(seed): component " +
                                    std::to_string(i + 1));

    std::vector<MultiPoly> g;
    for (size_t i = 0; i < m; ++i)
        g.push_back(system.polys[i] - MultiPoly::constant(m, target[i]));
    NewtonOutcome out = newton_core(g, a, place, ctx.precision);

    RootCertificate rc;
    rc.iterations = out.iterations;
    std::vector<Ground> reps;
    for (const Ground& y : out.solution) {
        LocalExpansion e = local_expand(y, ctx);
        reps.push_back(e.representative());
        rc.roots.push_back(std::move(e));
    }
    rc.residual = ValOrInf::infinity();
    for (size_t i = 0; i < m; ++i)
        rc.residual =
            ValOrInf::min(rc.residual, val(system.polys[i].eval(reps) - target[i], place));
    rc.derivative_valuation = val(det.eval(reps), place).finite();

    std::vector<std::string> names = y_names(m);
    Certificate& cert = rc.certificate;
    cert.claim = "hensel.inverse-function";
    cert.witness("context", ctx.label());
    Bindings b;
    for (size_t j = 0; j < m; ++j) {
        cert.witness(names[j], reps[j].to_string());
        b[names[j]] = reps[j].to_string();
    }
    for (size_t i = 0; i < m; ++i) {
        cert.witness("F" + std::to_string(i + 1), system.polys[i].to_text(names));
        cert.witness("target" + std::to_string(i + 1), target[i].to_string());
        push_check(cert, check_val_ge(system.polys[i].to_text(names) + " - (" +
                                          target[i].to_string() + ")",
                                      place, ctx.precision, b,
                                      "component " + std::to_string(i + 1) +
                                          " hits the target to the working precision"));
    }
    for (size_t j = 0; j < m; ++j) {
        Bindings bj = b;
        bj["s"] = a[j].to_string();
        push_check(cert, check_val_ge(names[j] + " - (s)", place, 1, bj,
                                      "solution refines the seed in component " +
                                          std::to_string(j + 1)));
    }
    push_check(cert, check_val_eq(det.to_text(names), place, 0, b,
                                  "Jacobian determinant is a unit at the solution; any two "
                                  "solutions congruent mod the uniformizer agree to the "
                                  "working precision"));
    return rc;
}

RootCertificate implicit_solve(const PolySystem& system, const std::vector<Ground>& base_x,
                               const std::vector<Ground>& base_y,
                               const std::vector<Ground>& x, const LocalContext& ctx) {
    system.validate();
    size_t n = system.n, m = system.m;
    if (base_x.size() != n || x.size() != n || base_y.size() != m)
        throw DomainError("implicit_solve: point arity mismatch");
    const ValuationSpec& place = ctx.place;
    for (const MultiPoly& p : system.polys)
        for (const MultiPoly::Term& t : p.terms()) require_integral(t.coeff, place, "coefficient");
    for (const Ground& g : base_x) require_integral(g, place, "base point");
    for (const Ground& g : base_y) require_integral(g, place, "base point");
    for (const Ground& g : x) require_integral(g, place, "evaluation point");

    std::vector<Ground> base_point = base_x;
    base_point.insert(base_point.end(), base_y.begin(), base_y.end());
    for (size_t i = 0; i < m; ++i)
        if (!val(system.polys[i].eval(base_point), place).at_least(ctx.precision))
            throw PreconditionError("F(base) does not vanish to the working precision");
    MultiPoly det = jacobian_det(system);
    if (!(val(det.eval(base_point), place) == ValOrInf::of(0)))
        throw SingularError("y-Jacobian is not a unit at the base point");
    for (size_t i = 0; i < n; ++i)
        if (!val(x[i] - base_x[i], place).at_least(1))
            throw NoConvergenceError("x is outside the convergence neighborhood");

    std::vector<MultiPoly> g;
    for (const MultiPoly& p : system.polys) g.push_back(substitute_x(p, n, x));
    NewtonOutcome out = newton_core(g, base_y, place, ctx.precision);

    RootCertificate rc;
    rc.iterations = out.iterations;
    std::vector<Ground> yreps;
    for (const Ground& y : out.solution) {
        LocalExpansion e = local_expand(y, ctx);
        yreps.push_back(e.representative());
        rc.roots.push_back(std::move(e));
    }
    std::vector<Ground> full = x;
    full.insert(full.end(), yreps.begin(), yreps.end());
    rc.residual = ValOrInf::infinity();
    for (size_t i = 0; i < m; ++i)
        rc.residual = ValOrInf::min(rc.residual, val(system.polys[i].eval(full), place));
    rc.derivative_valuation = val(det.eval(full), place).finite();

    std::vector<std::string> names = system.var_names();
    Certificate& cert = rc.certificate;
    cert.claim = "hensel.implicit-function";
    cert.witness("context", ctx.label());
    Bindings b;
    for (size_t i = 0; i < n; ++i) {
        cert.witness(names[i], x[i].to_string());
        b[names[i]] = x[i].to_string();
    }
    for (size_t j = 0; j < m; ++j) {
        cert.witness(names[n + j], yreps[j].to_string());
        b[names[n + j]] = yreps[j].to_string();
    }
    for (size_t i = 0; i < m; ++i) {
        cert.witness("F" + std::to_string(i + 1), system.polys[i].to_text(names));
        push_check(cert, check_val_ge(system.polys[i].to_text(names), place, ctx.precision, b,
                                      "F vanishes at (x, g(x)) to the working precision"));
    }
    for (size_t j = 0; j < m; ++j) {
        Bindings bj = b;
        bj["s"] = base_y[j].to_string();
        push_check(cert, check_val_ge(names[n + j] + " - (s)", place, 1, bj,
                                      "g(x) refines the base fiber point"));
    }
    for (size_t i = 0; i < n; ++i) {
        Bindings bi = b;
        bi["s"] = base_x[i].to_string();
        push_check(cert, check_val_ge(names[i] + " - (s)", place, 1, bi,
                                      "x lies in the convergence neighborhood"));
    }
    push_check(cert, check_val_eq(det.to_text(names), place, 0, b,
                                  "y-Jacobian is a unit along the solution; the implicit "
                                  "function is unique modulo the uniformizer"));
    return rc;
}

}  // namespace adictop
