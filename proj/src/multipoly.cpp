#include "adictop/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "adictop/errors.hpp"

namespace adictop {

MultiPoly::MultiPoly(size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.exps.size() != nvars_)
            throw DomainError("MultiPoly: exponent vector length mismatch");
    normalize();
}

void MultiPoly::normalize() {
    std::map<std::vector<long>, Ground> acc;
    for (Term& t : terms_) {
        for (long e : t.exps)
            if (e < 0) throw DomainError("MultiPoly: negative exponent");
        auto it = acc.find(t.exps);
        if (it == acc.end())
            acc.emplace(std::move(t.exps), std::move(t.coeff));
        else
            it->second = it->second + t.coeff;
    }
    terms_.clear();
    for (auto& [e, c] : acc)
        if (!c.is_zero()) terms_.push_back(Term{c, e});
}

MultiPoly MultiPoly::constant(size_t nvars, const Ground& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back(Term{c, std::vector<long>(nvars, 0)});
    return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t index) {
    if (index >= nvars) throw DomainError("MultiPoly: variable index out of range");
    MultiPoly p(nvars);
    std::vector<long> e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back(Term{Ground(1L), std::move(e)});
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    p.terms_ = terms_;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("MultiPoly: arity mismatch");
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return MultiPoly(nvars_, std::move(all));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("MultiPoly: arity mismatch");
    std::vector<Term> out;
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) {
            std::vector<long> e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) e[i] = a.exps[i] + b.exps[i];
            out.push_back(Term{a.coeff * b.coeff, std::move(e)});
        }
    return MultiPoly(nvars_, std::move(out));
}

MultiPoly MultiPoly::scale(const Ground& c) const {
    if (c.is_zero()) return MultiPoly(nvars_);
    MultiPoly p(nvars_);
    p.terms_ = terms_;
    for (Term& t : p.terms_) t.coeff = t.coeff * c;
    return p;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw DomainError("MultiPoly: negative exponent");
    MultiPoly acc = constant(nvars_, Ground(1L));
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::partial(size_t var) const {
    if (var >= nvars_) throw DomainError("MultiPoly: variable index out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.exps[var] == 0) continue;
        Term d = t;
        d.coeff = d.coeff * Ground(static_cast<long>(t.exps[var]));
        d.exps[var] -= 1;
        out.push_back(std::move(d));
    }
    return MultiPoly(nvars_, std::move(out));
}

Ground MultiPoly::eval(const std::vector<Ground>& point) const {
    if (point.size() != nvars_) throw DomainError("MultiPoly: evaluation arity mismatch");
    Ground acc(0L);
    for (const Term& t : terms_) {
        Ground term = t.coeff;
        for (size_t i = 0; i < nvars_; ++i)
            if (t.exps[i] != 0) term = term * point[i].pow(t.exps[i]);
        acc = acc + term;
    }
    return acc;
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const Term& t : terms_) {
        long s = 0;
        for (long e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

std::string MultiPoly::to_text(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw DomainError("MultiPoly: name list arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.coeff.to_string();
        // Sign handling only applies to plain rationals; anything composite
        // is parenthesized whole.
        bool simple = c.find_first_not_of("-0123456789/") == std::string::npos &&
                      (c.rfind('-') == std::string::npos || c.rfind('-') == 0);
        bool neg = simple && !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream vars;
        for (size_t i = 0; i < nvars_; ++i) {
            if (t.exps[i] == 0) continue;
            if (any_var) vars << "*";
            vars << names[i];
            if (t.exps[i] > 1) vars << "^" << t.exps[i];
            any_var = true;
        }
        std::string coeff_str = simple ? mag : "(" + mag + ")";
        if (!any_var) {
            out << coeff_str;
        } else if (mag == "1" && simple) {
            out << vars.str();
        } else {
            out << coeff_str << "*" << vars.str();
        }
    }
    return out.str();
}

std::vector<std::string> PolySystem::var_names() const {
    std::vector<std::string> names;
    for (size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (size_t j = 1; j <= m; ++j) names.push_back("y" + std::to_string(j));
    return names;
}

void PolySystem::validate() const {
    if (m == 0) throw DomainError("PolySystem: needs at least one polynomial");
    if (polys.size() != m) throw DomainError("PolySystem: expected m polynomials");
    for (const MultiPoly& p : polys)
        if (p.nvars() != n + m) throw DomainError("PolySystem: arity mismatch");
}

}  // namespace adictop
