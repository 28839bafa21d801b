#pragma once

#include <string>
#include <vector>

#include "adictop/ground.hpp"

namespace adictop {

// Sparse multivariate polynomial over Ground.  Terms are kept sorted by
// exponent vector (lexicographic) with no zero coefficients, so equality is
// syntactic.
class MultiPoly {
public:
    struct Term {
        Ground coeff;
        std::vector<long> exps;  // one entry per variable
    };

    explicit MultiPoly(size_t nvars) : nvars_(nvars) {}
    MultiPoly(size_t nvars, std::vector<Term> terms);

    static MultiPoly constant(size_t nvars, const Ground& c);
    static MultiPoly variable(size_t nvars, size_t index);

    size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scale(const Ground& c) const;
    MultiPoly pow(long e) const;

    MultiPoly partial(size_t var) const;

    Ground eval(const std::vector<Ground>& point) const;

    long total_degree() const;

    // Canonical text, e.g. "3*x1^2*y1 - 1/2*x2".  Round-trips through the
    // expression parser.
    std::string to_text(const std::vector<std::string>& names) const;

private:
    void normalize();
    size_t nvars_;
    std::vector<Term> terms_;
};

// A polynomial map F = (f_1..f_m) in variables x_1..x_n, y_1..y_m.  The
// variable order inside each MultiPoly is x-block then y-block.
struct PolySystem {
    size_t n = 0;  // number of x-variables
    size_t m = 0;  // number of y-variables (= number of polynomials)
    std::vector<MultiPoly> polys;

    std::vector<std::string> var_names() const;
    void validate() const;
};

}  // namespace adictop
