#include "adictop/linalg.hpp"

#include "adictop/errors.hpp"

namespace adictop {

namespace {

// Reduce to row echelon form in place; returns pivot columns.
std::vector<size_t> echelon(RatMatrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size();
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

long rank(RatMatrix m) { return static_cast<long>(echelon(m).size()); }

bool in_span(const std::vector<RatVector>& spanning, const RatVector& v) {
    RatMatrix m = spanning;
    long r0 = rank(m);
    m.push_back(v);
    return rank(m) == r0;
}

std::optional<RatVector> solve_linear(RatMatrix a, RatVector b) {
    size_t rows = a.size();
    if (b.size() != rows) throw DomainError("solve_linear: size mismatch");
    size_t cols = rows == 0 ? 0 : a[0].size();
    for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<size_t> pivots = echelon(a);
    // Inconsistent iff a pivot lands in the augmented column.
    for (size_t p : pivots)
        if (p == cols) return std::nullopt;
    RatVector x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

bool linear_infeasible(const RatMatrix& a, const RatVector& b) {
    return !solve_linear(a, b).has_value();
}

}  // namespace adictop
