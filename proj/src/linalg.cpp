#include "schubert/linalg.hpp"

#include <stdexcept>

namespace schubert {

RationalMatrix row_reduce(RationalMatrix a) {
    if (a.empty()) return a;
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

std::size_t rank(const RationalMatrix& a) { return row_reduce(a).size(); }

RationalMatrix nullspace(const RationalMatrix& a, std::size_t cols) {
    const RationalMatrix r = row_reduce(a);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& row : r) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        pivots.push_back(c);
        is_pivot[c] = true;
    }
    RationalMatrix out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

Rational determinant(const RationalMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    RationalMatrix a = m;
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return d;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix aug(n, RationalVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    aug = row_reduce(std::move(aug));
    if (aug.size() < n || aug[n - 1][n - 1] != 1) return std::nullopt;
    RationalMatrix inv(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    RationalMatrix out(a.size(), RationalVector(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

RationalMatrix transpose(const RationalMatrix& a, std::size_t cols) {
    RationalMatrix t(cols, RationalVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) { return row_reduce(a) == row_reduce(b); }

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace schubert
