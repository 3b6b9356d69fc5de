#include "schubert/multipoly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace schubert {

// --- Monomial --------------------------------------------------------------

Monomial Monomial::variable(std::size_t index, unsigned power) {
    if (index >= kMaxVariables) throw std::out_of_range("variable index exceeds kMaxVariables");
    if (power > 255) throw std::overflow_error("monomial exponent overflow");
    Monomial m;
    m.exps_[index] = static_cast<std::uint8_t>(power);
    m.degree_ = static_cast<std::uint16_t>(power);
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        r.exps_[i] = std::max(exps_[i], other.exps_[i]);
        d += r.exps_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(d);
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
}

int Monomial::compare_grevlex(const Monomial& a, const Monomial& b, std::size_t nvars) {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
    for (std::size_t i = nvars; i-- > 0;)
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? 1 : -1;
    return 0;
}

// --- MultiPoly -------------------------------------------------------------

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
}

MultiPoly::MultiPoly(std::size_t nvars, const Rational& constant) : MultiPoly(nvars) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    p.terms_.emplace(Monomial::variable(index), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

bool MultiPoly::only_uses(std::size_t index) const {
    for (const auto& [m, c] : terms_)
        if (m[index] != m.degree()) return false;
    return true;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i]) t *= power(point[i], m[i]);
        acc += t;
    }
    return acc;
}

UniPoly MultiPoly::to_univariate(std::size_t index) const {
    if (!only_uses(index)) throw std::invalid_argument("polynomial is not univariate in the requested variable");
    std::vector<Rational> c;
    for (const auto& [m, x] : terms_) {
        const unsigned e = m[index];
        if (c.size() <= e) c.resize(e + 1);
        c[e] += x;
    }
    return UniPoly(std::move(c));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest terms first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        bool wrote = false;
        if (a != 1 || m.is_one()) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            if (wrote) os << "*";
            os << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

// --- PolyMatrix ------------------------------------------------------------

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MultiPoly(nvars)) {}

void PolyMatrix::append_constant_rows(const std::vector<std::vector<Rational>>& rows) {
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("appended row has wrong length");
        for (const auto& c : row) entries_.emplace_back(nvars_, c);
        ++rows_;
    }
}

PolyMatrix PolyMatrix::times(const std::vector<std::vector<Rational>>& rhs) const {
    if (rhs.size() != cols_) throw std::invalid_argument("matrix product dimension mismatch");
    const std::size_t m = rhs.empty() ? 0 : rhs[0].size();
    PolyMatrix out(rows_, m, nvars_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const MultiPoly& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < m; ++c)
                if (rhs[k][c] != 0) out(r, c) += a * rhs[k][c];
        }
    return out;
}

// --- determinants ------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

// dets[mask] = determinant of the submatrix on `rows` (in order) and the column
// set `mask` with popcount == rows.size(). Masks over m.cols() columns.
std::map<Mask, MultiPoly> subset_determinants(const PolyMatrix& m, const std::vector<std::size_t>& rows) {
    const std::size_t cols = m.cols();
    if (cols > 24) throw std::invalid_argument("too many columns for subset expansion");
    std::map<Mask, MultiPoly> level;
    level.emplace(Mask{0}, MultiPoly(m.num_variables(), Rational(1)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::map<Mask, MultiPoly> next;
        for (const auto& [mask, det] : level) {
            if (det.is_zero()) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                const Mask bit = Mask{1} << c;
                if (mask & bit) continue;
                const MultiPoly& entry = m(rows[r], c);
                if (entry.is_zero()) continue;
                // Expanding along the last row: sign (-1)^(r + position of c in the new set),
                // position = number of chosen columns greater than c counted from the right.
                const int greater = std::popcount(mask & ~((bit << 1) - 1));
                MultiPoly term = det * entry;
                if (greater % 2) term *= Rational(-1);
                auto [it, inserted] = next.try_emplace(mask | bit, m.num_variables());
                it->second += term;
            }
        }
        level = std::move(next);
    }
    return level;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

MultiPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (m.rows() == 0) return MultiPoly(m.num_variables(), Rational(1));
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    auto dets = subset_determinants(m, rows);
    const Mask full = (m.cols() == 32) ? ~Mask{0} : ((Mask{1} << m.cols()) - 1);
    auto it = dets.find(full);
    return it == dets.end() ? MultiPoly(m.num_variables()) : it->second;
}

std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t size) {
    if (size == 0 || size > std::min(m.rows(), m.cols())) throw std::invalid_argument("minors: size out of range");
    std::vector<MultiPoly> out;
    for_each_subset(m.rows(), size, [&](const std::vector<std::size_t>& rows) {
        auto dets = subset_determinants(m, rows);
        for_each_subset(m.cols(), size, [&](const std::vector<std::size_t>& cols) {
            Mask mask = 0;
            for (auto c : cols) mask |= Mask{1} << c;
            auto it = dets.find(mask);
            out.push_back(it == dets.end() ? MultiPoly(m.num_variables()) : it->second);
        });
    });
    return out;
}

}  // namespace schubert
