#pragma once

#include "schubert/rational.hpp"
#include "schubert/upoly.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a monomial in at most kMaxVariables variables. Individual
/// exponents are bounded by 255; exceeding that throws std::overflow_error.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(std::size_t index, unsigned power = 1);

    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    /// this / other; precondition other.divides(*this).
    Monomial quotient(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
    /// Lexicographic on the exponent vector (x1 most significant). Used only
    /// for deterministic storage order, not as a term order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

    /// Graded reverse lexicographic comparison: positive if a > b.
    static int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t nvars);

private:
    std::array<std::uint8_t, kMaxVariables> exps_{};
    std::uint16_t degree_ = 0;
};

/// Sparse polynomial in a fixed number of variables over Q.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars);
    MultiPoly(std::size_t nvars, const Rational& constant);

    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t num_variables() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (0 if absent).
    Rational constant_term() const;
    /// Total degree; -1 for zero.
    int total_degree() const;
    /// True iff no variable other than `index` occurs.
    bool only_uses(std::size_t index) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    Rational evaluate(const std::vector<Rational>& point) const;
    /// Converts a polynomial in the single variable `index` into a UniPoly.
    /// Throws std::invalid_argument if other variables occur.
    UniPoly to_univariate(std::size_t index) const;

    /// Human-readable form with variables x1, x2, ...
    std::string to_string() const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Dense matrix of polynomials sharing one variable count.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_variables() const { return nvars_; }

    MultiPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Appends rows of constants; the row length must equal cols().
    void append_constant_rows(const std::vector<std::vector<Rational>>& rows);
    /// this * constant matrix (cols() x m) given row-major.
    PolyMatrix times(const std::vector<std::vector<Rational>>& rhs) const;

private:
    std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<MultiPoly> entries_;
};

/// Exact determinant by memoized Laplace expansion over column subsets.
/// Throws std::invalid_argument for a non-square matrix.
MultiPoly determinant(const PolyMatrix& m);

/// All size x size minors: row subsets in lexicographic order, and for each
/// row subset the column subsets in lexicographic order.
std::vector<MultiPoly> minors(const PolyMatrix& m, std::size_t size);

/// Elimination result: either the monic generator of I ∩ Q[x_keep] or a failure
/// reason when that intersection is the zero ideal.
struct Eliminant {
    std::optional<UniPoly> polynomial;
    std::string failure;
    explicit operator bool() const { return polynomial.has_value(); }
};

/// Generator of the elimination ideal <generators> ∩ Q[x_keep], normalized monic.
Eliminant eliminate_to_univariate(const std::vector<MultiPoly>& generators, std::size_t keep);

}  // namespace schubert
