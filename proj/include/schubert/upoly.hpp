#pragma once

#include "schubert/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies x^i;
/// the highest stored coefficient is never zero, and the zero polynomial has
/// no coefficients at all.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, unsigned degree);
    /// Product of (x - r) over the given roots.
    static UniPoly from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// Shift of the argument: returns p(x + h).
    UniPoly shifted(const Rational& h) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b over Q. Throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
UniPoly upoly_gcd(const UniPoly& f, const UniPoly& g);

/// True iff gcd(f, f') is constant. Throws std::domain_error on f = 0.
bool is_squarefree(const UniPoly& f);

/// f / gcd(f, f'), monic.
UniPoly squarefree_part(const UniPoly& f);

/// An open interval (lo, hi); a missing endpoint is -inf or +inf respectively.
struct RealInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

/// Number of distinct real roots of f in the open interval (whole line by
/// default), by Sturm sequences. Throws std::domain_error on f = 0 and
/// std::invalid_argument on an empty interval.
unsigned count_real_roots(const UniPoly& f, const RealInterval& range = {});

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of f. Coefficients ordered by exponent.
std::vector<Integer> primitive_integer_form(const UniPoly& f);

/// Sturm sequence of the square-free integer polynomial p (each element
/// primitive, signs as in the classical chain f, f', -rem, ...).
std::vector<std::vector<Integer>> sturm_sequence(const std::vector<Integer>& p);

}  // namespace schubert
