#pragma once

// Flags anchored to the rational normal curve γ(t) = (1, t, ..., t^{n-1}).

#include "schubert/linalg.hpp"
#include "schubert/upoly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A parameter on the curve: a rational value or the point at infinity.
/// Infinity sorts after every finite value.
class CurvePoint {
public:
    CurvePoint() = default;
    CurvePoint(const Rational& v) : value_(v) {}  // NOLINT: implicit on purpose
    static CurvePoint infinity() {
        CurvePoint p;
        p.value_.reset();
        return p;
    }

    bool is_infinite() const { return !value_; }
    /// Throws std::logic_error at infinity.
    const Rational& value() const;
    std::string to_string() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b);

private:
    std::optional<Rational> value_ = Rational(0);
};

/// Rows spanning F_1 ⊂ F_2 ⊂ ... by prefixes, each of length n.
struct FlagMatrix {
    int n = 0;
    RationalMatrix rows;

    int depth() const { return static_cast<int>(rows.size()); }
    friend bool operator==(const FlagMatrix&, const FlagMatrix&) = default;
};

struct Anchor {
    Rational point;
    int order = 1;
    friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// How a flag is attached to the curve.
///  Secant: rows γ(t_1), γ(t_2), ...
///  Osculating: derivatives γ^{(j)}(t), or e_n, e_{n-1}, ... at infinity.
///  GeneralizedSecant: osculating blocks at each anchor, in the given order.
///  Cosecant: the flag whose i-dimensional element annihilates
///    γ(s_1), ..., γ(s_{n-i}) under the standard pairing.
///  Explicit: a given matrix.
struct FlagSpec {
    enum class Kind { Secant, Osculating, GeneralizedSecant, Cosecant, Explicit };

    Kind kind = Kind::Secant;
    int n = 0;
    std::vector<Rational> points;  // Secant, Cosecant
    CurvePoint anchor;             // Osculating
    std::vector<Anchor> anchors;   // GeneralizedSecant
    FlagMatrix matrix;             // Explicit

    static FlagSpec secant(std::vector<Rational> points, int n);
    static FlagSpec osculating(CurvePoint at, int n);
    static FlagSpec generalized_secant(std::vector<Anchor> anchors, int n);
    static FlagSpec cosecant(std::vector<Rational> points, int n);
    static FlagSpec explicit_flag(FlagMatrix m);

    /// Number of nested subspaces the spec can realize by prefixes.
    int available_depth() const;
    /// Whether flag_subspace(*this, dim) is defined.
    bool supports_dimension(int dim) const;
    /// Text form accepted by parse_flag_spec ("explicit" for matrices).
    std::string to_string() const;

    friend bool operator==(const FlagSpec&, const FlagSpec&) = default;
};

/// "sec:1/2,3/2,5", "osc:3", "osc:inf", "gsec:0^2,1", "cosec:1,2".
/// Throws std::invalid_argument on malformed text or repeated points.
FlagSpec parse_flag_spec(std::string_view text, int n);

RationalVector moment_point(const Rational& t, int n);
/// j-th derivative of γ at t (not divided by j!).
RationalVector moment_derivative(const Rational& t, int j, int n);

/// The first `depth` rows of the flag.
FlagMatrix realize_flag(const FlagSpec& spec, int depth);

/// A basis of the dim-dimensional element of the flag. Agrees with the prefix
/// of realize_flag, but a cosecant flag only needs n - dim of its points here.
RationalMatrix flag_subspace(const FlagSpec& spec, int dim);

/// The flag F^⊥ with F^⊥_i = (F_{n-i})^⊥. Throws on a rank-deficient input.
FlagMatrix dual_flag(const FlagMatrix& m);

/// Coefficients of ∏(s - s_i) over n-1 distinct points: the normal to the
/// secant hyperplane through γ(s_1), ..., γ(s_{n-1}).
RationalVector cosecant_normal(const std::vector<Rational>& points);

/// Coefficients of (s - t)^{n-1}: the point of the dual curve at t.
RationalVector dual_curve_point(const Rational& t, int n);

/// Basis of the annihilator of span{γ(s_1), ..., γ(s_k)}: the polynomials
/// ∏(s - s_i) · s^l for l < n - k.
RationalMatrix cosecant_subspace(const std::vector<Rational>& points, int n);

/// det [f_i(t + (j-1)h)]. Throws std::invalid_argument for h = 0.
UniPoly discrete_wronskian(const std::vector<UniPoly>& fs, const Rational& h);
/// det [f_i^{(j-1)}(t)].
UniPoly wronskian(const std::vector<UniPoly>& fs);

}  // namespace schubert
