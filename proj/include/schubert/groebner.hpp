#pragma once

// Groebner bases over Q and linear algebra in zero-dimensional quotient rings.
// Only elimination is a public contract; the basis itself is exposed for tests
// and diagnostics.

#include "schubert/multipoly.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace schubert {

enum class TermOrderKind {
    Grevlex,
    /// Block order: all variables except `kept` (grevlex among themselves)
    /// dominate the kept variable.
    EliminateAllBut,
};

struct TermOrder {
    TermOrderKind kind = TermOrderKind::Grevlex;
    std::size_t kept = 0;
};

/// Reduced Groebner basis of the ideal generated by `generators`, each element
/// normalized monic. Throws std::invalid_argument on mixed variable counts.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators, TermOrder order = {});

/// Q[x]/I for an ideal I given by generators; computes a grevlex basis once and
/// answers linear-algebra queries in the quotient when it is finite-dimensional.
class QuotientRing {
public:
    explicit QuotientRing(const std::vector<MultiPoly>& generators);
    ~QuotientRing();
    QuotientRing(QuotientRing&&) noexcept;
    QuotientRing& operator=(QuotientRing&&) noexcept;

    std::size_t num_variables() const;
    bool is_zero_dimensional() const;
    /// The ideal is the whole ring (no solutions).
    bool is_trivial() const;
    /// Vector-space dimension of the quotient; requires is_zero_dimensional().
    std::size_t dimension() const;
    /// Minimal polynomial of multiplication by x_var: the monic generator of
    /// I ∩ Q[x_var]. Requires is_zero_dimensional().
    UniPoly minimal_polynomial(std::size_t var) const;
    /// When the minimal polynomial of x_var has degree dimension(), returns for
    /// every variable x_j the polynomial g_j of degree < dimension() with
    /// x_j ≡ g_j(x_var) mod I. Otherwise std::nullopt.
    std::optional<std::vector<UniPoly>> shape_representation(std::size_t var) const;
    /// Reduced grevlex basis (monic).
    std::vector<MultiPoly> basis() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace schubert
