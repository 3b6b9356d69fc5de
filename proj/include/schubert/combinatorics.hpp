#pragma once

// Partitions, Schubert problems and their solution counts.

#include "schubert/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// Weakly decreasing sequence of positive parts (trailing zeros are dropped).
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument if parts increase or are negative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    /// Part i (0-based), 0 past the end.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
    int size() const;
    bool empty() const { return parts_.empty(); }
    bool fits_in_box(int rows, int cols) const;

    /// "3,1"; the empty partition prints as "0".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Parses "3,1" (or "0" / "" for the empty partition).
Partition parse_partition(std::string_view text);

/// Conditions on G(k, n).
struct SchubertProblem {
    int k = 0;
    int n = 0;
    std::vector<Partition> conditions;

    int dimension() const { return k * (n - k); }
    /// "G(3,7) 1^4 3,1^2".
    std::string to_string() const;
};

/// Checks 0 < k < n, every condition nonempty and inside the k x (n-k) box, and
/// that the codimensions add up to k(n-k). Throws std::invalid_argument.
SchubertProblem make_problem(int k, int n, std::vector<Partition> conditions);

/// Parses "k n λ¹ λ² ..." where each condition may carry a repetition suffix,
/// e.g. "3 7 1^4 3,1^2".
SchubertProblem parse_problem(std::string_view text);

/// Number of solutions for general flags, via Littlewood-Richardson products in
/// the k x (n-k) box. Throws std::invalid_argument on an invalid problem.
Integer problem_degree(const SchubertProblem& p);

/// Degree of G(k, n) in its Pluecker embedding.
Integer schubert_number(int k, int n);

Partition conjugate_partition(const Partition& lambda);

/// n - k + i - λ_i where λ_i is the last nonzero part (1-based i): the dimension
/// of the largest flag element that imposes a condition.
int relevant_dimension(const Partition& lambda, int k, int n);

/// The same problem on G(n-k, n) with conjugated conditions.
SchubertProblem dual_problem(const SchubertProblem& p);

/// Littlewood-Richardson coefficient c^ν_{λμ}.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schubert
