#pragma once

// Instances of Schubert problems, their polynomial systems, and real-solution
// counts certified through a square-free eliminant of full degree.

#include "schubert/combinatorics.hpp"
#include "schubert/flags.hpp"
#include "schubert/multipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

enum class ChartKind {
    /// H = (I_k : X).
    Standard,
    /// Schubert cell of one condition whose flag osculates at ∞.
    OneOsculatingAtInfinity,
    /// Intersection of the cells of two conditions osculating at ∞ and at 0.
    TwoOsculating,
};

struct Chart {
    ChartKind kind = ChartKind::Standard;
    int infinity_index = -1;  // condition whose flag osculates at ∞
    int zero_index = -1;      // condition whose flag osculates at 0 (TwoOsculating)

    static Chart standard() { return {}; }
    static Chart one_osculating(int at_infinity) { return {ChartKind::OneOsculatingAtInfinity, at_infinity, -1}; }
    static Chart two_osculating(int at_infinity, int at_zero) { return {ChartKind::TwoOsculating, at_infinity, at_zero}; }
    std::string to_string() const;
    friend bool operator==(const Chart&, const Chart&) = default;
};

struct Instance {
    SchubertProblem problem;
    std::vector<FlagSpec> flags;  // one per condition
    Chart chart;
};

/// Throws std::invalid_argument describing the first inconsistency.
void validate_instance(const Instance& inst);

enum class MinorStyle {
    /// dim(H ∩ F_f) >= i as rank(H·N) <= k-i with N a kernel basis of F_f,
    /// imposed only where λ_i > λ_{i+1}.
    Projected,
    /// All (k+f-i+1)-minors of [H; F_f] for every i with λ_i > 0.
    Stacked,
};

struct EquationSystem {
    std::size_t variables = 0;
    std::vector<MultiPoly> generators;
    /// The k x n chart matrix in the unknowns.
    PolyMatrix chart_matrix;
};

EquationSystem build_equations(const Instance& inst, MinorStyle style = MinorStyle::Projected);

/// The chart's k x n pattern: -1 for a free entry, 0 or 1 for constants.
std::vector<std::vector<int>> chart_pattern(const SchubertProblem& p, const Chart& chart);

enum class SolveStatus { Certified, CertifiedAfterPerturbation, Failed };

std::string to_string(SolveStatus s);

struct PerturbationRecord {
    int rounds = 0;
    Rational epsilon;
};

struct SolveOutcome {
    unsigned real_count = 0;
    unsigned degree = 0;
    int eliminant_variable = -1;
    SolveStatus status = SolveStatus::Failed;
    std::optional<PerturbationRecord> perturbation;
    std::string failure;
    std::optional<UniPoly> eliminant;

    bool certified() const { return status != SolveStatus::Failed; }
};

struct SolveOptions {
    MinorStyle style = MinorStyle::Projected;
    int max_perturbation_rounds = 3;
};

/// Counts real solutions; never throws for a valid instance (failures are
/// reported in the outcome). Throws std::invalid_argument for invalid ones.
SolveOutcome solve_instance(const Instance& inst, const SolveOptions& opts = {});

/// One certification attempt without perturbation.
SolveOutcome certify_once(const Instance& inst, MinorStyle style = MinorStyle::Projected);

/// The instance with secancy points moved by ε·j, j the rank of the point among
/// all finite points of the instance, ε = 2^-20 · (min gap) · 2^-(round-1).
/// Osculating anchors stay fixed. Returns nullopt if nothing can move.
std::optional<std::pair<Instance, Rational>> perturb_instance(const Instance& inst, int round);

/// The same instance on G(n-k, n): conditions conjugated, flags replaced by
/// their duals (secant <-> cosecant, others via explicit matrices), in the
/// standard chart.
Instance dual_instance(const Instance& inst);

// --- four secant lines --------------------------------------------------------

/// Four chords pairing the cyclic positions 1..8, in canonical form.
struct ChordConfiguration {
    std::array<std::pair<int, int>, 4> chords{};
    std::string to_string() const;
    friend auto operator<=>(const ChordConfiguration&, const ChordConfiguration&) = default;
};

/// Lexicographically least image under rotations, reflections and chord
/// relabelling. Throws std::invalid_argument unless the chords cover 1..8.
ChordConfiguration canonical_chords(std::array<std::pair<int, int>, 4> chords);

/// All canonical configurations (17 of them).
std::vector<ChordConfiguration> enumerate_chord_configurations();

/// Some chord has an odd number of other endpoints on one side.
bool has_odd_interval(const ChordConfiguration& config);

/// The G(2,4) instance: chord (a, b) becomes the secant line through
/// γ(points[a-1]) and γ(points[b-1]).
Instance four_lines_instance(const std::array<Rational, 8>& points, const ChordConfiguration& config);

/// Lines meeting the four secant lines, via Pluecker coordinates: the linear
/// conditions leave a pencil on which the Pluecker quadric is a binary
/// quadratic; its discriminant sign gives 0 or 2 real lines.
SolveOutcome solve_four_lines(const std::array<Rational, 8>& points, const ChordConfiguration& config);

// --- gap family (n-2,n-2)^4 on G(4,2n) ----------------------------------------

using PlaneQuadruple = std::array<FlagMatrix, 4>;

struct GapAuxiliaryResult {
    unsigned r = 0;  // real 2-planes
    unsigned c = 0;  // complex-conjugate pairs
    SolveOutcome outcome;
};

/// 2-planes in 2n-space meeting four n-planes (each given by n rows), n >= 3.
GapAuxiliaryResult solve_gap_auxiliary(const PlaneQuadruple& planes);

/// C(r,2) + c.
unsigned gap_predicted_count(unsigned r, unsigned c);

struct GapOutcome {
    SolveOutcome outcome;  // real_count = C(r,2)+c, degree = C(n,2)
    unsigned r = 0, c = 0;
    /// Every sum P_i + P_j meets all four planes in dimension >= 2 (exact check
    /// in Q[x,y] modulo the pairs of distinct eliminant roots).
    std::optional<bool> pairs_verified;
    /// Number of real sums, counted from the minimal polynomial of a symmetric
    /// function of the pair (x, y) rather than from r and c.
    std::optional<unsigned> verified_real_sums;
    bool verification_agrees() const;
};

GapOutcome solve_gap_problem(const PlaneQuadruple& planes, bool verify_direct);

/// True for k = 4, n = 2m >= 8 with four conditions (m-2, m-2).
bool is_gap_family(const SchubertProblem& p);

/// Gap-family instance: planes taken from the flags, with the same
/// perturbation policy as solve_instance when the auxiliary problem fails.
GapOutcome solve_gap_instance(const Instance& inst, bool verify_direct, int max_perturbation_rounds = 3);

}  // namespace schubert
