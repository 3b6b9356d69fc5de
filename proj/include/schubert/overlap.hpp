#pragma once

// Overlap number of point groups on the circle R ∪ {∞}.

#include "schubert/combinatorics.hpp"
#include "schubert/flags.hpp"

#include <vector>

namespace schubert {

struct WeightedPoint {
    CurvePoint point;
    int multiplicity = 1;
};

/// One group per flag.
using PointGroup = std::vector<WeightedPoint>;
using PointConfiguration = std::vector<PointGroup>;

/// Minimum over cuts of the circle of Σ_j o_j, where o_j counts (with
/// multiplicity) the points of other groups strictly inside the span of group j
/// in the linear order opened at the cut. Throws std::invalid_argument on
/// coincident points, empty groups or nonpositive multiplicities.
unsigned overlap_number(const PointConfiguration& c);

/// Builds the configuration of an instance: secant and cosecant points count
/// once, an osculating flag is one point of multiplicity equal to the relevant
/// dimension, and generalized secant anchors carry their orders. Explicit
/// flags are not attached to the curve and contribute nothing.
PointConfiguration configuration_for_instance(const SchubertProblem& problem, const std::vector<FlagSpec>& flags);

unsigned overlap_for_instance(const SchubertProblem& problem, const std::vector<FlagSpec>& flags);

}  // namespace schubert
