#pragma once

#include <cstdint>

#include "freepath/farey.hpp"
#include "freepath/scatterers.hpp"

namespace freepath {

// Which case of the piecewise cushion-count formula applied, keyed by the
// denominators of the bracketing pair and the order of the two hit-switch
// slopes a/(q-e) and (a'-e)/q'.
enum class ReflectionBranch { LeftDenSmaller, RightDenSmallerEarly, RightDenSmallerLate };

// Sub-arc within the bracket: the left point's value q+a, the transitional
// q+a+1 strip, or the right point's value q'+a'.
enum class ReflectionArc { LeftPoint, LeftPointExtra, RightPoint };

struct ReflectionCount {
  double omega = 0.0;
  std::int64_t count = 0;
  ReflectionBranch branch = ReflectionBranch::LeftDenSmaller;
  ReflectionArc arc = ReflectionArc::LeftPoint;
  FareyPair pair;
};

// Cushion contacts before exit for cross scatterers, by the piecewise count
// over the Farey sub-arcs at order floor(1/epsilon). A slope exactly equal to
// the left fraction takes the q+a value.
ReflectionCount reflection_count(double epsilon, double omega);

// Unfolding oracle: unit grid lines strictly crossed by the open exit
// segment, #{k >= 1 : k < L cos w} + #{k >= 1 : k < L sin w}; grid lines
// through the endpoint itself are excluded. Validates the piecewise count up
// to a bounded additive offset.
std::int64_t crossing_count_oracle(const ScattererConfig& config, double omega);

}  // namespace freepath
