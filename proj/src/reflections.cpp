#include "freepath/reflections.hpp"

#include <cmath>
#include <stdexcept>

namespace freepath {

namespace {

// integers k >= 1 with k < v; v within 1e-9 of an integer is treated as that
// integer (an endpoint) and excluded
std::int64_t strict_crossings(double v) {
  const double tol = 1e-9 * std::fmax(1.0, v);
  const double k = std::ceil(v - tol) - 1.0;
  return k > 0.0 ? static_cast<std::int64_t>(k) : 0;
}

}  // namespace

ReflectionCount reflection_count(double epsilon, double omega) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw std::invalid_argument("reflection_count: epsilon must lie in (0, 1/2)");
  }
  if (!(omega >= 0.0) || !(omega <= kQuarterPi)) {
    throw std::invalid_argument("reflection_count: omega must lie in [0, pi/4]");
  }

  const double t = std::tan(omega);
  const FareyPair pair = bracket_slope(farey_order(epsilon), t);
  const double q = static_cast<double>(pair.left.den), a = static_cast<double>(pair.left.num);
  const double qp = static_cast<double>(pair.right.den), ap = static_cast<double>(pair.right.num);

  // t == a/q lands on the left value even when its half-open strip is empty
  const bool at_left = a >= t * q;

  ReflectionBranch branch;
  ReflectionArc arc;
  if (pair.left.den < pair.right.den) {
    branch = ReflectionBranch::LeftDenSmaller;
    if (at_left || t * (q - epsilon) < a) {
      arc = ReflectionArc::LeftPoint;
    } else if (t * q < a + epsilon) {
      arc = ReflectionArc::LeftPointExtra;
    } else {
      arc = ReflectionArc::RightPoint;
    }
  } else if ((ap - epsilon) * (q - epsilon) <= a * qp) {  // (a'-e)/q' <= a/(q-e)
    branch = ReflectionBranch::RightDenSmallerEarly;
    arc = (at_left || t * qp < ap - epsilon) ? ReflectionArc::LeftPoint : ReflectionArc::RightPoint;
  } else {
    branch = ReflectionBranch::RightDenSmallerLate;
    if (at_left || t * (q - epsilon) < a) {
      arc = ReflectionArc::LeftPoint;
    } else if (t * qp < ap - epsilon) {
      arc = ReflectionArc::LeftPointExtra;
    } else {
      arc = ReflectionArc::RightPoint;
    }
  }

  std::int64_t count = 0;
  switch (arc) {
    case ReflectionArc::LeftPoint:
      count = pair.left.den + pair.left.num;
      break;
    case ReflectionArc::LeftPointExtra:
      count = pair.left.den + pair.left.num + 1;
      break;
    case ReflectionArc::RightPoint:
      count = pair.right.den + pair.right.num;
      break;
  }
  return {omega, count, branch, arc, pair};
}

std::int64_t crossing_count_oracle(const ScattererConfig& config, double omega) {
  const ExitEvent exit = exit_time(config, omega);
  return strict_crossings(exit.length * std::cos(omega)) +
         strict_crossings(exit.length * std::sin(omega));
}

}  // namespace freepath
