#pragma once

#include <cstdint>
#include <utility>

#include "freepath/farey.hpp"

namespace freepath {

inline constexpr double kQuarterPi = 0.78539816339744830962;

enum class ScattererKind { Disk, Cross, Vertical, VariableVertical };

// Obstacle placed at every nonzero lattice point, in lattice-spacing units:
//   Disk             circle of radius epsilon
//   Cross            {q} x [a-e, a+e]  union  [q-e, q+e] x {a}
//   Vertical         {q} x [a-e, a+e]
//   VariableVertical {q} x [a - e_-(q,a), a + e_+(q,a)], the shadow of the
//                    disk on the line x = q as seen from the origin
struct ScattererConfig {
  ScattererKind kind = ScattererKind::Cross;
  double epsilon = 0.01;  // must satisfy 0 < epsilon < 1/2
};

enum class HitKind { VerticalArm, HorizontalArm, DiskBoundary };

// First contact of the ray from the origin at angle omega with any scatterer.
struct ExitEvent {
  double length = 0.0;  // path length to the contact point
  std::int64_t q = 0;   // lattice point hit
  std::int64_t a = 0;
  HitKind hit = HitKind::VerticalArm;
  double omega = 0.0;
};

// Tangent-line half-widths at (q, a): the roots of
// (q^2 - e^2) w^2 -+ 2 a e^2 w - e^2 (q^2 + a^2) = 0.
struct EpsilonPM {
  std::int64_t q = 1;
  std::int64_t a = 0;
  double eps_minus = 0.0;
  double eps_plus = 0.0;
};

// floor(1/epsilon), nudged half an ulp up so epsilon == 1/n lands on n.
std::int64_t farey_order(double epsilon);

EpsilonPM epsilon_pm(double epsilon, std::int64_t q, std::int64_t a);

// (eps_minus, eps_plus) for the VariableVertical arm at (q, a).
std::pair<double, double> variable_arm_halfwidths(double epsilon, std::int64_t q, std::int64_t a);

// Exit computation for omega in [0, pi/4] (callers map the other octant by
// the diagonal symmetry). Cross and Vertical kinds evaluate only the two
// lattice points of the slope bracket; Disk and VariableVertical fall back to
// the lattice scan, whose candidate set cannot be reduced to the bracket.
ExitEvent exit_time(const ScattererConfig& config, double omega);

// Oracle: scans columns x = 1 .. ceil(sqrt(2)/epsilon)+1 and the lattice rows
// adjacent to the ray in each column. Points with gcd > 1 are skipped only
// for Cross/Vertical, where occlusion by the primitive point is guaranteed.
ExitEvent exit_time_bruteforce(const ScattererConfig& config, double omega);

}  // namespace freepath
