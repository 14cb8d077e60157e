#include "freepath/scatterers.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace freepath {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw std::invalid_argument("scatterers: epsilon must lie in (0, 1/2)");
  }
}

void check_omega(double omega) {
  if (!(omega >= 0.0) || !(omega <= kQuarterPi)) {
    throw std::invalid_argument("scatterers: omega must lie in [0, pi/4]");
  }
}

struct ArmHit {
  double length;
  HitKind kind;
};

// First intersection of the ray (cos w, sin w)*s with the scatterer at (x, y).
// t = tan(omega). Branch comparisons carry a 1e-12 relative tolerance so that
// tangencies count as hits on both evaluation paths.
std::optional<ArmHit> scatterer_hit(ScattererKind kind, double epsilon, std::int64_t x,
                                    std::int64_t y, double omega, double t, double cw, double sw) {
  const double xd = static_cast<double>(x);
  const double yd = static_cast<double>(y);

  if (kind == ScattererKind::Disk) {
    const double d = std::abs(xd * sw - yd * cw);
    if (d > epsilon) return std::nullopt;
    const double proj = xd * cw + yd * sw;
    return ArmHit{proj - std::sqrt((epsilon - d) * (epsilon + d)), HitKind::DiskBoundary};
  }

  double w_lo = epsilon, w_hi = epsilon;
  if (kind == ScattererKind::VariableVertical) {
    if (std::abs(xd * t - yd) > 0.8) return std::nullopt;  // widest arm is below 3/4
    const auto [lo, hi] = variable_arm_halfwidths(epsilon, x, y);
    w_lo = lo;
    w_hi = hi;
  }

  const double tol = 1e-12 * xd;
  std::optional<ArmHit> best;
  if (kind == ScattererKind::Cross) {
    if (y == 0) {
      // ray along the arm: first contact at its near end
      if (omega == 0.0) best = ArmHit{xd - epsilon, HitKind::HorizontalArm};
    } else if (omega > 0.0) {
      const double x_cross = yd / t;
      if (std::abs(x_cross - xd) <= epsilon + tol) {
        best = ArmHit{yd / sw, HitKind::HorizontalArm};
      }
    }
  }
  const double dy = xd * t - yd;
  if (dy >= -(w_lo + tol) && dy <= w_hi + tol) {
    const double len = xd / cw;
    if (!best || len < best->length) best = ArmHit{len, HitKind::VerticalArm};
  }
  return best;
}

}  // namespace

std::int64_t farey_order(double epsilon) {
  check_epsilon(epsilon);
  const double nudge = 1.0 + 8.0 * std::numeric_limits<double>::epsilon();
  return static_cast<std::int64_t>(std::floor((1.0 / epsilon) * nudge));
}

EpsilonPM epsilon_pm(double epsilon, std::int64_t q, std::int64_t a) {
  check_epsilon(epsilon);
  if (q < 1 || a < 0 || a > q) {
    throw std::invalid_argument("epsilon_pm: need q >= 1 and 0 <= a <= q");
  }
  const double qd = static_cast<double>(q), ad = static_cast<double>(a);
  const double denom = qd * qd - epsilon * epsilon;
  if (!(denom > 0.0)) throw std::invalid_argument("epsilon_pm: q^2 <= epsilon^2");
  const double root =
      epsilon * qd * std::sqrt(qd * qd + ad * ad - epsilon * epsilon);
  const double shift = ad * epsilon * epsilon;
  return {q, a, (root - shift) / denom, (root + shift) / denom};
}

std::pair<double, double> variable_arm_halfwidths(double epsilon, std::int64_t q,
                                                  std::int64_t a) {
  const EpsilonPM pm = epsilon_pm(epsilon, q, a);
  return {pm.eps_minus, pm.eps_plus};
}

ExitEvent exit_time(const ScattererConfig& config, double omega) {
  check_epsilon(config.epsilon);
  check_omega(omega);
  if (config.kind == ScattererKind::Disk || config.kind == ScattererKind::VariableVertical) {
    return exit_time_bruteforce(config, omega);
  }

  const double t = std::tan(omega), cw = std::cos(omega), sw = std::sin(omega);
  const FareyPair pair = bracket_slope(farey_order(config.epsilon), t);

  ExitEvent best{};
  bool found = false;
  for (const FareyFraction& f : {pair.left, pair.right}) {
    const auto hit = scatterer_hit(config.kind, config.epsilon, f.den, f.num, omega, t, cw, sw);
    if (hit && (!found || hit->length < best.length)) {
      best = {hit->length, f.den, f.num, hit->kind, omega};
      found = true;
    }
  }
  if (!found) throw std::logic_error("exit_time: bracket points missed, geometry violated");
  return best;
}

ExitEvent exit_time_bruteforce(const ScattererConfig& config, double omega) {
  check_epsilon(config.epsilon);
  check_omega(omega);

  const double epsilon = config.epsilon;
  const double t = std::tan(omega), cw = std::cos(omega), sw = std::sin(omega);
  const std::int64_t x_max =
      static_cast<std::int64_t>(std::ceil(std::sqrt(2.0) / epsilon)) + 1;
  const bool skip_nonprimitive =
      config.kind == ScattererKind::Cross || config.kind == ScattererKind::Vertical;

  ExitEvent best{};
  bool found = false;
  for (std::int64_t x = 1; x <= x_max; ++x) {
    if (found && static_cast<double>(x) * cw - epsilon > best.length) break;
    const std::int64_t y0 = static_cast<std::int64_t>(std::floor(static_cast<double>(x) * t));
    for (std::int64_t y = std::max<std::int64_t>(0, y0 - 1); y <= y0 + 2; ++y) {
      if (skip_nonprimitive && std::gcd(x, y) > 1) continue;
      const auto hit = scatterer_hit(config.kind, epsilon, x, y, omega, t, cw, sw);
      if (hit && (!found || hit->length < best.length)) {
        best = {hit->length, x, y, hit->kind, omega};
        found = true;
      }
    }
  }
  if (!found) throw std::logic_error("exit_time_bruteforce: no hit within the support bound");
  return best;
}

}  // namespace freepath
