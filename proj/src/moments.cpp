#include "freepath/moments.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "freepath/quadrature.hpp"
#include "freepath/reflections.hpp"

namespace freepath {

namespace {

constexpr double kPiSquared = 9.8696044010893586188;

// ---- stable differences of antiderivatives over short slope ranges --------
// dt is carried separately (from the closed rational formulas) so adjacent
// breakpoints never cancel.

double atan_diff(double lo, double hi, double dt) { return std::atan(dt / (1.0 + lo * hi)); }

// asinh(hi) - asinh(lo)
double asinh_diff(double lo, double hi, double dt) {
  const double sl = std::sqrt(1.0 + lo * lo), sh = std::sqrt(1.0 + hi * hi);
  return std::asinh(dt * (lo + hi) / (hi * sl + lo * sh));
}

// log(tan(atan(hi)/2)) - log(tan(atan(lo)/2)), the csc antiderivative,
// valid for 0 < lo <= hi
double csc_log_diff(double lo, double hi, double dt) {
  const double sl = std::sqrt(1.0 + lo * lo), sh = std::sqrt(1.0 + hi * hi);
  const double d2 = hi * sl + lo * sh;
  const double numer = dt * (1.0 + (hi + lo) / d2);
  return std::log1p(numer / (lo * (1.0 + sh)));
}

// ---- exit structure of one bracket arc ------------------------------------

struct SubArc {
  double t_lo, t_hi, dt;
  std::int64_t q, a;    // lattice point the exit goes through
  HitKind hit;          // VerticalArm: length q/cos w; HorizontalArm: a/sin w
  std::int64_t count;   // cushion count on this sub-arc (cross scatterers)
};

// Splits [a/q, a'/q'] at the hit-switch slopes a/(q-e), (a+e)/q, (a'-e)/q'.
// The dt of each sub-arc comes from the closed rational expressions; empty
// sub-arcs (a == 0, or e*q' == 1) are dropped.
int arc_subarcs(ScattererKind kind, double eps, const FareyPair& pr, bool plus_one,
                SubArc out[3]) {
  const std::int64_t q = pr.left.den, a = pr.left.num;
  const std::int64_t qp = pr.right.den, ap = pr.right.num;
  const double qd = static_cast<double>(q), ad = static_cast<double>(a);
  const double qpd = static_cast<double>(qp), apd = static_cast<double>(ap);
  const double gamma = ad / qd, gammap = apd / qpd;
  const std::int64_t left_count = q + a;
  const std::int64_t extra_count = plus_one ? q + a + 1 : q + a;
  const std::int64_t right_count = qp + ap;

  int n = 0;
  auto push = [&](double lo, double hi, double dt, std::int64_t px, std::int64_t py, HitKind h,
                  std::int64_t c) {
    if (dt > 0.0) out[n++] = {lo, hi, dt, px, py, h, c};
  };

  if (kind == ScattererKind::Vertical) {
    if (q < qp) {
      const double t_n = (ad + eps) / qd;
      push(gamma, t_n, eps / qd, q, a, HitKind::VerticalArm, left_count);
      push(t_n, gammap, (1.0 - eps * qpd) / (qd * qpd), qp, ap, HitKind::VerticalArm, right_count);
    } else {
      const double t_sp = (apd - eps) / qpd;
      push(gamma, t_sp, (1.0 - eps * qd) / (qd * qpd), q, a, HitKind::VerticalArm, left_count);
      push(t_sp, gammap, eps / qpd, qp, ap, HitKind::VerticalArm, right_count);
    }
    return n;
  }

  // cross scatterers
  if (q < qp) {
    const double t_w = ad / (qd - eps);
    const double t_n = (ad + eps) / qd;
    push(gamma, t_w, ad * eps / (qd * (qd - eps)), q, a, HitKind::HorizontalArm, left_count);
    push(t_w, t_n, eps * (qd - ad - eps) / (qd * (qd - eps)), q, a, HitKind::VerticalArm,
         extra_count);
    push(t_n, gammap, (1.0 - eps * qpd) / (qd * qpd), qp, ap, HitKind::VerticalArm, right_count);
  } else if ((apd - eps) * (qd - eps) <= ad * qpd) {  // (a'-e)/q' <= a/(q-e)
    const double t_sp = (apd - eps) / qpd;
    push(gamma, t_sp, (1.0 - eps * qd) / (qd * qpd), q, a, HitKind::HorizontalArm, left_count);
    push(t_sp, gammap, eps / qpd, qp, ap, HitKind::VerticalArm, right_count);
  } else {
    const double t_w = ad / (qd - eps);
    const double t_sp = (apd - eps) / qpd;
    push(gamma, t_w, ad * eps / (qd * (qd - eps)), q, a, HitKind::HorizontalArm, left_count);
    push(t_w, t_sp, (1.0 - eps * (apd + qd) + eps * eps) / (qpd * (qd - eps)), q, a,
         HitKind::VerticalArm, extra_count);
    push(t_sp, gammap, eps / qpd, qp, ap, HitKind::VerticalArm, right_count);
  }
  return n;
}

bool clip_subarc(SubArc& s, double t1, double t2) {
  bool changed = false;
  double lo = s.t_lo, hi = s.t_hi;
  if (lo < t1) {
    lo = t1;
    changed = true;
  }
  if (hi > t2) {
    hi = t2;
    changed = true;
  }
  if (changed) {
    s.t_lo = lo;
    s.t_hi = hi;
    s.dt = hi - lo;
  }
  return s.dt > 0.0;
}

double subarc_length_integral(const SubArc& s, double r, bool closed_forms) {
  if (closed_forms && r == 2.0) {
    if (s.hit == HitKind::VerticalArm) {
      return static_cast<double>(s.q) * static_cast<double>(s.q) * s.dt;
    }
    return static_cast<double>(s.a) * static_cast<double>(s.a) * s.dt / (s.t_lo * s.t_hi);
  }
  if (closed_forms && r == 1.0) {
    if (s.hit == HitKind::VerticalArm) {
      return static_cast<double>(s.q) * asinh_diff(s.t_lo, s.t_hi, s.dt);
    }
    return static_cast<double>(s.a) * csc_log_diff(s.t_lo, s.t_hi, s.dt);
  }
  const double w_lo = std::atan(s.t_lo);
  const double w_hi = w_lo + atan_diff(s.t_lo, s.t_hi, s.dt);
  if (s.hit == HitKind::VerticalArm) {
    const double qd = static_cast<double>(s.q);
    return gauss16([qd, r](double w) { return std::pow(qd / std::cos(w), r); }, w_lo, w_hi);
  }
  const double ad = static_cast<double>(s.a);
  return gauss16([ad, r](double w) { return std::pow(ad / std::sin(w), r); }, w_lo, w_hi);
}

// Fixed 64-way chunking; partials are added in chunk order, so results do not
// depend on the thread count.
template <class Job>
double chunked_sum(std::int64_t n, int threads, const Job& job) {
  if (n <= 0) return 0.0;
  const std::int64_t chunks = std::min<std::int64_t>(64, n);
  std::vector<double> partial(chunks, 0.0);
  auto run_chunk = [&](std::int64_t c) {
    const std::int64_t begin = n * c / chunks, end = n * (c + 1) / chunks;
    double s = 0.0;
    for (std::int64_t i = begin; i < end; ++i) s += job(i);
    partial[c] = s;
  };
  if (threads <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<std::int64_t>(threads, chunks));
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t c; (c = next.fetch_add(1)) < chunks;) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }
  double total = 0.0;
  for (std::int64_t c = 0; c < chunks; ++c) total += partial[c];
  return total;
}

double main_term_for(ScattererKind kind, MomentQuantity quantity, double r,
                     const AngleInterval& I) {
  const bool segment = kind == ScattererKind::Cross || kind == ScattererKind::Vertical;
  const double c = c_r(r);
  if (quantity == MomentQuantity::ExitLength) {
    return segment ? c * sec_power_integral(I, r) : c * I.width();
  }
  return segment ? c * one_plus_tan_power_integral(I, r) : c * sin_plus_cos_power_integral(I, r);
}

void check_moment_args(double epsilon, double r, const AngleInterval& I) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw std::invalid_argument("moment_integral: epsilon must lie in (0, 1/2)");
  }
  if (farey_order(epsilon) < 2) {
    throw std::invalid_argument("moment_integral: epsilon admits no bracketing order");
  }
  if (!(r >= 0.05) || !(r <= 50.0)) {
    throw std::invalid_argument("moment_integral: r outside the supported range [0.05, 50]");
  }
  if (!(I.alpha >= 0.0) || !(I.beta <= kQuarterPi + 1e-12) || !(I.alpha < I.beta)) {
    throw std::invalid_argument("moment_integral: interval must satisfy 0 <= alpha < beta <= pi/4");
  }
}

}  // namespace

double c_r(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("c_r: r must be positive");
  const auto quotient_terms = [r](double x) -> double {
    if (x < 1e-4) {
      // series of the difference; both quotients tend to 1 as x -> 0
      return (x / 2.0 - (r - 1.0) * x * x / 3.0 + (r - 1.0) * (r - 2.0) * x * x * x / 8.0) /
             (1.0 - x);
    }
    const double l = std::log1p(-x);
    const double n1 = -std::expm1(r * l) / r;
    const double n2 = -std::expm1((r + 1.0) * l) / (r + 1.0);
    return (n1 - n2) / (x * (1.0 - x));
  };
  const auto integrand = [&](double x) -> double {
    return std::pow(x, r) + x * std::pow(1.0 - x, r - 1.0) + quotient_terms(x);
  };
  return 12.0 / kPiSquared * adaptive_simpson(integrand, 0.0, 0.5, 1e-10, 60);
}

double sec_power_integral(const AngleInterval& I, double r) {
  return adaptive_simpson([r](double x) { return std::pow(1.0 / std::cos(x), r); }, I.alpha,
                          I.beta, 1e-12);
}

double one_plus_tan_power_integral(const AngleInterval& I, double r) {
  return adaptive_simpson([r](double x) { return std::pow(1.0 + std::tan(x), r); }, I.alpha,
                          I.beta, 1e-12);
}

double sin_plus_cos_power_integral(const AngleInterval& I, double r) {
  return adaptive_simpson([r](double x) { return std::pow(std::sin(x) + std::cos(x), r); },
                          I.alpha, I.beta, 1e-12);
}

double second_moment_arc(double epsilon, const FareyPair& pair) {
  if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
    throw std::invalid_argument("second_moment_arc: epsilon must lie in (0, 1/2)");
  }
  if (!pair.valid() || pair.order != farey_order(epsilon)) {
    throw std::invalid_argument("second_moment_arc: pair does not match floor(1/epsilon)");
  }
  const double q = static_cast<double>(pair.left.den), a = static_cast<double>(pair.left.num);
  const double qp = static_cast<double>(pair.right.den), ap = static_cast<double>(pair.right.num);
  const double e = epsilon;
  if (pair.left.den < pair.right.den) {
    // doubled triangle areas swept along the horizontal arm, the left
    // vertical arm, and the right vertical arm, corner slivers included
    return a * e + q * e * (q - a - e) / (q - e) + qp * (1.0 - e * qp) / q;
  }
  if ((ap - e) * (q - e) <= a * qp) {
    return a * q - a * a * qp / (ap - e) + e * qp;
  }
  return a * e + q * q * ((ap - e) / qp - a / (q - e)) + e * qp;
}

MomentEstimate moment_integral(double epsilon, double r, const AngleInterval& I,
                               ScattererKind kind, MomentQuantity quantity, MomentMethod method,
                               const MomentOptions& options) {
  check_moment_args(epsilon, r, I);
  const bool segment = kind == ScattererKind::Cross || kind == ScattererKind::Vertical;
  const bool farey_path = method != MomentMethod::BruteForceQuadrature;
  if (farey_path && !segment) {
    throw std::invalid_argument("moment_integral: Farey methods need Cross or Vertical");
  }
  if (farey_path && quantity == MomentQuantity::Reflections && kind != ScattererKind::Cross) {
    throw std::invalid_argument("moment_integral: piecewise cushion counts are cross-only");
  }

  const ScattererConfig config{kind, epsilon};
  const double t1 = std::tan(I.alpha), t2 = std::tan(I.beta);
  double unscaled = 0.0;

  if (segment) {
    std::vector<FareyPair> pairs;
    FareyPairCursor cursor(farey_order(epsilon), t1, t2);
    while (auto p = cursor.next()) pairs.push_back(*p);

    unscaled = chunked_sum(
        static_cast<std::int64_t>(pairs.size()), options.threads, [&](std::int64_t i) {
          SubArc subs[3];
          const int count = arc_subarcs(kind, epsilon, pairs[i], options.plus_one_arcs, subs);
          double s = 0.0;
          for (int k = 0; k < count; ++k) {
            SubArc sub = subs[k];
            if (!clip_subarc(sub, t1, t2)) continue;
            if (method == MomentMethod::BruteForceQuadrature) {
              const double w_lo = std::atan(sub.t_lo);
              const double w_hi = w_lo + atan_diff(sub.t_lo, sub.t_hi, sub.dt);
              if (quantity == MomentQuantity::ExitLength) {
                s += gauss16(
                    [&](double w) { return std::pow(exit_time_bruteforce(config, w).length, r); },
                    w_lo, w_hi);
              } else {
                s += gauss16(
                    [&](double w) {
                      return std::pow(
                          static_cast<double>(crossing_count_oracle(config, w)), r);
                    },
                    w_lo, w_hi);
              }
            } else if (quantity == MomentQuantity::Reflections) {
              s += std::pow(static_cast<double>(sub.count), r) *
                   atan_diff(sub.t_lo, sub.t_hi, sub.dt);
            } else {
              s += subarc_length_integral(sub, r, method == MomentMethod::FareyExact);
            }
          }
          return s;
        });
  } else {
    const std::int64_t panels = std::max<std::int64_t>(1, options.brute_samples / 16);
    const double panel_width = I.width() / static_cast<double>(panels);
    unscaled = chunked_sum(panels, options.threads, [&](std::int64_t j) {
      const double w_lo = I.alpha + panel_width * static_cast<double>(j);
      const double w_hi = (j + 1 == panels) ? I.beta : w_lo + panel_width;
      if (quantity == MomentQuantity::ExitLength) {
        return gauss16(
            [&](double w) { return std::pow(exit_time_bruteforce(config, w).length, r); }, w_lo,
            w_hi);
      }
      return gauss16(
          [&](double w) { return std::pow(static_cast<double>(crossing_count_oracle(config, w)), r); },
          w_lo, w_hi);
    });
  }

  const double scaled = std::pow(epsilon, r) * unscaled;
  const double main = main_term_for(kind, quantity, r, I);
  return {r, epsilon, I, scaled, main, scaled - main, method};
}

std::vector<MomentEstimate> limit_distribution_moments(const std::vector<double>& eps_list,
                                                       const std::vector<double>& r_list,
                                                       const AngleInterval& I, ScattererKind kind,
                                                       MomentQuantity quantity,
                                                       const MomentOptions& options) {
  if (eps_list.empty() || r_list.empty()) {
    throw std::invalid_argument("limit_distribution_moments: empty sweep lists");
  }
  const bool segment = kind == ScattererKind::Cross || kind == ScattererKind::Vertical;
  const MomentMethod method =
      segment ? MomentMethod::FareyExact : MomentMethod::BruteForceQuadrature;
  std::vector<MomentEstimate> rows;
  rows.reserve(eps_list.size() * r_list.size());
  for (const double eps : eps_list) {
    for (const double r : r_list) {
      MomentEstimate est = moment_integral(eps, r, I, kind, quantity, method, options);
      est.scaled_value /= I.width();
      est.main_term /= I.width();
      est.deviation = est.scaled_value - est.main_term;
      rows.push_back(est);
    }
  }
  return rows;
}

}  // namespace freepath
