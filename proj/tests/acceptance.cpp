// Acceptance suite: every verification target evaluated at its stated
// tolerance, one pass/fail line each. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "freepath/asymptotics.hpp"
#include "freepath/kloosterman.hpp"
#include "freepath/moments.hpp"
#include "freepath/reflections.hpp"
#include "freepath/scatterers.hpp"

using namespace freepath;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kPi = 3.14159265358979323846;
const AngleInterval kFull{0.0, kQuarterPi};

int failures = 0;

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, bool pass, const char* name, const std::string& detail) {
  std::printf("criterion %2d %s  %s: %s\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

std::vector<std::int64_t> totient_sieve(std::int64_t n) {
  std::vector<std::int64_t> phi(n + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;
    for (std::int64_t k = p; k <= n; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

void criterion_1_second_moment() {
  const auto start = Clock::now();
  const MomentEstimate est = moment_integral(1e-3, 2.0, kFull, ScattererKind::Cross,
                                             MomentQuantity::ExitLength, MomentMethod::FareyExact);
  const double target = (1.0 + 2.0 * std::log(2.0)) / (kPi * kPi);
  const double dev = std::abs(est.scaled_value - target);
  const double secs = elapsed(start);
  report(1, dev <= 0.02 && secs < 5.0, "second moment, eps = 1e-3",
         fmt("|dev| = %.3g <= 0.02, %.2fs < 5s", dev, secs));
}

void criterion_2_c1() {
  const auto start = Clock::now();
  const double value = c_r(1.0);
  const double target = 6.0 * std::log(2.0) / (kPi * kPi);
  const double secs = elapsed(start);
  report(2, std::abs(value - target) <= 1e-9 && secs < 0.1, "limit constant at r = 1",
         fmt("|c_1 - 6 ln2/pi^2| = %.3g <= 1e-9, %.3fs < 0.1s", std::abs(value - target), secs));
}

void criterion_3_c_small_r() {
  const double value = c_r(0.001);
  report(3, value >= 0.99 && value <= 1.01, "limit constant near r = 0",
         fmt("c_0.001 = %.6f in [0.99, 1.01]", value));
}

void criterion_4_first_moment() {
  const auto start = Clock::now();
  const MomentEstimate est = moment_integral(1e-3, 1.0, kFull, ScattererKind::Cross,
                                             MomentQuantity::ExitLength, MomentMethod::FareyExact);
  const double target = c_r(1.0) * std::log(1.0 + std::sqrt(2.0));
  const double dev = std::abs(est.scaled_value - target);
  const double secs = elapsed(start);
  report(4, dev <= 0.02 && secs < 10.0, "first moment, eps = 1e-3",
         fmt("|dev| = %.3g <= 0.02, %.2fs < 10s", dev, secs));
}

void criterion_5_circular() {
  const auto start = Clock::now();
  VerifyOptions opt;
  opt.samples = 10000;
  const SweepReport rep = verify_theorem(TheoremId::T1_1, {1e-2}, {1.0}, kFull, opt);
  const double bound = 3.0 * std::pow(1e-2, 0.125);
  bool contained = !rep.squeeze.empty();
  for (const auto& cell : rep.squeeze) contained = contained && cell.contained;
  const double dev = std::abs(rep.rows.at(0).deviation);
  const double secs = elapsed(start);
  report(5, dev <= bound && contained && secs < 60.0, "circular first moment, eps = 1e-2",
         fmt("|dev| = %.3g <= %.3g, sandwich %s on %zu cells, %.2fs < 60s", dev, bound,
             contained ? "holds" : "FAILS", rep.squeeze.size(), secs));
}

void criterion_6_reflections() {
  const MomentEstimate est = moment_integral(1e-3, 1.0, kFull, ScattererKind::Cross,
                                             MomentQuantity::Reflections,
                                             MomentMethod::FareyExact);
  const double target = c_r(1.0) * (kPi / 4.0 + 0.5 * std::log(2.0));
  const double dev = std::abs(est.scaled_value - target);
  report(6, dev <= 0.02, "cushion-count moment, eps = 1e-3", fmt("|dev| = %.3g <= 0.02", dev));
}

void criterion_7_covering() {
  std::mt19937_64 rng(7012);
  std::uniform_real_distribution<double> dist(0.0, kQuarterPi);
  std::int64_t mismatches = 0, trials = 0;
  double worst_rel = 0.0;
  for (const double eps : {0.02, 0.01, 0.005}) {
    const std::int64_t order = farey_order(eps);
    for (int i = 0; i < 10000; ++i) {
      const double omega = dist(rng);
      const ExitEvent slow = exit_time_bruteforce({ScattererKind::Cross, eps}, omega);
      const ExitEvent fast = exit_time({ScattererKind::Cross, eps}, omega);
      const FareyPair pair = bracket_slope(order, std::tan(omega));
      const bool at_bracket = (slow.q == pair.left.den && slow.a == pair.left.num) ||
                              (slow.q == pair.right.den && slow.a == pair.right.num);
      const bool same = fast.q == slow.q && fast.a == slow.a && fast.hit == slow.hit;
      const double rel = std::abs(fast.length - slow.length) / slow.length;
      worst_rel = std::max(worst_rel, rel);
      if (!at_bracket || !same || rel > 1e-10) ++mismatches;
      ++trials;
    }
  }
  report(7, mismatches == 0, "bracket covering of lattice-scan exits",
         fmt("%lld/%lld samples agree, worst length mismatch %.2g",
             static_cast<long long>(trials - mismatches), static_cast<long long>(trials),
             worst_rel));
}

void criterion_8_kloosterman() {
  const auto start = Clock::now();
  std::int64_t bound_violations = 0, symmetry_violations = 0;
  for (std::int64_t q = 1; q <= 500; ++q) {
    KloostermanTable table(q);
    double values[21][21];
    for (std::int64_t m = 1; m <= 20; ++m) {
      for (std::int64_t n = m; n <= 20; ++n) {
        const KloostermanValue v = table.sum(m, n);
        values[m][n] = v.value;
        if (std::abs(v.value) > v.weil_bound + 1e-9) ++bound_violations;
      }
    }
    for (std::int64_t m = 2; m <= 20; ++m) {
      for (std::int64_t n = 1; n < m; ++n) {
        const KloostermanValue v = table.sum(m, n);
        if (std::abs(v.value) > v.weil_bound + 1e-9) ++bound_violations;
        if (std::abs(v.value - values[n][m]) > 1e-10 * std::max(1.0, std::abs(v.value))) {
          ++symmetry_violations;
        }
      }
    }
  }
  const double q3 = kloosterman_sum(1, 1, 3).value;
  const bool q3_ok = std::abs(q3 + 1.0) <= 1e-10;
  const double secs = elapsed(start);
  report(8, bound_violations == 0 && symmetry_violations == 0 && q3_ok && secs < 30.0,
         "explicit-constant bound, q <= 500",
         fmt("bound violations %lld, symmetry violations %lld, S(1,1;3) = %.12g, %.2fs < 30s",
             static_cast<long long>(bound_violations),
             static_cast<long long>(symmetry_violations), q3, secs));
}

void criterion_9_inverse_pairs() {
  const auto phi = totient_sieve(1000);
  std::int64_t exact_misses = 0;
  for (std::int64_t q = 1; q <= 1000; ++q) {
    const auto full = count_inverse_pairs(q, {1, q}, {1, q});
    if (full.exact != phi[q] || static_cast<double>(full.exact) - full.main_term != 0.0) {
      ++exact_misses;
    }
  }
  std::mt19937_64 rng(919);
  std::int64_t bound_misses = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(2, 1000)(rng);
    const std::int64_t ni = std::uniform_int_distribution<std::int64_t>(1, q)(rng);
    const std::int64_t nj = std::uniform_int_distribution<std::int64_t>(1, q)(rng);
    const std::int64_t li = std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    const std::int64_t lj = std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    const auto count = count_inverse_pairs(q, {li, li + ni - 1}, {lj, lj + nj - 1});
    const double dev = std::abs(static_cast<double>(count.exact) - count.main_term);
    const double allowed = 4.0 * std::pow(static_cast<double>(q), 0.6);
    worst = std::max(worst, dev / allowed);
    if (dev > allowed) ++bound_misses;
  }
  report(9, exact_misses == 0 && bound_misses == 0, "inverse-pair counts vs main term",
         fmt("full-box misses %lld, random-box misses %lld (worst ratio %.2f)",
             static_cast<long long>(exact_misses), static_cast<long long>(bound_misses), worst));
}

void criterion_10_tangent_halfwidths() {
  std::mt19937_64 rng(1010);
  std::int64_t residual_misses = 0, proximity_misses = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, 1000)(rng);
    const std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, q)(rng);
    const double eps = std::uniform_real_distribution<double>(1e-6, 0.1)(rng);
    const EpsilonPM pm = epsilon_pm(eps, q, a);
    const double qd = static_cast<double>(q), ad = static_cast<double>(a);
    const double scale = eps * eps * (qd * qd + ad * ad);
    for (const double sign : {-1.0, 1.0}) {
      const double w = sign < 0 ? pm.eps_minus : pm.eps_plus;
      const double residual =
          (qd * qd - eps * eps) * w * w - sign * 2.0 * ad * eps * eps * w - scale;
      if (std::abs(residual) > 1e-12 * scale) ++residual_misses;
      if (std::abs(w - eps * std::sqrt(1.0 + ad * ad / (qd * qd))) > 2.0 * eps * eps / qd) {
        ++proximity_misses;
      }
    }
  }
  report(10, residual_misses == 0 && proximity_misses == 0, "tangent half-width roots",
         fmt("residual misses %lld, proximity misses %lld over 10^4 draws",
             static_cast<long long>(residual_misses),
             static_cast<long long>(proximity_misses)));
}

void criterion_11_method_agreement() {
  const MomentEstimate exact = moment_integral(1e-2, 2.0, kFull, ScattererKind::Cross,
                                               MomentQuantity::ExitLength,
                                               MomentMethod::FareyExact);
  const MomentEstimate brute = moment_integral(1e-2, 2.0, kFull, ScattererKind::Cross,
                                               MomentQuantity::ExitLength,
                                               MomentMethod::BruteForceQuadrature);
  const double rel = std::abs(exact.scaled_value - brute.scaled_value) / exact.scaled_value;
  report(11, rel <= 1e-6, "exact vs lattice-scan second moment",
         fmt("relative gap %.3g <= 1e-6", rel));
}

void criterion_12_convergence() {
  bool pass = true;
  std::string detail;
  for (const double r : {1.0, 2.0, 3.0}) {
    const auto rows = limit_distribution_moments({1e-1, 1e-2, 1e-3}, {r}, kFull,
                                                 ScattererKind::Cross, MomentQuantity::ExitLength);
    double prev = 1e300;
    for (const auto& row : rows) {
      const double dev = std::abs(row.deviation);
      if (dev > 1.2 * prev + 1e-12) pass = false;
      prev = dev;
    }
    if (prev > 0.03) pass = false;
    detail += fmt("r=%g final |dev| %.2g; ", r, prev);
  }
  report(12, pass, "moment convergence over the size decades", detail);
}

}  // namespace

int main() {
  criterion_1_second_moment();
  criterion_2_c1();
  criterion_3_c_small_r();
  criterion_4_first_moment();
  criterion_5_circular();
  criterion_6_reflections();
  criterion_7_covering();
  criterion_8_kloosterman();
  criterion_9_inverse_pairs();
  criterion_10_tangent_halfwidths();
  criterion_11_method_agreement();
  criterion_12_convergence();
  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "OK" : "FAILURE", failures);
  return failures;
}
