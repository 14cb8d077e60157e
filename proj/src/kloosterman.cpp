#include "freepath/kloosterman.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "freepath/farey.hpp"

namespace freepath {

namespace {

constexpr double kTwoPi = 6.2831853071795864769;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

void check_modulus(std::int64_t q) {
  if (q < 1 || q > kMaxKloostermanModulus) {
    throw std::invalid_argument("kloosterman: modulus must be in [1, 10^5]");
  }
}

}  // namespace

std::int64_t euler_phi(std::int64_t q) {
  std::int64_t result = q, m = q;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::int64_t divisor_count(std::int64_t q) {
  std::int64_t count = 1, m = q;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      std::int64_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      count *= e + 1;
    }
  }
  if (m > 1) count *= 2;
  return count;
}

KloostermanTable::KloostermanTable(std::int64_t q) : q_(q) {
  check_modulus(q);
  weil_base_ = static_cast<double>(divisor_count(q)) * std::sqrt(static_cast<double>(q));
  cos_.resize(q);
  sin_.resize(q);
  for (std::int64_t k = 0; k < q; ++k) {
    const double phase = kTwoPi * static_cast<double>(k) / static_cast<double>(q);
    cos_[k] = std::cos(phase);
    sin_[k] = std::sin(phase);
  }
  units_.reserve(q);
  for (std::int64_t x = 1; x <= q; ++x) {
    if (std::gcd(x, q) != 1) continue;
    units_.emplace_back(x % q, mod_inverse(x, q) % q);
  }
}

KloostermanValue KloostermanTable::sum(std::int64_t m, std::int64_t n) const {
  const std::int64_t mr = m % q_, nr = n % q_;
  double re = 0.0, im = 0.0;
  for (const auto& [x, xbar] : units_) {
    std::int64_t k = (mr * x + nr * xbar) % q_;
    if (k < 0) k += q_;
    re += cos_[k];
    im += sin_[k];
  }
  const std::int64_t g = std::gcd(std::gcd(std::abs(m), std::abs(n)), q_);
  return {m, n, q_, re, std::abs(im), weil_base_ * std::sqrt(static_cast<double>(g))};
}

KloostermanValue kloosterman_sum(std::int64_t m, std::int64_t n, std::int64_t q) {
  return KloostermanTable(q).sum(m, n);
}

InversePairCount count_inverse_pairs(std::int64_t q, IntInterval i_range, IntInterval j_range) {
  check_modulus(q);
  if (i_range.lo > i_range.hi || j_range.lo > j_range.hi) {
    throw std::invalid_argument("count_inverse_pairs: empty interval");
  }
  if (i_range.count() > q || j_range.count() > q) {
    throw std::invalid_argument("count_inverse_pairs: interval contains more than q integers");
  }

  InversePairCount out;
  if (q == 1) {
    out.exact = i_range.count() * j_range.count();
    out.main_term = static_cast<double>(out.exact);
    return out;
  }
  for (std::int64_t x = i_range.lo; x <= i_range.hi; ++x) {
    std::int64_t r = x % q;
    if (r < 0) r += q;
    if (r == 0 || std::gcd(r, q) != 1) continue;
    const std::int64_t y0 = mod_inverse(r, q);
    // integers y in [lo, hi] congruent to y0 mod q
    const std::int64_t hits =
        floor_div(j_range.hi - y0, q) - floor_div(j_range.lo - y0 - 1, q);
    if (hits > 0) out.exact += hits;
  }
  out.main_term = static_cast<double>(euler_phi(q)) *
                  static_cast<double>(i_range.count() * j_range.count()) /
                  static_cast<double>(q * q);
  return out;
}

}  // namespace freepath
