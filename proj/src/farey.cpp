#include "freepath/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace freepath {

namespace {

constexpr double kZeta2 = 1.6449340668482264365;  // pi^2 / 6

void check_order(std::int64_t order) {
  if (order < 1 || order > kMaxFareyOrder) {
    throw std::invalid_argument("farey: order must be in [1, 10^6]");
  }
}

void check_interval(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw std::invalid_argument("farey: interval must satisfy 0 <= lo <= hi <= 1");
  }
}

bool above(const FareyFraction& f, double bound) {
  return static_cast<double>(f.num) > bound * static_cast<double>(f.den);
}

bool below(const FareyFraction& f, double bound) {
  return static_cast<double>(f.num) < bound * static_cast<double>(f.den);
}

}  // namespace

bool FareyPair::valid() const {
  return left.den >= 1 && right.den >= 1 && order >= 1 &&
         right.num * left.den - left.num * right.den == 1 &&
         left.den + right.den > order && std::max(left.den, right.den) <= order;
}

std::optional<FareyFraction> next_farey(std::int64_t order, const FareyFraction& prev,
                                        const FareyFraction& cur) {
  if (cur.num == cur.den) return std::nullopt;
  const std::int64_t k = (order + prev.den) / cur.den;
  return FareyFraction{k * cur.num - prev.num, k * cur.den - prev.den};
}

FareyPair bracket_slope(std::int64_t order, double t) {
  check_order(order);
  if (!(t >= 0.0) || !(t <= 1.0)) {
    throw std::invalid_argument("bracket_slope: t must lie in [0, 1]");
  }
  if (t >= 1.0) {
    if (order == 1) return {{0, 1}, {1, 1}, order};
    return {{order - 1, order}, {1, 1}, order};
  }

  std::int64_t la = 0, lb = 1, ra = 1, rb = 1;
  while (lb + rb <= order) {
    if (t * static_cast<double>(lb + rb) >= static_cast<double>(la + ra)) {
      // mediants absorb into the left endpoint
      std::int64_t k = (order - lb) / rb;
      const double den = static_cast<double>(ra) - t * static_cast<double>(rb);
      if (den > 0.0) {
        const double kt = std::floor((t * static_cast<double>(lb) - static_cast<double>(la)) / den);
        if (kt < static_cast<double>(k)) k = static_cast<std::int64_t>(kt);
      }
      if (k < 1) k = 1;
      while (k > 1 && static_cast<double>(la + k * ra) > t * static_cast<double>(lb + k * rb)) --k;
      la += k * ra;
      lb += k * rb;
    } else {
      std::int64_t k = (order - rb) / lb;
      const double den = t * static_cast<double>(lb) - static_cast<double>(la);
      if (den > 0.0) {
        // stay strictly above t so an exact hit surfaces as a left member
        const double kt =
            std::ceil((static_cast<double>(ra) - t * static_cast<double>(rb)) / den) - 1.0;
        if (kt < static_cast<double>(k)) k = static_cast<std::int64_t>(kt);
      }
      if (k < 1) k = 1;
      while (k > 1 && t * static_cast<double>(rb + k * lb) >= static_cast<double>(ra + k * la)) --k;
      ra += k * la;
      rb += k * lb;
    }
  }
  return {{la, lb}, {ra, rb}, order};
}

std::vector<FareyFraction> farey_sequence(std::int64_t order, double lo, double hi) {
  check_order(order);
  check_interval(lo, hi);

  std::vector<FareyFraction> out;
  const FareyPair start = bracket_slope(order, lo);
  FareyFraction prev = start.left, cur = start.right;
  if (!below(prev, lo) && !above(prev, hi)) out.push_back(prev);
  while (!above(cur, hi)) {
    out.push_back(cur);
    const auto nxt = next_farey(order, prev, cur);
    if (!nxt) break;
    prev = cur;
    cur = *nxt;
  }
  return out;
}

FareyCount farey_count(std::int64_t order, double lo, double hi) {
  check_order(order);
  check_interval(lo, hi);

  FareyCount result;
  const FareyPair start = bracket_slope(order, lo);
  FareyFraction prev = start.left, cur = start.right;
  if (prev.num >= 1 && !below(prev, lo) && !above(prev, hi)) ++result.exact;
  while (!above(cur, hi)) {
    if (cur.num >= 1) ++result.exact;
    const auto nxt = next_farey(order, prev, cur);
    if (!nxt) break;
    prev = cur;
    cur = *nxt;
  }
  result.main_term =
      static_cast<double>(order) * static_cast<double>(order) * (hi - lo) / (2.0 * kZeta2);
  return result;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t q) {
  if (x < 1 || q < 1) throw std::invalid_argument("mod_inverse: arguments must be positive");
  if (q == 1) return 1;
  const std::int64_t a = x % q;
  if (std::gcd(a, q) != 1) throw std::domain_error("mod_inverse: argument not invertible");
  // extended Euclid on (a, q), tracking only the coefficient of a
  std::int64_t r0 = a, r1 = q;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    s0 -= k * s1;
    std::swap(s0, s1);
  }
  std::int64_t inv = s0 % q;
  if (inv <= 0) inv += q;
  return inv;
}

FareyPairCursor::FareyPairCursor(std::int64_t order, double lo, double hi)
    : order_(order), hi_(hi) {
  check_order(order);
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo < hi)) {
    throw std::invalid_argument("FareyPairCursor: need 0 <= lo < hi <= 1");
  }
  const FareyPair start = bracket_slope(order, lo);
  cur_ = start.left;
  nxt_ = start.right;
}

std::optional<FareyPair> FareyPairCursor::next() {
  if (done_) return std::nullopt;
  FareyPair out{cur_, nxt_, order_};
  if (nxt_.num == nxt_.den || !below(nxt_, hi_)) {
    done_ = true;
  } else {
    const auto nn = next_farey(order_, cur_, nxt_);
    if (!nn) {
      done_ = true;
    } else {
      cur_ = nxt_;
      nxt_ = *nn;
    }
  }
  return out;
}

}  // namespace freepath
