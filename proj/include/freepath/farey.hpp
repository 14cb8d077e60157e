#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace freepath {

// Reduced fraction a/q with 0 <= a <= q. The sequence of order Q is extended
// on the left with 0/1 so that slope bracketing is total on [0,1]; the pair
// (0/1, 1/Q) satisfies the same adjacency relations as interior pairs.
struct FareyFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
};

// Exact comparison by cross multiplication. Orders are capped at 10^6 so the
// products stay far below the int64 range.
inline bool operator<(const FareyFraction& x, const FareyFraction& y) {
  return x.num * y.den < y.num * x.den;
}

inline constexpr std::int64_t kMaxFareyOrder = 1'000'000;

// Consecutive members of the extended order-Q sequence.
// Invariants: right.num*left.den - left.num*right.den == 1,
//             left.den + right.den > order, max(den) <= order.
struct FareyPair {
  FareyFraction left;
  FareyFraction right;
  std::int64_t order = 1;

  bool valid() const;
};

// All reduced a/q with q <= order and a/q in [lo, hi], increasing.
// Includes the extended endpoint 0/1 when lo == 0.
// Throws std::invalid_argument for order < 1, order > 10^6, or an empty or
// out-of-range interval.
std::vector<FareyFraction> farey_sequence(std::int64_t order, double lo, double hi);

// Successor of `cur` given its predecessor, by the mediant recurrence.
// Returns nullopt once cur == 1/1.
std::optional<FareyFraction> next_farey(std::int64_t order, const FareyFraction& prev,
                                        const FareyFraction& cur);

// Consecutive pair with left <= t <= right, found by Stern-Brocot descent in
// O(log order) batched integer steps. A t equal to a fraction of the sequence
// lands on the left member, except t == 1 which is bracketed by
// ((order-1)/order, 1/1).
FareyPair bracket_slope(std::int64_t order, double t);

struct FareyCount {
  std::int64_t exact = 0;  // fractions in (0,1] within the interval (0/1 not counted)
  double main_term = 0.0;  // order^2 * |J| / (2 zeta(2))
};

FareyCount farey_count(std::int64_t order, double lo, double hi);

// Inverse of x mod q as the representative in [1, q] (q only when q == 1).
// Throws std::domain_error when gcd(x, q) > 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t q);

// Value-semantic cursor over consecutive pairs whose arc intersects [lo, hi].
// Copies advance independently.
class FareyPairCursor {
 public:
  FareyPairCursor(std::int64_t order, double lo, double hi);

  std::optional<FareyPair> next();

 private:
  std::int64_t order_;
  double hi_;
  FareyFraction cur_, nxt_;
  bool done_ = false;
};

}  // namespace freepath
