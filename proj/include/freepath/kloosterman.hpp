#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace freepath {

struct KloostermanValue {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t q = 1;
  double value = 0.0;          // real part of the complete sum over units mod q
  double imag_residual = 0.0;  // |imaginary part|, zero up to roundoff by the x <-> q-x pairing
  double weil_bound = 0.0;     // tau(q) * gcd(m,n,q)^(1/2) * q^(1/2), explicit constant 1
};

inline constexpr std::int64_t kMaxKloostermanModulus = 100'000;

// Precomputed unit/inverse and phase tables for a fixed modulus; reuse this
// when evaluating many (m, n) pairs at the same q.
class KloostermanTable {
 public:
  explicit KloostermanTable(std::int64_t q);

  KloostermanValue sum(std::int64_t m, std::int64_t n) const;

  std::int64_t modulus() const { return q_; }
  std::int64_t unit_count() const { return static_cast<std::int64_t>(units_.size()); }

 private:
  std::int64_t q_;
  double weil_base_;  // tau(q) * sqrt(q)
  std::vector<std::pair<std::int64_t, std::int64_t>> units_;  // (x, inverse of x) reduced mod q
  std::vector<double> cos_, sin_;                             // tables of e(k/q)
};

KloostermanValue kloosterman_sum(std::int64_t m, std::int64_t n, std::int64_t q);

// Closed integer interval [lo, hi].
struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t count() const { return hi - lo + 1; }
};

struct InversePairCount {
  std::int64_t exact = 0;
  double main_term = 0.0;  // phi(q) * |I| * |J| / q^2, interval sizes counted in integers
};

// Number of (x, y) in I x J with x*y == 1 mod q. Each interval may contain at
// most q integers, otherwise std::invalid_argument.
InversePairCount count_inverse_pairs(std::int64_t q, IntInterval i_range, IntInterval j_range);

std::int64_t euler_phi(std::int64_t q);
std::int64_t divisor_count(std::int64_t q);

}  // namespace freepath
