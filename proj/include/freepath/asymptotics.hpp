#pragma once

#include <cstdint>
#include <vector>

#include "freepath/moments.hpp"

namespace freepath {

// Asymptotic laws checked by the sweep harness:
//   T1_1  scaled exit-length moments, circular scatterers -> c_r |I|
//   T1_2  scaled exit-length moments, cross scatterers    -> c_r int sec^r
//   T1_4  scaled cushion-count moments, circular          -> c_r int (sin+cos)^r
//   T1_5  scaled cushion-count moments, cross             -> c_r int (1+tan)^r
//   T3_2  scaled second moment, cross                     -> (1+2 ln 2)/pi^2 per unit tan
enum class TheoremId { T1_1, T1_2, T1_4, T1_5, T3_2 };

struct SweepRow {
  double epsilon = 0.0;
  double r = 1.0;
  AngleInterval interval;
  double scaled_value = 0.0;
  double main_term = 0.0;
  double deviation = 0.0;
  double predicted_bound = 0.0;
  bool row_pass = false;
};

// One angular cell of the circular-scatterer sandwich: fixed-width vertical
// problems at radii 1/q_plus and 1/q_minus pin the direct value between them.
struct SqueezeRow {
  double epsilon = 0.0;
  double r = 1.0;
  std::int64_t j = 0;
  AngleInterval interval;
  std::int64_t q_plus = 0;
  std::int64_t q_minus = 0;
  double lower = 0.0;
  double direct = 0.0;
  double upper = 0.0;
  bool contained = false;
};

struct SweepReport {
  TheoremId theorem = TheoremId::T3_2;
  std::vector<SweepRow> rows;
  std::vector<SqueezeRow> squeeze;
  bool pass = false;
};

struct VerifyOptions {
  int threads = 1;
  std::int64_t samples = 10000;  // lattice-scan quadrature budget per row
};

// Asymptotic error bound used as the pass tolerance, slack factor 3 on the
// unspecified constants.
double theorem_error_bound(TheoremId id, double epsilon, double r);

// Evaluates every (epsilon, r) pair against the theorem's limit law. T3_2
// fixes r = 2. T1_1 and T1_4 additionally partition I into ceil(eps^{-1/8})
// cells and report the sandwich at the per-cell radii 1/q_plus, 1/q_minus.
SweepReport verify_theorem(TheoremId id, const std::vector<double>& eps_list,
                           const std::vector<double>& r_list, const AngleInterval& I,
                           const VerifyOptions& options = {});

}  // namespace freepath
