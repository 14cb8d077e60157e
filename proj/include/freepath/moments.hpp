#pragma once

#include <cstdint>
#include <vector>

#include "freepath/farey.hpp"
#include "freepath/scatterers.hpp"

namespace freepath {

struct AngleInterval {
  double alpha = 0.0;
  double beta = kQuarterPi;
  double width() const { return beta - alpha; }
};

enum class MomentMethod { FareyExact, FareyQuadrature, BruteForceQuadrature };
enum class MomentQuantity { ExitLength, Reflections };

struct MomentEstimate {
  double r = 1.0;
  double epsilon = 0.0;
  AngleInterval interval;
  double scaled_value = 0.0;  // epsilon^r * integral of X^r over the interval
  double main_term = 0.0;     // limit value predicted for the scaled integral
  double deviation = 0.0;     // scaled_value - main_term
  MomentMethod method = MomentMethod::FareyExact;
};

struct MomentOptions {
  int threads = 1;
  std::int64_t brute_samples = 10000;  // quadrature node budget for the lattice-scan path
  bool plus_one_arcs = true;           // keep the q+a+1 value on its sub-arcs
};

// Limit constant of the scaled moments: (12/pi^2) times the integral over
// [0, 1/2] of x(x^{r-1} + (1-x)^{r-1}) plus the two quotient terms, evaluated
// by series below x = 1e-4 where they cancel. Adaptive quadrature, absolute
// tolerance 1e-10.
double c_r(double r);

// Exact integral of the squared cross-scatterer exit length over one bracket
// arc, via the signed triangle areas of the sub-arc decomposition (corner
// slivers included). epsilon must match the pair's order.
double second_moment_arc(double epsilon, const FareyPair& pair);

double sec_power_integral(const AngleInterval& I, double r);
double one_plus_tan_power_integral(const AngleInterval& I, double r);
double sin_plus_cos_power_integral(const AngleInterval& I, double r);

// epsilon^r * integral over I of the r-th power of exit length or cushion
// count, with its predicted limit.
//
// Farey methods iterate consecutive pairs, split each arc at the hit-switch
// breakpoints and integrate per sub-arc: closed forms for r in {1, 2} under
// FareyExact, 16-node Gauss-Legendre otherwise (Cross/Vertical lengths,
// Cross counts). BruteForceQuadrature samples the lattice-scan oracle: on
// Cross/Vertical the nodes follow the same sub-arc partition, on
// Disk/VariableVertical uniform panels sized by options.brute_samples.
MomentEstimate moment_integral(double epsilon, double r, const AngleInterval& I,
                               ScattererKind kind, MomentQuantity quantity, MomentMethod method,
                               const MomentOptions& options = {});

// Probability-measure moments (normalized by |I|) swept over epsilon and r;
// rows ordered epsilon-major.
std::vector<MomentEstimate> limit_distribution_moments(const std::vector<double>& eps_list,
                                                       const std::vector<double>& r_list,
                                                       const AngleInterval& I, ScattererKind kind,
                                                       MomentQuantity quantity,
                                                       const MomentOptions& options = {});

}  // namespace freepath
