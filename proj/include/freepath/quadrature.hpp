#pragma once

#include <cmath>
#include <functional>

namespace freepath {

namespace detail {
// 16-point Gauss-Legendre abscissas/weights on [-1, 1], positive half
inline constexpr double kGauss16X[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605, 0.4580167776572273863424194,
    0.6178762444026437484466718, 0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr double kGauss16W[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637, 0.1691565193950025381893121,
    0.1495959888165767320815017, 0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};
}  // namespace detail

template <class F>
double gauss16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * detail::kGauss16X[i];
    sum += detail::kGauss16W[i] * (f(mid - dx) + f(mid + dx));
  }
  return half * sum;
}

// Recursive adaptive Simpson with an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 52);

}  // namespace freepath
