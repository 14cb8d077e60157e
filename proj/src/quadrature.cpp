#include "freepath/quadrature.hpp"

namespace freepath {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h * (fa + 4.0 * fm + fb) / 6.0; }

double recurse(const std::function<double(double)>& f, double a, double m, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return recurse(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace freepath
