#include "freepath/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace freepath {

namespace {

// Scaled (by eps^r) integral of the fixed-radius problem over a cell, used as
// a sandwich bound. radius = 1/q_bound.
double bound_side(TheoremId id, double eps, double r, std::int64_t q_bound,
                  const AngleInterval& cell, const VerifyOptions& options) {
  const double radius = 1.0 / static_cast<double>(q_bound);
  MomentOptions mo;
  mo.threads = options.threads;
  const MomentEstimate est =
      id == TheoremId::T1_4
          ? moment_integral(radius, r, cell, ScattererKind::Cross, MomentQuantity::Reflections,
                            MomentMethod::FareyExact, mo)
          : moment_integral(radius, r, cell, ScattererKind::Vertical, MomentQuantity::ExitLength,
                            MomentMethod::FareyExact, mo);
  return est.scaled_value / std::pow(radius, r) * std::pow(eps, r);
}

std::vector<SqueezeRow> squeeze_rows(TheoremId id, double eps, double r, const AngleInterval& I,
                                     const VerifyOptions& options) {
  const std::int64_t cells = static_cast<std::int64_t>(std::ceil(std::pow(eps, -0.125)));
  const double cell_width = I.width() / static_cast<double>(cells);
  const double eps_tail = std::pow(eps, 1.5);

  MomentOptions mo;
  mo.threads = options.threads;
  mo.brute_samples = std::max<std::int64_t>(256, options.samples / cells);

  std::vector<SqueezeRow> rows;
  rows.reserve(cells);
  for (std::int64_t j = 0; j < cells; ++j) {
    const double w0 = I.alpha + cell_width * static_cast<double>(j);
    const double w1 = (j + 1 == cells) ? I.beta : w0 + cell_width;
    const AngleInterval cell{w0, w1};
    const std::int64_t q_plus =
        static_cast<std::int64_t>(std::floor(std::cos(w0) / (eps - eps_tail))) + 1;
    const std::int64_t q_minus =
        static_cast<std::int64_t>(std::floor(std::cos(w1) / (eps + eps_tail)));
    if (q_minus < 2) {
      throw std::invalid_argument("verify_theorem: epsilon too large for the sandwich partition");
    }

    // smaller scatterers (radius 1/q_plus) lengthen every trajectory
    const double lower = bound_side(id, eps, r, q_minus, cell, options);
    const double upper = bound_side(id, eps, r, q_plus, cell, options);

    const MomentEstimate direct_est =
        id == TheoremId::T1_4
            ? moment_integral(eps, r, cell, ScattererKind::VariableVertical,
                              MomentQuantity::Reflections, MomentMethod::BruteForceQuadrature, mo)
            : moment_integral(eps, r, cell, ScattererKind::Disk, MomentQuantity::ExitLength,
                              MomentMethod::BruteForceQuadrature, mo);
    const double direct = direct_est.scaled_value;

    const double tol = 1e-12 * std::fmax(std::abs(lower), std::abs(upper));
    rows.push_back({eps, r, j, cell, q_plus, q_minus, lower, direct, upper,
                    lower - tol <= direct && direct <= upper + tol});
  }
  return rows;
}

}  // namespace

double theorem_error_bound(TheoremId id, double epsilon, double r) {
  switch (id) {
    case TheoremId::T3_2:
      return 3.0 * epsilon * std::abs(std::log(epsilon));
    case TheoremId::T1_2:
    case TheoremId::T1_5:
      return 3.0 * std::pow(epsilon, 1.0 / 6.0);
    case TheoremId::T1_1:
      return r == 2.0 ? 3.0 * std::pow(epsilon, 0.25) : 3.0 * std::pow(epsilon, 0.125);
    case TheoremId::T1_4:
      return 3.0 * std::pow(epsilon, 0.125);
  }
  return 0.0;
}

SweepReport verify_theorem(TheoremId id, const std::vector<double>& eps_list,
                           const std::vector<double>& r_list, const AngleInterval& I,
                           const VerifyOptions& options) {
  if (eps_list.empty()) throw std::invalid_argument("verify_theorem: empty epsilon list");
  const std::vector<double> r_values =
      id == TheoremId::T3_2 ? std::vector<double>{2.0} : r_list;
  if (r_values.empty()) throw std::invalid_argument("verify_theorem: empty r list");

  MomentOptions mo;
  mo.threads = options.threads;
  mo.brute_samples = options.samples;

  SweepReport report;
  report.theorem = id;
  report.pass = true;
  for (const double eps : eps_list) {
    for (const double r : r_values) {
      MomentEstimate est;
      switch (id) {
        case TheoremId::T3_2:
        case TheoremId::T1_2:
          est = moment_integral(eps, r, I, ScattererKind::Cross, MomentQuantity::ExitLength,
                                MomentMethod::FareyExact, mo);
          break;
        case TheoremId::T1_5:
          est = moment_integral(eps, r, I, ScattererKind::Cross, MomentQuantity::Reflections,
                                MomentMethod::FareyExact, mo);
          break;
        case TheoremId::T1_1:
          est = moment_integral(eps, r, I, ScattererKind::Disk, MomentQuantity::ExitLength,
                                MomentMethod::BruteForceQuadrature, mo);
          break;
        case TheoremId::T1_4:
          est = moment_integral(eps, r, I, ScattererKind::Disk, MomentQuantity::Reflections,
                                MomentMethod::BruteForceQuadrature, mo);
          break;
      }
      const double bound = theorem_error_bound(id, eps, r);
      const bool row_pass = std::abs(est.deviation) <= bound;
      report.rows.push_back(
          {eps, r, I, est.scaled_value, est.main_term, est.deviation, bound, row_pass});
      report.pass = report.pass && row_pass;

      if (id == TheoremId::T1_1 || id == TheoremId::T1_4) {
        auto cells = squeeze_rows(id, eps, r, I, options);
        for (const auto& cell : cells) report.pass = report.pass && cell.contained;
        report.squeeze.insert(report.squeeze.end(), cells.begin(), cells.end());
      }
    }
  }
  return report;
}

}  // namespace freepath
