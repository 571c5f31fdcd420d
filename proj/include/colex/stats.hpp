#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "colex/error.hpp"

namespace colex {

// ---------------------------------------------------------------------------
// Regularized incomplete beta function I_x(a, b)
//
// Continued-fraction evaluation (modified Lentz). Numerical contract:
// convergence epsilon 1e-15 on the fraction, hard iteration cap 10000,
// denominators floored at 1e-300.
// ---------------------------------------------------------------------------

inline constexpr int kIbetaMaxIterations = 10000;
inline constexpr double kIbetaEpsilon = 1e-15;
inline constexpr double kIbetaTiny = 1e-300;

namespace detail {

inline double ibeta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kIbetaTiny) d = kIbetaTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kIbetaMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kIbetaTiny) d = kIbetaTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kIbetaTiny) c = kIbetaTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kIbetaTiny) d = kIbetaTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kIbetaTiny) c = kIbetaTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kIbetaEpsilon) return h;
  }
  fail(Errc::invalid_argument, "incomplete beta continued fraction did not converge (a=" +
                                   std::to_string(a) + ", b=" + std::to_string(b) +
                                   ", x=" + std::to_string(x) + ")");
}

}  // namespace detail

/// I_x(a, b) with an optional exact complement cx = 1 - x supplied by the
/// caller when it is known without cancellation.
inline double ibeta_reg(double a, double b, double x, double cx = -1.0) {
  if (!(a > 0.0) || !(b > 0.0)) fail(Errc::invalid_argument, "ibeta_reg: a, b must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (cx < 0.0) cx = 1.0 - x;

  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log(cx);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * detail::ibeta_cf(a, b, x) / a;
  }
  return 1.0 - front * detail::ibeta_cf(b, a, cx) / b;
}

/// Two-sided p-value of a Student t statistic with `dof` degrees of
/// freedom, via p = I_{dof/(dof+t^2)}(dof/2, 1/2).
inline double student_t_two_sided_p(double t_squared, double dof) {
  if (t_squared <= 0.0) return 1.0;
  if (!std::isfinite(t_squared)) return 0.0;
  const double x = dof / (dof + t_squared);
  const double cx = t_squared / (dof + t_squared);
  double p = ibeta_reg(dof / 2.0, 0.5, x, cx);
  return std::clamp(p, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Pearson correlation
// ---------------------------------------------------------------------------

struct CorrelationResult {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
  std::size_t dof = 0;  // n - 2
};

/// Sample Pearson correlation with the two-sided Student-t p-value.
/// Accumulation runs in long double so r is correctly rounded for all
/// realistic inputs.
inline CorrelationResult pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    fail(Errc::length_mismatch, "pearson_r: vector lengths differ (" + std::to_string(xs.size()) +
                                    " vs " + std::to_string(ys.size()) + ")");
  }
  const std::size_t n = xs.size();
  if (n < 3) fail(Errc::too_few_samples, "pearson_r: need at least 3 samples, got " + std::to_string(n));

  long double sum_x = 0.0L;
  long double sum_y = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    sum_x += xs[i];
    sum_y += ys[i];
  }
  const long double mean_x = sum_x / static_cast<long double>(n);
  const long double mean_y = sum_y / static_cast<long double>(n);

  long double sxx = 0.0L;
  long double syy = 0.0L;
  long double sxy = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dx = xs[i] - mean_x;
    const long double dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0L || syy == 0.0L) {
    fail(Errc::zero_variance, "pearson_r: zero variance in input vector");
  }

  CorrelationResult result;
  result.n = n;
  result.dof = n - 2;
  const long double r_ld = sxy / (sqrtl(sxx) * sqrtl(syy));
  result.r = std::clamp(static_cast<double>(r_ld), -1.0, 1.0);

  const double one_minus_r2 = (1.0 - result.r) * (1.0 + result.r);
  if (one_minus_r2 <= 0.0) {
    result.p = 0.0;  // |r| = 1: exact linear dependence
  } else {
    const double dof = static_cast<double>(result.dof);
    const double t_squared = result.r * result.r * dof / one_minus_r2;
    result.p = student_t_two_sided_p(t_squared, dof);
  }
  return result;
}

/// Point-biserial correlation: Pearson over the {0,1} encoding of the
/// indicator. The indicator must contain both values.
inline CorrelationResult point_biserial(const std::vector<bool>& indicator,
                                        std::span<const double> ys) {
  if (indicator.size() != ys.size()) {
    fail(Errc::length_mismatch, "point_biserial: vector lengths differ");
  }
  bool any_true = false;
  bool any_false = false;
  for (bool b : indicator) {
    (b ? any_true : any_false) = true;
    if (any_true && any_false) break;
  }
  if (!any_true || !any_false) {
    fail(Errc::degenerate_indicator, "point_biserial: indicator has no variation");
  }
  std::vector<double> xs(indicator.size());
  for (std::size_t i = 0; i < indicator.size(); ++i) xs[i] = indicator[i] ? 1.0 : 0.0;
  return pearson_r(xs, ys);
}

// ---------------------------------------------------------------------------
// Grouped reports and Bonferroni correction
// ---------------------------------------------------------------------------

/// One correlation cell of a grouped analysis.
struct CorrelationReport {
  std::string group;  // language family, or "ALL"
  std::string variable_x;
  std::string variable_y;
  CorrelationResult result;
  double alpha = 0.05;
  std::size_t divisor = 1;   // number of languages in the group
  bool significant = false;  // p < alpha / divisor
  bool reported = false;     // significant && |r| > report threshold
  std::size_t n_phonemes = 0;  // phoneme inventory size (position analysis)
};

/// A skipped analysis cell, kept for the diagnostics section of reports.
struct SkippedCell {
  std::string group;
  std::string variable_x;
  std::string variable_y;
  std::string reason;
  std::size_t n = 0;
};

/// Applies the Bonferroni threshold alpha/divisor; p-values are never
/// mutated. Returns the updated copy.
inline std::vector<CorrelationReport> bonferroni(std::vector<CorrelationReport> reports,
                                                 double alpha, std::size_t divisor) {
  if (divisor < 1) fail(Errc::invalid_argument, "bonferroni: divisor must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(Errc::invalid_argument, "bonferroni: alpha must be in (0,1)");
  for (auto& rep : reports) {
    rep.alpha = alpha;
    rep.divisor = divisor;
    rep.significant = rep.result.p < alpha / static_cast<double>(divisor);
  }
  return reports;
}

inline void mark_reported(std::vector<CorrelationReport>& reports, double threshold) {
  for (auto& rep : reports) {
    rep.reported = rep.significant && std::fabs(rep.result.r) > threshold;
  }
}

}  // namespace colex
