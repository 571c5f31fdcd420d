#pragma once

// Deterministic test-vector construction shared by the oracle-table
// generator and the acceptance suite. Every operation here is either
// integer arithmetic or a correctly-rounded IEEE op (+,-,*,/,sqrt), so the
// vectors are bit-identical wherever they are regenerated.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace colex_test {

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t next() { return engine(); }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform double in [0, 1): exact scaling of the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [-1, 1).
  double sym() { return unit() * 2.0 - 1.0; }
};

struct PearsonCase {
  std::string id;
  std::vector<double> xs;
  std::vector<double> ys;
};

/// 200 random vector pairs, n in [3, 10000].
inline std::vector<PearsonCase> random_pearson_cases() {
  std::vector<PearsonCase> cases;
  cases.reserve(200);
  for (int i = 0; i < 200; ++i) {
    Rng rng(0xC01EC5ULL * 1000003ULL + static_cast<std::uint64_t>(i));
    std::size_t n = 3 + static_cast<std::size_t>(rng.below(9998));
    PearsonCase c;
    c.id = "rand" + std::to_string(i);
    c.xs.resize(n);
    c.ys.resize(n);
    for (std::size_t k = 0; k < n; ++k) c.xs[k] = rng.sym();
    for (std::size_t k = 0; k < n; ++k) c.ys[k] = rng.sym();
    cases.push_back(std::move(c));
  }
  return cases;
}

/// Vector pair whose sample correlation is target_r up to rounding:
/// y = r * u_hat + sqrt(1 - r^2) * v_hat with u, v orthogonalized
/// centered polynomials.
inline PearsonCase grid_pearson_case(double target_r, std::size_t n) {
  std::vector<double> u(n);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = static_cast<double>(i + 1);
    v[i] = static_cast<double>((i + 1) * (i + 1));
  }
  auto center = [n](std::vector<double>& w) {
    double mean = 0.0;
    for (double x : w) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : w) x -= mean;
  };
  center(u);
  center(v);
  double uv = 0.0;
  double uu = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    uv += u[i] * v[i];
    uu += u[i] * u[i];
  }
  const double proj = uv / uu;
  for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];

  double vv = 0.0;
  for (double x : v) vv += x * x;
  const double nu = std::sqrt(uu);
  const double nv = std::sqrt(vv);
  const double s = std::sqrt(1.0 - target_r * target_r);

  PearsonCase c;
  c.xs.resize(n);
  c.ys.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.xs[i] = u[i];
    c.ys[i] = target_r * (u[i] / nu) + s * (v[i] / nv);
  }
  return c;
}

/// The fixed grid: r in {-0.99, -0.5, 0, 0.5, 0.99} x n in {5, 30, 1000}.
inline std::vector<PearsonCase> grid_pearson_cases() {
  const double rs[] = {-0.99, -0.5, 0.0, 0.5, 0.99};
  const std::size_t ns[] = {5, 30, 1000};
  std::vector<PearsonCase> cases;
  int index = 0;
  for (double r : rs) {
    for (std::size_t n : ns) {
      PearsonCase c = grid_pearson_case(r, n);
      c.id = "grid" + std::to_string(index++);
      cases.push_back(std::move(c));
    }
  }
  return cases;
}

inline std::vector<PearsonCase> all_pearson_cases() {
  std::vector<PearsonCase> cases = random_pearson_cases();
  for (auto& c : grid_pearson_cases()) cases.push_back(std::move(c));
  return cases;
}

}  // namespace colex_test
