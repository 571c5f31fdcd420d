#include "doctest.h"

#include <cmath>
#include <vector>

#include "colex/stats.hpp"
#include "support/tanh_sinh.hpp"
#include "support/vector_gen.hpp"

using namespace colex;

TEST_CASE("pearson_r: exact linear dependence") {
  std::vector<double> xs = {1, 2, 3};
  std::vector<double> up = {2, 4, 6};
  std::vector<double> down = {3, 2, 1};
  CorrelationResult pos = pearson_r(xs, up);
  CHECK(pos.r == 1.0);
  CHECK(pos.p == 0.0);
  CHECK(pos.n == 3);
  CHECK(pos.dof == 1);
  CorrelationResult neg = pearson_r(xs, down);
  CHECK(neg.r == -1.0);
  CHECK(neg.p == 0.0);
}

TEST_CASE("pearson_r: frozen high-precision oracle values") {
  // oracle digits computed with 60-digit arithmetic from the exact inputs
  std::vector<double> xs = {1, 2, 3, 4, 5};
  std::vector<double> ys = {2, 1, 4, 3, 7};
  CorrelationResult res = pearson_r(xs, ys);
  CHECK(std::fabs(res.r - 0.8241633836921342) <= 1e-12);
  CHECK(std::fabs(res.p - 0.08613863131395945) / 0.08613863131395945 <= 1e-10);
  CHECK(res.dof == 3);
}

TEST_CASE("pearson_r: error conditions") {
  std::vector<double> a = {1, 2, 3};
  std::vector<double> b = {1, 2};
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  CHECK(code([&] { (void)pearson_r(a, b); }) == Errc::length_mismatch);
  std::vector<double> two = {1, 2};
  CHECK(code([&] { (void)pearson_r(two, two); }) == Errc::too_few_samples);
  std::vector<double> flat = {5, 5, 5};
  CHECK(code([&] { (void)pearson_r(a, flat); }) == Errc::zero_variance);
  CHECK(code([&] { (void)pearson_r(flat, a); }) == Errc::zero_variance);
}

TEST_CASE("pearson_r: invariance under positive affine maps, sign flip under negative") {
  colex_test::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 5 + rng.below(200);
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (auto& v : xs) v = rng.sym();
    for (auto& v : ys) v = rng.sym();
    CorrelationResult base = pearson_r(xs, ys);

    double a = 0.5 + 3.0 * rng.unit();
    double b = rng.sym() * 10.0;
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = a * xs[i] + b;
    CorrelationResult pos = pearson_r(scaled, ys);
    CHECK(std::fabs(pos.r - base.r) <= 1e-12);

    for (std::size_t i = 0; i < n; ++i) scaled[i] = -a * xs[i] + b;
    CorrelationResult neg = pearson_r(scaled, ys);
    CHECK(std::fabs(neg.r + base.r) <= 1e-12);
  }
}

TEST_CASE("p-value: p(r=0) = 1 and monotone decreasing in |r|") {
  for (std::size_t n : {5u, 30u, 1000u}) {
    const double dof = static_cast<double>(n - 2);
    double previous = 1.0;
    CHECK(student_t_two_sided_p(0.0, dof) == 1.0);
    for (double r = 0.05; r < 1.0; r += 0.05) {
      double t2 = r * r * dof / (1.0 - r * r);
      double p = student_t_two_sided_p(t2, dof);
      // strictly decreasing until p saturates at the double-range floor
      CHECK(p <= previous);
      if (p == previous) CHECK(p == 0.0);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      previous = p;
    }
  }
}

TEST_CASE("ibeta_reg: closed-form identities") {
  for (double x : {0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99}) {
    CHECK(ibeta_reg(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-14));
    CHECK(ibeta_reg(0.5, 0.5, x) ==
          doctest::Approx(2.0 / M_PI * std::asin(std::sqrt(x))).epsilon(1e-13));
    CHECK(ibeta_reg(1.0, 0.5, x) == doctest::Approx(1.0 - std::sqrt(1.0 - x)).epsilon(1e-13));
  }
  CHECK(ibeta_reg(3.0, 0.5, 0.0) == 0.0);
  CHECK(ibeta_reg(3.0, 0.5, 1.0) == 1.0);
}

TEST_CASE("quadrature oracle agrees with elementary t-distribution tails") {
  // two-sided p for dof 1, 2, 3 has closed forms
  for (double t : {0.3, 1.0, 2.5, 7.0}) {
    const double t2 = t * t;
    double p1 = 1.0 - 2.0 / M_PI * std::atan(t);
    CHECK(colex_test::student_p_oracle(std::sqrt(t2 / (1.0 + t2)), 3) ==
          doctest::Approx(p1).epsilon(1e-13));
    // dof = 2: p = 1 - t/sqrt(2 + t^2); r with n=4: t2 = r^2*2/(1-r^2)
    double r2 = std::sqrt(t2 / (2.0 + t2));
    double p2 = 1.0 - t / std::sqrt(2.0 + t2);
    CHECK(colex_test::student_p_oracle(r2, 4) == doctest::Approx(p2).epsilon(1e-13));
    // dof = 3: p = 1 - 2/pi * (t/(sqrt(3)(1+t^2/3)) + atan(t/sqrt(3)))
    double r3 = std::sqrt(t2 / (3.0 + t2));
    double p3 = 1.0 - 2.0 / M_PI *
                          (t / (std::sqrt(3.0) * (1.0 + t2 / 3.0)) + std::atan(t / std::sqrt(3.0)));
    CHECK(colex_test::student_p_oracle(r3, 5) == doctest::Approx(p3).epsilon(1e-13));
  }
}

TEST_CASE("p-value matches the numerical-integration oracle to 1e-10 relative") {
  for (std::size_t n : {5u, 30u, 1000u}) {
    const double dof = static_cast<double>(n - 2);
    for (double r = -0.99; r <= 0.991; r += 0.11) {
      const double t2 = r * r * dof / ((1.0 - r) * (1.0 + r));
      const double p = student_t_two_sided_p(t2, dof);
      const double oracle = colex_test::student_p_oracle(r, n);
      if (oracle < 1e-300) {
        CHECK(p < 1e-300);  // below the double range both sides collapse to 0
      } else {
        CHECK(std::fabs(p - oracle) / oracle <= 1e-10);
      }
    }
  }
}

TEST_CASE("pearson handles large-n near-threshold continued fractions") {
  // n = 10000 with small |r| drives x close to the branch threshold
  std::size_t n = 10000;
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  colex_test::Rng rng(99);
  for (auto& v : xs) v = rng.sym();
  for (std::size_t i = 0; i < n; ++i) ys[i] = xs[i] * 0.017 + rng.sym();
  CorrelationResult res = pearson_r(xs, ys);
  double oracle = colex_test::student_p_oracle(res.r, n);
  CHECK(std::fabs(res.p - oracle) / oracle <= 1e-10);
}

TEST_CASE("point_biserial equals pearson on the 0/1 encoding") {
  std::vector<bool> sep = {true, true, false, false};
  std::vector<double> ys = {5, 5, 1, 1};
  CorrelationResult perfect = point_biserial(sep, ys);
  CHECK(perfect.r == 1.0);
  CHECK(perfect.p == 0.0);

  colex_test::Rng rng(42);
  std::vector<bool> indicator(50);
  std::vector<double> values(50);
  bool any_true = false;
  bool any_false = false;
  for (std::size_t i = 0; i < 50; ++i) {
    indicator[i] = rng.unit() < 0.4;
    (indicator[i] ? any_true : any_false) = true;
    values[i] = rng.sym();
  }
  REQUIRE(any_true);
  REQUIRE(any_false);
  std::vector<double> encoded(50);
  for (std::size_t i = 0; i < 50; ++i) encoded[i] = indicator[i] ? 1.0 : 0.0;
  CorrelationResult via_pb = point_biserial(indicator, values);
  CorrelationResult via_pearson = pearson_r(encoded, values);
  CHECK(via_pb.r == via_pearson.r);
  CHECK(via_pb.p == via_pearson.p);

  std::vector<bool> all_true(10, true);
  std::vector<double> ten(10, 0.0);
  try {
    (void)point_biserial(all_true, ten);
    FAIL("expected DegenerateIndicator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_indicator);
  }
}

TEST_CASE("bonferroni: threshold arithmetic and identity case") {
  auto make = [](double p) {
    CorrelationReport rep;
    rep.result.p = p;
    rep.result.r = 0.5;
    rep.result.n = 10;
    return rep;
  };
  std::vector<CorrelationReport> reports = {make(0.01), make(0.001)};
  auto corrected = bonferroni(reports, 0.05, 7);
  CHECK(!corrected[0].significant);  // 0.01 > 0.05/7 ~= 0.00714
  CHECK(corrected[1].significant);   // 0.001 < 0.00714
  CHECK(corrected[0].result.p == 0.01);  // p never mutated

  auto identity = bonferroni(reports, 0.05, 1);
  CHECK(identity[0].significant);  // uncorrected test
  CHECK(identity[1].significant);

  CHECK_THROWS_AS((void)bonferroni(reports, 0.05, 0), Error);
  CHECK_THROWS_AS((void)bonferroni(reports, 1.5, 2), Error);
}

TEST_CASE("bonferroni: significant sets nest as the divisor grows") {
  colex_test::Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CorrelationReport> reports;
    for (int i = 0; i < 40; ++i) {
      CorrelationReport rep;
      rep.result.p = rng.unit();
      reports.push_back(rep);
    }
    auto d1 = bonferroni(reports, 0.05, 1);
    auto d5 = bonferroni(reports, 0.05, 5);
    auto d10 = bonferroni(reports, 0.05, 10);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (d10[i].significant) CHECK(d5[i].significant);
      if (d5[i].significant) CHECK(d1[i].significant);
    }
  }
}

TEST_CASE("mark_reported requires significance and |r| above threshold") {
  CorrelationReport strong;
  strong.result.r = 0.25;
  strong.significant = true;
  CorrelationReport weak;
  weak.result.r = 0.05;
  weak.significant = true;
  CorrelationReport insignificant;
  insignificant.result.r = 0.9;
  insignificant.significant = false;
  std::vector<CorrelationReport> reports = {strong, weak, insignificant};
  mark_reported(reports, 0.1);
  CHECK(reports[0].reported);
  CHECK(!reports[1].reported);
  CHECK(!reports[2].reported);
  // threshold is strict: |r| must exceed it
  std::vector<CorrelationReport> edge = {strong};
  edge[0].result.r = 0.1;
  mark_reported(edge, 0.1);
  CHECK(!edge[0].reported);
}
