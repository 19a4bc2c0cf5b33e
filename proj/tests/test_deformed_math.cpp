#include <doctest.h>

#include <cmath>
#include <random>

#include "qinfo/deformed_math.hpp"
#include "qinfo/error.hpp"
#include "test_support.hpp"

using namespace qinfo;
using qinfo::testing::code_of;
using qinfo::testing::rel_err;

TEST_CASE("QIndex classification") {
  CHECK(QIndex(0.5).regime() == IndexRegime::Sub);
  CHECK(QIndex(1.0).regime() == IndexRegime::Limit);
  CHECK(QIndex(1.0 + 5e-9).regime() == IndexRegime::Limit);
  CHECK(QIndex(1.0 - 5e-9).regime() == IndexRegime::Limit);
  CHECK(QIndex(1.0 + 2e-8).regime() == IndexRegime::Super);
  CHECK(QIndex(3.0).regime() == IndexRegime::Super);
  CHECK(code_of([] { QIndex(0.0); }) == ErrorCode::NonPositiveIndex);
  CHECK(code_of([] { QIndex(-1.0); }) == ErrorCode::NonPositiveIndex);
  CHECK(code_of([] { QIndex(std::nan("")); }) == ErrorCode::NonPositiveIndex);
}

TEST_CASE("q_log frozen values") {
  CHECK(q_log(1.0, QIndex(0.5)) == 0.0);
  CHECK(q_log(2.0, QIndex(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rel_err(q_log(2.0, QIndex(0.5)), 0.8284271247461900976) < 1e-15);
  CHECK(rel_err(q_log(0.1, QIndex(0.3)), -1.1435339550044457712) < 1e-14);
  CHECK(q_log(2.0, QIndex(1.0)) == std::log(2.0));
  CHECK(code_of([] { q_log(0.0, QIndex(2.0)); }) == ErrorCode::NonPositiveArgument);
  CHECK(code_of([] { q_log(-1.0, QIndex(2.0)); }) == ErrorCode::NonPositiveArgument);
}

TEST_CASE("q_exp frozen values and domain") {
  CHECK(q_exp(0.0, QIndex(3.0)) == 1.0);
  CHECK(q_exp(0.5, QIndex(0.5)) == doctest::Approx(1.5625).epsilon(1e-15));
  CHECK(code_of([] { q_exp(1.0, QIndex(2.0)); }) == ErrorCode::UndefinedQExp);
  CHECK(code_of([] { q_exp(-3.0, QIndex(0.5)); }) == ErrorCode::UndefinedQExp);
  CHECK(q_exp(1.0, QIndex(1.0)) == std::exp(1.0));
}

TEST_CASE("biparam_log and biparam_exp frozen values") {
  CHECK(biparam_log(1.0, QIndex(2.0), QIndex(3.0)) == 0.0);
  CHECK(biparam_log(2.0, QIndex(1.0), QIndex(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rel_err(biparam_log(2.0, QIndex(2.0), QIndex(2.0)), 0.3934693402873665764) < 1e-15);
  CHECK(biparam_exp(0.0, QIndex(2.0), QIndex(3.0)) == doctest::Approx(1.0).epsilon(1e-15));
  const double y = biparam_log(2.0, QIndex(2.0), QIndex(2.0));
  CHECK(biparam_exp(y, QIndex(2.0), QIndex(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
  // 50-digit root solve of biparam_log(t, 0.5, 0.5) = 0.5
  CHECK(rel_err(biparam_exp(0.5, QIndex(0.5), QIndex(0.5)), 1.496080147121536874) < 1e-14);
  CHECK(code_of([] { biparam_log(0.0, QIndex(2.0), QIndex(2.0)); }) == ErrorCode::NonPositiveArgument);
  CHECK(code_of([] { biparam_exp(2.0, QIndex(2.0), QIndex(3.0)); }) == ErrorCode::UndefinedQExp);
}

TEST_CASE("hh_ratio_bounds frozen values") {
  const auto b = hh_ratio_bounds(4.0, QIndex(1.5));
  CHECK(rel_err(b.lower, 0.7071067811865475244) < 1e-15);
  CHECK(rel_err(b.upper, 0.75) < 1e-15);
  const double ratio = q_log(4.0, QIndex(1.5)) / std::log(4.0);
  CHECK(rel_err(ratio, 0.72134752044448170368) < 1e-15);
  CHECK(b.lower <= ratio);
  CHECK(ratio <= b.upper);

  const auto c = hh_ratio_bounds(0.25, QIndex(0.5));
  CHECK(rel_err(c.lower, 0.7071067811865475244) < 1e-15);
  CHECK(rel_err(c.upper, 0.75) < 1e-15);
  const double ratio2 = q_log(0.25, QIndex(0.5)) / std::log(0.25);
  CHECK(c.lower <= ratio2);
  CHECK(ratio2 <= c.upper);

  CHECK(code_of([] { hh_ratio_bounds(1.0, QIndex(2.0)); }) == ErrorCode::DegenerateArgument);
  CHECK(code_of([] { hh_ratio_bounds(2.0, QIndex(1.0)); }) == ErrorCode::LimitIndex);
}

TEST_CASE("quadrature oracle frozen values") {
  CHECK(std::abs(qlog_quadrature_oracle(2.0, QIndex(2.0), 64) - 0.5) <= 1e-12);
  const double ref = q_log(0.1, QIndex(0.3));
  CHECK(std::abs(qlog_quadrature_oracle(0.1, QIndex(0.3), 64) - ref) <= 1e-12 * std::abs(ref));
  CHECK(code_of([] { qlog_quadrature_oracle(1.0, QIndex(2.0), 64); }) == ErrorCode::DegenerateArgument);
  CHECK(code_of([] { qlog_quadrature_oracle(2.0, QIndex(2.0), 1); }) == ErrorCode::BadParameter);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  for (int n : {2, 5, 16, 64}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    double moment = 0.0;
    const int degree = 2 * n - 1;
    for (int i = 0; i < n; ++i) {
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.nodes[i] < 1.0);
      wsum += rule.weights[i];
      moment += rule.weights[i] * std::pow(rule.nodes[i], degree);
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(1.0 / (degree + 1)).epsilon(1e-12));
  }
}

TEST_CASE("property: round trips") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> lx(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> uq(0.05, 5.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::exp(lx(gen));
    const QIndex q(uq(gen));
    const QIndex r(uq(gen));
    if (biparam_log_inverse_condition(x, QIndex(1.0), q) <= 1e3) {
      CHECK(std::abs(q_exp(q_log(x, q), q) - x) <= 1e-12 * x);
    }
    const double y = biparam_log(x, r, q);
    if (biparam_log_inverse_condition(x, r, q) <= 1e3) {
      CHECK(std::abs(biparam_exp(y, r, q) - x) <= 1e-10 * x);
    }
  }
}

TEST_CASE("property: quadrature agrees with closed form on the box") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> lx(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> uq(0.05, 5.0);
  for (int i = 0; i < 500; ++i) {
    const double x = std::exp(lx(gen));
    const double qv = uq(gen);
    if (std::abs(qv - 1.0) < 1e-3 || std::abs(std::log(x)) < 1e-6) continue;
    const QIndex q(qv);
    const double ref = q_log(x, q);
    CHECK(std::abs(qlog_quadrature_oracle(x, q, 64) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("property: Hermite-Hadamard sandwich") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> lx(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> uq(0.05, 5.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = std::exp(lx(gen));
    const double qv = uq(gen);
    if (std::abs(qv - 1.0) < 1e-6 || x == 1.0) continue;
    const QIndex q(qv);
    const auto b = hh_ratio_bounds(x, q);
    const double ratio = q_log(x, q) / std::log(x);
    const double scale = std::max({1.0, std::abs(b.lower), std::abs(b.upper)});
    CHECK(ratio - b.lower >= -1e-12 * scale);
    CHECK(b.upper - ratio >= -1e-12 * scale);
  }
}

TEST_CASE("property: limit continuity decays linearly") {
  for (double x : {1e-3, 0.2, 3.0, 1e3}) {
    double prev = INFINITY;
    for (double delta = 1e-4; delta > 1e-7; delta /= 2) {
      const double dev = std::max(std::abs(q_log(x, QIndex(1.0 + delta)) - std::log(x)),
                                  std::abs(q_log(x, QIndex(1.0 - delta)) - std::log(x)));
      const double envelope = std::pow(std::log(x), 2) * std::pow(x, delta) / 2.0 + 1.0;
      CHECK(dev <= envelope * delta);
      CHECK(dev <= prev);
      prev = dev;
    }
  }
}

TEST_CASE("property: biparam_log is non-increasing in q") {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> lx(std::log(1e-3), std::log(1e3));
  std::uniform_real_distribution<double> uq(0.05, 5.0);
  for (int i = 0; i < 3000; ++i) {
    const double x = std::exp(lx(gen));
    const QIndex r(uq(gen));
    double a = uq(gen);
    double b = uq(gen);
    if (a > b) std::swap(a, b);
    const double ya = biparam_log(x, r, QIndex(a));
    const double yb = biparam_log(x, r, QIndex(b));
    if (!std::isfinite(ya) || !std::isfinite(yb)) continue;
    CHECK(yb <= ya + 1e-12 * std::max(1.0, std::abs(ya)));
  }
}
