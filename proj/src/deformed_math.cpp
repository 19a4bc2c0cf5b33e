#include "qinfo/deformed_math.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qinfo/error.hpp"

namespace qinfo {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    fail(ErrorCode::NonPositiveArgument,
         std::string(what) + ": argument must be > 0, got " + std::to_string(x));
  }
}

}  // namespace

QIndex::QIndex(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    fail(ErrorCode::NonPositiveIndex, "index must be a finite value > 0, got " + std::to_string(value));
  }
}

IndexRegime QIndex::regime() const noexcept {
  if (std::abs(value_ - 1.0) <= kLimitBand) return IndexRegime::Limit;
  return value_ < 1.0 ? IndexRegime::Sub : IndexRegime::Super;
}

double q_log(double x, QIndex q) {
  require_positive(x, "q_log");
  if (q.is_limit()) return std::log(x);
  const double e = q.complement();
  const double t = e * std::log(x);
  // expm1 keeps full precision while x^{1-q} is close to 1; pow is the
  // better-rounded route once the exponent is large.
  if (std::abs(t) < 0.5) return std::expm1(t) / e;
  return (std::pow(x, e) - 1.0) / e;
}

double q_log_of_exp(double log_x, QIndex q) {
  if (q.is_limit()) return log_x;
  const double e = q.complement();
  return std::expm1(e * log_x) / e;
}

double q_exp(double y, QIndex q) {
  if (std::isnan(y)) fail(ErrorCode::DomainError, "q_exp: argument is NaN");
  if (q.is_limit()) return std::exp(y);
  const double e = q.complement();
  const double u = e * y;
  if (!(u > -1.0)) {
    fail(ErrorCode::UndefinedQExp,
         "q_exp: 1 + (1-q)x = " + std::to_string(1.0 + u) + " is not positive");
  }
  return std::exp(std::log1p(u) / e);
}

double biparam_log(double x, QIndex r, QIndex q) {
  require_positive(x, "biparam_log");
  return q_log_of_exp(q_log(x, r), q);
}

double biparam_exp(double y, QIndex r, QIndex q) {
  if (std::isnan(y)) fail(ErrorCode::DomainError, "biparam_exp: argument is NaN");
  double log_inner = y;
  if (!q.is_limit()) {
    const double u = q.complement() * y;
    if (!(u > -1.0)) {
      fail(ErrorCode::UndefinedQExp,
           "biparam_exp: outer q-exponential undefined at " + std::to_string(y));
    }
    log_inner = std::log1p(u) / q.complement();
  }
  return q_exp(log_inner, r);
}

double biparam_log_inverse_condition(double x, QIndex r, QIndex q) {
  require_positive(x, "biparam_log_inverse_condition");
  const double lx = std::log(x);
  const double l = q_log(x, r);
  const double y = q_log_of_exp(l, q);
  // x * d/dx ln_{r,q} x = x^{1-r} exp((1-q) ln_r x)
  const double slope = std::exp(r.complement() * lx + q.complement() * l);
  return std::abs(y) / slope;
}

RatioBounds hh_ratio_bounds(double x, QIndex q) {
  require_positive(x, "hh_ratio_bounds");
  if (x == 1.0) fail(ErrorCode::DegenerateArgument, "hh_ratio_bounds: ratio is 0/0 at x = 1");
  if (q.is_limit()) fail(ErrorCode::LimitIndex, "hh_ratio_bounds: q must differ from 1");
  const double e = q.complement();
  return {std::pow(x, e / 2.0), (std::pow(x, e) + 1.0) / 2.0};
}

QuadratureRule gauss_legendre(int nodes) {
  if (nodes < 1) fail(ErrorCode::BadParameter, "gauss_legendre: node count must be positive");
  const auto n = static_cast<std::size_t>(nodes);
  const double nd = static_cast<double>(n);
  // P_n(z) and P_n'(z) by the three-term recurrence
  auto legendre = [n, nd](double z) {
    double p0 = 1.0;
    double p1 = z;
    for (std::size_t k = 2; k <= n; ++k) {
      const double kd = static_cast<double>(k);
      const double p2 = ((2.0 * kd - 1.0) * z * p1 - (kd - 1.0) * p0) / kd;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, nd * (z * p1 - p0) / (z * z - 1.0)};
  };

  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(z);
      const double step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double dp = legendre(z).second;
    const double w = 1.0 / ((1.0 - z * z) * dp * dp);  // half of the [-1,1] weight
    rule.nodes[i] = (1.0 - z) / 2.0;
    rule.nodes[n - 1 - i] = (1.0 + z) / 2.0;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double qlog_ratio_quadrature(double x, QIndex q, int nodes) {
  require_positive(x, "qlog_quadrature_oracle");
  if (x == 1.0) fail(ErrorCode::DegenerateArgument, "qlog_quadrature_oracle: x = 1 excluded");
  if (nodes < 2) fail(ErrorCode::BadParameter, "qlog_quadrature_oracle: need at least 2 nodes");
  const QuadratureRule rule = gauss_legendre(nodes);
  const double a = q.complement() * std::log(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * std::exp(a * rule.nodes[i]);
  }
  return sum;
}

double qlog_quadrature_oracle(double x, QIndex q, int nodes) {
  return qlog_ratio_quadrature(x, q, nodes) * std::log(x);
}

}  // namespace qinfo
