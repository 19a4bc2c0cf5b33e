#pragma once

#include <span>
#include <vector>

namespace qinfo {

/// Indices with |q - 1| <= kLimitBand are evaluated with the undeformed
/// log/exp formulas.
inline constexpr double kLimitBand = 1e-8;

enum class IndexRegime { Sub, Limit, Super };

/// Deformation index q > 0 of the q-logarithm family (also used for the
/// second index r of the biparametric functions).
class QIndex {
 public:
  explicit QIndex(double value);

  double value() const noexcept { return value_; }
  /// 1 - q, the exponent that appears in every deformed formula.
  double complement() const noexcept { return 1.0 - value_; }
  IndexRegime regime() const noexcept;
  bool is_limit() const noexcept { return regime() == IndexRegime::Limit; }

  friend bool operator==(QIndex a, QIndex b) noexcept { return a.value_ == b.value_; }

 private:
  double value_;
};

/// ln_q x = (x^{1-q} - 1)/(1 - q); natural log in the limit regime.
double q_log(double x, QIndex q);

/// ln_q(e^L) = expm1((1-q) L)/(1-q). Lets callers that already hold a
/// logarithm skip the exp/log round trip.
double q_log_of_exp(double log_x, QIndex q);

/// exp_q y = (1 + (1-q) y)^{1/(1-q)}; throws UndefinedQExp when the base is
/// not positive.
double q_exp(double y, QIndex q);

/// ln_{r,q} x = ln_q(exp(ln_r x)).
double biparam_log(double x, QIndex r, QIndex q);

/// Functional inverse of biparam_log: exp_r(log(exp_q y)).
double biparam_exp(double y, QIndex r, QIndex q);

/// Relative condition number of recovering x from y = ln_{r,q} x, i.e.
/// |y| / (x * d/dx ln_{r,q} x). Large where the map saturates (x -> 0 with
/// q < 1, x -> inf with q > 1), so round trips are only meaningful where
/// this is moderate.
double biparam_log_inverse_condition(double x, QIndex r, QIndex q);

struct RatioBounds {
  double lower;
  double upper;
};

/// Hermite-Hadamard bracket of ln_q x / log x for the convex map
/// t -> x^{(1-q)t} on [0, 1]: returns (x^{(1-q)/2}, (x^{1-q}+1)/2).
RatioBounds hh_ratio_bounds(double x, QIndex q);

struct QuadratureRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

/// n-point Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre(int nodes);

/// log x * \int_0^1 x^{(1-q)t} dt evaluated with an n-point Gauss-Legendre
/// rule. Independent route to q_log used as a cross-check.
double qlog_quadrature_oracle(double x, QIndex q, int nodes);

/// \int_0^1 x^{(1-q)t} dt by the same rule (equals ln_q x / log x).
double qlog_ratio_quadrature(double x, QIndex q, int nodes);

}  // namespace qinfo
