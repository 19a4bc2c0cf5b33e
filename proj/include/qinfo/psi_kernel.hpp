#pragma once

#include <span>
#include <string>
#include <string_view>

#include "qinfo/deformed_math.hpp"
#include "qinfo/simplex.hpp"

namespace qinfo {

/// Generator ψ of a quasilinear (Kolmogorov-Nagumo) mean. Closed catalog:
/// each member has an analytic inverse, so means never need root finding.
class PsiKernel {
 public:
  enum class Kind { Log, Power, QLog, BiLog };

  static PsiKernel log();
  /// x^e with e != 0.
  static PsiKernel power(double exponent);
  static PsiKernel q_log(QIndex q);
  static PsiKernel biparam_log(QIndex r, QIndex q);

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }
  QIndex q() const noexcept { return q_; }
  QIndex r() const noexcept { return r_; }

  bool increasing() const noexcept;
  /// Concave increasing or convex decreasing on (0, inf); the hypothesis of
  /// the nonnegativity and bound results for quasilinear divergences.
  bool concave_increasing_or_convex_decreasing() const noexcept;

  double eval(double x) const;
  double inverse(double y) const;
  /// |ψ(x)| / |x ψ'(x)|: relative error amplification of inverse(eval(x)).
  double inverse_condition(double x) const;

  /// Stable text form, e.g. "power(0.5)", "qlog(2)", "bilog(0.5,2)".
  std::string describe() const;

  friend bool operator==(const PsiKernel& a, const PsiKernel& b) noexcept {
    return a.kind_ == b.kind_ && a.exponent_ == b.exponent_ && a.q_ == b.q_ && a.r_ == b.r_;
  }

 private:
  PsiKernel(Kind kind, double exponent, QIndex q, QIndex r)
      : kind_(kind), exponent_(exponent), q_(q), r_(r) {}

  Kind kind_;
  double exponent_;
  QIndex q_;
  QIndex r_;
};

/// Inverse of PsiKernel::describe: "log", "power(e)", "qlog(q)",
/// "bilog(r,q)". Throws ParseError.
PsiKernel parse_psi(std::string_view text);

double psi_eval(const PsiKernel& k, double x);
double psi_inverse(const PsiKernel& k, double y);

/// ψ^{-1}(Σ_j w_j ψ(x_j)).
double quasilinear_mean(const PsiKernel& k, std::span<const double> values,
                        const ProbabilityDistribution& weights);

}  // namespace qinfo
