#pragma once

#include <string>
#include <variant>

#include "qinfo/deformed_math.hpp"
#include "qinfo/psi_kernel.hpp"
#include "qinfo/simplex.hpp"

namespace qinfo {

/// Outer logarithm applied to a quasilinear mean: log, ln_q or ln_{r,q}.
class OuterLog {
 public:
  enum class Kind { Natural, Tsallis, Biparam };

  static OuterLog natural() { return {Kind::Natural, QIndex(1.0), QIndex(1.0)}; }
  static OuterLog tsallis(QIndex q) { return {Kind::Tsallis, q, QIndex(1.0)}; }
  static OuterLog biparam(QIndex r, QIndex q) { return {Kind::Biparam, q, r}; }

  Kind kind() const noexcept { return kind_; }
  QIndex q() const noexcept { return q_; }
  QIndex r() const noexcept { return r_; }

  double apply(double x) const;
  std::string describe() const;

 private:
  OuterLog(Kind kind, QIndex q, QIndex r) : kind_(kind), q_(q), r_(r) {}
  Kind kind_;
  QIndex q_;
  QIndex r_;
};

// All entropies are in nats.

double shannon(const ProbabilityDistribution& p);

/// H_q(p) = Σ p_j ln_q(1/p_j); Shannon in the limit regime.
double tsallis(const ProbabilityDistribution& p, QIndex q);

/// R_q(p) = log(Σ p_j^q)/(1 - q). Throws LimitIndex near q = 1.
double renyi(const ProbabilityDistribution& p, QIndex q);

/// G_q(p) = -Σ p_j^q log p_j.
double quasi_entropy(const ProbabilityDistribution& p, QIndex q);

/// outer(M_ψ(1/p)) with weights p.
double quasilinear_entropy(const ProbabilityDistribution& p, const PsiKernel& psi, const OuterLog& outer);

/// S_{r,q}(p) = Σ (p_j^q - p_j^r)/(r - q). Throws EqualIndices when r == q.
double wada_suyari(const ProbabilityDistribution& p, QIndex r, QIndex q);

/// H_{r,q}(p) = Σ p_j ln_{r,q}(1/p_j).
double biparam_entropy(const ProbabilityDistribution& p, QIndex r, QIndex q);

/// ln_q exp((r/(1-r)) ((Σ p_j^r)^{1/r} - 1)). Throws LimitIndex near r = 1.
double arimoto_entropy(const ProbabilityDistribution& p, QIndex r, QIndex q);

/// Σ p ln_r(1/p) + Σ (1-p) ln_r(1/(1-p)).
double fermi_dirac(const ProbabilityDistribution& p, QIndex r);

/// Σ p ln_r(1/p) - Σ (1+p) ln_r(1/(1+p)).
double bose_einstein(const ProbabilityDistribution& p, QIndex r);

namespace entropy_measure {
struct Shannon {};
struct Tsallis { QIndex q; };
struct Renyi { QIndex q; };
struct QuasiEntropy { QIndex q; };
struct Quasilinear { PsiKernel psi; OuterLog outer; };
struct WadaSuyari { QIndex r; QIndex q; };
struct BiparamH { QIndex r; QIndex q; };
struct Arimoto { QIndex r; QIndex q; };
struct FermiDirac { QIndex r; };
struct BoseEinstein { QIndex r; };
}  // namespace entropy_measure

using EntropyMeasure =
    std::variant<entropy_measure::Shannon, entropy_measure::Tsallis, entropy_measure::Renyi,
                 entropy_measure::QuasiEntropy, entropy_measure::Quasilinear,
                 entropy_measure::WadaSuyari, entropy_measure::BiparamH, entropy_measure::Arimoto,
                 entropy_measure::FermiDirac, entropy_measure::BoseEinstein>;

double evaluate(const EntropyMeasure& m, const ProbabilityDistribution& p);
std::string name(const EntropyMeasure& m);

}  // namespace qinfo
