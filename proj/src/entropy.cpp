#include "qinfo/entropy.hpp"

#include <cmath>
#include <vector>

#include "qinfo/detail/overloaded.hpp"
#include "qinfo/error.hpp"

namespace qinfo {

double OuterLog::apply(double x) const {
  switch (kind_) {
    case Kind::Natural:
      if (!(x > 0.0)) fail(ErrorCode::DomainError, "log of non-positive mean");
      return std::log(x);
    case Kind::Tsallis:
      return q_log(x, q_);
    case Kind::Biparam:
      return biparam_log(x, r_, q_);
  }
  return 0.0;
}

std::string OuterLog::describe() const {
  switch (kind_) {
    case Kind::Natural: return "plain";
    case Kind::Tsallis: return "tsallis";
    case Kind::Biparam: return "biparam";
  }
  return "?";
}

double shannon(const ProbabilityDistribution& p) {
  double h = 0.0;
  for (double w : p.weights()) h -= w * std::log(w);
  return h;
}

double tsallis(const ProbabilityDistribution& p, QIndex q) {
  if (q.is_limit()) return shannon(p);
  double h = 0.0;
  for (double w : p.weights()) h += w * q_log(1.0 / w, q);
  return h;
}

double renyi(const ProbabilityDistribution& p, QIndex q) {
  if (q.is_limit()) fail(ErrorCode::LimitIndex, "renyi: q too close to 1, use shannon");
  // Σ p^q - 1 accumulated as Σ p (p^{q-1} - 1)
  double s = 0.0;
  for (double w : p.weights()) s += w * std::expm1(-q.complement() * std::log(w));
  return std::log1p(s) / q.complement();
}

double quasi_entropy(const ProbabilityDistribution& p, QIndex q) {
  double g = 0.0;
  for (double w : p.weights()) {
    const double lw = std::log(w);
    g -= std::exp(q.value() * lw) * lw;
  }
  return g;
}

double quasilinear_entropy(const ProbabilityDistribution& p, const PsiKernel& psi, const OuterLog& outer) {
  std::vector<double> inv(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) inv[j] = 1.0 / p[j];
  return outer.apply(quasilinear_mean(psi, inv, p));
}

double wada_suyari(const ProbabilityDistribution& p, QIndex r, QIndex q) {
  if (r == q) fail(ErrorCode::EqualIndices, "wada_suyari: r and q must differ");
  const double d = q.value() - r.value();
  // p^q - p^r = p^r expm1((q - r) log p), exact as r -> q
  double s = 0.0;
  for (double w : p.weights()) {
    const double lw = std::log(w);
    s += std::exp(r.value() * lw) * std::expm1(d * lw);
  }
  return -s / d;
}

double biparam_entropy(const ProbabilityDistribution& p, QIndex r, QIndex q) {
  double h = 0.0;
  for (double w : p.weights()) h += w * biparam_log(1.0 / w, r, q);
  return h;
}

double arimoto_entropy(const ProbabilityDistribution& p, QIndex r, QIndex q) {
  if (r.is_limit()) fail(ErrorCode::LimitIndex, "arimoto_entropy: r too close to 1");
  double s = 0.0;
  for (double w : p.weights()) s += w * std::expm1(-r.complement() * std::log(w));
  const double log_power_sum = std::log1p(s);  // log Σ p^r
  const double z = r.value() / r.complement() * std::expm1(log_power_sum / r.value());
  return q_log_of_exp(z, q);
}

double fermi_dirac(const ProbabilityDistribution& p, QIndex r) {
  double h = 0.0;
  for (double w : p.weights()) {
    h += w * q_log(1.0 / w, r);
    h += (1.0 - w) * q_log_of_exp(-std::log1p(-w), r);
  }
  return h;
}

double bose_einstein(const ProbabilityDistribution& p, QIndex r) {
  double h = 0.0;
  for (double w : p.weights()) {
    h += w * q_log(1.0 / w, r);
    h -= (1.0 + w) * q_log_of_exp(-std::log1p(w), r);
  }
  return h;
}

double evaluate(const EntropyMeasure& m, const ProbabilityDistribution& p) {
  using namespace entropy_measure;
  return std::visit(
      detail::overloaded{
          [&](const Shannon&) { return shannon(p); },
          [&](const Tsallis& t) { return tsallis(p, t.q); },
          [&](const Renyi& t) { return renyi(p, t.q); },
          [&](const QuasiEntropy& t) { return quasi_entropy(p, t.q); },
          [&](const Quasilinear& t) { return quasilinear_entropy(p, t.psi, t.outer); },
          [&](const WadaSuyari& t) { return wada_suyari(p, t.r, t.q); },
          [&](const BiparamH& t) { return biparam_entropy(p, t.r, t.q); },
          [&](const Arimoto& t) { return arimoto_entropy(p, t.r, t.q); },
          [&](const FermiDirac& t) { return fermi_dirac(p, t.r); },
          [&](const BoseEinstein& t) { return bose_einstein(p, t.r); },
      },
      m);
}

std::string name(const EntropyMeasure& m) {
  using namespace entropy_measure;
  return std::visit(detail::overloaded{
                        [](const Shannon&) { return "shannon"; },
                        [](const Tsallis&) { return "tsallis"; },
                        [](const Renyi&) { return "renyi"; },
                        [](const QuasiEntropy&) { return "quasi-entropy"; },
                        [](const Quasilinear&) { return "quasilinear"; },
                        [](const WadaSuyari&) { return "wada-suyari"; },
                        [](const BiparamH&) { return "biparam"; },
                        [](const Arimoto&) { return "arimoto"; },
                        [](const FermiDirac&) { return "fermi-dirac"; },
                        [](const BoseEinstein&) { return "bose-einstein"; },
                    },
                    m);
}

}  // namespace qinfo
