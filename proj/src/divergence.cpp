#include "qinfo/divergence.hpp"

#include <cmath>
#include <vector>

#include "qinfo/detail/overloaded.hpp"
#include "qinfo/error.hpp"

namespace qinfo {

double kl(const DivergencePair& pair) {
  double d = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    d += pair.p[j] * (std::log(pair.p[j]) - std::log(pair.r[j]));
  }
  return d;
}

double tsallis_div(const DivergencePair& pair, QIndex q) {
  if (q.is_limit()) return kl(pair);
  double d = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    d -= pair.p[j] * q_log_of_exp(std::log(pair.r[j]) - std::log(pair.p[j]), q);
  }
  return d;
}

double renyi_div(const DivergencePair& pair, QIndex q) {
  if (q.is_limit()) fail(ErrorCode::LimitIndex, "renyi_div: q too close to 1, use kl");
  // Σ p^q r^{1-q} - 1 accumulated as Σ p ((r/p)^{1-q} - 1)
  double s = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    s += pair.p[j] * std::expm1(q.complement() * (std::log(pair.r[j]) - std::log(pair.p[j])));
  }
  return -std::log1p(s) / q.complement();
}

double alpha_div(const DivergencePair& pair, double alpha) {
  if (!std::isfinite(alpha) || alpha == 1.0 || alpha == -1.0) {
    fail(ErrorCode::BadAlpha, "alpha_div: alpha must be finite and not +-1");
  }
  const double a = 0.5 * (1.0 - alpha);
  const double b = 0.5 * (1.0 + alpha);
  double s = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    s += std::exp(a * std::log(pair.p[j]) + b * std::log(pair.r[j]));
  }
  return 4.0 / (1.0 - alpha * alpha) * (1.0 - s);
}

double quasilinear_div(const DivergencePair& pair, const PsiKernel& psi, const OuterLog& outer) {
  std::vector<double> ratio(pair.size());
  for (std::size_t j = 0; j < pair.size(); ++j) ratio[j] = pair.r[j] / pair.p[j];
  return -outer.apply(quasilinear_mean(psi, ratio, pair.p));
}

double hat_div(const DivergencePair& pair, QIndex q, QIndex r) {
  if (r == q) fail(ErrorCode::EqualIndices, "hat_div: r and q must differ");
  const double d = r.value() - q.value();
  // p^r s^{1-r} - p^q s^{1-q} = p^q s^{1-q} expm1((r - q) log(p/s))
  double acc = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const double lp = std::log(pair.p[j]);
    const double ls = std::log(pair.r[j]);
    acc += std::exp(q.value() * lp + q.complement() * ls) * std::expm1(d * (lp - ls));
  }
  return acc / d;
}

double quasi_div(const DivergencePair& pair, QIndex q) {
  double d = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    const double lp = std::log(pair.p[j]);
    const double ls = std::log(pair.r[j]);
    d += std::exp(q.value() * lp + q.complement() * ls) * (lp - ls);
  }
  return d;
}

double biparam_div(const DivergencePair& pair, QIndex r, QIndex q) {
  double d = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    d -= pair.p[j] * biparam_log(pair.r[j] / pair.p[j], r, q);
  }
  return d;
}

double arimoto_div(const DivergencePair& pair, QIndex r, QIndex q) {
  if (r.is_limit()) fail(ErrorCode::LimitIndex, "arimoto_div: r too close to 1");
  double s = 0.0;
  for (std::size_t j = 0; j < pair.size(); ++j) {
    s += pair.p[j] * std::expm1(r.complement() * (std::log(pair.r[j]) - std::log(pair.p[j])));
  }
  const double log_sum = std::log1p(s);  // log Σ p^r s^{1-r}
  const double z = r.value() / r.complement() * std::expm1(log_sum / r.value());
  return -q_log_of_exp(z, q);
}

double jeffreys(const DivergencePair& pair) {
  return kl(pair) + kl(DivergencePair(pair.r, pair.p));
}

double jensen_shannon(const DivergencePair& pair) {
  const auto m = mixture(pair, 0.5);
  return 0.5 * (kl(DivergencePair(pair.p, m)) + kl(DivergencePair(pair.r, m)));
}

double lin(const DivergencePair& pair) {
  return kl(DivergencePair(pair.p, mixture(pair, 0.5)));
}

double evaluate(const DivergenceMeasure& m, const DivergencePair& pair) {
  using namespace divergence_measure;
  return std::visit(
      detail::overloaded{
          [&](const Kl&) { return kl(pair); },
          [&](const Tsallis& t) { return tsallis_div(pair, t.q); },
          [&](const Renyi& t) { return renyi_div(pair, t.q); },
          [&](const Alpha& t) { return alpha_div(pair, t.alpha); },
          [&](const Quasilinear& t) { return quasilinear_div(pair, t.psi, t.outer); },
          [&](const Hat& t) { return hat_div(pair, t.q, t.r); },
          [&](const Quasi& t) { return quasi_div(pair, t.q); },
          [&](const Biparam& t) { return biparam_div(pair, t.r, t.q); },
          [&](const Arimoto& t) { return arimoto_div(pair, t.r, t.q); },
          [&](const Jeffreys&) { return jeffreys(pair); },
          [&](const JensenShannon&) { return jensen_shannon(pair); },
          [&](const Lin&) { return lin(pair); },
      },
      m);
}

std::string name(const DivergenceMeasure& m) {
  using namespace divergence_measure;
  return std::visit(detail::overloaded{
                        [](const Kl&) { return "kl"; },
                        [](const Tsallis&) { return "tsallis"; },
                        [](const Renyi&) { return "renyi"; },
                        [](const Alpha&) { return "alpha"; },
                        [](const Quasilinear&) { return "quasilinear"; },
                        [](const Hat&) { return "hat"; },
                        [](const Quasi&) { return "quasi"; },
                        [](const Biparam&) { return "biparam"; },
                        [](const Arimoto&) { return "arimoto"; },
                        [](const Jeffreys&) { return "jeffreys"; },
                        [](const JensenShannon&) { return "jensen-shannon"; },
                        [](const Lin&) { return "lin"; },
                    },
                    m);
}

}  // namespace qinfo
