#include "qinfo/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qinfo/deformed_math.hpp"
#include "qinfo/divergence.hpp"
#include "qinfo/entropy.hpp"
#include "qinfo/error.hpp"

namespace qinfo {

namespace {

using Chains = std::vector<BoundChain>;
constexpr auto kUp = Direction::NonDecreasing;
constexpr auto kDown = Direction::NonIncreasing;
constexpr auto kEq = Direction::Equal;

double scalar(const CheckInstance& inst, std::string_view key) { return inst.scalars.find(key)->second; }
QIndex index(const CheckInstance& inst, std::string_view key) { return QIndex(scalar(inst, key)); }
const ProbabilityDistribution& dist0(const CheckInstance& inst) { return inst.distributions[0]; }
DivergencePair pair_of(const CheckInstance& inst) {
  return DivergencePair(inst.distributions[0], inst.distributions[1]);
}

/// Σ p_j^a
double power_sum(const ProbabilityDistribution& p, double a) {
  double s = 0.0;
  for (double w : p.weights()) s += std::exp(a * std::log(w));
  return s;
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// exp_s(y) for any real index s, evaluated as (1 + (1-s) y)^{1/(1-s)}.
double general_q_exp(double y, double s) {
  const double c = 1.0 - s;
  if (std::abs(c) <= kLimitBand) return std::exp(y);
  const double base = c * y;
  if (!(base > -1.0)) fail(ErrorCode::UndefinedQExp, "general_q_exp: 1 + (1-s) y must be positive");
  return std::exp(std::log1p(base) / c);
}

bool separated(const Scalars& s) { return std::abs(s.at("q") - s.at("r")) >= kIndexSeparation; }

// ---- scalar chains ----

Chains lemma_2_1(const CheckInstance& inst, bool below, bool super) {
  const double x = scalar(inst, "x");
  const QIndex q = index(inst, "q");
  const double lg = std::log(x);
  const double a = std::exp(q.complement() * lg);
  const double h = std::exp(0.5 * q.complement() * lg);
  const double lq = q_log(x, q);
  const std::pair<std::string, double> t_log{"log x", lg};
  const std::pair<std::string, double> t_mid{"(x^(1-q)+1)/2 log x", 0.5 * (a + 1.0) * lg};
  const std::pair<std::string, double> t_qlog{"ln_q x", lq};
  const std::pair<std::string, double> t_geo{"x^((1-q)/2) log x", h * lg};
  const std::pair<std::string, double> t_end{"x^(1-q) log x", a * lg};
  if (below && !super) return {BoundChain(kUp, {t_log, t_mid, t_qlog, t_geo, t_end})};
  if (below && super) return {BoundChain(kUp, {t_end, t_mid, t_qlog, t_geo, t_log})};
  if (!super) return {BoundChain(kUp, {t_log, t_geo, t_qlog, t_mid, t_end})};
  return {BoundChain(kUp, {t_end, t_geo, t_qlog, t_mid, t_log})};
}

Chains lemma_3_3(const CheckInstance& inst, bool below, bool super) {
  const double x = scalar(inst, "x");
  const QIndex q = index(inst, "q");
  const QIndex r = index(inst, "r");
  const double l = q_log(x, r);
  const double e = std::exp(q.complement() * l);
  const double e2 = std::exp(0.5 * q.complement() * l);
  const std::pair<std::string, double> t_l{"L", l};
  const std::pair<std::string, double> t_mid{"(E+1)/2 L", 0.5 * (e + 1.0) * l};
  const std::pair<std::string, double> t_i{"ln_rq x", biparam_log(x, r, q)};
  const std::pair<std::string, double> t_geo{"E^(1/2) L", e2 * l};
  const std::pair<std::string, double> t_end{"E L", e * l};
  if (below && !super) return {BoundChain(kUp, {t_l, t_mid, t_i, t_geo, t_end})};
  if (below && super) return {BoundChain(kUp, {t_end, t_mid, t_i, t_geo, t_l})};
  if (!super) return {BoundChain(kUp, {t_l, t_geo, t_i, t_mid, t_end})};
  return {BoundChain(kUp, {t_end, t_geo, t_i, t_mid, t_l})};
}

/// Decay of deviations at 1 ± 10^-k, k = 3..6, plus a ceiling at k = 6.
template <class Dev>
Chains limit_decay(Dev dev, double scale) {
  std::array<double, 4> d{};
  for (int k = 3; k <= 6; ++k) {
    const double delta = std::pow(10.0, -k);
    d[k - 3] = std::max(dev(QIndex(1.0 + delta)), dev(QIndex(1.0 - delta)));
  }
  return {BoundChain(kDown, {{"dev(1e-3)", d[0]}, {"dev(1e-4)", d[1]}, {"dev(1e-5)", d[2]}, {"dev(1e-6)", d[3]}}),
          BoundChain(kUp, {{"dev(1e-6)", d[3]}, {"1e-2 scale", 1e-2 * std::max(1.0, scale)}})};
}

/// The q -> 1 expansion of ln_q(exp L) is only accurate at 1 - q = 1e-6
/// once |L| is well below 1e6; larger |L| is outside the asymptotic regime.
void require_asymptotic(const std::vector<double>& args, QIndex r) {
  for (double a : args) {
    if (std::abs(q_log(a, r)) > 1e3) {
      fail(ErrorCode::ParameterOutOfDomain, "outside the asymptotic regime: |ln_r| exceeds 1e3");
    }
  }
}

// ---- quasilinear chains ----

/// Chain for a quasilinear entropy: i1 = log M, iq = ln_q M with M >= 1.
Chains entropy_chain(double i1, double iq, QIndex q, const std::string& one, const std::string& mid) {
  const double a = std::exp(q.complement() * i1);
  const double h = std::exp(0.5 * q.complement() * i1);
  const std::pair<std::string, double> t_end{"exp((1-q)" + one + ") " + one, a * i1};
  const std::pair<std::string, double> t_mid{"(exp((1-q)" + one + ")+1)/2 " + one, 0.5 * (a + 1.0) * i1};
  const std::pair<std::string, double> t_q{mid, iq};
  const std::pair<std::string, double> t_geo{"exp((1-q)" + one + "/2) " + one, h * i1};
  const std::pair<std::string, double> t_one{one, i1};
  if (q.regime() == IndexRegime::Sub) return {BoundChain(kDown, {t_end, t_mid, t_q, t_geo, t_one})};
  return {BoundChain(kUp, {t_end, t_geo, t_q, t_mid, t_one})};
}

/// Chain for a quasilinear divergence: d1 = -log M, dq = -ln_q M with M <= 1.
Chains divergence_chain(double d1, double dq, QIndex q) {
  const double a = std::exp(-q.complement() * d1);
  const double h = std::exp(-0.5 * q.complement() * d1);
  const std::pair<std::string, double> t_end{"M^(1-q) D_1", a * d1};
  const std::pair<std::string, double> t_mid{"(M^(1-q)+1)/2 D_1", 0.5 * (a + 1.0) * d1};
  const std::pair<std::string, double> t_q{"D_q", dq};
  const std::pair<std::string, double> t_geo{"M^((1-q)/2) D_1", h * d1};
  const std::pair<std::string, double> t_one{"D_1", d1};
  if (q.regime() == IndexRegime::Sub) return {BoundChain(kUp, {t_end, t_geo, t_q, t_mid, t_one})};
  return {BoundChain(kDown, {t_end, t_mid, t_q, t_geo, t_one})};
}

Chains thm_3_4(const CheckInstance& inst) {
  const auto& p = dist0(inst);
  const QIndex q = index(inst, "q");
  const QIndex r = index(inst, "r");
  const double l = quasilinear_entropy(p, *inst.psi, OuterLog::tsallis(r));
  const double i = quasilinear_entropy(p, *inst.psi, OuterLog::biparam(r, q));
  const double e = std::exp(q.complement() * l);
  const double e2 = std::exp(0.5 * q.complement() * l);
  const std::pair<std::string, double> t_l{"I_r", l};
  const std::pair<std::string, double> t_geo{"E^(1/2) I_r", e2 * l};
  const std::pair<std::string, double> t_i{"I_rq", i};
  const std::pair<std::string, double> t_mid{"(E+1)/2 I_r", 0.5 * (e + 1.0) * l};
  const std::pair<std::string, double> t_end{"E I_r", e * l};
  if (q.regime() == IndexRegime::Sub) return {BoundChain(kUp, {t_l, t_geo, t_i, t_mid, t_end})};
  return {BoundChain(kUp, {t_end, t_geo, t_i, t_mid, t_l})};
}

Chains thm_3_5(const CheckInstance& inst) {
  const auto pr = pair_of(inst);
  const QIndex q = index(inst, "q");
  const QIndex r = index(inst, "r");
  const double d = quasilinear_div(pr, *inst.psi, OuterLog::tsallis(r));
  const double drq = quasilinear_div(pr, *inst.psi, OuterLog::biparam(r, q));
  const double e = std::exp(-q.complement() * d);
  const double e2 = std::exp(-0.5 * q.complement() * d);
  const std::pair<std::string, double> t_d{"D_r", d};
  const std::pair<std::string, double> t_geo{"E^(1/2) D_r", e2 * d};
  const std::pair<std::string, double> t_i{"D_rq", drq};
  const std::pair<std::string, double> t_mid{"(E+1)/2 D_r", 0.5 * (e + 1.0) * d};
  const std::pair<std::string, double> t_end{"E D_r", e * d};
  if (q.regime() == IndexRegime::Sub) return {BoundChain(kUp, {t_end, t_geo, t_i, t_mid, t_d})};
  return {BoundChain(kUp, {t_d, t_geo, t_i, t_mid, t_end})};
}

// ---- entropy bounds ----

Chains prop_2_2(const CheckInstance& inst) {
  const auto& p = dist0(inst);
  const QIndex q = index(inst, "q");
  const double h = shannon(p);
  const double gq = quasi_entropy(p, q);
  const std::pair<std::string, double> t_h{"H", h};
  const std::pair<std::string, double> t_avg{"(H+G_q)/2", 0.5 * (h + gq)};
  const std::pair<std::string, double> t_hq{"H_q", tsallis(p, q)};
  const std::pair<std::string, double> t_gm{"G_(q+1)/2", quasi_entropy(p, QIndex(0.5 * (q.value() + 1.0)))};
  const std::pair<std::string, double> t_gq{"G_q", gq};
  if (q.regime() == IndexRegime::Sub) return {BoundChain(kDown, {t_gq, t_avg, t_hq, t_gm, t_h})};
  return {BoundChain(kDown, {t_h, t_avg, t_hq, t_gm, t_gq})};
}

/// Bounds on S_{r,q} for a > 1 > b, written for (a, b) = (q, r) or (r, q).
Chains prop_3_1(const CheckInstance& inst, bool q_above) {
  const auto& p = dist0(inst);
  const double qv = scalar(inst, "q");
  const double rv = scalar(inst, "r");
  const double a = q_above ? qv : rv;
  const double b = q_above ? rv : qv;
  const double h = shannon(p);
  const double lower = (2.0 * a - b - 1.0) / (2.0 * (a - b)) * h + (1.0 - b) / (2.0 * (a - b)) * quasi_entropy(p, QIndex(b));
  const double upper = (a - 1.0) / (a - b) * quasi_entropy(p, QIndex(a)) +
                       (1.0 - b) / (a - b) * quasi_entropy(p, QIndex(0.5 * (b + 1.0)));
  return {BoundChain(kDown, {{"H/G_b combination", lower},
                             {"S_rq", wada_suyari(p, QIndex(rv), QIndex(qv))},
                             {"G_a/G_(b+1)/2 combination", upper}})};
}

// ---- divergence bounds ----

Chains prop_3_4(const CheckInstance& inst, bool r_above) {
  const auto pr = pair_of(inst);
  const QIndex q = index(inst, "q");
  const QIndex r = index(inst, "r");
  const double b = (r.value() - 1.0) / (r.value() - q.value());
  const double a = q.complement() / (r.value() - q.value());
  const double d1 = kl(pr);
  const double lo_or_hi_q = b * d1 + a * quasi_div(pr, q);
  const double lo_or_hi_r = b * quasi_div(pr, r) + a * d1;
  const double hat = hat_div(pr, q, r);
  if (r_above) {
    return {BoundChain(kUp, {{"b D_1 + a D_(q)", lo_or_hi_q}, {"Dhat_qr", hat}, {"b D_(r) + a D_1", lo_or_hi_r}})};
  }
  return {BoundChain(kUp, {{"b D_(r) + a D_1", lo_or_hi_r}, {"Dhat_qr", hat}, {"b D_1 + a D_(q)", lo_or_hi_q}})};
}

Chains thm_4_1(const CheckInstance& inst) {
  const auto pr = pair_of(inst);
  const QIndex q = index(inst, "q");
  const double v = scalar(inst, "v");
  const double left = tsallis_div(DivergencePair(pr.p, mixture(pr, v)), q);
  const double middle = v * tsallis_div(pr, QIndex(1.0 - q.complement() * v));
  if (v == 1.0) return {BoundChain(kUp, {{"D_q(p||(1-v)p+vr)", left}, {"v D_(1-(1-q)v)(p||r)", middle}})};
  const double right = tsallis_div(DivergencePair(mixture(pr, 1.0 - v), pr.r), q) / v +
                       (1.0 - v) / v * q_log_of_exp(-std::log1p(-v), q);
  return {BoundChain(kUp, {{"D_q(p||(1-v)p+vr)", left},
                           {"v D_(1-(1-q)v)(p||r)", middle},
                           {"D_q(vp+(1-v)r||r)/v + (1-v)/v ln_q(1/(1-v))", right}})};
}

// ---- registration ----

CheckSpec scalar_check(std::string id, std::string description, ArgDomain x, IndexDomain q, IndexDomain r,
                       std::function<Chains(const CheckInstance&)> eval) {
  CheckSpec s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.x = x;
  s.q = q;
  s.r = r;
  s.evaluate = std::move(eval);
  return s;
}

CheckSpec dist_check(std::string id, std::string description, int n, IndexDomain q, IndexDomain r,
                     std::function<Chains(const CheckInstance&)> eval) {
  CheckSpec s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.distributions = n;
  s.q = q;
  s.r = r;
  s.evaluate = std::move(eval);
  return s;
}

CheckSpec with_psi(CheckSpec s, PsiDomain d) {
  s.psi = d;
  return s;
}

CheckSpec with_guard(CheckSpec s, std::function<bool(const Scalars&)> g, std::string text) {
  s.guard = std::move(g);
  s.guard_text = std::move(text);
  return s;
}

CheckSpec with_v(CheckSpec s, MixDomain d) {
  s.v = d;
  return s;
}

constexpr auto N = IndexDomain::None;
constexpr auto Sub = IndexDomain::Sub;
constexpr auto Sup = IndexDomain::Super;
constexpr auto Any = IndexDomain::Any;

void register_scalar(Catalog& c) {
  const auto below = ArgDomain::Below1;
  const auto above = ArgDomain::Above1;
  c.add(scalar_check("lemma_2_1_I_i", "0<x<1, 0<q<1: log x <= (x^(1-q)+1)/2 log x <= ln_q x <= x^((1-q)/2) log x <= x^(1-q) log x",
                     below, Sub, N, [](const CheckInstance& i) { return lemma_2_1(i, true, false); }));
  c.add(scalar_check("lemma_2_1_I_ii", "0<x<1, q>1: x^(1-q) log x <= (x^(1-q)+1)/2 log x <= ln_q x <= x^((1-q)/2) log x <= log x",
                     below, Sup, N, [](const CheckInstance& i) { return lemma_2_1(i, true, true); }));
  c.add(scalar_check("lemma_2_1_II_i", "x>1, 0<q<1: log x <= x^((1-q)/2) log x <= ln_q x <= (x^(1-q)+1)/2 log x <= x^(1-q) log x",
                     above, Sub, N, [](const CheckInstance& i) { return lemma_2_1(i, false, false); }));
  c.add(scalar_check("lemma_2_1_II_ii", "x>1, q>1: x^(1-q) log x <= x^((1-q)/2) log x <= ln_q x <= (x^(1-q)+1)/2 log x <= log x",
                     above, Sup, N, [](const CheckInstance& i) { return lemma_2_1(i, false, true); }));
  c.add(scalar_check("lemma_2_1_hh", "x^((1-q)/2) <= ln_q x / log x <= (x^(1-q)+1)/2", ArgDomain::Any, Any, N,
                     [](const CheckInstance& i) {
                       const double x = scalar(i, "x");
                       const QIndex q = index(i, "q");
                       const auto b = hh_ratio_bounds(x, q);
                       return Chains{BoundChain(kUp, {{"x^((1-q)/2)", b.lower},
                                                      {"ln_q x / log x", q_log(x, q) / std::log(x)},
                                                      {"(x^(1-q)+1)/2", b.upper}})};
                     }));
  c.add(scalar_check("id_qlog_integral", "ln_q x = log x * integral_0^1 x^((1-q)t) dt (64-node Gauss-Legendre)",
                     ArgDomain::Any, Any, N, [](const CheckInstance& i) {
                       const double x = scalar(i, "x");
                       const QIndex q = index(i, "q");
                       return Chains{BoundChain(kEq, {{"ln_q x", q_log(x, q)},
                                                      {"quadrature", qlog_quadrature_oracle(x, q, 64)}})};
                     }));
  const char* l33 = " with L = ln_r x, E = exp((1-q)L)";
  c.add(scalar_check("lemma_3_3_I_i", std::string("0<x<1, 0<q<1: L <= (E+1)/2 L <= ln_rq x <= E^(1/2) L <= E L") + l33,
                     below, Sub, Any, [](const CheckInstance& i) { return lemma_3_3(i, true, false); }));
  c.add(scalar_check("lemma_3_3_I_ii", std::string("0<x<1, q>1: E L <= (E+1)/2 L <= ln_rq x <= E^(1/2) L <= L") + l33,
                     below, Sup, Any, [](const CheckInstance& i) { return lemma_3_3(i, true, true); }));
  c.add(scalar_check("lemma_3_3_II_i", std::string("x>1, 0<q<1: L <= E^(1/2) L <= ln_rq x <= (E+1)/2 L <= E L") + l33,
                     above, Sub, Any, [](const CheckInstance& i) { return lemma_3_3(i, false, false); }));
  c.add(scalar_check("lemma_3_3_II_ii", std::string("x>1, q>1: E L <= E^(1/2) L <= ln_rq x <= (E+1)/2 L <= L") + l33,
                     above, Sup, Any, [](const CheckInstance& i) { return lemma_3_3(i, false, true); }));
  c.add(with_guard(scalar_check("lim_qlog", "|ln_q x - log x| decays monotonically as q -> 1", ArgDomain::Any, N, N,
                                [](const CheckInstance& i) {
                                  const double x = scalar(i, "x");
                                  const double lg = std::log(x);
                                  return limit_decay([&](QIndex q) { return std::abs(q_log(x, q) - lg); }, std::abs(lg));
                                }),
                   [](const Scalars& s) { return std::abs(std::log(s.at("x"))) >= 1e-3; }, "|log x| >= 1e-3"));
}

void register_entropy(Catalog& c) {
  c.add(dist_check("prop_2_2_sub", "0<q<1: G_q >= (H+G_q)/2 >= H_q >= G_((q+1)/2) >= H", 1, Sub, N, prop_2_2));
  c.add(dist_check("prop_2_2_super", "q>1: H >= (H+G_q)/2 >= H_q >= G_((q+1)/2) >= G_q", 1, Sup, N, prop_2_2));
  const auto thm_2_3 = [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    return entropy_chain(quasilinear_entropy(p, *i.psi, OuterLog::natural()),
                         quasilinear_entropy(p, *i.psi, OuterLog::tsallis(q)), q, "I_1", "I_q");
  };
  c.add(with_psi(dist_check("thm_2_3_sub", "0<q<1: M^(1-q) I_1 >= (M^(1-q)+1)/2 I_1 >= I_q >= M^((1-q)/2) I_1 >= I_1, M = M_psi(1/p)",
                            1, Sub, N, thm_2_3), PsiDomain::Any));
  c.add(with_psi(dist_check("thm_2_3_super", "q>1: M^(1-q) I_1 <= M^((1-q)/2) I_1 <= I_q <= (M^(1-q)+1)/2 I_1 <= I_1, M = M_psi(1/p)",
                            1, Sup, N, thm_2_3), PsiDomain::Any));
  const auto cor_2_4 = [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    return entropy_chain(shannon(p), quasilinear_entropy(p, PsiKernel::log(), OuterLog::tsallis(q)), q, "H", "I_q^log");
  };
  c.add(dist_check("cor_2_4_sub", "psi = log, 0<q<1: quasilinear chain with I_1 = H and exp((1-q)H) factors", 1, Sub, N, cor_2_4));
  c.add(dist_check("cor_2_4_super", "psi = log, q>1: quasilinear chain with I_1 = H and exp((1-q)H) factors", 1, Sup, N, cor_2_4));
  const auto cor_2_5 = [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    return entropy_chain(renyi(p, q), tsallis(p, q), q, "R_q", "H_q");
  };
  c.add(dist_check("cor_2_5_sub", "psi = x^(1-q), 0<q<1: quasilinear chain linking R_q and H_q", 1, Sub, N, cor_2_5));
  c.add(dist_check("cor_2_5_super", "psi = x^(1-q), q>1: quasilinear chain linking R_q and H_q", 1, Sup, N, cor_2_5));
  c.add(with_psi(dist_check("prop_1_3", "I_q^psi >= 0", 1, Any, N,
                            [](const CheckInstance& i) {
                              return Chains{BoundChain(
                                  kUp, {{"0", 0.0},
                                        {"I_q", quasilinear_entropy(dist0(i), *i.psi, OuterLog::tsallis(index(i, "q")))}})};
                            }),
                 PsiDomain::Any));
  c.add(dist_check("id_eq17", "exp R_q = exp_q H_q", 1, Any, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kEq, {{"exp R_q", std::exp(renyi(p, q))}, {"exp_q H_q", q_exp(tsallis(p, q), q)}})};
  }));
  c.add(dist_check("id_eq18", "1 + (1-q) H_q = sum p^q > 0", 1, Any, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    const double lhs = 1.0 + q.complement() * tsallis(p, q);
    const double rhs = power_sum(p, q.value());
    return Chains{BoundChain(kEq, {{"1+(1-q)H_q", lhs}, {"sum p^q", rhs}}),
                  BoundChain(kUp, {{"0", 0.0}, {"sum p^q", rhs}})};
  }));
  c.add(with_guard(dist_check("id_S_convex", "S_rq = (q-1)/(q-r) H_q + (1-r)/(q-r) H_r", 1, Any, Any,
                              [](const CheckInstance& i) {
                                const auto& p = dist0(i);
                                const QIndex q = index(i, "q");
                                const QIndex r = index(i, "r");
                                const double d = q.value() - r.value();
                                const double comb = (q.value() - 1.0) / d * tsallis(p, q) + r.complement() / d * tsallis(p, r);
                                return Chains{BoundChain(kEq, {{"S_rq", wada_suyari(p, r, q)}, {"convex combination", comb}})};
                              }),
                   separated, "|q - r| >= 1e-3"));
  c.add(with_guard(dist_check("id_S_qlog_form", "S_rq = -sum p^q ln_(q-r+1) p", 1, Any, Any,
                              [](const CheckInstance& i) {
                                const auto& p = dist0(i);
                                const QIndex q = index(i, "q");
                                const QIndex r = index(i, "r");
                                const QIndex s(q.value() - r.value() + 1.0);
                                double acc = 0.0;
                                for (double w : p.weights()) {
                                  const double lw = std::log(w);
                                  acc -= std::exp(q.value() * lw) * q_log_of_exp(lw, s);
                                }
                                return Chains{BoundChain(kEq, {{"S_rq", wada_suyari(p, r, q)}, {"-sum p^q ln_(q-r+1) p", acc}})};
                              }),
                   [](const Scalars& s) { return separated(s) && s.at("q") - s.at("r") + 1.0 > 0.0; },
                   "|q - r| >= 1e-3 and q - r + 1 > 0"));
  c.add(dist_check("prop_3_1_a", "q>1, 0<r<1: H/G_r combination >= S_rq >= G_q/G_((r+1)/2) combination", 1, Sup, Sub,
                   [](const CheckInstance& i) { return prop_3_1(i, true); }));
  c.add(dist_check("prop_3_1_b", "0<q<1, r>1: H/G_q combination >= S_rq >= G_r/G_((q+1)/2) combination", 1, Sub, Sup,
                   [](const CheckInstance& i) { return prop_3_1(i, false); }));
  c.add(with_psi(dist_check("thm_3_4_sub", "0<q<1: I_r <= E^(1/2) I_r <= I_rq <= (E+1)/2 I_r <= E I_r, E = exp((1-q) I_r)",
                            1, Sub, Any, thm_3_4), PsiDomain::Any));
  c.add(with_psi(dist_check("thm_3_4_super", "q>1: E I_r <= E^(1/2) I_r <= I_rq <= (E+1)/2 I_r <= I_r, E = exp((1-q) I_r)",
                            1, Sup, Any, thm_3_4), PsiDomain::Any));
  c.add(dist_check("rem_3_6_entropy_sub", "0<q<1: H_r <= H_rq", 1, Sub, Any, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex r = index(i, "r");
    return Chains{BoundChain(kUp, {{"H_r", tsallis(p, r)}, {"H_rq", biparam_entropy(p, r, index(i, "q"))}})};
  }));
  c.add(dist_check("rem_3_6_entropy_super", "q>1: H_rq <= H_r", 1, Sup, Any, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex r = index(i, "r");
    return Chains{BoundChain(kUp, {{"H_rq", biparam_entropy(p, r, index(i, "q"))}, {"H_r", tsallis(p, r)}})};
  }));
  c.add(dist_check("arimoto_nonneg", "Arimoto-type entropy is nonnegative", 1, Any, Any, [](const CheckInstance& i) {
    return Chains{BoundChain(kUp, {{"0", 0.0}, {"A_rq", arimoto_entropy(dist0(i), index(i, "r"), index(i, "q"))}})};
  }));
  c.add(with_guard(dist_check("id_arimoto", "I_((2r-1)/r, q)^(x^(1-r)) equals the Arimoto-type entropy", 1, Any, Any,
                              [](const CheckInstance& i) {
                                const auto& p = dist0(i);
                                const QIndex q = index(i, "q");
                                const QIndex r = index(i, "r");
                                const QIndex rr((2.0 * r.value() - 1.0) / r.value());
                                const double lhs = quasilinear_entropy(p, PsiKernel::power(r.complement()), OuterLog::biparam(rr, q));
                                return Chains{BoundChain(kEq, {{"I_(r',q)^(x^(1-r))", lhs}, {"A_rq", arimoto_entropy(p, r, q)}})};
                              }),
                   [](const Scalars& s) { return s.at("r") > 0.5; }, "r > 0.5"));
  c.add(dist_check("id_shannon_forms", "I_1^log = H", 1, N, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    return Chains{BoundChain(kEq, {{"I_1^log", quasilinear_entropy(p, PsiKernel::log(), OuterLog::natural())}, {"H", shannon(p)}})};
  }));
  c.add(dist_check("id_renyi_forms", "I_1^(x^(1-q)) = R_q", 1, Any, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(
        kEq, {{"I_1^(x^(1-q))", quasilinear_entropy(p, PsiKernel::power(q.complement()), OuterLog::natural())},
              {"R_q", renyi(p, q)}})};
  }));
  c.add(dist_check("id_entropy_forms", "I_q^(x^(1-q)) = I_q^(ln_q) = H_q", 1, Any, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(
        kEq, {{"I_q^(x^(1-q))", quasilinear_entropy(p, PsiKernel::power(q.complement()), OuterLog::tsallis(q))},
              {"I_q^(ln_q)", quasilinear_entropy(p, PsiKernel::q_log(q), OuterLog::tsallis(q))},
              {"H_q", tsallis(p, q)}})};
  }));
  c.add(dist_check("thm_5_1", "l_1^FD <= l_1^BE", 1, N, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex one(1.0);
    return Chains{BoundChain(kUp, {{"FD_1", fermi_dirac(p, one)}, {"BE_1", bose_einstein(p, one)}})};
  }));
  c.add(dist_check("thm_5_1_alt", "l_1^FD - l_1^BE <= log(n^(2n) / ((n-1)^(n-1) (n+1)^(n+1))) <= 0", 1, N, N,
                   [](const CheckInstance& i) {
                     const auto& p = dist0(i);
                     const QIndex one(1.0);
                     const double n = static_cast<double>(p.size());
                     const double bound = 2.0 * xlogx(n) - xlogx(n - 1.0) - xlogx(n + 1.0);
                     return Chains{BoundChain(
                         kUp, {{"FD_1 - BE_1", fermi_dirac(p, one) - bose_einstein(p, one)}, {"log bound", bound}, {"0", 0.0}})};
                   }));
  c.add(dist_check("thm_5_2", "l_r^FD <= l_r^BE", 1, N, Any, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const QIndex r = index(i, "r");
    return Chains{BoundChain(kUp, {{"FD_r", fermi_dirac(p, r)}, {"BE_r", bose_einstein(p, r)}})};
  }));
  c.add(dist_check("id_fd_decomp", "l_1^FD = H(p) + (n-1) H(p') - (n-1) log(n-1), p' = (1-p)/(n-1)", 1, N, N,
                   [](const CheckInstance& i) {
                     const auto& p = dist0(i);
                     const double n = static_cast<double>(p.size());
                     const double rhs = shannon(p) + (n - 1.0) * shannon(fd_complement(p)) - xlogx(n - 1.0);
                     return Chains{BoundChain(kEq, {{"FD_1", fermi_dirac(p, QIndex(1.0))}, {"decomposition", rhs}})};
                   }));
  c.add(dist_check("id_be_decomp", "l_1^BE = H(p) - (n+1) H(p'') + (n+1) log(n+1), p'' = (1+p)/(n+1)", 1, N, N,
                   [](const CheckInstance& i) {
                     const auto& p = dist0(i);
                     const double n = static_cast<double>(p.size());
                     const double rhs = shannon(p) - (n + 1.0) * shannon(be_complement(p)) + xlogx(n + 1.0);
                     return Chains{BoundChain(kEq, {{"BE_1", bose_einstein(p, QIndex(1.0))}, {"decomposition", rhs}})};
                   }));
  c.add(dist_check("id_limits_sec6_entropy",
                   "|H_rq - S_rq| decays monotonically as q -> 1; needs max |ln_r(1/p_j)| <= 1e3", 1, N, Any,
                   [](const CheckInstance& i) {
                     const auto& p = dist0(i);
                     const QIndex r = index(i, "r");
                     std::vector<double> inv(p.size());
                     for (std::size_t j = 0; j < p.size(); ++j) inv[j] = 1.0 / p[j];
                     require_asymptotic(inv, r);
                     return limit_decay(
                         [&](QIndex q) { return std::abs(biparam_entropy(p, r, q) - wada_suyari(p, r, q)); },
                         tsallis(p, r));
                   }));
  c.add(dist_check("lim_tsallis", "|H_q - H| decays monotonically as q -> 1", 1, N, N, [](const CheckInstance& i) {
    const auto& p = dist0(i);
    const double h = shannon(p);
    return limit_decay([&](QIndex q) { return std::abs(tsallis(p, q) - h); }, h);
  }));
}

void register_divergence(Catalog& c) {
  const auto thm_2_6 = [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return divergence_chain(quasilinear_div(pr, *i.psi, OuterLog::natural()),
                            quasilinear_div(pr, *i.psi, OuterLog::tsallis(q)), q);
  };
  c.add(with_psi(dist_check("thm_2_6_sub", "0<q<1: M^(1-q) D_1 <= M^((1-q)/2) D_1 <= D_q <= (M^(1-q)+1)/2 D_1 <= D_1, M = M_psi(r/p)",
                            2, Sub, N, thm_2_6), PsiDomain::Admissible));
  c.add(with_psi(dist_check("thm_2_6_super", "q>1: M^(1-q) D_1 >= (M^(1-q)+1)/2 D_1 >= D_q >= M^((1-q)/2) D_1 >= D_1, M = M_psi(r/p)",
                            2, Sup, N, thm_2_6), PsiDomain::Admissible));
  c.add(with_psi(dist_check("prop_1_5", "D_q^psi >= 0", 2, Any, N,
                            [](const CheckInstance& i) {
                              return Chains{BoundChain(
                                  kUp, {{"0", 0.0},
                                        {"D_q", quasilinear_div(pair_of(i), *i.psi, OuterLog::tsallis(index(i, "q")))}})};
                            }),
                 PsiDomain::Admissible));
  c.add(dist_check("id_eq21", "exp D_q^R = exp_(2-q) D_q^T", 2, Any, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kEq, {{"exp D_q^R", std::exp(renyi_div(pr, q))},
                                   {"exp_(2-q) D_q^T", general_q_exp(tsallis_div(pr, q), 2.0 - q.value())}})};
  }));
  c.add(dist_check("id_eq12", "D^(alpha) = D_q^T / q with alpha = 1 - 2q", 2, Any, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kEq, {{"D^(1-2q)", alpha_div(pr, 1.0 - 2.0 * q.value())},
                                   {"D_q^T / q", tsallis_div(pr, q) / q.value()}})};
  }));
  c.add(dist_check("id_eq13", "D_q^R = log(1 + (q-1) D_q^T) / (q-1)", 2, Any, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    const double c1 = -q.complement();
    return Chains{BoundChain(kEq, {{"D_q^R", renyi_div(pr, q)}, {"bridge", std::log1p(c1 * tsallis_div(pr, q)) / c1}})};
  }));
  c.add(dist_check("ineq_14_15_sub", "0<q<1: D_q^R >= D_q^T", 2, Sub, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kDown, {{"D_q^R", renyi_div(pr, q)}, {"D_q^T", tsallis_div(pr, q)}})};
  }));
  c.add(dist_check("ineq_14_15_super", "q>1: D_q^R <= D_q^T", 2, Sup, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kUp, {{"D_q^R", renyi_div(pr, q)}, {"D_q^T", tsallis_div(pr, q)}})};
  }));
  c.add(with_guard(dist_check("id_hat_convex", "Dhat_qr = (q-1)/(q-r) D_q^T + (1-r)/(q-r) D_r^T", 2, Any, Any,
                              [](const CheckInstance& i) {
                                const auto pr = pair_of(i);
                                const QIndex q = index(i, "q");
                                const QIndex r = index(i, "r");
                                const double d = q.value() - r.value();
                                const double comb =
                                    (q.value() - 1.0) / d * tsallis_div(pr, q) + r.complement() / d * tsallis_div(pr, r);
                                return Chains{BoundChain(kEq, {{"Dhat_qr", hat_div(pr, q, r)}, {"convex combination", comb}})};
                              }),
                   separated, "|q - r| >= 1e-3"));
  c.add(dist_check("hat_div_nonneg", "0<q<1<r: Dhat_qr >= 0", 2, Sub, Sup, [](const CheckInstance& i) {
    return Chains{BoundChain(kUp, {{"0", 0.0}, {"Dhat_qr", hat_div(pair_of(i), index(i, "q"), index(i, "r"))}})};
  }));
  c.add(dist_check("lemma_D_ordering_sub", "0<q<1: D_(q) <= D_q^T <= D_1", 2, Sub, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kUp, {{"D_(q)", quasi_div(pr, q)}, {"D_q^T", tsallis_div(pr, q)}, {"D_1", kl(pr)}})};
  }));
  c.add(dist_check("lemma_D_ordering_super", "q>1: D_1 <= D_q^T <= D_(q)", 2, Sup, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kUp, {{"D_1", kl(pr)}, {"D_q^T", tsallis_div(pr, q)}, {"D_(q)", quasi_div(pr, q)}})};
  }));
  c.add(dist_check("prop_3_4_a", "0<q<1<r: b D_1 + a D_(q) <= Dhat_qr <= b D_(r) + a D_1, b = (r-1)/(r-q), a = (1-q)/(r-q)",
                   2, Sub, Sup, [](const CheckInstance& i) { return prop_3_4(i, true); }));
  c.add(dist_check("prop_3_4_b", "0<r<1<q: b D_(r) + a D_1 <= Dhat_qr <= b D_1 + a D_(q), b = (r-1)/(r-q), a = (1-q)/(r-q)",
                   2, Sup, Sub, [](const CheckInstance& i) { return prop_3_4(i, false); }));
  c.add(with_psi(dist_check("thm_3_5_sub", "0<q<1: E D_r <= E^(1/2) D_r <= D_rq <= (E+1)/2 D_r <= D_r, E = exp((q-1) D_r)",
                            2, Sub, Any, thm_3_5), PsiDomain::Admissible));
  c.add(with_psi(dist_check("thm_3_5_super", "q>1: D_r <= E^(1/2) D_r <= D_rq <= (E+1)/2 D_r <= E D_r, E = exp((q-1) D_r)",
                            2, Sup, Any, thm_3_5), PsiDomain::Admissible));
  c.add(dist_check("rem_3_6_div_sub", "0<q<1: D_rq <= D_r^T", 2, Sub, Any, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex r = index(i, "r");
    return Chains{BoundChain(kUp, {{"D_rq", biparam_div(pr, r, index(i, "q"))}, {"D_r^T", tsallis_div(pr, r)}})};
  }));
  c.add(dist_check("rem_3_6_div_super", "q>1: D_r^T <= D_rq", 2, Sup, Any, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex r = index(i, "r");
    return Chains{BoundChain(kUp, {{"D_r^T", tsallis_div(pr, r)}, {"D_rq", biparam_div(pr, r, index(i, "q"))}})};
  }));
  c.add(dist_check("biparam_div_nonneg", "q>1: D_rq >= 0", 2, Sup, Any, [](const CheckInstance& i) {
    return Chains{BoundChain(kUp, {{"0", 0.0}, {"D_rq", biparam_div(pair_of(i), index(i, "r"), index(i, "q"))}})};
  }));
  c.add(dist_check("arimoto_div_nonneg", "Arimoto-type divergence is nonnegative", 2, Any, Any, [](const CheckInstance& i) {
    return Chains{BoundChain(kUp, {{"0", 0.0}, {"A_rq", arimoto_div(pair_of(i), index(i, "r"), index(i, "q"))}})};
  }));
  c.add(with_guard(dist_check("id_arimoto_div", "D_((2r-1)/r, q)^(x^(1-r)) equals the Arimoto-type divergence", 2, Any, Any,
                              [](const CheckInstance& i) {
                                const auto pr = pair_of(i);
                                const QIndex q = index(i, "q");
                                const QIndex r = index(i, "r");
                                const QIndex rr((2.0 * r.value() - 1.0) / r.value());
                                const double lhs = quasilinear_div(pr, PsiKernel::power(r.complement()), OuterLog::biparam(rr, q));
                                return Chains{BoundChain(kEq, {{"D_(r',q)^(x^(1-r))", lhs}, {"A_rq", arimoto_div(pr, r, q)}})};
                              }),
                   [](const Scalars& s) { return s.at("r") > 0.5; }, "r > 0.5"));
  c.add(dist_check("id_kl_forms", "D_1^log = D_1", 2, N, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    return Chains{BoundChain(kEq, {{"D_1^log", quasilinear_div(pr, PsiKernel::log(), OuterLog::natural())}, {"D_1", kl(pr)}})};
  }));
  c.add(dist_check("id_renyi_div_forms", "D_1^(x^(1-q)) = D_q^R", 2, Any, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kEq, {{"D_1^(x^(1-q))", quasilinear_div(pr, PsiKernel::power(q.complement()), OuterLog::natural())},
                                   {"D_q^R", renyi_div(pr, q)}})};
  }));
  c.add(dist_check("id_div_forms", "D_q^(x^(1-q)) = D_q^(ln_q) = D_q^T", 2, Any, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kEq, {{"D_q^(x^(1-q))", quasilinear_div(pr, PsiKernel::power(q.complement()), OuterLog::tsallis(q))},
                                   {"D_q^(ln_q)", quasilinear_div(pr, PsiKernel::q_log(q), OuterLog::tsallis(q))},
                                   {"D_q^T", tsallis_div(pr, q)}})};
  }));
  c.add(dist_check("hypodiv", "D_q^T(p||(p+r)/2) <= D_((1+q)/2)^T(p||r) / 2", 2, Any, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const QIndex q = index(i, "q");
    return Chains{BoundChain(kUp, {{"D_q(p||(p+r)/2)", tsallis_div(DivergencePair(pr.p, mixture(pr, 0.5)), q)},
                                   {"D_((1+q)/2)(p||r)/2", 0.5 * tsallis_div(pr, QIndex(0.5 * (1.0 + q.value())))}})};
  }));
  c.add(with_v(dist_check("thm_4_1_sub", "0<q<1, 0<v<1: D_q(p||(1-v)p+vr) <= v D_(1-(1-q)v)(p||r) <= D_q(vp+(1-v)r||r)/v + (1-v)/v ln_q(1/(1-v))",
                          2, Sub, N, thm_4_1), MixDomain::Open));
  c.add(with_v(dist_check("thm_4_1_super", "q>1, 0<v<1: D_q(p||(1-v)p+vr) <= v D_(1-(1-q)v)(p||r) <= D_q(vp+(1-v)r||r)/v + (1-v)/v ln_q(1/(1-v))",
                          2, Sup, N, thm_4_1), MixDomain::Open));
  c.add(with_v(dist_check("thm_4_1_endpoint", "v = 1: D_q(p||r) <= D_q(p||r)", 2, Any, N, thm_4_1), MixDomain::One));
  c.add(dist_check("lin_half", "D_1(p||(p+r)/2) <= D_1(p||r) / 2", 2, N, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    return Chains{BoundChain(kUp, {{"L(p||r)", lin(pr)}, {"D_1/2", 0.5 * kl(pr)}})};
  }));
  c.add(dist_check("js_quarter", "JS(p||r) <= J(p||r) / 4", 2, N, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    return Chains{BoundChain(kUp, {{"JS", jensen_shannon(pr)}, {"J/4", 0.25 * jeffreys(pr)}})};
  }));
  c.add(dist_check("prop_4_2", "L(p||r) - L(r||p) <= D_1(p||r)", 2, N, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    return Chains{BoundChain(kUp, {{"L(p||r) - L(r||p)", lin(pr) - lin(DivergencePair(pr.r, pr.p))}, {"D_1", kl(pr)}})};
  }));
  c.add(dist_check("id_limits_sec6_div",
                   "|Dhat_rq - D_rq| decays monotonically as q -> 1; needs max |ln_r(r_j/p_j)| <= 1e3", 2, N, Any,
                   [](const CheckInstance& i) {
                     const auto pr = pair_of(i);
                     const QIndex r = index(i, "r");
                     std::vector<double> ratio(pr.size());
                     for (std::size_t j = 0; j < pr.size(); ++j) ratio[j] = pr.r[j] / pr.p[j];
                     require_asymptotic(ratio, r);
                     return limit_decay([&](QIndex q) { return std::abs(hat_div(pr, q, r) - biparam_div(pr, r, q)); },
                                        tsallis_div(pr, r));
                   }));
  c.add(dist_check("lim_tsallis_div", "|D_q^T - D_1| decays monotonically as q -> 1", 2, N, N, [](const CheckInstance& i) {
    const auto pr = pair_of(i);
    const double d1 = kl(pr);
    return limit_decay([&](QIndex q) { return std::abs(tsallis_div(pr, q) - d1); }, d1);
  }));
}

Catalog make_builtin() {
  Catalog c;
  register_scalar(c);
  register_entropy(c);
  register_divergence(c);
  return c;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void out_of_domain(const CheckSpec& spec, const std::string& what) {
  fail(ErrorCode::ParameterOutOfDomain, spec.id + ": " + what);
}

}  // namespace

bool index_accepts(IndexDomain d, double v) noexcept {
  if (!std::isfinite(v) || v <= 0.0) return false;
  switch (d) {
    case IndexDomain::None: return false;
    case IndexDomain::Sub: return v < 1.0 - kLimitBand;
    case IndexDomain::Super: return v > 1.0 + kLimitBand;
    case IndexDomain::Any: return std::abs(v - 1.0) > kLimitBand;
  }
  return false;
}

bool arg_accepts(ArgDomain d, double x) noexcept {
  if (!std::isfinite(x) || x <= 0.0) return false;
  switch (d) {
    case ArgDomain::None: return false;
    case ArgDomain::Below1: return x < 1.0;
    case ArgDomain::Above1: return x > 1.0;
    case ArgDomain::Any: return x != 1.0;
  }
  return false;
}

bool mix_accepts(MixDomain d, double v) noexcept {
  switch (d) {
    case MixDomain::None: return false;
    case MixDomain::Open: return v > 0.0 && v < 1.0;
    case MixDomain::One: return v == 1.0;
  }
  return false;
}

bool psi_accepts(PsiDomain d, const PsiKernel& k) noexcept {
  switch (d) {
    case PsiDomain::None: return false;
    case PsiDomain::Any: return true;
    case PsiDomain::Admissible: return k.concave_increasing_or_convex_decreasing();
  }
  return false;
}

std::string_view to_string(IndexDomain d) {
  switch (d) {
    case IndexDomain::None: return "none";
    case IndexDomain::Sub: return "(0,1)";
    case IndexDomain::Super: return "(1,inf)";
    case IndexDomain::Any: return "(0,1)u(1,inf)";
  }
  return "?";
}

std::string_view to_string(ArgDomain d) {
  switch (d) {
    case ArgDomain::None: return "none";
    case ArgDomain::Below1: return "(0,1)";
    case ArgDomain::Above1: return "(1,inf)";
    case ArgDomain::Any: return "(0,1)u(1,inf)";
  }
  return "?";
}

std::string_view to_string(MixDomain d) {
  switch (d) {
    case MixDomain::None: return "none";
    case MixDomain::Open: return "(0,1)";
    case MixDomain::One: return "{1}";
  }
  return "?";
}

std::string_view to_string(PsiDomain d) {
  switch (d) {
    case PsiDomain::None: return "none";
    case PsiDomain::Any: return "any";
    case PsiDomain::Admissible: return "concave increasing or convex decreasing";
  }
  return "?";
}

std::vector<std::string> CheckSpec::scalar_names() const {
  std::vector<std::string> out;
  if (x != ArgDomain::None) out.emplace_back("x");
  if (q != IndexDomain::None) out.emplace_back("q");
  if (r != IndexDomain::None) out.emplace_back("r");
  if (v != MixDomain::None) out.emplace_back("v");
  return out;
}

std::string CheckSpec::signature() const {
  std::vector<std::string> parts;
  if (distributions == 1) parts.emplace_back("p");
  if (distributions == 2) parts.emplace_back("p, r");
  if (x != ArgDomain::None) parts.push_back("x in " + std::string(to_string(x)));
  if (q != IndexDomain::None) parts.push_back("q in " + std::string(to_string(q)));
  if (r != IndexDomain::None) parts.push_back("r in " + std::string(to_string(r)));
  if (v != MixDomain::None) parts.push_back("v in " + std::string(to_string(v)));
  if (psi != PsiDomain::None) parts.push_back("psi " + std::string(to_string(psi)));
  if (guard) parts.push_back(guard_text);
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : "; ") + s;
  return out;
}

Catalog& Catalog::global() {
  static Catalog instance = make_builtin();
  return instance;
}

void Catalog::add(CheckSpec spec) {
  if (spec.id.empty() || !spec.evaluate) fail(ErrorCode::BadParameter, "check needs an id and an evaluator");
  if (find(spec.id) != nullptr) fail(ErrorCode::BadParameter, "duplicate check id '" + spec.id + "'");
  checks_.push_back(std::move(spec));
}

const CheckSpec* Catalog::find(std::string_view id) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckSpec& s) { return s.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

const CheckSpec& Catalog::resolve(const CheckInstance& inst) const {
  if (const CheckSpec* exact = find(inst.check_id)) {
    validate_instance(*exact, inst);
    return *exact;
  }
  const auto family = this->family(inst.check_id);
  if (family.empty()) fail(ErrorCode::UnknownCheck, "unknown check '" + inst.check_id + "'");
  std::string last;
  for (const CheckSpec* s : family) {
    try {
      validate_instance(*s, inst);
      return *s;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParameterOutOfDomain) throw;
      last = e.what();
    }
  }
  fail(ErrorCode::ParameterOutOfDomain, "no case of '" + inst.check_id + "' accepts these parameters (" + last + ")");
}

std::vector<const CheckSpec*> Catalog::family(std::string_view base) const {
  const std::string prefix = std::string(base) + "_";
  std::vector<const CheckSpec*> out;
  for (const auto& s : checks_) {
    if (s.id.size() > prefix.size() && s.id.compare(0, prefix.size(), prefix) == 0) out.push_back(&s);
  }
  return out;
}

std::vector<std::string> Catalog::expand(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  const auto push = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& s : checks_) push(s.id);
    } else if (find(name) != nullptr) {
      push(name);
    } else {
      const auto fam = family(name);
      if (fam.empty()) fail(ErrorCode::UnknownCheck, "unknown check '" + name + "'");
      for (const CheckSpec* s : fam) push(s->id);
    }
  }
  return out;
}

void validate_instance(const CheckSpec& spec, const CheckInstance& inst) {
  if (static_cast<int>(inst.distributions.size()) != spec.distributions) {
    out_of_domain(spec, "expects " + std::to_string(spec.distributions) + " distribution(s), got " +
                            std::to_string(inst.distributions.size()));
  }
  if (spec.distributions == 2 && inst.distributions[0].size() != inst.distributions[1].size()) {
    fail(ErrorCode::LengthMismatch, spec.id + ": p and r have different lengths");
  }
  const auto names = spec.scalar_names();
  for (const auto& [key, value] : inst.scalars) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      out_of_domain(spec, "does not take parameter '" + key + "'");
    }
  }
  const auto get = [&](const std::string& key) {
    const auto it = inst.scalars.find(key);
    if (it == inst.scalars.end()) out_of_domain(spec, "missing parameter '" + key + "'");
    return it->second;
  };
  const auto reject = [&](const std::string& key, double value, std::string_view domain) {
    out_of_domain(spec, key + " = " + fmt_double(value) + " outside " + std::string(domain));
  };
  if (spec.x != ArgDomain::None) {
    const double x = get("x");
    if (!arg_accepts(spec.x, x)) reject("x", x, to_string(spec.x));
  }
  if (spec.q != IndexDomain::None) {
    const double q = get("q");
    if (!index_accepts(spec.q, q)) reject("q", q, to_string(spec.q));
  }
  if (spec.r != IndexDomain::None) {
    const double r = get("r");
    if (!index_accepts(spec.r, r)) reject("r", r, to_string(spec.r));
  }
  if (spec.v != MixDomain::None) {
    const double v = get("v");
    if (!mix_accepts(spec.v, v)) reject("v", v, to_string(spec.v));
  }
  if (spec.psi == PsiDomain::None && inst.psi) out_of_domain(spec, "does not take a psi kernel");
  if (spec.psi != PsiDomain::None) {
    if (!inst.psi) out_of_domain(spec, "missing psi kernel");
    if (!psi_accepts(spec.psi, *inst.psi)) {
      out_of_domain(spec, "psi " + inst.psi->describe() + " is not " + std::string(to_string(spec.psi)));
    }
  }
  if (spec.guard && !spec.guard(inst.scalars)) out_of_domain(spec, "requires " + spec.guard_text);
}

std::vector<CheckSpec> list_checks() { return Catalog::global().checks(); }

CheckResult run_check(const CheckInstance& inst, double tol) { return run_check(Catalog::global(), inst, tol); }

CheckResult run_check(const Catalog& catalog, const CheckInstance& inst, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) fail(ErrorCode::BadParameter, "tolerance must be finite and > 0");
  const CheckSpec& spec = catalog.resolve(inst);
  std::vector<BoundChain> chains;
  try {
    chains = spec.evaluate(inst);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParameterOutOfDomain) throw;
    out_of_domain(spec, std::string("evaluation failed: ") + e.what());
  }
  for (const auto& chain : chains) {
    for (std::size_t k = 0; k < chain.size(); ++k) {
      if (!std::isfinite(chain.values()[k])) out_of_domain(spec, "term '" + chain.labels()[k] + "' is not finite");
    }
  }
  bool pass = true;
  std::size_t worst = 0;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    pass = pass && chains[k].verify(tol);
    if (chains[k].relative_slack() < chains[worst].relative_slack()) worst = k;
  }
  const double slack = chains[worst].slack();
  const double rel = chains[worst].relative_slack();
  BoundChain primary = chains.front();
  chains.erase(chains.begin());
  return CheckResult{spec.id, std::move(primary), std::move(chains), pass, slack, rel};
}

}  // namespace qinfo
