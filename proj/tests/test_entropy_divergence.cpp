#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "qinfo/divergence.hpp"
#include "qinfo/entropy.hpp"
#include "test_support.hpp"

using namespace qinfo;
using qinfo::testing::code_of;
using qinfo::testing::dist;
using qinfo::testing::rel_err;

namespace {

const ProbabilityDistribution& p91() {
  static const auto p = dist({0.9, 0.1});
  return p;
}

DivergencePair pair91() { return DivergencePair(p91(), uniform(2)); }

}  // namespace

TEST_CASE("shannon") {
  CHECK(rel_err(shannon(uniform(2)), std::log(2.0)) < 1e-15);
  for (std::size_t n = 3; n <= 8; ++n) CHECK(rel_err(shannon(uniform(n)), std::log(n)) < 1e-15);
  const auto p = dist({1.0 - 1e-9, 1e-9});
  CHECK(std::abs(shannon(p) - 2.1723265836446411156e-8) < 1e-15);
}

TEST_CASE("tsallis") {
  CHECK(rel_err(tsallis(uniform(2), QIndex(2.0)), 0.5) < 1e-15);
  CHECK(rel_err(tsallis(p91(), QIndex(2.0)), 0.18) < 1e-15);
  CHECK(tsallis(p91(), QIndex(1.0 + 1e-12)) == shannon(p91()));
  for (std::size_t n = 2; n <= 16; ++n) {
    for (double q : {0.1, 0.5, 2.0, 4.5}) {
      CHECK(rel_err(tsallis(uniform(n), QIndex(q)), q_log(static_cast<double>(n), QIndex(q))) < 1e-12);
    }
  }
}

TEST_CASE("renyi") {
  CHECK(rel_err(renyi(p91(), QIndex(2.0)), 0.19845093872383825475) < 1e-15);
  for (double q : {0.3, 2.0, 5.0}) CHECK(rel_err(renyi(uniform(5), QIndex(q)), std::log(5.0)) < 1e-14);
  CHECK(code_of([] { renyi(uniform(2), QIndex(1.0)); }) == ErrorCode::LimitIndex);
}

TEST_CASE("quasi entropy") {
  CHECK(rel_err(quasi_entropy(uniform(2), QIndex(2.0)), 0.34657359027997265471) < 1e-15);
  CHECK(rel_err(quasi_entropy(p91(), QIndex(0.5)), 0.82809510149974954688) < 1e-15);
  CHECK(rel_err(quasi_entropy(p91(), QIndex(1.0)), shannon(p91())) < 1e-15);
}

TEST_CASE("quasilinear entropy special cases") {
  const auto p = dist({0.5, 0.3, 0.2});
  const QIndex q(0.7);
  CHECK(rel_err(quasilinear_entropy(p, PsiKernel::log(), OuterLog::natural()), shannon(p)) < 1e-14);
  CHECK(rel_err(quasilinear_entropy(p, PsiKernel::power(1.0 - q.value()), OuterLog::natural()), renyi(p, q)) < 1e-14);
  CHECK(rel_err(quasilinear_entropy(p, PsiKernel::power(1.0 - q.value()), OuterLog::tsallis(q)), tsallis(p, q)) < 1e-14);
  CHECK(rel_err(quasilinear_entropy(p, PsiKernel::q_log(q), OuterLog::tsallis(q)), tsallis(p, q)) < 1e-14);
  const QIndex r(2.0);
  const QIndex r2((2.0 * r.value() - 1.0) / r.value());
  CHECK(rel_err(quasilinear_entropy(p, PsiKernel::power(1.0 - r.value()), OuterLog::biparam(r2, q)),
                arimoto_entropy(p, r, q)) < 1e-14);
}

TEST_CASE("wada-suyari") {
  const auto p = dist({0.6, 0.3, 0.1});
  CHECK(rel_err(wada_suyari(p, QIndex(1.0), QIndex(2.5)), tsallis(p, QIndex(2.5))) < 1e-14);
  CHECK(rel_err(wada_suyari(p, QIndex(0.4 + 1e-13), QIndex(0.4)), quasi_entropy(p, QIndex(0.4))) < 1e-6);
  CHECK(rel_err(wada_suyari(uniform(2), QIndex(2.0), QIndex(0.5)), 0.60947570824873003253) < 1e-15);
  CHECK(rel_err(wada_suyari(p, QIndex(2.0), QIndex(0.5)), wada_suyari(p, QIndex(0.5), QIndex(2.0))) < 1e-15);
  CHECK(code_of([&] { wada_suyari(p, QIndex(0.5), QIndex(0.5)); }) == ErrorCode::EqualIndices);
}

TEST_CASE("biparametric entropy") {
  const auto p = dist({0.6, 0.3, 0.1});
  CHECK(rel_err(biparam_entropy(p, QIndex(1.0), QIndex(2.5)), tsallis(p, QIndex(2.5))) < 1e-14);
  CHECK(rel_err(biparam_entropy(p, QIndex(2.5), QIndex(1.0)), tsallis(p, QIndex(2.5))) < 1e-14);
  CHECK(biparam_entropy(p, QIndex(2.0), QIndex(0.5)) >= tsallis(p, QIndex(2.0)));
  CHECK(biparam_entropy(p, QIndex(2.0), QIndex(3.0)) <= tsallis(p, QIndex(2.0)));
}

TEST_CASE("arimoto entropy") {
  CHECK(rel_err(arimoto_entropy(uniform(2), QIndex(2.0), QIndex(1.0)), 0.5857864376269049512) < 1e-15);
  CHECK(std::abs(arimoto_entropy(dist({1.0 - 1e-12, 1e-12}), QIndex(2.0), QIndex(0.5))) < 1e-10);
  CHECK(code_of([] { arimoto_entropy(uniform(2), QIndex(1.0), QIndex(2.0)); }) == ErrorCode::LimitIndex);
}

TEST_CASE("fermi-dirac and bose-einstein") {
  const auto u2 = uniform(2);
  CHECK(rel_err(fermi_dirac(u2, QIndex(1.0)), 1.3862943611198906188) < 1e-15);
  CHECK(rel_err(bose_einstein(u2, QIndex(1.0)), 1.9095425048844384554) < 1e-15);
  CHECK(rel_err(bose_einstein(u2, QIndex(1.0)) - fermi_dirac(u2, QIndex(1.0)), 0.52324814376454783652) < 1e-15);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto p = sample(2 + s % 15, s);
    for (double r : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      CHECK(fermi_dirac(p, QIndex(r)) <= bose_einstein(p, QIndex(r)) + 1e-12);
    }
  }
}

TEST_CASE("entropy measure dispatch") {
  const EntropyMeasure m = entropy_measure::Tsallis{QIndex(2.0)};
  CHECK(evaluate(m, uniform(2)) == doctest::Approx(0.5));
  CHECK(name(m) == "tsallis");
  CHECK(name(EntropyMeasure{entropy_measure::BoseEinstein{QIndex(1.0)}}) == "bose-einstein");
}

TEST_CASE("entropy properties") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto p = sample(2 + s % 15, 100 + s);
    for (double qv : {0.05, 0.4, 1.7, 5.0}) {
      const QIndex q(qv);
      const double hq = tsallis(p, q);
      CHECK(rel_err(std::exp(renyi(p, q)), q_exp(hq, q)) < 1e-10);
      double power_sum = 0.0;
      for (double w : p.weights()) power_sum += std::pow(w, qv);
      CHECK(rel_err(1.0 + q.complement() * hq, power_sum) < 1e-12);
      CHECK(power_sum > 0.0);
      CHECK(quasilinear_entropy(p, PsiKernel::q_log(q), OuterLog::tsallis(q)) >= -1e-14);
      const QIndex r(qv < 1 ? 2.5 : 0.3);
      const double convex = (qv - 1.0) / (qv - r.value()) * hq + (1.0 - r.value()) / (qv - r.value()) * tsallis(p, r);
      CHECK(rel_err(wada_suyari(p, r, q), convex) < 1e-12);
    }
  }
}

TEST_CASE("kl and tsallis divergence") {
  CHECK(kl(DivergencePair(p91(), p91())) == 0.0);
  CHECK(rel_err(kl(pair91()), 0.36806420716849706991) < 1e-15);
  CHECK(rel_err(tsallis_div(pair91(), QIndex(2.0)), 0.64) < 1e-15);
  CHECK(rel_err(tsallis_div(pair91(), QIndex(0.5)), 0.21114561800016824287) < 1e-15);
  CHECK(tsallis_div(pair91(), QIndex(1.0)) == kl(pair91()));
}

TEST_CASE("renyi and alpha divergence") {
  CHECK(rel_err(renyi_div(pair91(), QIndex(2.0)), 0.49469624183610705467) < 1e-15);
  CHECK(code_of([] { renyi_div(pair91(), QIndex(1.0)); }) == ErrorCode::LimitIndex);
  CHECK(rel_err(alpha_div(pair91(), 0.0), 0.42229123600033648575) < 1e-15);
  CHECK(code_of([] { alpha_div(pair91(), 1.0); }) == ErrorCode::BadAlpha);
  CHECK(code_of([] { alpha_div(pair91(), -1.0); }) == ErrorCode::BadAlpha);
  for (double q : {0.2, 0.7, 1.5, 3.0}) {
    CHECK(rel_err(alpha_div(pair91(), 1.0 - 2.0 * q), tsallis_div(pair91(), QIndex(q)) / q) < 1e-12);
  }
}

TEST_CASE("hat and quasi divergence") {
  CHECK(rel_err(hat_div(pair91(), QIndex(2.0), QIndex(0.5)), 0.49704853933338941429) < 1e-15);
  const double convex = (2.0 - 1.0) / (2.0 - 0.5) * 0.64 + (1.0 - 0.5) / (2.0 - 0.5) * tsallis_div(pair91(), QIndex(0.5));
  CHECK(rel_err(hat_div(pair91(), QIndex(2.0), QIndex(0.5)), convex) < 1e-14);
  CHECK(rel_err(hat_div(pair91(), QIndex(2.0), QIndex(1.0)), 0.64) < 1e-14);
  CHECK(code_of([] { hat_div(pair91(), QIndex(2.0), QIndex(2.0)); }) == ErrorCode::EqualIndices);
  CHECK(rel_err(quasi_div(pair91(), QIndex(2.0)), 0.92002563889275078578) < 1e-15);
  CHECK(rel_err(quasi_div(pair91(), QIndex(1.0)), kl(pair91())) < 1e-15);
}

TEST_CASE("biparametric and arimoto divergence") {
  CHECK(biparam_div(DivergencePair(p91(), p91()), QIndex(2.0), QIndex(3.0)) == 0.0);
  CHECK(rel_err(biparam_div(pair91(), QIndex(1.0), QIndex(2.0)), 0.64) < 1e-14);
  CHECK(rel_err(arimoto_div(pair91(), QIndex(2.0), QIndex(1.0)), 0.5612496949731394746) < 1e-15);
  CHECK(code_of([] { arimoto_div(pair91(), QIndex(1.0), QIndex(2.0)); }) == ErrorCode::LimitIndex);
}

TEST_CASE("symmetric divergences") {
  const DivergencePair same(p91(), p91());
  CHECK(jeffreys(same) == 0.0);
  CHECK(std::abs(jensen_shannon(same)) < 1e-16);
  CHECK(std::abs(lin(same)) < 1e-16);
  CHECK(jensen_shannon(pair91()) <= jeffreys(pair91()) / 4.0);
  CHECK(lin(pair91()) - lin(DivergencePair(uniform(2), p91())) <= kl(pair91()));
}

TEST_CASE("quasilinear divergence special cases") {
  const auto pr = DivergencePair(dist({0.5, 0.3, 0.2}), dist({0.2, 0.2, 0.6}));
  const QIndex q(1.8);
  CHECK(rel_err(quasilinear_div(pr, PsiKernel::log(), OuterLog::natural()), kl(pr)) < 1e-14);
  CHECK(rel_err(quasilinear_div(pr, PsiKernel::q_log(q), OuterLog::tsallis(q)), tsallis_div(pr, q)) < 1e-14);
  CHECK(rel_err(quasilinear_div(pr, PsiKernel::power(1.0 - q.value()), OuterLog::tsallis(q)), tsallis_div(pr, q)) < 1e-14);
  CHECK(rel_err(quasilinear_div(pr, PsiKernel::power(1.0 - q.value()), OuterLog::natural()), renyi_div(pr, q)) < 1e-14);
}

TEST_CASE("every divergence vanishes on identical pairs") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto p = sample(2 + s % 15, 500 + s);
    const DivergencePair pp(p, p);
    const QIndex q(0.4);
    const QIndex r(2.2);
    const std::vector<DivergenceMeasure> all{
        divergence_measure::Kl{},
        divergence_measure::Tsallis{q},
        divergence_measure::Renyi{q},
        divergence_measure::Alpha{0.3},
        divergence_measure::Quasilinear{PsiKernel::power(0.5), OuterLog::tsallis(q)},
        divergence_measure::Hat{q, r},
        divergence_measure::Quasi{q},
        divergence_measure::Biparam{r, q},
        divergence_measure::Arimoto{r, q},
        divergence_measure::Jeffreys{},
        divergence_measure::JensenShannon{},
        divergence_measure::Lin{},
    };
    for (const auto& m : all) CHECK(std::abs(evaluate(m, pp)) <= 1e-12);
  }
}

TEST_CASE("renyi-tsallis bridge") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t n = 2 + s % 15;
    const DivergencePair pr(sample(n, 900 + s), sample(n, 1900 + s));
    for (double qv : {0.05, 0.5, 1.5, 5.0}) {
      const QIndex q(qv);
      const double dt = tsallis_div(pr, q);
      const double dr = renyi_div(pr, q);
      CHECK(rel_err(dr, std::log1p((qv - 1.0) * dt) / (qv - 1.0)) < 1e-10);
      if (qv < 1) CHECK(dr >= dt - 1e-12);
      if (qv > 1) CHECK(dr <= dt + 1e-12);
    }
  }
}
