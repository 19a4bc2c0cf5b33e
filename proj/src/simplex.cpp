#include "qinfo/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "qinfo/error.hpp"

namespace qinfo {

namespace {

// uniform on (0, 1] from the top 53 bits
double unit_open_closed(std::mt19937_64& gen) {
  return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

double normalization_tolerance(std::size_t n) noexcept {
  return 1e-12 * static_cast<double>(n);
}

ProbabilityDistribution ProbabilityDistribution::validate(std::vector<double> raw) {
  if (raw.size() < 2) {
    fail(ErrorCode::TooShort, "distribution needs at least 2 weights, got " + std::to_string(raw.size()));
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (!(raw[j] > 0.0) || !std::isfinite(raw[j])) {
      fail(ErrorCode::NonPositiveWeight, "weight at index " + std::to_string(j) +
                                             " is not strictly positive: " + std::to_string(raw[j]));
    }
  }
  const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (std::abs(sum - 1.0) > normalization_tolerance(raw.size())) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", sum);
    fail(ErrorCode::NotNormalized, std::string("weights sum to ") + buf);
  }
  return ProbabilityDistribution(std::move(raw));
}

double ProbabilityDistribution::min_weight() const noexcept {
  return *std::min_element(weights_.begin(), weights_.end());
}

DivergencePair::DivergencePair(ProbabilityDistribution p_, ProbabilityDistribution r_)
    : p(std::move(p_)), r(std::move(r_)) {
  if (p.size() != r.size()) {
    fail(ErrorCode::LengthMismatch, "divergence arguments differ in length: " +
                                        std::to_string(p.size()) + " vs " + std::to_string(r.size()));
  }
}

ProbabilityDistribution uniform(std::size_t n) {
  if (n < 2) fail(ErrorCode::TooShort, "uniform distribution needs n >= 2");
  return ProbabilityDistribution::validate(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityDistribution sample(std::size_t n, std::uint64_t seed, double floor) {
  if (n < 2) fail(ErrorCode::TooShort, "sample needs n >= 2");
  const double inv_n = 1.0 / static_cast<double>(n);
  if (!(floor > 0.0) || !(floor < inv_n)) {
    fail(ErrorCode::BadFloor, "floor must lie in (0, 1/n), got " + std::to_string(floor));
  }
  std::mt19937_64 gen(seed);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(unit_open_closed(gen));
    total += x;
  }
  for (auto& x : w) x /= total;

  const double lo = *std::min_element(w.begin(), w.end());
  if (lo < floor) {
    // smallest lambda with (1 - lambda) lo + lambda / n >= floor, nudged up
    // so rounding cannot land a weight just below the floor
    const double lambda = std::min(1.0, (floor - lo) / (inv_n - lo) * (1.0 + 1e-9));
    for (auto& x : w) x = (1.0 - lambda) * x + lambda * inv_n;
  }
  return ProbabilityDistribution::validate(std::move(w));
}

ProbabilityDistribution fd_complement(const ProbabilityDistribution& p) {
  const auto n = static_cast<double>(p.size());
  std::vector<double> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!(p[j] < 1.0)) fail(ErrorCode::DegenerateWeight, "fd_complement: weight equal to 1");
    out[j] = (1.0 - p[j]) / (n - 1.0);
  }
  return ProbabilityDistribution::validate(std::move(out));
}

ProbabilityDistribution be_complement(const ProbabilityDistribution& p) {
  const auto n = static_cast<double>(p.size());
  std::vector<double> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = (1.0 + p[j]) / (n + 1.0);
  return ProbabilityDistribution::validate(std::move(out));
}

ProbabilityDistribution mixture(const DivergencePair& pair, double v) {
  if (!(v > 0.0 && v <= 1.0)) {
    fail(ErrorCode::BadParameter, "mixture weight v must lie in (0, 1], got " + std::to_string(v));
  }
  std::vector<double> out(pair.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (1.0 - v) * pair.p[j] + v * pair.r[j];
  return ProbabilityDistribution::validate(std::move(out));
}

}  // namespace qinfo
