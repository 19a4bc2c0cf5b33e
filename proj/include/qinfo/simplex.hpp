#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qinfo {

/// Default lower bound on campaign-sampled weights.
inline constexpr double kDefaultWeightFloor = 1e-9;

/// Point in the open probability simplex: n >= 2 strictly positive weights
/// summing to 1 within 1e-12 * n. Immutable once validated.
class ProbabilityDistribution {
 public:
  /// Validates without renormalizing. Throws TooShort, NonPositiveWeight or
  /// NotNormalized.
  static ProbabilityDistribution validate(std::vector<double> raw);

  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  double min_weight() const noexcept;

  friend bool operator==(const ProbabilityDistribution&, const ProbabilityDistribution&) = default;

 private:
  explicit ProbabilityDistribution(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

/// The (p, r) arguments of a divergence; both of the same length.
struct DivergencePair {
  DivergencePair(ProbabilityDistribution p_, ProbabilityDistribution r_);

  ProbabilityDistribution p;
  ProbabilityDistribution r;

  std::size_t size() const noexcept { return p.size(); }
};

double normalization_tolerance(std::size_t n) noexcept;

ProbabilityDistribution uniform(std::size_t n);

/// Flat-Dirichlet draw (normalized standard exponentials) mixed with the
/// uniform distribution just enough that every weight is >= floor.
/// Deterministic in (n, seed, floor).
ProbabilityDistribution sample(std::size_t n, std::uint64_t seed, double floor = kDefaultWeightFloor);

/// p'_j = (1 - p_j)/(n - 1).
ProbabilityDistribution fd_complement(const ProbabilityDistribution& p);

/// p''_j = (1 + p_j)/(n + 1).
ProbabilityDistribution be_complement(const ProbabilityDistribution& p);

/// (1 - v) p + v r for v in (0, 1].
ProbabilityDistribution mixture(const DivergencePair& pair, double v);

}  // namespace qinfo
