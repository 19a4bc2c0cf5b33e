#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qinfo/checks.hpp"

namespace qinfo {

struct Interval {
  double lo;
  double hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct CampaignConfig {
  std::vector<std::string> checks;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t n_min = 2;
  std::size_t n_max = 16;
  Interval q_range{0.05, 5.0};
  Interval r_range{0.05, 5.0};
  /// Half-width of the excluded band around index 1.
  double band = 1e-3;
  /// Sampled log-uniformly.
  Interval x_range{1e-3, 1e3};
  Interval v_range{1e-3, 1.0 - 1e-6};
  double tol = 1e-9;
  double floor = 1e-9;
  /// 0 picks the hardware concurrency. Never affects the report.
  unsigned threads = 0;
  /// Draws per trial before the trial is counted as skipped.
  int max_attempts = 100;
};

struct CheckReport {
  std::string id;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  /// Draws discarded because they fell outside the check's domain or
  /// produced non-finite terms.
  std::uint64_t rejected = 0;
  std::uint64_t skipped = 0;
  double min_slack = 0.0;
  double min_rel_slack = 0.0;
  /// Instance attaining min_rel_slack; feed it to run_check to reproduce.
  std::optional<CheckInstance> worst_instance;
  std::optional<BoundChain> worst_chain;
  double runtime_seconds = 0.0;

  bool pass() const noexcept { return violations == 0 && skipped == 0; }
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckReport> checks;
  bool pass = false;
};

/// Throws BadConfig describing the first invalid field.
void validate_config(const CampaignConfig& cfg);

/// Draws one instance inside spec's domains. Throws BadConfig when the
/// configured ranges cannot meet them.
CheckInstance sample_instance(const CheckSpec& spec, const CampaignConfig& cfg, std::mt19937_64& gen);

/// Seed for a trial, a pure function of its inputs.
std::uint64_t trial_seed(std::uint64_t campaign_seed, std::string_view check_id, std::uint64_t trial);

/// Throws EmptyCheckSet, UnknownCheck or BadConfig. Violations are reported,
/// not thrown.
CampaignReport run_campaign(const CampaignConfig& cfg);
CampaignReport run_campaign(const Catalog& catalog, const CampaignConfig& cfg);

}  // namespace qinfo
