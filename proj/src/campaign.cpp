#include "qinfo/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "qinfo/error.hpp"

namespace qinfo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Uniform on [0, 1) from the top 53 bits; portable across standard libraries.
double unit(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double uniform_in(double lo, double hi, std::mt19937_64& gen) { return lo + (hi - lo) * unit(gen); }

[[noreturn]] void bad_config(const std::string& what) { fail(ErrorCode::BadConfig, what); }

bool valid_interval(const Interval& i) { return std::isfinite(i.lo) && std::isfinite(i.hi) && i.lo < i.hi; }

double draw_index(IndexDomain d, const Interval& range, double band, std::mt19937_64& gen, const char* name) {
  const double sub_lo = range.lo;
  const double sub_hi = std::min(range.hi, 1.0 - band);
  const double sup_lo = std::max(range.lo, 1.0 + band);
  const double sup_hi = range.hi;
  const double sub_len = std::max(0.0, sub_hi - sub_lo);
  const double sup_len = std::max(0.0, sup_hi - sup_lo);
  switch (d) {
    case IndexDomain::Sub:
      if (sub_len <= 0.0) bad_config(std::string(name) + "-range has no values below 1 - band");
      return uniform_in(sub_lo, sub_hi, gen);
    case IndexDomain::Super:
      if (sup_len <= 0.0) bad_config(std::string(name) + "-range has no values above 1 + band");
      return uniform_in(sup_lo, sup_hi, gen);
    case IndexDomain::Any: {
      if (sub_len + sup_len <= 0.0) bad_config(std::string(name) + "-range lies inside the excluded band");
      const double u = (sub_len + sup_len) * unit(gen);
      return u < sub_len ? sub_lo + u : sup_lo + (u - sub_len);
    }
    case IndexDomain::None: break;
  }
  return 1.0;
}

double draw_arg(ArgDomain d, const Interval& range, std::mt19937_64& gen) {
  double lo = range.lo;
  double hi = range.hi;
  if (d == ArgDomain::Below1) hi = std::min(hi, 1.0);
  if (d == ArgDomain::Above1) lo = std::max(lo, 1.0);
  if (!(lo < hi)) bad_config("x-range does not meet the domain " + std::string(to_string(d)));
  return std::exp(uniform_in(std::log(lo), std::log(hi), gen));
}

PsiKernel draw_psi(const CampaignConfig& cfg, std::mt19937_64& gen) {
  const auto s = [&] { return QIndex(draw_index(IndexDomain::Any, cfg.q_range, cfg.band, gen, "q")); };
  switch (gen() % 4) {
    case 0: return PsiKernel::log();
    case 1: return PsiKernel::power(s().complement());
    case 2: return PsiKernel::q_log(s());
    default: {
      const QIndex r = s();
      return PsiKernel::biparam_log(r, s());
    }
  }
}

struct Accumulator {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t rejected = 0;
  std::uint64_t skipped = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  double best_rel = std::numeric_limits<double>::infinity();
  std::uint64_t best_trial = std::numeric_limits<std::uint64_t>::max();
  std::optional<CheckInstance> worst;
  std::optional<BoundChain> worst_chain;

  void offer(double rel, std::uint64_t trial, const CheckInstance& inst, const BoundChain& chain) {
    if (rel < best_rel || (rel == best_rel && trial < best_trial)) {
      best_rel = rel;
      best_trial = trial;
      worst = inst;
      worst_chain = chain;
    }
  }

  void merge(Accumulator&& o) {
    trials += o.trials;
    violations += o.violations;
    rejected += o.rejected;
    skipped += o.skipped;
    min_slack = std::min(min_slack, o.min_slack);
    if (o.worst && (o.best_rel < best_rel || (o.best_rel == best_rel && o.best_trial < best_trial))) {
      best_rel = o.best_rel;
      best_trial = o.best_trial;
      worst = std::move(o.worst);
      worst_chain = std::move(o.worst_chain);
    }
  }
};

void run_trial(const Catalog& catalog, const CheckSpec& spec, const CampaignConfig& cfg, std::uint64_t trial,
               Accumulator& acc) {
  std::mt19937_64 gen(trial_seed(cfg.seed, spec.id, trial));
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    CheckInstance inst = sample_instance(spec, cfg, gen);
    try {
      const CheckResult res = run_check(catalog, inst, cfg.tol);
      ++acc.trials;
      if (!res.pass) ++acc.violations;
      acc.min_slack = std::min(acc.min_slack, res.slack);
      // report the chain that attained the worst relative slack
      const BoundChain* chain = &res.chain;
      for (const auto& c : res.extra) {
        if (c.relative_slack() < chain->relative_slack()) chain = &c;
      }
      acc.offer(res.rel_slack, trial, inst, *chain);
      return;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParameterOutOfDomain) throw;
      ++acc.rejected;
    }
  }
  ++acc.skipped;
}

CheckReport run_one(const Catalog& catalog, const CheckSpec& spec, const CampaignConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  std::vector<Accumulator> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  const auto work = [&](unsigned w) {
    try {
      for (std::uint64_t t = w; t < cfg.trials; t += workers) run_trial(catalog, spec, cfg, t, parts[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Accumulator total;
  for (auto& p : parts) total.merge(std::move(p));

  CheckReport rep;
  rep.id = spec.id;
  rep.trials = total.trials;
  rep.violations = total.violations;
  rep.rejected = total.rejected;
  rep.skipped = total.skipped;
  rep.min_slack = total.min_slack;
  rep.min_rel_slack = total.best_rel;
  rep.worst_instance = std::move(total.worst);
  rep.worst_chain = std::move(total.worst_chain);
  rep.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::string_view check_id, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(campaign_seed) ^ fnv1a(check_id)) ^ trial);
}

void validate_config(const CampaignConfig& cfg) {
  if (cfg.trials == 0) bad_config("trials must be positive");
  if (cfg.n_min < 2 || cfg.n_min > cfg.n_max) bad_config("n range must satisfy 2 <= n_min <= n_max");
  if (!valid_interval(cfg.q_range) || cfg.q_range.lo <= 0.0) bad_config("q-range must be lo..hi with 0 < lo < hi");
  if (!valid_interval(cfg.r_range) || cfg.r_range.lo <= 0.0) bad_config("r-range must be lo..hi with 0 < lo < hi");
  if (!valid_interval(cfg.x_range) || cfg.x_range.lo <= 0.0) bad_config("x-range must be lo..hi with 0 < lo < hi");
  if (!valid_interval(cfg.v_range) || cfg.v_range.lo <= 0.0 || cfg.v_range.hi >= 1.0) {
    bad_config("v-range must be lo..hi inside (0, 1)");
  }
  if (!(cfg.band >= kLimitBand) || !std::isfinite(cfg.band)) bad_config("band must be finite and >= 1e-8");
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) bad_config("tol must be finite and > 0");
  if (!(cfg.floor > 0.0) || cfg.floor * static_cast<double>(cfg.n_max) >= 1.0) {
    bad_config("floor must satisfy 0 < floor * n_max < 1");
  }
  if (cfg.max_attempts <= 0) bad_config("max_attempts must be positive");
}

CheckInstance sample_instance(const CheckSpec& spec, const CampaignConfig& cfg, std::mt19937_64& gen) {
  CheckInstance inst;
  inst.check_id = spec.id;
  const std::size_t n = cfg.n_min + static_cast<std::size_t>(gen() % (cfg.n_max - cfg.n_min + 1));
  for (int k = 0; k < spec.distributions; ++k) inst.distributions.push_back(sample(n, gen(), cfg.floor));
  if (spec.x != ArgDomain::None) inst.scalars["x"] = draw_arg(spec.x, cfg.x_range, gen);
  if (spec.q != IndexDomain::None) inst.scalars["q"] = draw_index(spec.q, cfg.q_range, cfg.band, gen, "q");
  if (spec.r != IndexDomain::None) inst.scalars["r"] = draw_index(spec.r, cfg.r_range, cfg.band, gen, "r");
  if (spec.v == MixDomain::Open) inst.scalars["v"] = uniform_in(cfg.v_range.lo, cfg.v_range.hi, gen);
  if (spec.v == MixDomain::One) inst.scalars["v"] = 1.0;
  if (spec.psi != PsiDomain::None) {
    PsiKernel k = draw_psi(cfg, gen);
    for (int i = 0; i < 1000 && !psi_accepts(spec.psi, k); ++i) k = draw_psi(cfg, gen);
    inst.psi = k;
  }
  return inst;
}

CampaignReport run_campaign(const CampaignConfig& cfg) { return run_campaign(Catalog::global(), cfg); }

CampaignReport run_campaign(const Catalog& catalog, const CampaignConfig& cfg) {
  if (cfg.checks.empty()) fail(ErrorCode::EmptyCheckSet, "no checks selected");
  validate_config(cfg);
  CampaignReport report;
  report.config = cfg;
  report.config.checks = catalog.expand(cfg.checks);
  report.pass = true;
  for (const auto& id : report.config.checks) {
    report.checks.push_back(run_one(catalog, *catalog.find(id), cfg));
    report.pass = report.pass && report.checks.back().pass();
  }
  return report;
}

}  // namespace qinfo
