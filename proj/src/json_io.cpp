#include "qinfo/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qinfo/error.hpp"

namespace qinfo {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorCode::ParseError, what); }

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) parse_error("'" + s + "' is not a number");
  return v;
}

}  // namespace

json to_json(const ProbabilityDistribution& p) {
  return json{{"weights", std::vector<double>(p.weights().begin(), p.weights().end())}};
}

ProbabilityDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array()) {
    parse_error("distribution must be an object {\"weights\": [...]}");
  }
  std::vector<double> w;
  for (const auto& x : j["weights"]) {
    if (!x.is_number()) parse_error("weights must be numbers");
    w.push_back(x.get<double>());
  }
  return ProbabilityDistribution::validate(std::move(w));
}

ProbabilityDistribution read_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return distribution_from_json(json::parse(in));
  } catch (const json::exception& e) {
    parse_error("'" + path + "': " + e.what());
  }
}

json to_json(const BoundChain& chain) {
  return json{{"direction", std::string(to_string(chain.direction()))},
              {"labels", chain.labels()},
              {"values", chain.values()}};
}

json to_json(const CheckInstance& inst) {
  json j{{"check_id", inst.check_id}};
  json dists = json::array();
  for (const auto& d : inst.distributions) dists.push_back(to_json(d));
  j["distributions"] = std::move(dists);
  json scalars = json::object();
  for (const auto& [k, v] : inst.scalars) scalars[k] = v;
  j["scalars"] = std::move(scalars);
  if (inst.psi) j["psi"] = inst.psi->describe();
  return j;
}

CheckInstance instance_from_json(const json& j) {
  try {
    CheckInstance inst;
    inst.check_id = j.at("check_id").get<std::string>();
    if (j.contains("distributions")) {
      for (const auto& d : j["distributions"]) inst.distributions.push_back(distribution_from_json(d));
    }
    if (j.contains("scalars")) {
      for (const auto& [k, v] : j["scalars"].items()) inst.scalars[k] = v.get<double>();
    }
    if (j.contains("psi") && !j["psi"].is_null()) inst.psi = parse_psi(j["psi"].get<std::string>());
    return inst;
  } catch (const json::exception& e) {
    parse_error(std::string("bad check instance: ") + e.what());
  }
}

json to_json(const CampaignConfig& cfg) {
  const auto interval = [](const Interval& i) { return json::array({i.lo, i.hi}); };
  return json{{"checks", cfg.checks},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"n_range", json::array({cfg.n_min, cfg.n_max})},
              {"q_range", interval(cfg.q_range)},
              {"r_range", interval(cfg.r_range)},
              {"band", cfg.band},
              {"x_range", interval(cfg.x_range)},
              {"v_range", interval(cfg.v_range)},
              {"tol", cfg.tol},
              {"floor", cfg.floor},
              {"max_attempts", cfg.max_attempts}};
}

json to_json(const CampaignReport& report, bool timing) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j{{"id", c.id},
           {"trials", c.trials},
           {"violations", c.violations},
           {"rejected", c.rejected},
           {"skipped", c.skipped},
           {"min_slack", c.min_slack},
           {"min_rel_slack", c.min_rel_slack},
           {"pass", c.pass()}};
    j["worst_instance"] = c.worst_instance ? to_json(*c.worst_instance) : json(nullptr);
    j["worst_chain"] = c.worst_chain ? to_json(*c.worst_chain) : json(nullptr);
    if (timing) j["runtime_seconds"] = c.runtime_seconds;
    checks.push_back(std::move(j));
  }
  return json{{"config", to_json(report.config)},
              {"checks", std::move(checks)},
              {"pass", report.pass},
              {"seed", report.config.seed}};
}

Interval parse_interval(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) parse_error("expected lo..hi, got '" + text + "'");
  const Interval i{parse_double(text.substr(0, sep)), parse_double(text.substr(sep + 2))};
  if (!(i.lo <= i.hi)) parse_error("range '" + text + "' has lo > hi");
  return i;
}

}  // namespace qinfo
