#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qinfo/campaign.hpp"
#include "qinfo/cli.hpp"
#include "qinfo/json_io.hpp"
#include "test_support.hpp"

using namespace qinfo;
using qinfo::testing::code_of;
using qinfo::testing::dist;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const Catalog& catalog = Catalog::global()) {
  args.insert(args.begin(), "qinfo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, catalog);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "qinfo_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("trial seeds are stable and distinct") {
  CHECK(trial_seed(42, "thm_5_1", 0) == trial_seed(42, "thm_5_1", 0));
  CHECK(trial_seed(42, "thm_5_1", 0) != trial_seed(42, "thm_5_1", 1));
  CHECK(trial_seed(42, "thm_5_1", 0) != trial_seed(42, "thm_5_2", 0));
  CHECK(trial_seed(42, "thm_5_1", 0) != trial_seed(43, "thm_5_1", 0));
}

TEST_CASE("campaign is independent of thread count") {
  CampaignConfig cfg;
  cfg.checks = {"prop_2_2", "thm_2_3", "id_eq17", "lemma_3_3"};
  cfg.trials = 300;
  cfg.seed = 9;
  cfg.threads = 1;
  const auto a = to_json(run_campaign(cfg)).dump();
  cfg.threads = 4;
  const auto b = to_json(run_campaign(cfg)).dump();
  CHECK(a == b);
  cfg.seed = 10;
  CHECK(to_json(run_campaign(cfg)).dump() != a);
}

TEST_CASE("campaign report contents") {
  CampaignConfig cfg;
  cfg.checks = {"lemma_2_1_I_ii"};
  cfg.trials = 200;
  cfg.seed = 7;
  const auto rep = run_campaign(cfg);
  REQUIRE(rep.checks.size() == 1);
  const auto& c = rep.checks[0];
  CHECK(rep.pass);
  CHECK(c.trials == 200);
  CHECK(c.violations == 0);
  CHECK(c.min_rel_slack >= 0.0);
  REQUIRE(c.worst_instance.has_value());
  // the worst instance reproduces exactly, also after a JSON round trip
  const auto back = instance_from_json(json::parse(to_json(*c.worst_instance).dump()));
  const auto res = run_check(back, cfg.tol);
  CHECK(res.rel_slack == c.min_rel_slack);
  const auto j = to_json(rep);
  CHECK(j.contains("config"));
  CHECK(j["seed"] == 7);
  CHECK_FALSE(j["checks"][0].contains("runtime_seconds"));
  CHECK(to_json(rep, true)["checks"][0].contains("runtime_seconds"));
}

TEST_CASE("campaign config errors") {
  CampaignConfig cfg;
  CHECK(code_of([&] { run_campaign(cfg); }) == ErrorCode::EmptyCheckSet);
  cfg.checks = {"nosuch"};
  CHECK(code_of([&] { run_campaign(cfg); }) == ErrorCode::UnknownCheck);
  cfg.checks = {"thm_5_1"};
  auto bad = cfg;
  bad.trials = 0;
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
  bad = cfg;
  bad.n_min = 1;
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
  bad = cfg;
  bad.band = 1e-12;
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
  bad = cfg;
  bad.tol = 0.0;
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
  bad = cfg;
  bad.v_range = {0.5, 1.0};
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
  bad = cfg;
  bad.floor = 0.1;
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
  bad.floor = 1e-9;
  bad.checks = {"prop_2_2_super"};
  bad.q_range = {0.1, 0.9};
  CHECK(code_of([&] { run_campaign(bad); }) == ErrorCode::BadConfig);
}

TEST_CASE("family expansion") {
  const auto ids = Catalog::global().expand({"lemma_2_1", "thm_5_1", "lemma_2_1_I_i"});
  CHECK(ids.front() == "lemma_2_1_I_i");
  CHECK(std::count(ids.begin(), ids.end(), "lemma_2_1_I_i") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "thm_5_1") == 1);
  CHECK(Catalog::global().expand({"all"}).size() == list_checks().size());
}

TEST_CASE("sampled instances respect the check domains") {
  CampaignConfig cfg;
  std::mt19937_64 gen(1);
  for (const auto& spec : list_checks()) {
    for (int k = 0; k < 20; ++k) {
      const auto inst = sample_instance(spec, cfg, gen);
      CHECK(inst.distributions.size() == static_cast<std::size_t>(spec.distributions));
      if (spec.q != IndexDomain::None) CHECK(std::abs(inst.scalars.at("q") - 1.0) >= cfg.band);
      if (spec.psi == PsiDomain::Admissible) CHECK(inst.psi->concave_increasing_or_convex_decreasing());
    }
  }
}

TEST_CASE("psi parsing round trips") {
  for (const auto& k : {PsiKernel::log(), PsiKernel::power(-0.3), PsiKernel::q_log(QIndex(0.1 + 0.2)),
                        PsiKernel::biparam_log(QIndex(2.5), QIndex(1.0 / 3.0))}) {
    CHECK(parse_psi(k.describe()) == k);
  }
  for (const char* bad : {"", "pow(2)", "power()", "power(1,2)", "qlog(-1)", "power(0)", "bilog(1)", "log(2)", "qlog(2"}) {
    CHECK_MESSAGE(code_of([&] { parse_psi(bad); }) == ErrorCode::ParseError, bad);
  }
}

TEST_CASE("json io") {
  CHECK(parse_interval("0.05..5") == Interval{0.05, 5.0});
  CHECK(parse_interval("1e-3..1e3") == Interval{1e-3, 1e3});
  CHECK(code_of([] { parse_interval("1..x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_interval("3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { distribution_from_json(json::parse(R"({"w":[1]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { distribution_from_json(json::parse(R"({"weights":[0.5,0.6]})")); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { read_distribution("does/not/exist.json"); }) == ErrorCode::ParseError);
  const auto p = dist({0.1, 0.2, 0.7});
  CHECK(distribution_from_json(to_json(p)) == p);
}

TEST_CASE("cli compute and divergence") {
  const auto u2 = write_temp("u2.json", R"({"weights":[0.5,0.5]})");
  const auto a = write_temp("a.json", R"({"weights":[0.9,0.1]})");
  const auto c3 = write_temp("c3.json", R"({"weights":[0.2,0.3,0.5]})");
  const auto broken = write_temp("broken.json", R"({"weights":[0.5,)");

  auto r = cli({"compute", "--measure", "shannon", "--input", u2});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == std::log(2.0));
  r = cli({"compute", "--measure", "tsallis", "--q", "2", "--input", u2});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == 0.5);
  CHECK(json::parse(r.out)["params"]["q"].get<double>() == 2.0);
  r = cli({"compute", "--measure", "tsallis", "--q", "-1", "--input", u2});
  CHECK(r.code == 2);
  CHECK(r.err.find("q must be > 0") != std::string::npos);
  CHECK(cli({"compute", "--measure", "shannon", "--q", "2", "--input", u2}).code == 2);
  CHECK(cli({"compute", "--measure", "renyi", "--input", u2}).code == 2);
  CHECK(cli({"compute", "--measure", "nosuch", "--input", u2}).code == 2);
  CHECK(cli({"compute", "--measure", "shannon", "--input", broken}).code == 2);
  CHECK(cli({"compute", "--measure", "shannon", "--input", u2, "--bogus"}).code == 2);
  CHECK(cli({"compute", "--measure", "quasilinear", "--psi", "nope", "--input", u2}).code == 2);
  r = cli({"compute", "--measure", "quasilinear", "--psi", "qlog(2)", "--mode", "tsallis", "--q", "2", "--input", u2});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));

  r = cli({"divergence", "--measure", "tsallis", "--q", "2", "--p", a, "--r", u2});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == doctest::Approx(0.64).epsilon(1e-14));
  r = cli({"divergence", "--measure", "kl", "--p", a, "--r", a});
  CHECK(json::parse(r.out)["value"].get<double>() == 0.0);
  CHECK(cli({"divergence", "--measure", "kl", "--p", a, "--r", c3}).code == 2);
  CHECK(cli({"divergence", "--measure", "alpha", "--alpha", "1", "--p", a, "--r", u2}).code == 2);
  CHECK(cli({"divergence", "--measure", "alpha", "--alpha", "0", "--p", a, "--r", u2}).code == 0);
}

TEST_CASE("cli verify") {
  auto r = cli({"verify", "--checks", "lemma_2_1_I_ii", "--trials", "100", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == cli({"verify", "--checks", "lemma_2_1_I_ii", "--trials", "100", "--seed", "7"}).out);
  CHECK(json::parse(r.out)["pass"] == true);
  CHECK(cli({"verify", "--checks", "nosuch"}).code == 2);
  CHECK(cli({"verify", "--checks", "thm_5_1", "--q-range", "oops"}).code == 2);
  CHECK(cli({"verify", "--checks", "thm_5_1", "--n", "1..4"}).code == 2);
  CHECK(cli({"verify", "--checks", "", "--trials", "3"}).code == 2);

  Catalog with_broken = Catalog::global();
  CheckSpec broken;
  broken.id = "always_fails";
  broken.description = "1 <= 0";
  broken.evaluate = [](const CheckInstance&) {
    return std::vector<BoundChain>{BoundChain(Direction::NonDecreasing, {{"one", 1.0}, {"zero", 0.0}})};
  };
  with_broken.add(broken);
  r = cli({"verify", "--checks", "always_fails", "--trials", "5"}, with_broken);
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["checks"][0]["violations"] == 5);
}

TEST_CASE("cli bounds, oracle and list") {
  const auto a = write_temp("a.json", R"({"weights":[0.9,0.1]})");
  const auto b = write_temp("b.json", R"({"weights":[0.5,0.5]})");
  auto r = cli({"bounds", "--check", "lemma_2_1_II_i", "--q", "0.5", "--x", "1..10", "--steps", "10"});
  CHECK(r.code == 0);
  std::vector<std::string> lines;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 10);  // header + 9 rows, x = 1 skipped
  CHECK(lines[0] == "x,log x,x^((1-q)/2) log x,ln_q x,(x^(1-q)+1)/2 log x,x^(1-q) log x");
  CHECK(std::count(lines[1].begin(), lines[1].end(), ',') == 5);

  r = cli({"bounds", "--check", "thm_4_1_sub", "--v", "0.1..0.9", "--steps", "9", "--q", "0.5", "--p", a, "--r", b,
           "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["rows"].size() == 9);
  CHECK(j["labels"].size() == 3);

  CHECK(cli({"bounds", "--check", "thm_5_1", "--x", "1..2", "--p", a}).code == 2);
  CHECK(cli({"bounds", "--check", "lemma_2_1_II_i", "--q", "0.5", "--x", "2"}).code == 2);
  CHECK(cli({"bounds", "--check", "lemma_2_1_II_i", "--q", "0.1..0.5", "--x", "1..2"}).code == 2);
  CHECK(cli({"bounds", "--check", "nosuch", "--x", "1..2"}).code == 2);

  r = cli({"oracle", "--x", "2", "--q", "2", "--nodes", "64"});
  CHECK(r.code == 0);
  const auto o64 = json::parse(r.out);
  CHECK(o64["abs_diff"].get<double>() <= 1e-12);
  const auto o2 = json::parse(cli({"oracle", "--x", "2", "--q", "2", "--nodes", "2"}).out);
  CHECK(o2["abs_diff"].get<double>() >= o64["abs_diff"].get<double>());
  CHECK(cli({"oracle", "--x", "1", "--q", "2"}).code == 2);
  CHECK(cli({"oracle", "--x", "2", "--q", "0"}).code == 2);

  r = cli({"list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lemma_2_1_I_i\t") != std::string::npos);
  CHECK(json::parse(cli({"list", "--format", "json"}).out).size() == list_checks().size());
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
