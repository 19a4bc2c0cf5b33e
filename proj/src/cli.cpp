#include "qinfo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qinfo/campaign.hpp"
#include "qinfo/deformed_math.hpp"
#include "qinfo/divergence.hpp"
#include "qinfo/entropy.hpp"
#include "qinfo/error.hpp"
#include "qinfo/json_io.hpp"

namespace qinfo {

namespace {

/// Raised for flag combinations the parser itself cannot reject.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ---- compute / divergence ----

struct MeasureFlags {
  CLI::Option* q = nullptr;
  CLI::Option* r = nullptr;
  CLI::Option* alpha = nullptr;
  CLI::Option* psi = nullptr;
  CLI::Option* mode = nullptr;
  double q_value = 0.0;
  double r_value = 0.0;
  double alpha_value = 0.0;
  std::string psi_text;
  std::string mode_text = "plain";
};

void add_measure_flags(CLI::App* sub, MeasureFlags& f) {
  f.q = sub->add_option("--q", f.q_value, "entropic index q");
  f.r = sub->add_option("--r-index", f.r_value, "second index r");
  f.psi = sub->add_option("--psi", f.psi_text, "kernel: log, power(e), qlog(q), bilog(r,q)");
  f.mode = sub->add_option("--mode", f.mode_text, "outer logarithm for quasilinear measures")
               ->check(CLI::IsMember({"plain", "tsallis", "biparam"}));
}

/// Flags a measure takes, in addition to the ones its mode adds.
std::set<std::string> measure_params(const std::map<std::string, std::set<std::string>>& table, const std::string& name,
                                     const MeasureFlags& f) {
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string known;
    for (const auto& [k, v] : table) known += (known.empty() ? "" : ", ") + k;
    throw UsageError("unknown measure '" + name + "' (known: " + known + ")");
  }
  auto params = it->second;
  if (name == "quasilinear") {
    if (f.mode_text == "tsallis") params.insert("q");
    if (f.mode_text == "biparam") params.insert({"q", "r-index"});
  }
  return params;
}

json check_params(const std::string& name, const std::set<std::string>& params, const MeasureFlags& f) {
  const std::vector<std::pair<std::string, CLI::Option*>> flags{
      {"q", f.q}, {"r-index", f.r}, {"alpha", f.alpha}, {"psi", f.psi}, {"mode", f.mode}};
  json echo = json::object();
  for (const auto& [key, opt] : flags) {
    const bool given = opt != nullptr && opt->count() > 0;
    if (given && params.count(key) == 0) throw UsageError("measure '" + name + "' does not take --" + key);
    if (!given && params.count(key) != 0 && key != "mode") throw UsageError("measure '" + name + "' requires --" + key);
  }
  if (params.count("q") != 0) {
    if (!(f.q_value > 0.0)) throw UsageError("q must be > 0");
    echo["q"] = f.q_value;
  }
  if (params.count("r-index") != 0) {
    if (!(f.r_value > 0.0)) throw UsageError("r must be > 0");
    echo["r"] = f.r_value;
  }
  if (params.count("alpha") != 0) echo["alpha"] = f.alpha_value;
  if (params.count("psi") != 0) {
    echo["psi"] = f.psi_text;
    echo["mode"] = f.mode_text;
  }
  return echo;
}

OuterLog outer_of(const MeasureFlags& f) {
  if (f.mode_text == "tsallis") return OuterLog::tsallis(QIndex(f.q_value));
  if (f.mode_text == "biparam") return OuterLog::biparam(QIndex(f.r_value), QIndex(f.q_value));
  return OuterLog::natural();
}

const std::map<std::string, std::set<std::string>> kEntropyParams{
    {"shannon", {}},
    {"tsallis", {"q"}},
    {"renyi", {"q"}},
    {"quasi-entropy", {"q"}},
    {"quasilinear", {"psi", "mode"}},
    {"wada-suyari", {"q", "r-index"}},
    {"biparam", {"q", "r-index"}},
    {"arimoto", {"q", "r-index"}},
    {"fermi-dirac", {"r-index"}},
    {"bose-einstein", {"r-index"}},
};

const std::map<std::string, std::set<std::string>> kDivergenceParams{
    {"kl", {}},
    {"tsallis", {"q"}},
    {"renyi", {"q"}},
    {"alpha", {"alpha"}},
    {"quasilinear", {"psi", "mode"}},
    {"hat", {"q", "r-index"}},
    {"quasi", {"q"}},
    {"biparam", {"q", "r-index"}},
    {"arimoto", {"q", "r-index"}},
    {"jeffreys", {}},
    {"jensen-shannon", {}},
    {"lin", {}},
};

EntropyMeasure entropy_measure_of(const std::string& name, const MeasureFlags& f) {
  using namespace entropy_measure;
  const auto q = [&] { return QIndex(f.q_value); };
  const auto r = [&] { return QIndex(f.r_value); };
  if (name == "shannon") return Shannon{};
  if (name == "tsallis") return Tsallis{q()};
  if (name == "renyi") return Renyi{q()};
  if (name == "quasi-entropy") return QuasiEntropy{q()};
  if (name == "quasilinear") return Quasilinear{parse_psi(f.psi_text), outer_of(f)};
  if (name == "wada-suyari") return WadaSuyari{r(), q()};
  if (name == "biparam") return BiparamH{r(), q()};
  if (name == "arimoto") return Arimoto{r(), q()};
  if (name == "fermi-dirac") return FermiDirac{r()};
  return BoseEinstein{r()};
}

DivergenceMeasure divergence_measure_of(const std::string& name, const MeasureFlags& f) {
  using namespace divergence_measure;
  const auto q = [&] { return QIndex(f.q_value); };
  const auto r = [&] { return QIndex(f.r_value); };
  if (name == "kl") return Kl{};
  if (name == "tsallis") return Tsallis{q()};
  if (name == "renyi") return Renyi{q()};
  if (name == "alpha") return Alpha{f.alpha_value};
  if (name == "quasilinear") return Quasilinear{parse_psi(f.psi_text), outer_of(f)};
  if (name == "hat") return Hat{q(), r()};
  if (name == "quasi") return Quasi{q()};
  if (name == "biparam") return Biparam{r(), q()};
  if (name == "arimoto") return Arimoto{r(), q()};
  if (name == "jeffreys") return Jeffreys{};
  if (name == "jensen-shannon") return JensenShannon{};
  return Lin{};
}

// ---- verify ----

struct VerifyFlags {
  std::string checks = "all";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string n = "2..16";
  std::string q_range = "0.05..5";
  std::string r_range = "0.05..5";
  std::string x_range = "0.001..1000";
  std::string v_range = "0.001..0.999999";
  double band = 1e-3;
  double tol = 1e-9;
  double floor = 1e-9;
  std::string report;
  unsigned threads = 0;
  bool timing = false;
};

CampaignConfig config_of(const VerifyFlags& f) {
  CampaignConfig cfg;
  cfg.checks = split(f.checks, ',');
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  const Interval n = parse_interval(f.n);
  if (n.lo != std::floor(n.lo) || n.hi != std::floor(n.hi) || n.lo < 0.0) {
    fail(ErrorCode::BadConfig, "--n must be an integer range lo..hi");
  }
  cfg.n_min = static_cast<std::size_t>(n.lo);
  cfg.n_max = static_cast<std::size_t>(n.hi);
  cfg.q_range = parse_interval(f.q_range);
  cfg.r_range = parse_interval(f.r_range);
  cfg.x_range = parse_interval(f.x_range);
  cfg.v_range = parse_interval(f.v_range);
  cfg.band = f.band;
  cfg.tol = f.tol;
  cfg.floor = f.floor;
  cfg.threads = f.threads;
  return cfg;
}

int cmd_verify(const VerifyFlags& f, const Catalog& catalog, std::ostream& out) {
  const CampaignReport report = run_campaign(catalog, config_of(f));
  emit(to_json(report, f.timing).dump(2) + "\n", f.report, out);
  if (!f.report.empty()) {
    for (const auto& c : report.checks) {
      out << (c.pass() ? "PASS " : "FAIL ") << c.id << " trials=" << c.trials << " violations=" << c.violations
          << " skipped=" << c.skipped << " min_rel_slack=" << num(c.min_rel_slack) << "\n";
    }
  }
  return report.pass ? kExitOk : kExitViolations;
}

// ---- bounds ----

struct BoundsFlags {
  std::string check;
  std::map<std::string, std::string> scalars;  // flag name -> text
  std::map<std::string, CLI::Option*> scalar_opts;
  int steps = 10;
  std::string p_path;
  std::string r_path;
  std::string psi;
  std::string format = "csv";
  std::string output;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

double parse_number(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--" + flag + " expects a number or lo..hi, got '" + text + "'");
}

int cmd_bounds(BoundsFlags& f, const Catalog& catalog, std::ostream& out, std::ostream& err) {
  const CheckSpec* spec = catalog.find(f.check);
  if (spec == nullptr) {
    const auto fam = catalog.family(f.check);
    if (fam.empty()) fail(ErrorCode::UnknownCheck, "unknown check '" + f.check + "'");
    spec = fam.front();
  }
  const auto names = spec->scalar_names();
  if (names.empty()) throw UsageError("check '" + f.check + "' has no scalar sweep parameter");

  // flag name -> scalar key
  const std::map<std::string, std::string> keys{{"x", "x"}, {"q", "q"}, {"r-index", "r"}, {"v", "v"}};
  std::string sweep_flag;
  CheckInstance base;
  base.check_id = f.check;
  for (const auto& [flag, opt] : f.scalar_opts) {
    if (opt->count() == 0) continue;
    const std::string& text = f.scalars[flag];
    if (text.find("..") != std::string::npos) {
      if (!sweep_flag.empty()) throw UsageError("only one of --x/--q/--r-index/--v may be a lo..hi range");
      sweep_flag = flag;
    } else {
      const double v = parse_number(flag, text);
      if (flag == "q" && !(v > 0.0)) throw UsageError("q must be > 0");
      base.scalars[keys.at(flag)] = v;
    }
  }
  if (sweep_flag.empty()) throw UsageError("one of --x/--q/--r-index/--v must be a lo..hi range");
  const std::string key = keys.at(sweep_flag);
  if (std::find(names.begin(), names.end(), key) == names.end()) {
    throw UsageError("check '" + f.check + "' has no parameter " + key + " to sweep");
  }
  if (f.steps < 1) throw UsageError("--steps must be >= 1");
  const Interval range = parse_interval(f.scalars[sweep_flag]);

  if (spec->distributions >= 1) {
    if (f.p_path.empty()) throw UsageError("check '" + f.check + "' needs --p");
    base.distributions.push_back(read_distribution(f.p_path));
  }
  if (spec->distributions == 2) {
    if (f.r_path.empty()) throw UsageError("check '" + f.check + "' needs --r");
    base.distributions.push_back(read_distribution(f.r_path));
  }
  if (!f.psi.empty()) base.psi = parse_psi(f.psi);

  std::vector<std::string> labels;
  std::vector<std::pair<double, std::vector<double>>> rows;
  std::string resolved;
  int skipped = 0;
  for (int k = 0; k < f.steps; ++k) {
    const double t = f.steps == 1 ? range.lo : range.lo + (range.hi - range.lo) * k / (f.steps - 1);
    CheckInstance inst = base;
    if (!resolved.empty()) inst.check_id = resolved;
    inst.scalars[key] = t;
    try {
      const CheckResult res = run_check(catalog, inst, 1e-9);
      if (resolved.empty()) {
        resolved = res.check_id;
        labels = res.chain.labels();
      }
      rows.emplace_back(t, res.chain.values());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParameterOutOfDomain) throw;
      ++skipped;
    }
  }
  if (rows.empty()) throw UsageError("no sweep point lies inside the domain of '" + f.check + "'");
  if (skipped > 0) err << "skipped " << skipped << " sweep point(s) outside the domain\n";

  std::string text;
  if (f.format == "json") {
    json j{{"check", resolved}, {"sweep", key}, {"labels", labels}, {"rows", json::array()}};
    for (const auto& [t, values] : rows) j["rows"].push_back(json{{key, t}, {"values", values}});
    text = j.dump(2) + "\n";
  } else {
    text = csv_field(key);
    for (const auto& l : labels) text += "," + csv_field(l);
    text += "\n";
    for (const auto& [t, values] : rows) {
      text += num(t);
      for (double v : values) text += "," + num(v);
      text += "\n";
    }
  }
  emit(text, f.output, out);
  return kExitOk;
}

// ---- list ----

int cmd_list(const Catalog& catalog, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j = json::array();
    for (const auto& c : catalog.checks()) {
      j.push_back(json{{"id", c.id}, {"parameters", c.signature()}, {"description", c.description}});
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& c : catalog.checks()) out << c.id << "\t" << c.signature() << "\t" << c.description << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const Catalog& catalog) {
  CLI::App app{"Deformed entropies, divergences and their bound chains"};
  app.name("qinfo");
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string measure;
  MeasureFlags ef;
  auto* compute = app.add_subcommand("compute", "Evaluate an entropy of one distribution");
  compute->add_option("--measure", measure, "entropy name")->required();
  compute->add_option("--input", input, "JSON file {\"weights\": [...]}")->required();
  compute->add_option("--output", output, "write here instead of stdout");
  add_measure_flags(compute, ef);

  std::string p_path;
  std::string r_path;
  MeasureFlags df;
  auto* divergence = app.add_subcommand("divergence", "Evaluate a divergence between two distributions");
  divergence->add_option("--measure", measure, "divergence name")->required();
  divergence->add_option("--p", p_path, "first distribution file")->required();
  divergence->add_option("--r", r_path, "second distribution file")->required();
  divergence->add_option("--output", output, "write here instead of stdout");
  add_measure_flags(divergence, df);
  df.alpha = divergence->add_option("--alpha", df.alpha_value, "alpha-divergence parameter");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Run a randomized campaign over catalog checks");
  verify->add_option("--checks", vf.checks, "comma separated ids, family ids, or all")->capture_default_str();
  verify->add_option("--trials", vf.trials, "trials per check")->capture_default_str();
  verify->add_option("--seed", vf.seed, "campaign seed")->capture_default_str();
  verify->add_option("--n", vf.n, "distribution length range lo..hi")->capture_default_str();
  verify->add_option("--q-range", vf.q_range, "q range lo..hi")->capture_default_str();
  verify->add_option("--r-range", vf.r_range, "r range lo..hi")->capture_default_str();
  verify->add_option("--x-range", vf.x_range, "x range lo..hi (log-uniform)")->capture_default_str();
  verify->add_option("--v-range", vf.v_range, "mixing weight range lo..hi")->capture_default_str();
  verify->add_option("--band", vf.band, "half-width of the excluded band around 1")->capture_default_str();
  verify->add_option("--tol", vf.tol, "relative slack tolerance")->capture_default_str();
  verify->add_option("--floor", vf.floor, "minimum sampled weight")->capture_default_str();
  verify->add_option("--report", vf.report, "write the JSON report here instead of stdout");
  verify->add_option("--threads", vf.threads, "worker threads, 0 for all cores")->capture_default_str();
  verify->add_flag("--timing", vf.timing, "include per-check runtimes in the report");

  BoundsFlags bf;
  auto* bounds = app.add_subcommand("bounds", "Tabulate a chain over a sweep of one scalar");
  bounds->add_option("--check", bf.check, "check id")->required();
  for (const char* flag : {"x", "q", "r-index", "v"}) {
    bf.scalar_opts[flag] = bounds->add_option(std::string("--") + flag, bf.scalars[flag], "value or lo..hi sweep");
  }
  bounds->add_option("--steps", bf.steps, "number of sweep points")->capture_default_str();
  bounds->add_option("--p", bf.p_path, "first distribution file");
  bounds->add_option("--r", bf.r_path, "second distribution file");
  bounds->add_option("--psi", bf.psi, "kernel for quasilinear checks");
  bounds->add_option("--format", bf.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  bounds->add_option("--output", bf.output, "write here instead of stdout");

  double ox = 0.0;
  double oq = 0.0;
  int nodes = 64;
  auto* oracle = app.add_subcommand("oracle", "Compare ln_q x with its integral representation");
  oracle->add_option("--x", ox, "argument x > 0, x != 1")->required();
  oracle->add_option("--q", oq, "index q > 0")->required();
  oracle->add_option("--nodes", nodes, "Gauss-Legendre nodes")->capture_default_str();

  std::string list_format = "text";
  auto* list = app.add_subcommand("list", "List catalog checks");
  list->add_option("--format", list_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const json params = check_params(measure, measure_params(kEntropyParams, measure, ef), ef);
      const auto p = read_distribution(input);
      const double value = evaluate(entropy_measure_of(measure, ef), p);
      emit(json{{"measure", measure}, {"params", params}, {"value", value}}.dump(2) + "\n", output, out);
      return kExitOk;
    }
    if (divergence->parsed()) {
      const json params = check_params(measure, measure_params(kDivergenceParams, measure, df), df);
      const DivergencePair pair(read_distribution(p_path), read_distribution(r_path));
      const double value = evaluate(divergence_measure_of(measure, df), pair);
      emit(json{{"measure", measure}, {"params", params}, {"value", value}}.dump(2) + "\n", output, out);
      return kExitOk;
    }
    if (verify->parsed()) return cmd_verify(vf, catalog, out);
    if (bounds->parsed()) return cmd_bounds(bf, catalog, out, err);
    if (oracle->parsed()) {
      if (!(oq > 0.0)) throw UsageError("q must be > 0");
      const QIndex q(oq);
      const double closed = q_log(ox, q);
      const double quad = qlog_quadrature_oracle(ox, q, nodes);
      out << json{{"x", ox}, {"q", oq}, {"nodes", nodes}, {"closed_form", closed}, {"quadrature", quad},
                  {"abs_diff", std::abs(closed - quad)}}
                 .dump(2)
          << "\n";
      return kExitOk;
    }
    if (list->parsed()) return cmd_list(catalog, list_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qinfo
