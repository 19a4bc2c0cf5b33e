#include "qinfo/psi_kernel.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <system_error>
#include <vector>

#include "qinfo/error.hpp"

namespace qinfo {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

PsiKernel PsiKernel::log() { return {Kind::Log, 0.0, QIndex(1.0), QIndex(1.0)}; }

PsiKernel PsiKernel::power(double exponent) {
  if (exponent == 0.0 || !std::isfinite(exponent)) {
    fail(ErrorCode::BadParameter, "power kernel exponent must be finite and nonzero");
  }
  return {Kind::Power, exponent, QIndex(1.0), QIndex(1.0)};
}

PsiKernel PsiKernel::q_log(QIndex q) { return {Kind::QLog, 0.0, q, QIndex(1.0)}; }

PsiKernel PsiKernel::biparam_log(QIndex r, QIndex q) { return {Kind::BiLog, 0.0, q, r}; }

bool PsiKernel::increasing() const noexcept {
  return kind_ != Kind::Power || exponent_ > 0.0;
}

bool PsiKernel::concave_increasing_or_convex_decreasing() const noexcept {
  switch (kind_) {
    case Kind::Log:
    case Kind::QLog:
      return true;
    case Kind::Power:
      // e < 0: convex decreasing; 0 < e <= 1: concave increasing
      return exponent_ <= 1.0;
    case Kind::BiLog:
      // d²/dx² ln_{r,q} x has the sign of (1-q) - r x^{r-1}
      return q_.regime() != IndexRegime::Sub || r_.is_limit();
  }
  return false;
}

double PsiKernel::eval(double x) const {
  if (!(x > 0.0)) fail(ErrorCode::DomainError, "psi kernel " + describe() + " needs x > 0");
  switch (kind_) {
    case Kind::Log: return std::log(x);
    case Kind::Power: return std::pow(x, exponent_);
    case Kind::QLog: return qinfo::q_log(x, q_);
    case Kind::BiLog: return qinfo::biparam_log(x, r_, q_);
  }
  return 0.0;
}

double PsiKernel::inverse(double y) const {
  try {
    switch (kind_) {
      case Kind::Log:
        return std::exp(y);
      case Kind::Power:
        if (!(y > 0.0)) {
          fail(ErrorCode::DomainError, "power kernel inverse needs y > 0, got " + num(y));
        }
        return std::pow(y, 1.0 / exponent_);
      case Kind::QLog:
        return q_exp(y, q_);
      case Kind::BiLog:
        return biparam_exp(y, r_, q_);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UndefinedQExp) {
      fail(ErrorCode::DomainError, "value " + num(y) + " outside the range of " + describe());
    }
    throw;
  }
  return 0.0;
}

double PsiKernel::inverse_condition(double x) const {
  if (!(x > 0.0)) fail(ErrorCode::DomainError, "psi kernel " + describe() + " needs x > 0");
  switch (kind_) {
    case Kind::Log: return std::abs(std::log(x));
    case Kind::Power: return 1.0 / std::abs(exponent_);
    case Kind::QLog: return biparam_log_inverse_condition(x, QIndex(1.0), q_);
    case Kind::BiLog: return biparam_log_inverse_condition(x, r_, q_);
  }
  return 0.0;
}

std::string PsiKernel::describe() const {
  switch (kind_) {
    case Kind::Log: return "log";
    case Kind::Power: return "power(" + num(exponent_) + ")";
    case Kind::QLog: return "qlog(" + num(q_.value()) + ")";
    case Kind::BiLog: return "bilog(" + num(r_.value()) + "," + num(q_.value()) + ")";
  }
  return "?";
}

PsiKernel parse_psi(std::string_view text) {
  const auto bad = [&](const std::string& why) -> PsiKernel {
    fail(ErrorCode::ParseError, "bad psi kernel '" + std::string(text) + "': " + why);
  };
  if (text == "log") return PsiKernel::log();
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    return bad("expected log, power(e), qlog(q) or bilog(r,q)");
  }
  const std::string_view head = text.substr(0, open);
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::vector<double> args;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view tok = body.substr(0, comma);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) return bad("'" + std::string(tok) + "' is not a number");
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  try {
    if (head == "power" && args.size() == 1) return PsiKernel::power(args[0]);
    if (head == "qlog" && args.size() == 1) return PsiKernel::q_log(QIndex(args[0]));
    if (head == "bilog" && args.size() == 2) return PsiKernel::biparam_log(QIndex(args[0]), QIndex(args[1]));
  } catch (const Error& e) {
    return bad(e.what());
  }
  return bad("unknown kernel or wrong number of arguments");
}

double psi_eval(const PsiKernel& k, double x) { return k.eval(x); }

double psi_inverse(const PsiKernel& k, double y) { return k.inverse(y); }

double quasilinear_mean(const PsiKernel& k, std::span<const double> values,
                        const ProbabilityDistribution& weights) {
  if (values.size() != weights.size()) {
    fail(ErrorCode::LengthMismatch, "quasilinear_mean: " + std::to_string(values.size()) +
                                        " values vs " + std::to_string(weights.size()) + " weights");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) acc += weights[j] * k.eval(values[j]);
  return k.inverse(acc);
}

}  // namespace qinfo
