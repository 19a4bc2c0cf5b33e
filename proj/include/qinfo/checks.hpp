#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinfo/bound_chain.hpp"
#include "qinfo/psi_kernel.hpp"
#include "qinfo/simplex.hpp"

namespace qinfo {

/// Allowed region for an index parameter. Sub is (0,1), Super is (1,inf),
/// Any is both; the limit band around 1 is always excluded.
enum class IndexDomain { None, Sub, Super, Any };
/// Allowed region for the scalar argument x of the one-variable chains.
enum class ArgDomain { None, Below1, Above1, Any };
/// Allowed region for the mixing weight v: Open is (0,1), One is {1}.
enum class MixDomain { None, Open, One };
/// Which psi kernels a check accepts.
enum class PsiDomain { None, Any, Admissible };

using Scalars = std::map<std::string, double, std::less<>>;

struct CheckInstance {
  std::string check_id;
  std::vector<ProbabilityDistribution> distributions;
  Scalars scalars;
  std::optional<PsiKernel> psi;
};

struct CheckSpec {
  std::string id;
  std::string description;
  int distributions = 0;
  ArgDomain x = ArgDomain::None;
  IndexDomain q = IndexDomain::None;
  IndexDomain r = IndexDomain::None;
  MixDomain v = MixDomain::None;
  PsiDomain psi = PsiDomain::None;
  /// Extra joint condition on the scalars, e.g. q and r kept apart.
  std::function<bool(const Scalars&)> guard;
  std::string guard_text;
  /// First chain is the reported one; all chains must pass.
  std::function<std::vector<BoundChain>(const CheckInstance&)> evaluate;

  /// Scalar names in canonical order (x, q, r, v).
  std::vector<std::string> scalar_names() const;
  /// Human readable parameter domains, e.g. "p, r; q in (0,1); psi admissible".
  std::string signature() const;
};

/// Minimum |q - r| accepted by checks that divide by q - r.
inline constexpr double kIndexSeparation = 1e-3;

class Catalog {
 public:
  /// Catalog holding every built-in check.
  static Catalog& global();
  Catalog() = default;

  /// Throws BadParameter on a duplicate id.
  void add(CheckSpec spec);
  const CheckSpec* find(std::string_view id) const;
  const std::vector<CheckSpec>& checks() const noexcept { return checks_; }
  /// Maps a family id such as "prop_2_2" to the first case whose domains
  /// accept the instance. Exact ids resolve to themselves. Throws UnknownCheck or
  /// ParameterOutOfDomain.
  const CheckSpec& resolve(const CheckInstance& inst) const;
  /// Checks whose id extends base with "_", in catalog order.
  std::vector<const CheckSpec*> family(std::string_view base) const;
  /// Expands "all", exact ids and family ids into distinct check ids.
  /// Throws UnknownCheck.
  std::vector<std::string> expand(const std::vector<std::string>& names) const;

 private:
  std::vector<CheckSpec> checks_;
};

bool index_accepts(IndexDomain d, double value) noexcept;
bool arg_accepts(ArgDomain d, double value) noexcept;
bool mix_accepts(MixDomain d, double value) noexcept;
bool psi_accepts(PsiDomain d, const PsiKernel& k) noexcept;
std::string_view to_string(IndexDomain d);
std::string_view to_string(ArgDomain d);
std::string_view to_string(MixDomain d);
std::string_view to_string(PsiDomain d);

/// Throws ParameterOutOfDomain unless the instance carries exactly the
/// parameters the check requires, each inside its domain.
void validate_instance(const CheckSpec& spec, const CheckInstance& inst);

struct CheckResult {
  std::string check_id;  // resolved id
  BoundChain chain;
  std::vector<BoundChain> extra;
  bool pass;
  double slack;
  double rel_slack;
};

std::vector<CheckSpec> list_checks();
CheckResult run_check(const CheckInstance& inst, double tol);
CheckResult run_check(const Catalog& catalog, const CheckInstance& inst, double tol);

}  // namespace qinfo
