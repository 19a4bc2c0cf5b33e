#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qinfo {

enum class Direction { NonIncreasing, NonDecreasing, Equal };

std::string_view to_string(Direction d);

/// Ordered, labeled terms of an inequality chain (or of an identity when the
/// direction is Equal).
class BoundChain {
 public:
  BoundChain(Direction direction, std::vector<std::string> labels, std::vector<double> values);
  BoundChain(Direction direction, std::initializer_list<std::pair<std::string, double>> terms);

  Direction direction() const noexcept { return direction_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  bool all_finite() const noexcept;
  /// max(1, max |value|).
  double scale() const noexcept;
  /// Minimum signed gap between consecutive terms in the claimed direction.
  /// For Equal chains, minus the largest deviation from the first term.
  /// -inf when some term is not finite.
  double slack() const noexcept;
  /// slack() / scale().
  double relative_slack() const noexcept;
  /// All terms finite and slack() >= -tol * scale().
  bool verify(double tol) const noexcept;

 private:
  Direction direction_;
  std::vector<std::string> labels_;
  std::vector<double> values_;
};

}  // namespace qinfo
