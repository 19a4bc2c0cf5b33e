#include "qinfo/bound_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qinfo/error.hpp"

namespace qinfo {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::NonIncreasing: return "non-increasing";
    case Direction::NonDecreasing: return "non-decreasing";
    case Direction::Equal: return "equal";
  }
  return "?";
}

BoundChain::BoundChain(Direction direction, std::vector<std::string> labels, std::vector<double> values)
    : direction_(direction), labels_(std::move(labels)), values_(std::move(values)) {
  if (labels_.size() != values_.size()) {
    fail(ErrorCode::BadParameter, "bound chain: label and value counts differ");
  }
  if (values_.size() < 2) fail(ErrorCode::BadParameter, "bound chain: need at least two terms");
}

BoundChain::BoundChain(Direction direction, std::initializer_list<std::pair<std::string, double>> terms)
    : direction_(direction) {
  for (const auto& [label, value] : terms) {
    labels_.push_back(label);
    values_.push_back(value);
  }
  if (values_.size() < 2) fail(ErrorCode::BadParameter, "bound chain: need at least two terms");
}

bool BoundChain::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double BoundChain::scale() const noexcept {
  double s = 1.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

double BoundChain::slack() const noexcept {
  if (!all_finite()) return -std::numeric_limits<double>::infinity();
  double s = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    switch (direction_) {
      case Direction::NonDecreasing: s = std::min(s, values_[i + 1] - values_[i]); break;
      case Direction::NonIncreasing: s = std::min(s, values_[i] - values_[i + 1]); break;
      case Direction::Equal: s = std::min(s, -std::abs(values_[i + 1] - values_[0])); break;
    }
  }
  return s;
}

double BoundChain::relative_slack() const noexcept { return slack() / scale(); }

bool BoundChain::verify(double tol) const noexcept {
  return all_finite() && slack() >= -tol * scale();
}

}  // namespace qinfo
