#include "ncsimo/report.hpp"

namespace ncsimo {
namespace {

std::optional<LabeledValue> find_label(const std::vector<LabeledValue>& xs, const std::string& label) {
  for (const auto& x : xs) {
    if (x.label == label) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LabeledValue> BoundReport::component(const std::string& label) const {
  return find_label(components, label);
}

std::optional<LabeledValue> BoundReport::remainder(const std::string& label) const {
  return find_label(remainder_terms, label);
}

}  // namespace ncsimo
