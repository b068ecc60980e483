#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ncsimo {

struct LabeledValue {
  std::string label;
  double value = 0.0;
  double std_error = 0.0;
};

struct FittedAux {
  std::string group;
  std::size_t count = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

// Monte-Carlo bound with its breakdown. `value` and `std_error` are in bits per
// channel use unless the producing function says otherwise; components are in
// bits per block.
struct BoundReport {
  double value = 0.0;
  double std_error = 0.0;
  std::vector<LabeledValue> remainder_terms;
  std::vector<LabeledValue> components;
  std::vector<FittedAux> fits;
  std::vector<std::string> warnings;

  std::optional<LabeledValue> component(const std::string& label) const;
  std::optional<LabeledValue> remainder(const std::string& label) const;
};

}  // namespace ncsimo
