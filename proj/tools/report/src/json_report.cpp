#include "json_report.hpp"

#include <cmath>

namespace ncsimo::json_report {

ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

namespace {

ordered_json optional_number(const std::optional<double>& x) {
  return x ? number(*x) : ordered_json(nullptr);
}

ordered_json labeled(const std::vector<LabeledValue>& xs) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : xs) {
    arr.push_back({{"label", x.label}, {"value", number(x.value)}, {"std_error", number(x.std_error)}});
  }
  return arr;
}

}  // namespace

ordered_json to_json(const BoundReport& r) {
  ordered_json fits = ordered_json::array();
  for (const auto& f : r.fits) {
    fits.push_back({{"group", f.group}, {"count", f.count}, {"alpha", number(f.alpha)},
                    {"beta", number(f.beta)}});
  }
  return {{"value", number(r.value)},
          {"std_error", number(r.std_error)},
          {"components", labeled(r.components)},
          {"remainder_terms", labeled(r.remainder_terms)},
          {"fits", fits},
          {"warnings", r.warnings}};
}

ordered_json to_json(const DofRegion& r) {
  ordered_json hs = ordered_json::array();
  for (const auto& h : r.halfspaces) {
    hs.push_back({{"a1", to_string(h.a1)}, {"a2", to_string(h.a2)}, {"b", to_string(h.b)}});
  }
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.vertices) vs.push_back({to_string(v.d1), to_string(v.d2)});
  return {{"halfspaces", hs}, {"vertices", vs}};
}

ordered_json to_json(const suite::Check& c) {
  return {{"name", c.name},       {"passed", c.passed},
          {"asserted", c.asserted}, {"value", optional_number(c.value)},
          {"limit", optional_number(c.limit)}, {"slack", optional_number(c.slack)},
          {"margin", optional_number(c.margin)}, {"detail", c.detail}};
}

ordered_json to_json(const suite::SuiteResult& s) {
  ordered_json checks = ordered_json::array();
  std::size_t diagnostics = 0;
  for (const auto& c : s.checks) {
    checks.push_back(to_json(c));
    if (!c.asserted) ++diagnostics;
  }
  return {{"suite", s.suite},
          {"passed", s.passed()},
          {"total", s.checks.size()},
          {"failures", s.failures()},
          {"diagnostics", diagnostics},
          {"checks", checks}};
}

}  // namespace ncsimo::json_report
