#include "ncsimo_report/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "json_report.hpp"
#include "ncsimo/achievability.hpp"
#include "ncsimo/converse.hpp"
#include "ncsimo/error.hpp"
#include "ncsimo/version.hpp"

namespace ncsimo::cli {

namespace {

using json_report::number;
using json_report::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kMacSalt = 0x6d616331;

struct RegionArgs {
  int T = 0;
  int N = 0;
  std::string format = "json";
};

struct BoundsArgs {
  int T = 0;
  int N = 0;
  std::vector<double> p_db;
  std::size_t trials = 100000;
  std::uint64_t seed = 7;
  int workers = 1;
  std::string regime;
  std::string fading = "gaussian";
};

struct VerifyArgs {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 7;
  int workers = 1;
};

struct PlotArgs {
  std::string kind = "region";
  std::string which = "outer";
  std::string out;
  BoundsArgs curves;
};

std::string fmt17(double x) {
  if (!std::isfinite(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json provenance(const std::string& command, ordered_json config, std::uint64_t seed,
                        int workers, const std::string& config_file) {
  return {{"tool", "ncsimo"},
          {"version", kVersion},
          {"command", command},
          {"config", std::move(config)},
          {"seed", seed},
          {"workers", workers},
          {"config_file", config_file.empty() ? ordered_json(nullptr) : ordered_json(config_file)}};
}

std::string csv_provenance(const ordered_json& prov) { return "# " + prov.dump() + "\n"; }

ordered_json bounds_config(const BoundsArgs& a) {
  return {{"T", a.T},           {"N", a.N},           {"P-dB", a.p_db},
          {"trials", a.trials}, {"seed", a.seed},     {"workers", a.workers},
          {"regime", a.regime.empty() ? ordered_json(nullptr) : ordered_json(a.regime)},
          {"fading", a.fading}};
}

// ------------------------------------------------------------------ region

int cmd_region(const RegionArgs& a, const std::string& config_file, std::ostream& out) {
  const DofRegion outer = outer_region(a.T, a.N);
  const DofRegion inner = inner_region(a.T, a.N);
  const ordered_json prov =
      provenance("region", {{"T", a.T}, {"N", a.N}, {"format", a.format}}, 0, 1, config_file);
  if (a.format == "csv") {
    out << csv_provenance(prov) << polygon_csv(outer);
    return kExitOk;
  }
  const ordered_json doc = {{"provenance", prov},
                            {"T", a.T},
                            {"N", a.N},
                            {"outer", json_report::to_json(outer)},
                            {"inner", json_report::to_json(inner)},
                            {"equal", regions_equal(inner, outer)},
                            {"polygon_csv", polygon_csv(outer)}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct PointResult {
  double p_db = 0.0;
  std::optional<BoundReport> single_user;
  std::optional<BoundReport> mac_user1;
  std::optional<BoundReport> mac_user2;
  std::optional<RateEstimate> su_training;
  std::optional<RatePair> mac_rates;
  std::string mac_scheme;
  std::vector<std::string> warnings;
};

ChannelConfig channel_config(const BoundsArgs& a, double p_db) {
  ChannelConfig cfg;
  cfg.T = a.T;
  cfg.N = a.N;
  cfg.P = db_to_linear(p_db);
  cfg.fading = fading_kind_from_string(a.fading);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  return cfg;
}

std::optional<MacRegime> resolve_regime(const BoundsArgs& a) {
  if (!a.regime.empty()) {
    const MacRegime r = mac_regime_from_string(a.regime);
    try {
      check_regime(a.T, a.N, r);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return r;
  }
  if (a.T < 2) return std::nullopt;
  return natural_regime(a.T, a.N);
}

void validate_bounds(const BoundsArgs& a) {
  if (a.p_db.empty()) throw UsageError("--P-dB needs at least one value");
  for (double db : a.p_db) {
    if (!std::isfinite(db)) throw UsageError("--P-dB values must be finite");
    try {
      validate(channel_config(a, db));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
}

// Runs `f`, turning LowSnrRegime and other model-domain errors into warnings.
template <class F>
void guarded(const std::string& what, std::vector<std::string>& warnings, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidParam) throw;
    warnings.push_back(what + ": " + to_string(e.kind()) + ": " + e.what());
  }
}

std::vector<PointResult> compute_points(const BoundsArgs& a, std::optional<MacRegime> regime) {
  std::vector<PointResult> points;
  for (double db : a.p_db) {
    const ChannelConfig cfg = channel_config(a, db);
    PointResult p;
    p.p_db = db;
    guarded("single_user", p.warnings, [&] {
      p.single_user = duality_bound_single_user(isotropic_peak_input(cfg.P, cfg.P), cfg);
    });
    if (regime) {
      const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
      const SampleSet s = generate_samples(cfg, u, &u, kMacSalt);
      guarded("mac_user1", p.warnings, [&] { p.mac_user1 = duality_bound_mac_user1(s, cfg, *regime); });
      guarded("mac_user2", p.warnings,
              [&] { p.mac_user2 = duality_bound_mac_user1(swap_users(s), cfg, *regime); });
    } else {
      p.warnings.push_back("mac: no genie regime for T < 2");
    }
    guarded("single_user_training", p.warnings, [&] { p.su_training = single_user_training_rate(cfg); });
    guarded("mac_training", p.warnings, [&] {
      if (cfg.T >= 3) {
        p.mac_rates = mac_training_rates(cfg);
        p.mac_scheme = "training";
      } else {
        p.mac_rates = tdma_rates(cfg, 0.5);
        p.mac_scheme = "tdma";
      }
    });
    for (const auto* r : {&p.single_user, &p.mac_user1, &p.mac_user2}) {
      if (*r) p.warnings.insert(p.warnings.end(), (*r)->warnings.begin(), (*r)->warnings.end());
    }
    points.push_back(std::move(p));
  }
  return points;
}

ordered_json optional_report(const std::optional<BoundReport>& r) {
  return r ? json_report::to_json(*r) : ordered_json(nullptr);
}

ordered_json rate_json(const RateEstimate& r) {
  return {{"value", number(r.value)}, {"std_error", number(r.std_error)}};
}

ordered_json slopes(const std::vector<PointResult>& pts,
                    const std::function<std::optional<double>(const PointResult&)>& get) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto y0 = get(pts[i]);
    const auto y1 = get(pts[i + 1]);
    const double dx = (pts[i + 1].p_db - pts[i].p_db) / 10.0 * std::log2(10.0);
    ordered_json s = {{"from_dB", pts[i].p_db}, {"to_dB", pts[i + 1].p_db}};
    s["slope"] = (y0 && y1 && dx != 0.0) ? number((*y1 - *y0) / dx) : ordered_json(nullptr);
    arr.push_back(s);
  }
  return arr;
}

std::optional<double> bound_value(const std::optional<BoundReport>& r) {
  return r ? std::optional<double>(r->value) : std::nullopt;
}

int cmd_bounds(const BoundsArgs& a, const std::string& config_file, std::ostream& out) {
  validate_bounds(a);
  const std::optional<MacRegime> regime = resolve_regime(a);
  const std::vector<PointResult> pts = compute_points(a, regime);

  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) {
    ordered_json ach = {{"single_user_training",
                         p.su_training ? rate_json(*p.su_training) : ordered_json(nullptr)}};
    if (p.mac_rates) {
      ach["mac"] = {{"scheme", p.mac_scheme},
                    {"user1", rate_json(p.mac_rates->r1)},
                    {"user2", rate_json(p.mac_rates->r2)}};
    } else {
      ach["mac"] = nullptr;
    }
    arr.push_back({{"P_dB", p.p_db},
                   {"P", db_to_linear(p.p_db)},
                   {"single_user", optional_report(p.single_user)},
                   {"mac_user1", optional_report(p.mac_user1)},
                   {"mac_user2", optional_report(p.mac_user2)},
                   {"achievable", ach},
                   {"warnings", p.warnings}});
  }
  ordered_json sl;
  sl["single_user_bound"] = slopes(pts, [](const PointResult& p) { return bound_value(p.single_user); });
  sl["mac_user1_bound"] = slopes(pts, [](const PointResult& p) { return bound_value(p.mac_user1); });
  sl["mac_user2_bound"] = slopes(pts, [](const PointResult& p) { return bound_value(p.mac_user2); });
  sl["single_user_training"] = slopes(pts, [](const PointResult& p) {
    return p.su_training ? std::optional<double>(p.su_training->value) : std::nullopt;
  });
  sl["mac_user1_achievable"] = slopes(pts, [](const PointResult& p) {
    return p.mac_rates ? std::optional<double>(p.mac_rates->r1.value) : std::nullopt;
  });
  sl["mac_user2_achievable"] = slopes(pts, [](const PointResult& p) {
    return p.mac_rates ? std::optional<double>(p.mac_rates->r2.value) : std::nullopt;
  });

  const ordered_json doc = {
      {"provenance", provenance("bounds", bounds_config(a), a.seed, a.workers, config_file)},
      {"regime", regime ? ordered_json(to_string(*regime)) : ordered_json(nullptr)},
      {"input", "isotropic, ||x||^2 = P for every user"},
      {"points", arr},
      {"slopes", sl}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const VerifyArgs& a, const std::string& config_file, std::ostream& out) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite::suite_names();
  } else {
    names.push_back(a.suite);
  }
  suite::SuiteOptions opts;
  opts.seed = a.seed;
  opts.workers = a.workers;
  opts.trials = a.trials;
  ordered_json suites = ordered_json::array();
  bool ok = true;
  for (const auto& n : names) {
    const suite::SuiteResult r = suite::run_suite(n, opts);
    ok = ok && r.passed();
    suites.push_back(json_report::to_json(r));
  }
  const ordered_json config = {
      {"suite", a.suite}, {"trials", a.trials}, {"seed", a.seed}, {"workers", a.workers}};
  const ordered_json doc = {{"provenance", provenance("verify", config, a.seed, a.workers, config_file)},
                            {"passed", ok},
                            {"suites", suites}};
  out << doc.dump(2) << "\n";
  return ok ? kExitOk : kExitFailure;
}

// ------------------------------------------------------------- export-plot

std::string curves_csv(const BoundsArgs& a, const ordered_json& prov) {
  validate_bounds(a);
  const std::optional<MacRegime> regime = resolve_regime(a);
  const std::vector<PointResult> pts = compute_points(a, regime);
  std::ostringstream s;
  s << csv_provenance(prov);
  s << "P_dB,single_user_bound,single_user_bound_se,mac_user1_bound,mac_user1_bound_se,"
       "mac_user2_bound,mac_user2_bound_se,single_user_training,mac_user1_achievable,"
       "mac_user2_achievable\n";
  auto bound = [](const std::optional<BoundReport>& r) {
    return r ? fmt17(r->value) + "," + fmt17(r->std_error) : std::string(",");
  };
  for (const auto& p : pts) {
    s << fmt17(p.p_db) << ',' << bound(p.single_user) << ',' << bound(p.mac_user1) << ','
      << bound(p.mac_user2) << ',' << (p.su_training ? fmt17(p.su_training->value) : "") << ','
      << (p.mac_rates ? fmt17(p.mac_rates->r1.value) : "") << ','
      << (p.mac_rates ? fmt17(p.mac_rates->r2.value) : "") << "\n";
  }
  return s.str();
}

int cmd_export(const PlotArgs& a, const std::string& config_file, std::ostream& out) {
  std::string text;
  if (a.kind == "region") {
    const ordered_json prov = provenance(
        "export-plot", {{"kind", a.kind}, {"which", a.which}, {"T", a.curves.T}, {"N", a.curves.N}},
        0, 1, config_file);
    const DofRegion r = a.which == "inner" ? inner_region(a.curves.T, a.curves.N)
                                           : outer_region(a.curves.T, a.curves.N);
    text = csv_provenance(prov) + polygon_csv(r);
  } else {
    ordered_json cfg = bounds_config(a.curves);
    cfg["kind"] = a.kind;
    text = curves_csv(a.curves, provenance("export-plot", cfg, a.curves.seed, a.curves.workers, config_file));
  }
  if (a.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(a.out, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + a.out);
  return kExitOk;
}

void add_mc_options(CLI::App* sub, BoundsArgs& a, bool p_required) {
  sub->add_option("--P-dB", a.p_db, "SNR points in dB, comma separated")
      ->delimiter(',')
      ->required(p_required);
  sub->add_option("--trials", a.trials, "Monte-Carlo blocks per point")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", a.seed, "Experiment seed")->capture_default_str();
  sub->add_option("--workers", a.workers, "Worker threads (part of the experiment identity)")
      ->capture_default_str()
      ->check(CLI::Range(1, 1024));
  sub->add_option("--regime", a.regime, "Genie regime (default: the one tight for T, N)")
      ->check(CLI::IsMember({"T_ge_N_plus_1", "T_le_N"}));
  sub->add_option("--fading", a.fading, "Fading law")
      ->capture_default_str()
      ->check(CLI::IsMember({"gaussian", "annulus"}));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-user noncoherent SIMO MAC: DoF region, converse bounds and checks", "ncsimo"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  CLI::Option* config = app.set_config("--config", "", "Config file with one section per command")
                            ->envname("NCSIMO_CONFIG");

  RegionArgs region;
  CLI::App* region_cmd = app.add_subcommand("region", "Exact DoF region (outer and inner)");
  region_cmd->add_option("--T", region.T, "Coherence time")->required()->check(CLI::Range(1, 100000));
  region_cmd->add_option("--N", region.N, "Receive antennas")->required()->check(CLI::Range(1, 100000));
  region_cmd->add_option("--format", region.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  BoundsArgs bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Monte-Carlo converse bounds and achievable rates");
  bounds_cmd->add_option("--T", bounds.T, "Coherence time")->required()->check(CLI::Range(1, 4096));
  bounds_cmd->add_option("--N", bounds.N, "Receive antennas")->required()->check(CLI::Range(1, 4096));
  add_mc_options(bounds_cmd, bounds, true);

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  std::vector<std::string> choices = suite::suite_names();
  choices.push_back("all");
  verify_cmd->add_option("--suite", verify.suite, "Suite name")->required()->check(CLI::IsMember(choices));
  verify_cmd->add_option("--trials", verify.trials, "Monte-Carlo draws (0: suite default)")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Experiment seed")->capture_default_str();
  verify_cmd->add_option("--workers", verify.workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1, 1024));

  PlotArgs plot;
  CLI::App* plot_cmd = app.add_subcommand("export-plot", "CSV data for region polygons and rate curves");
  plot_cmd->add_option("--kind", plot.kind, "region or curves")
      ->capture_default_str()
      ->check(CLI::IsMember({"region", "curves"}));
  plot_cmd->add_option("--which", plot.which, "Region to export")
      ->capture_default_str()
      ->check(CLI::IsMember({"outer", "inner"}));
  plot_cmd->add_option("--out", plot.out, "Output file (default: standard output)");
  plot_cmd->add_option("--T", plot.curves.T, "Coherence time")->required()->check(CLI::Range(1, 4096));
  plot_cmd->add_option("--N", plot.curves.N, "Receive antennas")->required()->check(CLI::Range(1, 4096));
  add_mc_options(plot_cmd, plot.curves, false);

  // --config is global but may follow the subcommand; hoist it so the file loads first.
  std::vector<const char*> ordered(argv, argv + argc);
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    const std::string_view a = ordered[i];
    const std::size_t span = a == "--config" && i + 1 < ordered.size() ? 2 : a.starts_with("--config=") ? 1 : 0;
    if (span == 0) continue;
    std::rotate(ordered.begin() + 1, ordered.begin() + static_cast<std::ptrdiff_t>(i),
                ordered.begin() + static_cast<std::ptrdiff_t>(i + span));
    break;
  }

  try {
    app.parse(static_cast<int>(ordered.size()), ordered.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string config_file = config->count() ? config->as<std::string>() : std::string();
  try {
    if (*region_cmd) return cmd_region(region, config_file, out);
    if (*bounds_cmd) return cmd_bounds(bounds, config_file, out);
    if (*verify_cmd) return cmd_verify(verify, config_file, out);
    if (*plot_cmd) {
      if (plot.kind == "curves" && plot.curves.p_db.empty()) throw UsageError("--kind curves needs --P-dB");
      return cmd_export(plot, config_file, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidParam ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("ncsimo");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ncsimo::cli
