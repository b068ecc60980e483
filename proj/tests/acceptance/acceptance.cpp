// Acceptance run: one PASS/FAIL line per criterion. Optional arguments select
// criteria by number.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ncsimo_report/cli.hpp"
#include "ncsimo_report/suites.hpp"

namespace {

using ncsimo::suite::SuiteOptions;
using ncsimo::suite::SuiteResult;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string summary;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

SuiteOptions options() {
  SuiteOptions o;
  o.seed = 7;
  o.workers = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 8u));
  return o;
}

std::string counts(const SuiteResult& r, const std::string& prefix) {
  std::size_t ok = 0;
  for (const auto& c : r.checks)
    if (c.asserted && c.passed && c.name.rfind(prefix, 0) == 0) ++ok;
  return std::to_string(ok) + "/" + std::to_string(r.count(prefix));
}

std::string failures(const SuiteResult& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.asserted && !c.passed) out += " [" + c.name + "]";
  }
  return out;
}

std::string diagnostics(const SuiteResult& r) {
  std::size_t total = 0;
  std::size_t violated = 0;
  for (const auto& c : r.checks) {
    if (c.asserted) continue;
    ++total;
    if (!c.passed) ++violated;
  }
  return std::to_string(violated) + "/" + std::to_string(total) + " diagnostics violated";
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = ncsimo::cli::run_cli(args, out, err);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const SuiteOptions opts = options();

  // Criteria 1 and 2 share one region run; 3 and 4 share the optimizer run.
  SuiteResult region;
  SuiteResult optimizer;
  double region_s = 0.0;
  double optimizer_s = 0.0;
  auto timed = [](auto&& f, double& seconds) {
    const auto t0 = Clock::now();
    auto r = f();
    seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  };

  const std::vector<Criterion> criteria = {
      {1, "region exactness", 1.0,
       [&] {
         region = timed([&] { return ncsimo::suite::run_region(opts); }, region_s);
         return Outcome{region.passed("region_equal/") && region.count("region_equal/") == 128,
                        counts(region, "region_equal/") + " (T,N) pairs equal" + failures(region)};
       }},
      {2, "corner values", 0.0,
       [&] {
         if (region.checks.empty()) region = ncsimo::suite::run_region(opts);
         return Outcome{region.passed("corners/") && region.passed("single_halfspace/"),
                        counts(region, "corners/") + " corner sets, " + counts(region, "single_halfspace/") +
                            " single-halfspace regions"};
       }},
      {3, "converse optimizer tightness", 30.0,
       [&] {
         optimizer = timed([&] { return ncsimo::suite::run_optimizer(opts); }, optimizer_s);
         return Outcome{optimizer.passed("tight/") && optimizer.passed("grid/") && optimizer.count("tight/") == 490,
                        counts(optimizer, "tight/") + " exact sup = polytope max, " + counts(optimizer, "grid/") +
                            " grid-oracle agreements" + failures(optimizer)};
       }},
      {4, "looseness instance", 0.0,
       [&] {
         if (optimizer.checks.empty()) optimizer = ncsimo::suite::run_optimizer(opts);
         std::string detail;
         for (const auto& c : optimizer.checks)
           if (c.name.rfind("looseness/", 0) == 0 && !c.detail.empty())
             detail += (detail.empty() ? " " : "; ") + c.detail;
         return Outcome{optimizer.passed("looseness/") && optimizer.count("looseness/") == 3,
                        "T=3,N=4,lambda=(1,1):" + detail};
       }},
      {5, "achievability slopes", 300.0,
       [&] {
         const SuiteResult r = ncsimo::suite::run_achievability(opts);
         std::string detail;
         for (const auto& c : r.checks) {
           char buf[160];
           std::snprintf(buf, sizeof buf, "%s=%.4f (target %.4f)", c.name.c_str(), c.value.value_or(NAN),
                         c.limit.value_or(NAN));
           detail += (detail.empty() ? "" : "; ") + std::string(buf);
         }
         return Outcome{r.passed(), detail};
       }},
      {6, "duality-bound validity", 600.0,
       [&] {
         const SuiteResult r = ncsimo::suite::run_validity(opts);
         double slope = NAN;
         for (const auto& c : r.checks)
           if (c.name.rfind("slope/", 0) == 0) slope = c.value.value_or(NAN);
         char buf[96];
         std::snprintf(buf, sizeof buf, "; single-user slope 30-40 dB = %.4f (limit 0.80)", slope);
         return Outcome{r.passed(), counts(r, "bound_vs_mi/") + " bound >= MI lower estimate - 3 SE" + buf +
                                        failures(r)};
       }},
      {7, "gap within slack", 600.0,
       [&] {
         const SuiteResult r = ncsimo::suite::run_props(opts);
         return Outcome{r.passed(), counts(r, "p2p_gap/") + " point-to-point, " + counts(r, "bound_meanlog/") +
                                        " MAC (incl. branches); " + diagnostics(r) + failures(r)};
       }},
      {8, "lemma suites", 120.0,
       [&] {
         const SuiteResult r = ncsimo::suite::run_lemmas(opts);
         return Outcome{r.passed(), counts(r, "gaussian_entropy/") + " entropy, " + counts(r, "log_moment/") + " log-moment, " +
                                        counts(r, "truncation/") + " truncation, " + counts(r, "cross_entropy/") + " cross-entropy" + failures(r)};
       }},
      {9, "determinism", 0.0,
       [&] {
         const std::vector<std::vector<std::string>> commands = {
             {"region", "--T", "5", "--N", "3"},
             {"region", "--T", "7", "--N", "2", "--format", "csv"},
             {"bounds", "--T", "4", "--N", "2", "--P-dB", "20,30", "--trials", "20000", "--seed", "7", "--workers", "3"},
             {"bounds", "--regime", "T_le_N", "--T", "3", "--N", "4", "--P-dB", "20", "--trials", "20000", "--seed", "7"},
             {"verify", "--suite", "lemmas", "--trials", "20000", "--seed", "3", "--workers", "2"},
             {"export-plot", "--kind", "curves", "--T", "4", "--N", "2", "--P-dB", "10,20", "--trials", "5000"},
         };
         std::size_t same = 0;
         for (const auto& cmd : commands) {
           int c1 = 0;
           int c2 = 0;
           const std::string a = cli_output(cmd, c1);
           const std::string b = cli_output(cmd, c2);
           if (c1 == c2 && !a.empty() && a == b) ++same;
         }
         return Outcome{same == commands.size(),
                        std::to_string(same) + "/" + std::to_string(commands.size()) + " invocations bitwise identical"};
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = Clock::now();
    Outcome o = c.run();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    const double measured = c.id == 1 ? region_s : c.id == 3 ? optimizer_s : s;
    const bool in_time = c.budget_s == 0.0 || measured < c.budget_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    char timing[96];
    if (c.budget_s > 0.0) {
      std::snprintf(timing, sizeof timing, " (%.2f s, budget %.0f s)", measured, c.budget_s);
    } else {
      std::snprintf(timing, sizeof timing, " (%.2f s)", s);
    }
    std::printf("criterion %d [%s]: %s %s%s\n", c.id, c.title.c_str(), pass ? "PASS" : "FAIL", o.summary.c_str(),
                timing);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
