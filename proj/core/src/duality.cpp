#include "ncsimo/converse.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "ncsimo/aux_dist.hpp"
#include "ncsimo/calibration.hpp"
#include "ncsimo/error.hpp"
#include "ncsimo/genie.hpp"
#include "ncsimo/stats.hpp"

namespace ncsimo {

double noise_entropy_bits(int N, int T) { return N * T * std::log2(M_PI * M_E); }

namespace {

// log2 det(I_T + conj(x1) x1^T + conj(x2) x2^T) through the 2 x 2 Gram matrix.
double log2_det_rank_two(const cplx* x1, const cplx* x2, int T) {
  const double a = squared_norm(x1, T);
  const double b = squared_norm(x2, T);
  cplx ip(0.0, 0.0);
  for (int i = 0; i < T; ++i) ip += std::conj(x1[i]) * x2[i];
  return std::log2((1.0 + a) * (1.0 + b) - std::norm(ip));
}

}  // namespace

ConditionalEntropy conditional_entropy_given_inputs(const CVector& x1, const CVector& x2,
                                                    const ChannelConfig& cfg) {
  if (x1.size() != cfg.T || x2.size() != cfg.T) {
    throw Error(ErrorKind::InvalidParam, "input length must equal T");
  }
  ConditionalEntropy out;
  const double s2 = x2.squaredNorm();
  CVector x1r = x1;
  if (s2 > 0.0) x1r = rotation_unitary_from(x2).transpose() * x1;
  double head = 0.0;
  for (int i = 0; i + 1 < cfg.T; ++i) head += std::norm(x1r(i));
  const double last = std::norm(x1r(cfg.T - 1));
  out.dominant_term = cfg.N * std::log2((1.0 + s2) * (1.0 + head) + last);
  out.constant_term = noise_entropy_bits(cfg.N, cfg.T);
  out.exact = cfg.fading == FadingKind::iid_complex_gaussian;
  if (out.exact) {
    const CMatrix M = CMatrix::Identity(cfg.T, cfg.T) + x1.conjugate() * x1.transpose() +
                      x2.conjugate() * x2.transpose();
    out.bits = cfg.N * log_det_hermitian_psd(M) + out.constant_term;
  } else {
    out.bits = out.dominant_term + out.constant_term;
  }
  return out;
}

namespace {

enum Role { kPilot = 0, kRegular = 1, kLast = 2 };

struct ColumnTerm {
  double s = 0.0;
  double log_det_sq = 0.0;  // natural log
  int group = 0;
};

struct GroupKey {
  int branch;
  int v;
  int col;
  int role;
  bool operator<(const GroupKey& o) const {
    return std::tie(branch, v, col, role) < std::tie(o.branch, o.v, o.col, o.role);
  }
};

struct Workspace {
  int T = 0;
  int N = 0;
  std::size_t count = 0;
  int branches = 1;
  std::vector<ColumnTerm> cols;
  std::vector<double> h_cond;
  std::vector<double> rhs;
  std::vector<int> branch;
  std::map<GroupKey, int> groups;
  std::vector<GroupKey> keys;

  int group_of(const GroupKey& k) {
    auto it = groups.find(k);
    if (it != groups.end()) return it->second;
    const int id = static_cast<int>(keys.size());
    groups.emplace(k, id);
    keys.push_back(k);
    return id;
  }
};

std::string group_label(const GroupKey& k) {
  static const char* roles[] = {"pilot", "regular", "last"};
  return "branch" + std::to_string(k.branch) + "/v" + std::to_string(k.v) + "/col" +
         std::to_string(k.col) + "/" + roles[k.role];
}

struct Sums {
  double sum = 0.0;
  std::size_t n = 0;
  void add(double x) {
    sum += x;
    ++n;
  }
};

BoundReport finish(Workspace& w, const ChannelConfig& cfg, double genie_cost) {
  const std::size_t half = w.count >= 2 ? w.count / 2 : 0;
  const std::size_t eval_begin = half;
  const std::size_t fit_end = w.count >= 2 ? half : w.count;
  const std::size_t T = static_cast<std::size_t>(w.T);

  // Fit populations with fallbacks: (branch, v, col) -> (branch, role) -> role -> all blocks.
  std::vector<Sums> fine(w.keys.size());
  std::map<std::pair<int, int>, Sums> by_branch_role;
  std::map<int, Sums> by_role;
  std::map<int, Sums> by_role_all;
  for (std::size_t m = 0; m < w.count; ++m) {
    for (std::size_t i = 0; i < T; ++i) {
      const ColumnTerm& c = w.cols[m * T + i];
      const GroupKey& k = w.keys[static_cast<std::size_t>(c.group)];
      by_role_all[k.role].add(c.s);
      if (m >= fit_end) continue;
      fine[static_cast<std::size_t>(c.group)].add(c.s);
      by_branch_role[{k.branch, k.role}].add(c.s);
      by_role[k.role].add(c.s);
    }
  }
  constexpr std::size_t kMinFit = 2;
  std::vector<ShapeScale> params(w.keys.size());
  BoundReport report;
  for (std::size_t g = 0; g < w.keys.size(); ++g) {
    const GroupKey& k = w.keys[g];
    const Sums* src = &fine[g];
    if (src->n < kMinFit) src = &by_branch_role[{k.branch, k.role}];
    if (src->n < kMinFit) src = &by_role[k.role];
    if (src->n < kMinFit) src = &by_role_all[k.role];
    const double mean = src->sum / static_cast<double>(src->n);
    if (k.role == kPilot && mean <= 1.0) {
      throw Error(ErrorKind::LowSnrRegime,
                  "pilot-column power " + std::to_string(mean) + " does not exceed the noise level");
    }
    params[g] = fit_shape_scale(mean, FitRule::capped_shape);
    report.fits.push_back({group_label(k), fine[g].n, params[g].alpha, params[g].beta});
  }

  const double ln2 = std::log(2.0);
  const double hz = noise_entropy_bits(w.N, w.T);
  const std::size_t n_eval = w.count - eval_begin;
  std::vector<double> ce(n_eval), info(n_eval), h(n_eval), rhs(n_eval), gap(n_eval), rem(n_eval);
  std::vector<std::vector<double>> col_ce(T, std::vector<double>(n_eval));
  for (std::size_t j = 0; j < n_eval; ++j) {
    const std::size_t m = eval_begin + j;
    double total = 0.0;
    double lead = 0.0;
    for (std::size_t i = 0; i < T; ++i) {
      const ColumnTerm& c = w.cols[m * T + i];
      const ShapeScale& p = params[static_cast<std::size_t>(c.group)];
      const double bits = -log_density_radial(c.s, c.log_det_sq, w.N, p.alpha, p.beta) / ln2;
      col_ce[i][j] = bits;
      total += bits;
      lead += -c.log_det_sq / ln2 + w.N * std::log2(c.s);
    }
    ce[j] = total;
    h[j] = w.h_cond[m];
    rhs[j] = w.rhs[m];
    info[j] = total - w.h_cond[m];
    gap[j] = total - hz - w.rhs[m];
    rem[j] = total - lead;
  }

  const MeanEstimate ce_e = mean_and_se(ce);
  const MeanEstimate info_e = mean_and_se(info);
  const MeanEstimate gap_e = mean_and_se(gap);
  report.value = (info_e.mean + genie_cost) / w.T;
  report.std_error = info_e.std_error / w.T;
  const MeanEstimate h_e = mean_and_se(h);
  const MeanEstimate rhs_e = mean_and_se(rhs);
  const double slack = calibration::loglog_slack(cfg.P);
  report.components = {
      {"cross_entropy", ce_e.mean, ce_e.std_error},
      {"conditional_entropy", h_e.mean, h_e.std_error},
      {"genie_cost", genie_cost, 0.0},
      {"noise_entropy", hz, 0.0},
      {"analytic_rhs", rhs_e.mean, rhs_e.std_error},
      {"rhs_gap", gap_e.mean, gap_e.std_error},
      {"rhs_slack", slack, 0.0},
      {"eval_blocks", static_cast<double>(n_eval), 0.0},
  };
  for (std::size_t i = 0; i < T; ++i) {
    const MeanEstimate c = mean_and_se(col_ce[i]);
    report.components.push_back({"column" + std::to_string(i) + ".cross_entropy", c.mean, c.std_error});
  }
  if (w.branches > 1) {
    for (int b = 0; b < w.branches; ++b) {
      std::vector<double> gb, cb, rb;
      for (std::size_t j = 0; j < n_eval; ++j) {
        if (w.branch[eval_begin + j] != b) continue;
        gb.push_back(gap[j]);
        cb.push_back(ce[j]);
        rb.push_back(rhs[j]);
      }
      const std::string p = "branch" + std::to_string(b) + ".";
      const double prob = n_eval ? static_cast<double>(gb.size()) / static_cast<double>(n_eval) : 0.0;
      const MeanEstimate g = mean_and_se(gb);
      const MeanEstimate c = mean_and_se(cb);
      const MeanEstimate r = mean_and_se(rb);
      report.components.push_back({p + "probability", prob, 0.0});
      report.components.push_back({p + "cross_entropy", c.mean, c.std_error});
      report.components.push_back({p + "analytic_rhs", r.mean, r.std_error});
      report.components.push_back({p + "rhs_gap", g.mean, g.std_error});
    }
  }
  const MeanEstimate rem_e = mean_and_se(rem);
  report.remainder_terms = {
      {"aux_remainder", rem_e.mean, rem_e.std_error},
      {"loglog_envelope", slack, 0.0},
      {"genie_cost", genie_cost, 0.0},
  };
  if (cfg.fading != FadingKind::iid_complex_gaussian) {
    report.warnings.push_back(
        "conditional entropy uses the Gaussian-fading constant N*T*log2(pi*e); it is an O(1) "
        "approximation for this fading kind");
  }
  return report;
}

void check_samples(const SampleSet& s, const ChannelConfig& cfg) {
  validate(cfg);
  if (s.T != cfg.T || s.N != cfg.N || s.count == 0) {
    throw Error(ErrorKind::InvalidParam, "sample set does not match the configuration");
  }
}

}  // namespace

BoundReport duality_bound_single_user(const SampleSet& samples, const ChannelConfig& cfg) {
  check_samples(samples, cfg);
  Workspace w;
  w.T = cfg.T;
  w.N = cfg.N;
  w.count = samples.count;
  w.cols.resize(w.count * static_cast<std::size_t>(w.T));
  w.h_cond.resize(w.count);
  w.rhs.resize(w.count);
  w.branch.assign(w.count, 0);
  const double hz = noise_entropy_bits(cfg.N, cfg.T);
  const int T = cfg.T;
  const int N = cfg.N;
  const RankOneShape unit{1.0, 1.0};
  for (std::size_t m = 0; m < w.count; ++m) {
    const cplx* x = samples.x1_at(m);
    const int v = genie_index_single(x, T).slot;
    const cplx* yv = samples.y_col(m, v);
    const double nv = squared_norm(yv, N);
    const double xv = std::norm(x[v]);
    double rhs = (N + T - 1) * std::log2(1.0 + xv);
    for (int i = 0; i < T; ++i) {
      ColumnTerm& c = w.cols[m * static_cast<std::size_t>(T) + static_cast<std::size_t>(i)];
      if (i == v) {
        c.s = nv;
        c.log_det_sq = 0.0;
        c.group = w.group_of({0, v, i, kPilot});
      } else {
        c.s = rank_one_shaped_norm_sq(samples.y_col(m, i), yv, N, unit);
        c.log_det_sq = rank_one_log_det_sq(nv, N, unit);
        c.group = w.group_of({0, v, i, kRegular});
        rhs += N * std::log2(1.0 + std::norm(x[i]) / (1.0 + xv));
      }
    }
    w.rhs[m] = rhs;
    w.h_cond[m] = N * log2_det_rank_two(x, samples.x2_at(m), T) + hz;
  }
  BoundReport r = finish(w, cfg, genie_cost_single(cfg.T));
  return r;
}

BoundReport duality_bound_single_user(const InputDistribution& input, const ChannelConfig& cfg) {
  const SampleSet s = generate_samples(cfg, input, nullptr, 0x73756275ULL);
  return duality_bound_single_user(s, cfg);
}

BoundReport duality_bound_mac_user1(const SampleSet& samples, const ChannelConfig& cfg,
                                    MacRegime regime) {
  check_samples(samples, cfg);
  check_regime(cfg.T, cfg.N, regime);
  const int T = cfg.T;
  const int N = cfg.N;
  const double P = cfg.P;
  Workspace w;
  w.T = T;
  w.N = N;
  w.count = samples.count;
  w.branches = regime == MacRegime::T_le_N ? 3 : 1;
  w.cols.resize(w.count * static_cast<std::size_t>(T));
  w.h_cond.resize(w.count);
  w.rhs.resize(w.count);
  w.branch.assign(w.count, 0);
  const double hz = noise_entropy_bits(N, T);

  CMatrix Yr(N, T);
  CVector xr(T);
  std::vector<double> a(static_cast<std::size_t>(T));
  for (std::size_t m = 0; m < w.count; ++m) {
    const cplx* x1 = samples.x1_at(m);
    const cplx* x2 = samples.x2_at(m);
    const double s2 = squared_norm(x2, T);
    const Eigen::Map<const CMatrix> Y(samples.y_at(m), N, T);
    const Eigen::Map<const CVector> x1v(x1, T);
    if (s2 > 0.0) {
      const CMatrix U = rotation_unitary_from(Eigen::Map<const CVector>(x2, T));
      Yr.noalias() = Y * U;
      xr.noalias() = U.transpose() * x1v;
    } else {
      Yr = Y;
      xr = x1v;
    }
    for (int i = 0; i < T; ++i) a[static_cast<std::size_t>(i)] = std::norm(xr(i));

    const GenieIndex g = genie_index_mac(xr.data(), T, s2, regime);
    const int v = g.slot;
    int b = 0;
    if (regime == MacRegime::T_le_N) b = v == T - 1 ? 2 : (g.u.value_or(0) == 1 ? 1 : 0);
    w.branch[m] = b;

    const cplx* yv = Yr.col(v).data();
    const double nv = squared_norm(yv, N);
    const double xv = a[static_cast<std::size_t>(v)];
    const double aT = a[static_cast<std::size_t>(T - 1)];

    for (int i = 0; i < T; ++i) {
      ColumnTerm& c = w.cols[m * static_cast<std::size_t>(T) + static_cast<std::size_t>(i)];
      if (i == v) {
        c.s = nv;
        c.log_det_sq = 0.0;
        c.group = w.group_of({b, v, i, kPilot});
        continue;
      }
      RankOneShape shape{1.0, 1.0};
      const int role = i == T - 1 ? kLast : kRegular;
      if (b == 2) {
        shape = {1.0, 1.0 / (1.0 + s2)};
      } else if (i == T - 1) {
        shape = {1.0 + s2, b == 1 ? P / nv : 1.0};
      }
      c.s = rank_one_shaped_norm_sq(Yr.col(i).data(), yv, N, shape);
      c.log_det_sq = rank_one_log_det_sq(nv, N, shape);
      c.group = w.group_of({b, v, i, role});
    }

    double rhs = 0.0;
    if (regime == MacRegime::T_ge_N_plus_1) {
      rhs = (N + T - 2) * std::log2(1.0 + xv) + N * std::log2(1.0 + s2) +
            std::log2(1.0 + xv / (1.0 + s2)) + N * std::log2(1.0 + aT / (1.0 + s2 + xv));
      for (int i = 0; i + 1 < T; ++i) {
        if (i != v) rhs += N * std::log2(1.0 + a[static_cast<std::size_t>(i)] / (1.0 + xv));
      }
    } else if (b == 0) {
      rhs = (N + T - 2) * std::log2(1.0 + xv) + N * std::log2(1.0 + s2) +
            std::log2(1.0 + xv / (1.0 + s2));
    } else if (b == 1) {
      rhs = (N + T - 2) * std::log2(1.0 + xv) + N * std::log2((1.0 + s2 + aT) / (1.0 + s2 + P)) +
            N * std::log2(1.0 + s2) + std::log2(1.0 + P / (1.0 + s2));
    } else {
      rhs = N * std::log2(1.0 + s2 + aT) + (T - 1) * std::log2(1.0 + aT / (1.0 + s2));
    }
    w.rhs[m] = rhs;
    w.h_cond[m] = N * log2_det_rank_two(x1, x2, T) + hz;
  }
  return finish(w, cfg, genie_cost_mac(T, regime));
}

BoundReport duality_bound_mac_user1(const InputDistribution& input1,
                                    const InputDistribution& input2, const ChannelConfig& cfg,
                                    MacRegime regime) {
  check_regime(cfg.T, cfg.N, regime);
  const SampleSet s = generate_samples(cfg, input1, &input2, 0x6d616331ULL);
  return duality_bound_mac_user1(s, cfg, regime);
}

bool SlackCheck::holds() const { return margin() >= 0.0; }

double SlackCheck::margin() const {
  return slack + calibration::kSigmaSlack * std_error - gap;
}

SlackCheck slack_check(const BoundReport& report, const std::string& prefix) {
  const auto gap = report.component(prefix + "rhs_gap");
  const auto slack = report.component("rhs_slack");
  if (!gap || !slack) throw Error(ErrorKind::InvalidParam, "report has no gap and slack terms");
  SlackCheck c;
  c.gap = gap->value;
  c.std_error = gap->std_error;
  c.slack = slack->value;
  if (const auto p = report.component(prefix + "probability")) c.probability = p->value;
  return c;
}

}  // namespace ncsimo
