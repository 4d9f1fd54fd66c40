#include "mbspec/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "json_io.hpp"
#include "mbspec/operators.hpp"
#include "mbspec/run_output.hpp"
#include "mbspec/synthesis.hpp"

namespace mbspec {

namespace fs = std::filesystem;

namespace {

// least-squares slope of y over x
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double interp_bound(double l2, double hs, double s_prime, double s) {
  if (l2 == 0.0 || hs == 0.0) return 0.0;
  return std::pow(l2, 1.0 - s_prime / s) * std::pow(hs, s_prime / s);
}

}  // namespace

ConvergenceReport convergence_study(const SimConfig& base,
                                    const std::vector<double>& R_list,
                                    const InitialSpec& init, double s_prime,
                                    int diag_every,
                                    const std::string& out_dir) {
  if (R_list.size() < 2) throw ConfigError("convergence study needs >= 2 radii");
  for (std::size_t i = 1; i < R_list.size(); ++i)
    if (R_list[i] < R_list[i - 1])
      throw ConfigError("R_list must be nondecreasing");
  if (!(s_prime > 0.0) || !(s_prime < base.s))
    throw ConfigError("convergence study needs 0 < s' < s");
  if (base.dt_policy != DtPolicy::fixed)
    throw ConfigError("convergence study requires the fixed dt policy");
  if (init.kind == InitialSpec::Kind::from_checkpoint)
    throw ConfigError("convergence study generates its own initial data");

  const int members = static_cast<int>(R_list.size());
  std::vector<SimConfig> cfgs(members, base);
  for (int m = 0; m < members; ++m) {
    cfgs[m].R = R_list[m];
    cfgs[m].validate();
  }

  // shared pre-truncation data: generate at the dealias-safe radius, then
  // S_R-truncate per member (rescaling happens before the member cut)
  SimConfig gen_cfg = base;
  gen_cfg.R = base.grid.dealias_kmax();
  gen_cfg.validate();
  const State shared = make_initial(init, gen_cfg);

  std::vector<State> states(members, shared);
  for (int m = 0; m < members; ++m) {
    states[m].u = truncate(shared.u, cfgs[m].R);
    states[m].theta = truncate(shared.theta, cfgs[m].R);
    states[m].b = truncate(shared.b, cfgs[m].R);
  }

  const bool writing = !out_dir.empty();
  std::vector<std::unique_ptr<DiagEngine>> engines;
  std::vector<std::ofstream> csvs;
  if (writing) {
    fs::create_directories(out_dir);
    for (int m = 0; m < members; ++m) {
      engines.push_back(std::make_unique<DiagEngine>(cfgs[m]));
      char name[48];
      std::snprintf(name, sizeof(name), "run_R%g.csv", R_list[m]);
      csvs.push_back(open_diag_csv(fs::path(out_dir) / name, cfgs[m], init));
    }
  }

  ConvergenceReport rep;
  rep.R_list = R_list;
  rep.s_prime = s_prime;
  rep.pairs.resize(members - 1);
  for (int m = 0; m + 1 < members; ++m)
    rep.pairs[m] = {R_list[m], R_list[m + 1], 0.0, 0.0};

  auto sample = [&](const std::vector<State>& sts) {
    rep.sample_times.push_back(sts[0].t);
    for (int m = 0; m + 1 < members; ++m) {
      const State& a = sts[m];
      const State& b = sts[m + 1];
      const SpectralVector du = a.u - b.u;
      const SpectralScalar dth = a.theta - b.theta;
      const SpectralVector db = a.b - b.b;
      const double d_l2 = norm_l2(du) + norm_l2(dth) + norm_l2(db);
      const double d_hsp =
          interp_bound(norm_l2(du), norm_hs(du, base.s), s_prime, base.s) +
          interp_bound(norm_l2(dth), norm_hs(dth, base.s), s_prime, base.s) +
          interp_bound(norm_l2(db), norm_hs(db, base.s), s_prime, base.s);
      rep.pairs[m].D_l2 = std::max(rep.pairs[m].D_l2, d_l2);
      rep.pairs[m].D_hs_prime = std::max(rep.pairs[m].D_hs_prime, d_hsp);
    }
    if (writing)
      for (int m = 0; m < members; ++m)
        csvs[m] << format_csv_row(engines[m]->sample(sts[m]), NormFlavor::besov)
                << "\n";
  };

  sample(states);
  int step = 0;
  double t = 0.0;
  const double t_eps = 1e-14 * std::max(1.0, base.t_end);
  while (base.t_end - t > t_eps) {
    double dt = base.dt;
    if (t + dt > base.t_end) dt = base.t_end - t;
    for (int m = 0; m < members; ++m)
      states[m] = step_rk4(states[m], dt, cfgs[m]);
    t = states[0].t;
    ++step;
    if (step % diag_every == 0 || !(base.t_end - t > t_eps)) sample(states);
  }

  // fit D(R) ~ R^{-eps} over pairs with nonzero differences
  std::vector<double> lx, ly;
  for (const auto& p : rep.pairs)
    if (p.D_l2 > 0.0) {
      lx.push_back(std::log(p.R_lo));
      ly.push_back(std::log(p.D_l2));
    }
  if (lx.empty())
    rep.exact = true;
  else if (lx.size() == 1)
    rep.eps_hat = std::nullopt;  // single usable pair: no slope
  else
    rep.eps_hat = -ls_slope(lx, ly);

  if (writing) {
    json summary;
    summary["study"] = "convergence";
    summary["config"] = physical_echo(base, init);
    summary["R_list"] = R_list;
    summary["s_prime"] = s_prime;
    summary["diag_every"] = diag_every;
    summary["sample_times"] = rep.sample_times;
    json pairs = json::array();
    for (const auto& p : rep.pairs)
      pairs.push_back(json{{"R_lo", p.R_lo},
                           {"R_hi", p.R_hi},
                           {"D_l2", p.D_l2},
                           {"D_hs_prime", p.D_hs_prime}});
    summary["pairs"] = pairs;
    if (rep.exact)
      summary["eps_hat"] = "exact";
    else if (rep.eps_hat)
      summary["eps_hat"] = *rep.eps_hat;
    std::ofstream out(fs::path(out_dir) / "summary.json", std::ios::trunc);
    out << summary.dump(2) << "\n";
  }
  return rep;
}

DecayReport truncation_decay_for(const SpectralScalar& f, double s, double k,
                                 const std::vector<double>& R_list) {
  if (R_list.empty()) throw ConfigError("decay study needs radii");
  for (std::size_t i = 1; i < R_list.size(); ++i)
    if (R_list[i] <= R_list[i - 1])
      throw ConfigError("R_list must be strictly increasing");

  DecayReport rep;
  rep.dim = f.grid().dim();
  rep.N = f.grid().n();
  rep.s = s;
  rep.k = k;
  rep.R_list = R_list;
  const double denom = norm_hs(f, s + k);
  if (denom == 0.0) throw ConfigError("decay study needs a nonzero field");

  bool any_nonzero = false;
  for (double R : R_list) {
    const SpectralScalar diff = truncate(f, R) - f;
    const double err = norm_hs(diff, s) / denom;
    rep.relative_error.push_back(err);
    any_nonzero = any_nonzero || err > 0.0;
  }
  rep.exact = !any_nonzero;

  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < R_list.size(); ++i)
    if (rep.relative_error[i] > 0.0) {
      lx.push_back(std::log(R_list[i]));
      ly.push_back(std::log(rep.relative_error[i]));
    }
  if (lx.size() >= 2) rep.fitted_order = -ls_slope(lx, ly);
  return rep;
}

DecayReport truncation_decay_study(int dim, int N, double spectrum_exponent,
                                   double s, double k,
                                   const std::vector<double>& R_list,
                                   const std::string& out_dir) {
  if (!(spectrum_exponent > s + k + dim / 2.0))
    throw ConfigError("spectrum exponent too small: f would leave H^{s+k}");
  const Grid g(dim, N);
  DecayReport rep =
      truncation_decay_for(power_law_scalar(g, spectrum_exponent), s, k, R_list);
  rep.spectrum_exponent = spectrum_exponent;

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    json summary{{"study", "truncation_decay"},
                 {"dim", dim},
                 {"N", N},
                 {"spectrum_exponent", spectrum_exponent},
                 {"s", s},
                 {"k", k},
                 {"R_list", R_list},
                 {"relative_error", rep.relative_error}};
    if (rep.exact)
      summary["fitted_order"] = "exact";
    else if (rep.fitted_order)
      summary["fitted_order"] = *rep.fitted_order;
    std::ofstream out(fs::path(out_dir) / "summary.json", std::ios::trunc);
    out << summary.dump(2) << "\n";
  }
  return rep;
}

BlowupReport blowup_study(const SimConfig& cfg, const InitialSpec& init,
                          const RunOptions& opts, const std::string& out_dir) {
  BlowupReport rep;
  rep.out_dir = out_dir;
  try {
    RunWriter writer(out_dir, cfg, init, opts);
    const RunResult result = run(cfg, init, opts, writer.hooks());
    writer.finalize(result);
    rep.termination = result.termination;
    rep.instability_time = result.instability_time;
    if (!result.records.empty()) {
      const int fi = static_cast<int>(opts.flavor);
      rep.bkm_full_final = result.records.back().bkm[fi].full;
      rep.bkm_relaxed_final = result.records.back().bkm[fi].relaxed;
    }
    bool finite = true;
    for (const auto& r : result.records)
      for (const auto& p : r.bkm)
        if (!std::isfinite(p.full) || !std::isfinite(p.relaxed)) finite = false;
    rep.verdict = result.termination == "t_end" && finite
                      ? "continuation criterion satisfied on [0, t_end]"
                      : "numerical blow-up flagged before t_end";
  } catch (const Error& e) {
    rep.termination = "error";
    rep.verdict = std::string("study error: ") + e.what();
  }
  return rep;
}

void run_study_manifest(const std::string& manifest_path,
                        const std::string& out_dir) {
  std::ifstream in(manifest_path);
  if (!in) throw ConfigError("cannot open manifest: " + manifest_path);
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception&) {
    throw DataError("manifest is not valid JSON: " + manifest_path);
  }

  const std::string study = m.value("study", "");
  if (study == "convergence") {
    SimConfig base;
    base.grid = Grid(m.value("dim", 2), m.value("N", 128));
    base.s = m.value("s", 3.0);
    base.dt = m.value("dt", 1e-3);
    base.dt_policy = DtPolicy::fixed;
    base.t_end = m.value("t_end", 0.5);
    base.workers = m.value("workers", 1);
    base.R = base.grid.dealias_kmax();  // replaced per member
    InitialSpec init;
    init.kind = InitialSpec::Kind::random_band;
    init.seed = m.value("seed", std::uint64_t(1));
    init.spectrum_exponent = m.value("spectrum_exponent", 3.0);
    init.band_min = m.value("band_min", 1.0);
    init.band_max = m.value("band_max", 0.0);
    init.norm_u = m.value("norm_u", 1.0);
    init.norm_theta = m.value("norm_theta", 0.2);
    init.norm_b = m.value("norm_b", 0.5);
    const auto R_list = m.at("R_list").get<std::vector<double>>();
    const double s_prime = m.value("s_prime", base.s / 2.0);
    const int diag_every = m.value("diag_every", 25);

    const fs::path dir = fs::path(out_dir) / "convergence";
    fs::create_directories(dir);
    std::ofstream echo(dir / "manifest_echo.json", std::ios::trunc);
    echo << m.dump(2) << "\n";
    convergence_study(base, R_list, init, s_prime, diag_every, dir.string());
  } else if (study == "truncation_decay") {
    const fs::path dir = fs::path(out_dir) / "truncation_decay";
    fs::create_directories(dir);
    std::ofstream echo(dir / "manifest_echo.json", std::ios::trunc);
    echo << m.dump(2) << "\n";
    truncation_decay_study(m.value("dim", 2), m.value("N", 64),
                           m.at("spectrum_exponent").get<double>(),
                           m.value("s", 2.0), m.value("k", 1.0),
                           m.at("R_list").get<std::vector<double>>(),
                           dir.string());
  } else {
    throw ConfigError("unknown study kind '" + study + "'");
  }
}

}  // namespace mbspec
