#include "mbspec/run_output.hpp"

#include <algorithm>
#include <cstdio>

#include "json_io.hpp"

namespace mbspec {

const char* kDiagCsvHeader =
    "t,Y,X,vorticity_linf,vorticity_besov,vorticity_bmo,"
    "current_linf,current_besov,current_bmo,"
    "grad_theta_linf,grad_theta_besov,grad_theta_bmo,"
    "bkm_full,bkm_relaxed,energy_residual";

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int flavor_index(NormFlavor f) {
  switch (f) {
    case NormFlavor::linf: return 0;
    case NormFlavor::besov: return 1;
    case NormFlavor::bmo: return 2;
  }
  return 1;
}

}  // namespace

std::string format_csv_row(const DiagRecord& r, NormFlavor flavor) {
  const BkmPair& bkm = r.bkm[flavor_index(flavor)];
  std::string row;
  const double cols[15] = {r.t,
                           r.Y,
                           r.X,
                           r.vorticity.linf,
                           r.vorticity.besov,
                           r.vorticity.bmo,
                           r.current.linf,
                           r.current.besov,
                           r.current.bmo,
                           r.grad_theta.linf,
                           r.grad_theta.besov,
                           r.grad_theta.bmo,
                           bkm.full,
                           bkm.relaxed,
                           r.residual};
  for (int i = 0; i < 15; ++i) {
    if (i) row += ',';
    row += g17(cols[i]);
  }
  return row;
}

std::ofstream open_diag_csv(const std::filesystem::path& path,
                            const SimConfig& cfg, const InitialSpec& init) {
  std::ofstream csv(path, std::ios::trunc);
  if (!csv) throw DataError("cannot open CSV for writing: " + path.string());
  csv << "# config = " << physical_echo(cfg, init).dump() << "\n";
  csv << kDiagCsvHeader << "\n";
  return csv;
}

RunWriter::RunWriter(std::filesystem::path out_dir, SimConfig cfg,
                     InitialSpec init, RunOptions opts, std::string csv_name)
    : dir_(std::move(out_dir)),
      cfg_(std::move(cfg)),
      init_(std::move(init)),
      opts_(opts) {
  std::filesystem::create_directories(dir_);
  csv_path_ = dir_ / csv_name;
  csv_ = open_diag_csv(csv_path_, cfg_, init_);
}

RunHooks RunWriter::hooks() {
  RunHooks h;
  h.on_record = [this](const DiagRecord& r) {
    csv_ << format_csv_row(r, opts_.flavor) << "\n";
    csv_.flush();
  };
  h.on_checkpoint = [this](const State& st, const DiagState& diag, int step) {
    char name[48];
    std::snprintf(name, sizeof(name), "ckpt_%08d.mbspec", step);
    const std::filesystem::path path = dir_ / name;
    write_checkpoint(path.string(), {cfg_, init_, st, step, diag});
    checkpoint_paths_.push_back(path);
  };
  return h;
}

std::string verdict_summary_json(const SimConfig& cfg,
                                 const std::vector<DiagRecord>& records,
                                 NormFlavor flavor,
                                 const std::string& termination) {
  json v;
  const bool healthy = termination == "t_end";
  bool finite = true;
  bool relaxed_le_full = true;
  for (const auto& r : records)
    for (const auto& pair : r.bkm) {
      if (!std::isfinite(pair.full) || !std::isfinite(pair.relaxed)) finite = false;
      if (pair.relaxed > pair.full + 1e-12 * std::max(1.0, pair.full))
        relaxed_le_full = false;
    }
  v["bkm"] = {
      {"flavor", to_string(flavor)},
      {"integrals_finite", finite},
      {"relaxed_le_full", relaxed_le_full},
      {"verdict", healthy && finite
                      ? "continuation criterion satisfied on [0, t_end]"
                      : "run did not complete healthily"}};
  if (!records.empty()) {
    const auto& last = records.back();
    v["bkm"]["full_final"] = last.bkm[flavor_index(flavor)].full;
    v["bkm"]["relaxed_final"] = last.bkm[flavor_index(flavor)].relaxed;

    std::vector<std::pair<double, double>> ys;
    std::vector<BootstrapSample> boot;
    for (const auto& r : records) {
      ys.emplace_back(r.t, r.Y);
      boot.push_back({r.t, r.grad_theta.linf, r.gradu_linf});
    }
    const GrowthVerdict g = l2_growth_bound_check(ys);
    v["l2_growth"] = {{"pass", g.pass}, {"worst_margin", g.worst_margin}};
    const BootstrapVerdict b = gradtheta_bootstrap_check(boot);
    v["gradtheta_bootstrap"] = {{"pass", b.pass}, {"fitted_K", b.fitted_K}};

    const BihariBound bb = bihari_bound(records.front().X, 1.0, cfg.t_end);
    v["bihari_reference_C1"] =
        bb.blown ? json{{"blown", true}}
                 : json{{"blown", false}, {"bound_at_t_end", bb.value}};
  }
  return v.dump();
}

std::filesystem::path RunWriter::finalize(const RunResult& result) {
  csv_.flush();
  json report;
  report["config"] = physical_echo(cfg_, init_);
  report["run_options"] = to_json(opts_);
  report["steps"] = result.steps;
  report["first_step"] = result.first_step;
  report["t_final"] = result.final_state.t;
  report["wall_seconds"] = result.wall_seconds;
  report["termination"] = result.termination;
  if (result.instability_time)
    report["instability_time"] = *result.instability_time;
  report["samples"] = result.records.size();
  json ckpts = json::array();
  for (const auto& p : checkpoint_paths_) ckpts.push_back(p.filename().string());
  report["checkpoints"] = ckpts;
  report["csv"] = csv_path_.filename().string();
  report["verdicts"] =
      json::parse(verdict_summary_json(cfg_, result.records, opts_.flavor,
                                       result.termination));
  if (!result.step_records.empty()) {
    report["final_state_hash"] = result.step_records.back().state_hash;
    report["final_cfl_speed"] = result.step_records.back().cfl_speed;
  }

  const std::filesystem::path path = dir_ / "run_report.json";
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write run report: " + path.string());
  out << report.dump(2) << "\n";
  return path;
}

AnalyzeResult analyze_run_dir(const std::filesystem::path& run_dir,
                              NormFlavor flavor) {
  const std::filesystem::path report_path = run_dir / "run_report.json";
  std::ifstream in(report_path);
  if (!in) throw DataError("no run_report.json in " + run_dir.string());
  json report;
  try {
    report = json::parse(in);
  } catch (const json::exception&) {
    throw DataError("run_report.json is not valid JSON");
  }

  std::vector<std::string> names;
  for (const auto& c : report.at("checkpoints"))
    names.push_back(c.get<std::string>());
  if (names.empty())
    throw DataError("run has no checkpoints to analyze");

  AnalyzeResult res;
  res.csv = run_dir / "analyze_diag.csv";
  res.summary = run_dir / "analyze_summary.json";

  std::ofstream csv;
  std::vector<DiagRecord> records;
  SimConfig cfg;
  std::unique_ptr<DiagEngine> engine;
  InitialSpec init;
  for (const auto& name : names) {
    CheckpointData data = read_checkpoint((run_dir / name).string());
    if (!engine) {
      cfg = data.cfg;
      init = data.init;
      engine = std::make_unique<DiagEngine>(cfg);
      csv = open_diag_csv(res.csv, cfg, init);
    }
    DiagRecord r = engine->sample(data.state);
    records.push_back(r);
    csv << format_csv_row(r, flavor) << "\n";
    ++res.checkpoints;
  }
  csv.flush();

  std::ofstream summary(res.summary, std::ios::trunc);
  summary << json{{"config", physical_echo(cfg, init)},
                  {"checkpoints", res.checkpoints},
                  {"verdicts", json::parse(verdict_summary_json(
                                   cfg, records, flavor, "t_end"))}}
                 .dump(2)
          << "\n";
  return res;
}

}  // namespace mbspec
