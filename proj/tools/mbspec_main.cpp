// mbspec: pseudo-spectral simulator and diagnostics for the ideal magnetic
// Benard system on the periodic torus.
//
// Subcommands: run, resume, converge, probe, analyze.
// Exit status: 0 success, 1 domain error (message names the violated
// contract), 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mbspec/checkpoint.hpp"
#include "mbspec/config_file.hpp"
#include "mbspec/experiments.hpp"
#include "mbspec/probes.hpp"
#include "mbspec/run_output.hpp"

namespace fs = std::filesystem;
using namespace mbspec;

namespace {

struct CommonFlags {
  std::string out_dir;
  int checkpoint_every = -1;
  int diag_every = -1;
  std::string norm_flavor;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int workers = -1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--out-dir", flags.out_dir, "output directory");
  cmd->add_option("--checkpoint-every", flags.checkpoint_every,
                  "steps between checkpoints (0 disables)");
  cmd->add_option("--diag-every", flags.diag_every,
                  "steps between diagnostic samples");
  cmd->add_option("--norm-flavor", flags.norm_flavor,
                  "BKM norm flavor for the CSV: linf|besov|bmo (default besov)");
  cmd->add_option("--seed", flags.seed, "override the initial-data seed")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  cmd->add_option("--workers", flags.workers,
                  "worker threads for the nonlinear products");
}

void apply_common(const CommonFlags& flags, FileConfig& fc) {
  if (!flags.out_dir.empty()) fc.out_dir = flags.out_dir;
  if (flags.checkpoint_every >= 0) fc.opts.checkpoint_every = flags.checkpoint_every;
  if (flags.diag_every >= 0) fc.opts.diag_every = flags.diag_every;
  if (!flags.norm_flavor.empty())
    fc.opts.flavor = norm_flavor_from_string(flags.norm_flavor);
  if (flags.seed_set) fc.init.seed = flags.seed;
  if (flags.workers > 0) fc.sim.workers = flags.workers;
}

int do_run(const FileConfig& fc) {
  RunWriter writer(fc.out_dir, fc.sim, fc.init, fc.opts);
  const RunResult result = run(fc.sim, fc.init, fc.opts, writer.hooks());
  writer.finalize(result);
  std::cout << "run: " << result.steps << " steps to t = "
            << result.final_state.t << ", termination: " << result.termination
            << "\noutputs in " << fc.out_dir << "\n";
  if (result.termination != "t_end") {
    std::cerr << "numerical blow-up flagged at t = "
              << (result.instability_time ? *result.instability_time : -1.0)
              << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pseudo-spectral ideal magnetic Benard simulator and diagnostics"};
  app.require_subcommand(1);

  // run
  auto* cmd_run = app.add_subcommand("run", "simulate from a config file");
  std::string config_path;
  cmd_run->add_option("--config", config_path, "key = value config file")
      ->required();
  CommonFlags run_flags;
  add_common(cmd_run, run_flags);
  cmd_run->footer(config_file_grammar());

  // resume
  auto* cmd_resume =
      app.add_subcommand("resume", "continue a run from a checkpoint");
  std::string ckpt_path;
  double resume_t_end = -1.0;
  cmd_resume->add_option("--checkpoint", ckpt_path, "MBSPEC01 container")
      ->required();
  cmd_resume->add_option("--t-end", resume_t_end, "new end time (optional)");
  CommonFlags resume_flags;
  add_common(cmd_resume, resume_flags);

  // converge
  auto* cmd_converge = app.add_subcommand(
      "converge", "execute a convergence / truncation-decay study manifest");
  std::string manifest_path;
  cmd_converge->add_option("--manifest", manifest_path, "study manifest (JSON)")
      ->required();
  std::string converge_out = "out";
  cmd_converge->add_option("--out-dir", converge_out, "output directory");

  // probe
  auto* cmd_probe =
      app.add_subcommand("probe", "inequality probe ensembles, ratio reports");
  std::string probe_kind = "all";
  cmd_probe->add_option(
      "--kind", probe_kind,
      "kato-ponce|log-sobolev|interpolation|gagliardo-nirenberg|all");
  int probe_dim = 2, probe_N = 32, probe_count = 100;
  double probe_s = 3.0, probe_p = 4.0;
  std::uint64_t probe_seed = 1;
  std::string probe_out = "out";
  cmd_probe->add_option("--dim", probe_dim, "dimension (2|3)");
  cmd_probe->add_option("--N", probe_N, "grid points per axis");
  cmd_probe->add_option("--count", probe_count, "ensemble size");
  cmd_probe->add_option("--s", probe_s, "Sobolev order");
  cmd_probe->add_option("--p", probe_p, "Lebesgue exponent");
  cmd_probe->add_option("--seed", probe_seed, "ensemble seed");
  cmd_probe->add_option("--out-dir", probe_out, "output directory");

  // analyze
  auto* cmd_analyze = app.add_subcommand(
      "analyze", "recompute diagnostics and verdicts from stored checkpoints");
  std::string analyze_dir;
  std::string analyze_flavor = "besov";
  cmd_analyze->add_option("--run-dir", analyze_dir, "directory of a finished run")
      ->required();
  cmd_analyze->add_option("--norm-flavor", analyze_flavor,
                          "BKM norm flavor for the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_run) {
      FileConfig fc = load_config_file(config_path);
      apply_common(run_flags, fc);
      fc.sim.validate();
      return do_run(fc);
    }

    if (*cmd_resume) {
      CheckpointData data = read_checkpoint(ckpt_path);
      FileConfig fc;
      fc.sim = data.cfg;
      fc.init = data.init;
      fc.out_dir = "out";
      apply_common(resume_flags, fc);
      if (resume_t_end >= 0.0) fc.sim.t_end = resume_t_end;
      fc.sim.validate();
      RunWriter writer(fc.out_dir, fc.sim, fc.init, fc.opts);
      const RunResult result =
          run_from(fc.sim, data.state, data.diag, data.step, fc.opts,
                   writer.hooks());
      writer.finalize(result);
      std::cout << "resume: " << result.steps << " steps to t = "
                << result.final_state.t << ", termination: "
                << result.termination << "\noutputs in " << fc.out_dir << "\n";
      return result.termination == "t_end" ? 0 : 1;
    }

    if (*cmd_converge) {
      run_study_manifest(manifest_path, converge_out);
      std::cout << "study outputs in " << converge_out << "\n";
      return 0;
    }

    if (*cmd_probe) {
      fs::create_directories(probe_out);
      auto emit = [&](const RatioEnsembleReport& rep) {
        const fs::path path = fs::path(probe_out) / (rep.kind + "_ratios.json");
        std::ofstream out(path, std::ios::trunc);
        out << ratio_report_json(rep) << "\n";
        std::cout << rep.kind << ": max ratio " << rep.max_ratio << " over "
                  << rep.count << " draws -> " << path.string() << "\n";
      };
      const bool all = probe_kind == "all";
      if (all || probe_kind == "kato-ponce")
        emit(kato_ponce_ensemble(probe_dim, probe_N, probe_s, probe_count,
                                 probe_seed));
      if (all || probe_kind == "log-sobolev")
        emit(log_sobolev_ensemble(probe_dim, probe_N, probe_s, probe_p,
                                  probe_count, probe_seed));
      if (all || probe_kind == "interpolation")
        emit(interpolation_ensemble(probe_dim, probe_N, probe_s, probe_s / 2.0,
                                    probe_count, probe_seed));
      if (all || probe_kind == "gagliardo-nirenberg")
        emit(gagliardo_nirenberg_ensemble(probe_dim, probe_N, probe_p,
                                          probe_count, probe_seed));
      if (!all && probe_kind != "kato-ponce" && probe_kind != "log-sobolev" &&
          probe_kind != "interpolation" && probe_kind != "gagliardo-nirenberg") {
        std::cerr << "unknown probe kind '" << probe_kind << "'\n";
        return 2;
      }
      return 0;
    }

    if (*cmd_analyze) {
      const AnalyzeResult res =
          analyze_run_dir(analyze_dir, norm_flavor_from_string(analyze_flavor));
      std::cout << "analyzed " << res.checkpoints << " checkpoints -> "
                << res.csv.string() << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
