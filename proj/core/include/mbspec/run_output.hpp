#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "mbspec/checkpoint.hpp"
#include "mbspec/integrate.hpp"

namespace mbspec {

/// Fixed diagnostics CSV column set (after a `# config = {...}` echo line):
/// t,Y,X, vorticity/current/grad_theta x {linf,besov,bmo}, bkm_full,
/// bkm_relaxed (selected flavor), energy_residual; 17 significant digits.
extern const char* kDiagCsvHeader;

std::string format_csv_row(const DiagRecord& r, NormFlavor flavor);

/// Streams diagnostics rows and checkpoint files for one run and writes the
/// run report. Wire into a run via hooks().
class RunWriter {
 public:
  RunWriter(std::filesystem::path out_dir, SimConfig cfg, InitialSpec init,
            RunOptions opts, std::string csv_name = "diag.csv");

  RunHooks hooks();

  /// Writes run_report.json (config echo, counts, wall time, termination,
  /// verdicts, checkpoint list) and returns its path.
  std::filesystem::path finalize(const RunResult& result);

  const std::filesystem::path& csv_path() const { return csv_path_; }
  const std::vector<std::filesystem::path>& checkpoints() const {
    return checkpoint_paths_;
  }

 private:
  std::filesystem::path dir_;
  SimConfig cfg_;
  InitialSpec init_;
  RunOptions opts_;
  std::filesystem::path csv_path_;
  std::ofstream csv_;
  std::vector<std::filesystem::path> checkpoint_paths_;
};

/// Open a diagnostics CSV with the standard echo line and header.
std::ofstream open_diag_csv(const std::filesystem::path& path,
                            const SimConfig& cfg, const InitialSpec& init);

/// Verdicts recomputed from a record series (growth bound, BKM integrals,
/// grad-theta bootstrap, Bihari reference bound at t_end with C = 1).
std::string verdict_summary_json(const SimConfig& cfg,
                                 const std::vector<DiagRecord>& records,
                                 NormFlavor flavor,
                                 const std::string& termination);

struct AnalyzeResult {
  std::filesystem::path csv;
  std::filesystem::path summary;
  int checkpoints = 0;
};

/// Recompute diagnostics from the checkpoints of a finished run directory,
/// in time order. When the run was checkpointed at the diagnostics cadence
/// this reproduces the run's own CSV bit-for-bit.
AnalyzeResult analyze_run_dir(const std::filesystem::path& run_dir,
                              NormFlavor flavor);

}  // namespace mbspec
