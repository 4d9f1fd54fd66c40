#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbspec/integrate.hpp"

namespace mbspec {

struct ConvergencePair {
  double R_lo = 0.0, R_hi = 0.0;
  double D_l2 = 0.0;        ///< sup_t sum of L2 differences of (u, theta, b)
  double D_hs_prime = 0.0;  ///< sup_t of the interpolated H^{s'} bound
};

struct ConvergenceReport {
  std::vector<double> R_list;
  std::vector<ConvergencePair> pairs;
  bool exact = false;  ///< every pair difference identically zero
  std::optional<double> eps_hat;  ///< fitted decay exponent of D(R) ~ R^{-eps}
  double s_prime = 0.0;
  std::vector<double> sample_times;
};

/// Run the same pre-truncation initial data at every R in R_list on one grid
/// (lock-stepped, shared fixed dt), track sup-in-time L2 differences between
/// consecutive members, and fit the decay exponent. Member diagnostics CSVs,
/// the manifest echo and a summary land under out_dir when it is nonempty.
ConvergenceReport convergence_study(const SimConfig& base,
                                    const std::vector<double>& R_list,
                                    const InitialSpec& init, double s_prime,
                                    int diag_every,
                                    const std::string& out_dir = "");

struct DecayReport {
  int dim = 2, N = 0;
  double spectrum_exponent = 0.0, s = 0.0, k = 0.0;
  std::vector<double> R_list;
  std::vector<double> relative_error;  ///< ||S_R f - f||_{H^s} / ||f||_{H^{s+k}}
  bool exact = false;                  ///< all errors identically zero
  std::optional<double> fitted_order;  ///< slope of -log err vs log R
};

/// Truncation-error decay on a synthetic |k|^{-a} spectrum; a must exceed
/// s + k + dim/2 or the continuum H^{s+k} norm diverges.
DecayReport truncation_decay_study(int dim, int N, double spectrum_exponent,
                                   double s, double k,
                                   const std::vector<double>& R_list,
                                   const std::string& out_dir = "");

/// Same measurement on a caller-provided field (no spectrum validation).
DecayReport truncation_decay_for(const SpectralScalar& f, double s, double k,
                                 const std::vector<double>& R_list);

struct BlowupReport {
  std::string verdict;
  std::string termination;
  std::optional<double> instability_time;
  double bkm_full_final = 0.0;
  double bkm_relaxed_final = 0.0;
  std::string out_dir;
};

/// Full run with BKM accumulation and file outputs; run failures are folded
/// into the report instead of aborting the campaign.
BlowupReport blowup_study(const SimConfig& cfg, const InitialSpec& init,
                          const RunOptions& opts, const std::string& out_dir);

/// Execute a JSON study manifest ({"study": "convergence" | "truncation_decay",
/// ...parameters...}); outputs land under out_dir/<study>/.
void run_study_manifest(const std::string& manifest_path,
                        const std::string& out_dir);

}  // namespace mbspec
