#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbspec/diagnostics.hpp"
#include "mbspec/dynamics.hpp"

namespace mbspec {

/// Initial-data recipe. Generated fields are S_R-truncated and
/// Leray-projected; random_band is bit-reproducible from the seed.
struct InitialSpec {
  enum class Kind { taylor_green, random_band, from_checkpoint };
  Kind kind = Kind::taylor_green;

  // taylor_green: perturbation amplitudes for theta and b
  double theta_amplitude = 0.0;
  double b_amplitude = 0.0;

  // random_band: spectrum |k|^{-a} on [band_min, band_max], H^s norm targets
  std::uint64_t seed = 1;
  double spectrum_exponent = 4.0;
  double band_min = 1.0;
  double band_max = 0.0;  ///< 0 selects the truncation radius R
  double norm_u = 1.0;
  double norm_theta = 0.0;
  double norm_b = 0.0;

  std::string checkpoint_path;
};

State make_initial(const InitialSpec& spec, const SimConfig& cfg);

/// Classical four-stage explicit step of dX/dt = f(X). Output invariants
/// (finiteness, solenoidal certificates) are re-checked; non-finite
/// coefficients raise InstabilityError carrying the offending time.
template <class RhsFn>
State rk4_step_with(const State& s, double dt, RhsFn&& f);

State step_rk4(const State& s, double dt, const SimConfig& cfg);

/// min(dt_max, c_max dx / (V + 1e-12)) with dx = 2pi/N and
/// V = max over grid points of |u| + |b|. Requires the cfl policy.
double cfl_dt(const State& s, const SimConfig& cfg);

/// max over grid points of |u| + |b| (the CFL speed).
double cfl_speed(const State& s);

struct StepRecord {
  double t = 0.0;
  double dt = 0.0;
  std::uint64_t state_hash = 0;
  double cfl_speed = 0.0;
};

/// FNV-1a digest over the raw coefficient bytes and the time stamp.
std::uint64_t state_hash(const State& s);

struct RunOptions {
  int diag_every = 10;       ///< steps between diagnostic samples
  int checkpoint_every = 0;  ///< steps between checkpoint emissions (0: none)
  NormFlavor flavor = NormFlavor::besov;
};

struct RunHooks {
  std::function<void(const DiagRecord&)> on_record;
  /// state, diagnostics quadrature state, absolute step index
  std::function<void(const State&, const DiagState&, int)> on_checkpoint;
};

struct RunResult {
  State final_state;
  int steps = 0;
  int first_step = 0;
  double wall_seconds = 0.0;
  std::string termination;  ///< "t_end" or "instability"
  std::optional<double> instability_time;
  std::vector<DiagRecord> records;
  std::vector<StepRecord> step_records;
  DiagState diag;
};

/// Advance from t to cfg.t_end, sampling diagnostics and emitting checkpoints
/// at the configured cadences. Instability is folded into the report
/// (termination = "instability") rather than thrown.
RunResult run(const SimConfig& cfg, const InitialSpec& init, const RunOptions& opts,
              const RunHooks& hooks = {});

/// Continue a run from a restored state/diagnostics pair (see checkpoint.hpp).
/// Under the fixed-dt policy the continuation is bit-identical to an
/// unbroken run.
RunResult run_from(const SimConfig& cfg, State s0, const DiagState& diag0,
                   int step0, const RunOptions& opts, const RunHooks& hooks = {});

// --- implementation of the generic step ---

namespace detail {
State state_axpy(State base, double a, const Tendency& t);
void tendency_axpy(Tendency& acc, double a, const Tendency& t);
void finish_step(State& out, double t_new);
}  // namespace detail

template <class RhsFn>
State rk4_step_with(const State& s, double dt, RhsFn&& f) {
  if (!(dt > 0.0)) throw UsageError("rk4 step needs dt > 0");
  const Tendency k1 = f(s);
  const Tendency k2 = f(detail::state_axpy(s, 0.5 * dt, k1));
  const Tendency k3 = f(detail::state_axpy(s, 0.5 * dt, k2));
  const Tendency k4 = f(detail::state_axpy(s, dt, k3));

  Tendency acc = k1;
  detail::tendency_axpy(acc, 2.0, k2);
  detail::tendency_axpy(acc, 2.0, k3);
  detail::tendency_axpy(acc, 1.0, k4);

  State out = detail::state_axpy(s, dt / 6.0, acc);
  detail::finish_step(out, s.t + dt);
  return out;
}

}  // namespace mbspec
