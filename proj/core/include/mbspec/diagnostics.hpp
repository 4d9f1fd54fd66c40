#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mbspec/dynamics.hpp"
#include "mbspec/norms.hpp"

namespace mbspec {

struct NormTriple {
  double linf = 0.0;
  double besov = 0.0;
  double bmo = 0.0;

  double get(NormFlavor f) const {
    switch (f) {
      case NormFlavor::linf: return linf;
      case NormFlavor::besov: return besov;
      case NormFlavor::bmo: return bmo;
    }
    return besov;
  }
};

/// (Y, X): L2 energy ||u||^2 + ||theta||^2 + ||b||^2 and its H^s counterpart.
std::pair<double, double> energy_functionals(const State& state, double s);

/// (rhs,state) - (theta e_n, u) - (u.e_n, theta); cancels to rounding on
/// healthy states (below 1e-10 relative to X).
double energy_identity_residual(const State& state, const SimConfig& cfg);

/// Norms of vorticity, electrical current and grad(theta) in all three
/// flavors. In 2D the curls are scalars.
struct BkmIntegrands {
  NormTriple vorticity;
  NormTriple current;
  NormTriple grad_theta;
};
BkmIntegrands bkm_integrands(const State& state);

/// Trapezoidal accumulator for one norm flavor:
///   full    integrates ||curl u|| + ||grad theta|| + ||curl b||,
///   relaxed integrates ||curl u|| + ||curl b||.
/// Sample times must be strictly increasing.
class BkmAccumulator {
 public:
  void add(double t, double vorticity, double grad_theta, double current);

  double full() const { return full_; }
  double relaxed() const { return relaxed_; }
  bool has_prev() const { return has_prev_; }
  double prev_t() const { return prev_t_; }

  /// Persistence hooks (checkpoint resume restores the exact quadrature state).
  struct Persisted {
    bool has_prev = false;
    double prev_t = 0, prev_full = 0, prev_relaxed = 0;
    double full = 0, relaxed = 0;
  };
  Persisted persist() const;
  static BkmAccumulator restore(const Persisted& p);

 private:
  bool has_prev_ = false;
  double prev_t_ = 0.0, prev_full_ = 0.0, prev_relaxed_ = 0.0;
  double full_ = 0.0, relaxed_ = 0.0;
};

struct BkmPair {
  double full = 0.0;
  double relaxed = 0.0;
};

/// One diagnostics sample.
struct DiagRecord {
  double t = 0.0;
  double Y = 0.0;
  double X = 0.0;
  NormTriple vorticity, current, grad_theta;
  std::array<BkmPair, 3> bkm{};  ///< accumulated integrals per flavor
  double residual = 0.0;
  // auxiliary quantities for verdicts (not CSV columns)
  double gradu_linf = 0.0;
  double gradu_integral = 0.0;  ///< trapezoidal int_0^t ||grad u||_inf
  double u_hs = 0.0;
};

/// Quadrature + baseline state of a diagnostics stream; persisted in
/// checkpoints so split runs accumulate identically to unbroken ones.
struct DiagState {
  std::array<BkmAccumulator::Persisted, 3> acc{};
  bool has_prev = false;
  double prev_t = 0.0, prev_gradu = 0.0;
  double gradu_integral = 0.0;
  double Y0 = -1.0, X0 = -1.0, u_hs0 = -1.0, gradtheta0_linf = -1.0;
};

/// Produces time-ordered DiagRecords and maintains the accumulated integrals.
class DiagEngine {
 public:
  explicit DiagEngine(SimConfig cfg) : cfg_(std::move(cfg)) {}
  DiagEngine(SimConfig cfg, const DiagState& persisted);

  DiagRecord sample(const State& state);

  DiagState persist() const;
  const SimConfig& config() const { return cfg_; }
  double initial_u_hs() const { return st_.u_hs0; }

 private:
  SimConfig cfg_;
  DiagState st_;
  std::array<BkmAccumulator, 3> acc_{};
};

/// Verdict of the L2 growth bound Y(t) <= Y(0) e^{2t} (1 + tol).
struct GrowthVerdict {
  bool pass = false;
  double worst_margin = 0.0;  ///< max over samples of Y/(Y0 e^{2t}) - 1
};
GrowthVerdict l2_growth_bound_check(const std::vector<std::pair<double, double>>& y_samples,
                                    double tol = 1e-6);

/// a priori H^s-energy bound (3/2 C^2 + X0) / (1 - (3/2 C^2 + X0)(3/2 + C) t);
/// blown when the denominator is not positive.
struct BihariBound {
  bool blown = false;
  double value = 0.0;
};
BihariBound bihari_bound(double X0, double C, double t);

/// Fit of ||grad theta(t)||_inf <= K ||grad theta(0)||_inf exp(int ||grad u||_inf).
struct BootstrapSample {
  double t = 0.0;
  double gradtheta_linf = 0.0;
  double gradu_linf = 0.0;
};
struct BootstrapVerdict {
  bool pass = false;
  double fitted_K = 0.0;
};
BootstrapVerdict gradtheta_bootstrap_check(const std::vector<BootstrapSample>& traj);

/// Kozono-Taniuchi ratio ||f||_inf / (1 + ||f||_bmo (1 + log+ ||J^s f||_Lp)).
/// Requires s*p > dim and a mean-zero, nonzero field.
double probe_log_sobolev(const SpectralScalar& f, double s, double p);

}  // namespace mbspec
