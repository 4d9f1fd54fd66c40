#pragma once

#include "mbspec/field.hpp"
#include "mbspec/sim_config.hpp"

namespace mbspec {

/// Unknowns of the truncated ideal magnetic Benard system at time t.
/// u and b are certified solenoidal; all fields live inside the truncation ball.
struct State {
  SpectralVector u;
  SpectralScalar theta;
  SpectralVector b;
  double t = 0.0;

  bool all_finite() const {
    return u.all_finite() && theta.all_finite() && b.all_finite();
  }
};

struct Tendency {
  SpectralVector du;
  SpectralScalar dtheta;
  SpectralVector db;
};

/// S_R[(v . grad) g] with the two-thirds dealias rule applied to the
/// pointwise product before truncation. v must be certified solenoidal.
SpectralScalar advect(const SpectralVector& v, const SpectralScalar& g,
                      const SimConfig& cfg);
SpectralVector advect(const SpectralVector& v, const SpectralVector& g,
                      const SimConfig& cfg);

/// Right-hand side of the truncated system with the pressure removed by
/// Leray projection:
///   du     = P[ -S_R[(u.grad)u] + S_R[(b.grad)b] + S_R[theta e_n] ]
///   dtheta =    -S_R[(u.grad)theta] + S_R[u . e_n]
///   db     =    -S_R[(u.grad)b] + S_R[(b.grad)u]
/// The six nonlinear products may be evaluated on cfg.workers threads; the
/// assembly order is fixed, so results are identical for any worker count.
Tendency rhs(const State& state, const SimConfig& cfg);

/// Commutator [J^s, f] grad g = J^s((f.grad)g) - (f.grad)(J^s g), both
/// products dealiased identically. Operands must be supported inside the
/// dealias-safe box; otherwise the evaluation is aliased and rejected.
SpectralScalar commutator_js(const SpectralVector& f, const SpectralScalar& g,
                             double s, const SimConfig& cfg);
SpectralVector commutator_js(const SpectralVector& f, const SpectralVector& g,
                             double s, const SimConfig& cfg);

}  // namespace mbspec
