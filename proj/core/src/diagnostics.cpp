#include "mbspec/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "mbspec/operators.hpp"
#include "mbspec/probes.hpp"

namespace mbspec {

std::pair<double, double> energy_functionals(const State& state, double s) {
  const double Yu = norm_l2(state.u), Yt = norm_l2(state.theta), Yb = norm_l2(state.b);
  const double Xu = norm_hs(state.u, s), Xt = norm_hs(state.theta, s),
               Xb = norm_hs(state.b, s);
  return {Yu * Yu + Yt * Yt + Yb * Yb, Xu * Xu + Xt * Xt + Xb * Xb};
}

double energy_identity_residual(const State& state, const SimConfig& cfg) {
  const Tendency f = rhs(state, cfg);
  const int axis = cfg.axis();
  const double production = inner_l2(state.theta, state.u[axis]) +
                            inner_l2(state.u[axis], state.theta);
  return inner_l2(f.du, state.u) + inner_l2(f.dtheta, state.theta) +
         inner_l2(f.db, state.b) - production;
}

namespace {

NormTriple norms_of(const SpectralScalar& f) {
  return {norm_linf(f), norm_besov0_inf_inf(f), norm_bmo_approx(f)};
}

NormTriple norms_of(const SpectralVector& v) {
  return {norm_linf(v), norm_besov0_inf_inf(v), norm_bmo_approx(v)};
}

}  // namespace

BkmIntegrands bkm_integrands(const State& state) {
  BkmIntegrands out;
  if (state.u.grid().dim() == 2) {
    out.vorticity = norms_of(curl_2d(state.u));
    out.current = norms_of(curl_2d(state.b));
  } else {
    out.vorticity = norms_of(curl_3d(state.u));
    out.current = norms_of(curl_3d(state.b));
  }
  out.grad_theta = norms_of(gradient(state.theta));
  return out;
}

void BkmAccumulator::add(double t, double vorticity, double grad_theta,
                         double current) {
  const double full_v = vorticity + grad_theta + current;
  const double relaxed_v = vorticity + current;
  if (has_prev_) {
    if (!(t > prev_t_)) throw UsageError("BKM samples must advance in time");
    const double h = t - prev_t_;
    full_ += 0.5 * (prev_full_ + full_v) * h;
    relaxed_ += 0.5 * (prev_relaxed_ + relaxed_v) * h;
  }
  has_prev_ = true;
  prev_t_ = t;
  prev_full_ = full_v;
  prev_relaxed_ = relaxed_v;
}

BkmAccumulator::Persisted BkmAccumulator::persist() const {
  return {has_prev_, prev_t_, prev_full_, prev_relaxed_, full_, relaxed_};
}

BkmAccumulator BkmAccumulator::restore(const Persisted& p) {
  BkmAccumulator a;
  a.has_prev_ = p.has_prev;
  a.prev_t_ = p.prev_t;
  a.prev_full_ = p.prev_full;
  a.prev_relaxed_ = p.prev_relaxed;
  a.full_ = p.full;
  a.relaxed_ = p.relaxed;
  return a;
}

DiagEngine::DiagEngine(SimConfig cfg, const DiagState& persisted)
    : cfg_(std::move(cfg)), st_(persisted) {
  for (int i = 0; i < 3; ++i) acc_[i] = BkmAccumulator::restore(st_.acc[i]);
}

DiagRecord DiagEngine::sample(const State& state) {
  DiagRecord r;
  r.t = state.t;
  std::tie(r.Y, r.X) = energy_functionals(state, cfg_.s);
  const BkmIntegrands in = bkm_integrands(state);
  r.vorticity = in.vorticity;
  r.current = in.current;
  r.grad_theta = in.grad_theta;
  r.gradu_linf = gradtensor_linf(state.u);
  r.u_hs = norm_hs(state.u, cfg_.s);
  r.residual = energy_identity_residual(state, cfg_);

  const NormFlavor flavors[3] = {NormFlavor::linf, NormFlavor::besov,
                                 NormFlavor::bmo};
  for (int i = 0; i < 3; ++i) {
    acc_[i].add(state.t, in.vorticity.get(flavors[i]),
                in.grad_theta.get(flavors[i]), in.current.get(flavors[i]));
    r.bkm[i] = {acc_[i].full(), acc_[i].relaxed()};
  }

  if (st_.has_prev)
    st_.gradu_integral +=
        0.5 * (st_.prev_gradu + r.gradu_linf) * (state.t - st_.prev_t);
  st_.has_prev = true;
  st_.prev_t = state.t;
  st_.prev_gradu = r.gradu_linf;
  r.gradu_integral = st_.gradu_integral;

  if (st_.Y0 < 0.0) {
    st_.Y0 = r.Y;
    st_.X0 = r.X;
    st_.u_hs0 = r.u_hs;
    st_.gradtheta0_linf = r.grad_theta.linf;
  }
  return r;
}

DiagState DiagEngine::persist() const {
  DiagState out = st_;
  for (int i = 0; i < 3; ++i) out.acc[i] = acc_[i].persist();
  return out;
}

GrowthVerdict l2_growth_bound_check(
    const std::vector<std::pair<double, double>>& y_samples, double tol) {
  if (y_samples.empty()) throw UsageError("growth check needs samples");
  const double t0 = y_samples.front().first;
  const double Y0 = y_samples.front().second;
  GrowthVerdict v;
  v.pass = true;
  v.worst_margin = -1.0;
  for (const auto& [t, Y] : y_samples) {
    const double bound = Y0 * std::exp(2.0 * (t - t0));
    const double margin = bound > 0.0 ? Y / bound - 1.0 : (Y > 0.0 ? 1.0 : 0.0);
    v.worst_margin = std::max(v.worst_margin, margin);
    if (margin > tol) v.pass = false;
  }
  return v;
}

BihariBound bihari_bound(double X0, double C, double t) {
  if (t < 0.0) throw UsageError("bihari_bound needs t >= 0");
  if (X0 < 0.0 || !(C > 0.0)) throw UsageError("bihari_bound needs X0 >= 0, C > 0");
  const double a = 1.5 * C * C + X0;
  const double denom = 1.0 - a * (1.5 + C) * t;
  if (denom <= 0.0) return {true, 0.0};
  return {false, a / denom};
}

BootstrapVerdict gradtheta_bootstrap_check(
    const std::vector<BootstrapSample>& traj) {
  if (traj.empty()) throw UsageError("bootstrap check needs samples");
  const double g0 = traj.front().gradtheta_linf;
  double integral = 0.0;
  double needed = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (i > 0) {
      if (!(traj[i].t > traj[i - 1].t))
        throw UsageError("bootstrap samples must advance in time");
      integral += 0.5 * (traj[i - 1].gradu_linf + traj[i].gradu_linf) *
                  (traj[i].t - traj[i - 1].t);
    }
    const double denom = g0 * std::exp(integral);
    if (denom > 0.0)
      needed = std::max(needed, traj[i].gradtheta_linf / denom);
    else if (traj[i].gradtheta_linf > 0.0)
      return {false, std::numeric_limits<double>::infinity()};
  }
  if (needed == 0.0) needed = 1.0;  // zero trajectory: K = 1 fits
  return {needed < 1e3, needed};
}

double probe_log_sobolev(const SpectralScalar& f, double s, double p) {
  const Grid& g = f.grid();
  if (!(s * p > g.dim()))
    throw ConfigError("log-Sobolev probe requires s*p > dim");
  const double amp = f.max_abs();
  if (amp == 0.0) throw UsageError("log-Sobolev ratio undefined for the zero field");
  const std::array<int, 3> zero{0, 0, 0};
  if (std::abs(f.coeff(zero)) > 1e-13 * amp)
    throw UsageError("log-Sobolev probe requires a mean-zero field");

  const double linf = norm_linf(f);
  const double bmo = norm_bmo_approx(f);
  const double wsp = norm_lp(bessel_potential(f, s), p);
  const double logplus = wsp >= 1.0 ? std::log(wsp) : 0.0;
  return linf / (1.0 + bmo * (1.0 + logplus));
}

}  // namespace mbspec
