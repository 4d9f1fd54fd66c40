#include "mbspec/dynamics.hpp"

#include <cmath>
#include <functional>

#include "mbspec/operators.hpp"
#include "mbspec/parallel.hpp"
#include "mbspec/transform.hpp"

namespace mbspec {

std::string to_string(NormFlavor f) {
  switch (f) {
    case NormFlavor::linf: return "linf";
    case NormFlavor::besov: return "besov";
    case NormFlavor::bmo: return "bmo";
  }
  return "besov";
}

NormFlavor norm_flavor_from_string(const std::string& s) {
  if (s == "linf") return NormFlavor::linf;
  if (s == "besov") return NormFlavor::besov;
  if (s == "bmo") return NormFlavor::bmo;
  throw ConfigError("unknown norm flavor '" + s + "' (expected linf|besov|bmo)");
}

void SimConfig::validate() const {
  if (grid.size() == 0) throw ConfigError("grid not set");
  if (dealias != "two_thirds")
    throw ConfigError("unsupported dealias rule '" + dealias + "'");
  if (!(R > 0.0)) throw ConfigError("truncation radius R must be positive");
  if (R > grid.n() / 3.0)
    throw ConfigError("R must satisfy R <= N/3 under the two-thirds rule");
  if (!(s > grid.dim() / 2.0 + 1.0))
    throw ConfigError("Sobolev index must satisfy s > dim/2 + 1");
  if (buoyancy_axis >= grid.dim())
    throw ConfigError("buoyancy axis out of range");
  if (dt_policy == DtPolicy::fixed && !(dt > 0.0))
    throw ConfigError("fixed dt must be positive");
  if (dt_policy == DtPolicy::cfl && (!(cfl_cmax > 0.0) || !(dt_max > 0.0)))
    throw ConfigError("cfl policy needs positive c_max and dt_max");
  if (t_end < 0.0) throw ConfigError("t_end must be nonnegative");
  if (workers < 1) throw ConfigError("workers must be >= 1");
}

namespace {

void require_advectable(const SpectralVector& v, const SimConfig& cfg) {
  if (!(v.grid() == cfg.grid)) throw UsageError("operand grid does not match config");
  if (!v.solenoidal() && solenoidal_defect(v) > 1e-10)
    throw ContractError("advecting field is not solenoidal");
}

// (v . grad) g from pre-rendered physical v, then dealias + S_R.
SpectralScalar advect_scalar(const std::vector<PhysicalField>& phys_v,
                             const SpectralScalar& g, const SimConfig& cfg) {
  const Grid& grid = g.grid();
  PhysicalField prod(grid);
  for (int a = 0; a < grid.dim(); ++a) {
    PhysicalField dg = inverse_transform(directional_derivative(g, a));
    for (std::size_t i = 0; i < grid.size(); ++i)
      prod.values[i] += phys_v[a].values[i] * dg.values[i];
  }
  return truncate(dealias(forward_transform(prod)), cfg.R);
}

SpectralVector advect_vector(const std::vector<PhysicalField>& phys_v,
                             const SpectralVector& g, const SimConfig& cfg) {
  SpectralVector out(g.grid());
  for (int c = 0; c < g.dim(); ++c) out[c] = advect_scalar(phys_v, g[c], cfg);
  return out;
}

SpectralScalar component(const SpectralVector& v, int axis) { return v[axis]; }

}  // namespace

SpectralScalar advect(const SpectralVector& v, const SpectralScalar& g,
                      const SimConfig& cfg) {
  require_advectable(v, cfg);
  return advect_scalar(inverse_transform(v), g, cfg);
}

SpectralVector advect(const SpectralVector& v, const SpectralVector& g,
                      const SimConfig& cfg) {
  require_advectable(v, cfg);
  return advect_vector(inverse_transform(v), g, cfg);
}

Tendency rhs(const State& state, const SimConfig& cfg) {
  require_advectable(state.u, cfg);
  require_advectable(state.b, cfg);
  const int axis = cfg.axis();

  const auto phys_u = inverse_transform(state.u);
  const auto phys_b = inverse_transform(state.b);

  SpectralVector adv_uu, adv_bb, adv_ub, adv_bu;
  SpectralScalar adv_ut;
  const std::function<void()> jobs[] = {
      [&] { adv_uu = advect_vector(phys_u, state.u, cfg); },
      [&] { adv_bb = advect_vector(phys_b, state.b, cfg); },
      [&] { adv_ut = advect_scalar(phys_u, state.theta, cfg); },
      [&] { adv_ub = advect_vector(phys_u, state.b, cfg); },
      [&] { adv_bu = advect_vector(phys_b, state.u, cfg); },
  };
  par::run_jobs(jobs, cfg.workers);

  // buoyancy S_R[theta e_n]; theta already lives in the ball, S_R applied anyway
  SpectralVector buoy(cfg.grid);
  buoy[axis] = truncate(state.theta, cfg.R);

  Tendency out;
  out.du = leray_project(buoy - adv_uu + adv_bb);
  out.dtheta = truncate(component(state.u, axis), cfg.R) - adv_ut;
  out.db = adv_bu - adv_ub;
  if (out.db.all_finite()) certify_solenoidal(out.db);
  return out;
}

namespace {

template <class FieldT>
FieldT commutator_impl(const SpectralVector& f, const FieldT& g, double s,
                       const SimConfig& cfg) {
  if (!(f.grid() == cfg.grid) || !(g.grid() == cfg.grid))
    throw UsageError("operand grid does not match config");
  if (!dealias_safe(f) || !dealias_safe(g))
    throw ContractError("commutator operands exceed the dealias-safe support");

  const auto phys_f = inverse_transform(f);
  auto transport = [&](const FieldT& h) {
    // (f . grad) h, dealiased, without the S_R ball mask
    if constexpr (std::is_same_v<FieldT, SpectralScalar>) {
      const Grid& grid = h.grid();
      PhysicalField prod(grid);
      for (int a = 0; a < grid.dim(); ++a) {
        PhysicalField dh = inverse_transform(directional_derivative(h, a));
        for (std::size_t i = 0; i < grid.size(); ++i)
          prod.values[i] += phys_f[a].values[i] * dh.values[i];
      }
      return dealias(forward_transform(prod));
    } else {
      FieldT out(h.grid());
      for (int c = 0; c < h.dim(); ++c) {
        const Grid& grid = h.grid();
        PhysicalField prod(grid);
        for (int a = 0; a < grid.dim(); ++a) {
          PhysicalField dh = inverse_transform(directional_derivative(h[c], a));
          for (std::size_t i = 0; i < grid.size(); ++i)
            prod.values[i] += phys_f[a].values[i] * dh.values[i];
        }
        out[c] = dealias(forward_transform(prod));
      }
      return out;
    }
  };

  return bessel_potential(transport(g), s) - transport(bessel_potential(g, s));
}

}  // namespace

SpectralScalar commutator_js(const SpectralVector& f, const SpectralScalar& g,
                             double s, const SimConfig& cfg) {
  return commutator_impl(f, g, s, cfg);
}

SpectralVector commutator_js(const SpectralVector& f, const SpectralVector& g,
                             double s, const SimConfig& cfg) {
  return commutator_impl(f, g, s, cfg);
}

}  // namespace mbspec
