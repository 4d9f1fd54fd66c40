#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mbspec/dynamics.hpp"
#include "mbspec/norms.hpp"
#include "mbspec/operators.hpp"
#include "oracles.hpp"

using namespace mbspec;

namespace {

SimConfig small_cfg(int dim, int N, double R) {
  SimConfig cfg;
  cfg.grid = Grid(dim, N);
  cfg.R = R;
  cfg.s = dim / 2.0 + 2.0;
  return cfg;
}

}  // namespace

TEST_CASE("advect: zero advecting field gives zero tendency") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  SpectralVector zero(cfg.grid);
  zero.set_solenoidal(true);
  Rng rng(1);
  const SpectralScalar g = random_band_scalar(cfg.grid, 1.0, 4.0, 1.0, rng);
  CHECK(advect(zero, g, cfg).max_abs() == 0.0);
}

TEST_CASE("advect: constant transport of a single mode is i (c.k) g") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  SpectralVector c(cfg.grid);
  c[0].set_mode({0, 0, 0}, Complex{0.7, 0.0});
  c[1].set_mode({0, 0, 0}, Complex{-0.2, 0.0});
  c.set_solenoidal(true);
  SpectralScalar g(cfg.grid);
  g.set_mode({2, 1, 0}, Complex{0.4, 0.1});
  const SpectralScalar out = advect(c, g, cfg);
  const Complex expect =
      Complex{0.0, 0.7 * 2.0 - 0.2 * 1.0} * Complex{0.4, 0.1};
  CHECK(std::abs(out.coeff({2, 1, 0}) - expect) < 1e-14);
  CHECK(std::abs(out.coeff({-2, -1, 0}) - std::conj(expect)) < 1e-14);
}

TEST_CASE("advect matches the direct convolution oracle on 8^2 and 8^3") {
  for (int dim : {2, 3}) {
    const SimConfig cfg = small_cfg(dim, 8, 2.0);
    const State st = oracle::random_state(cfg, 99 + dim);
    for (int comp = 0; comp < dim; ++comp) {
      const SpectralScalar ours = advect(st.u, st.b[comp], cfg);
      const SpectralScalar ref = oracle::conv_advect(st.u, st.b[comp], cfg);
      CHECK(oracle::max_mode_error(ours, ref) < 1e-12);
    }
    const SpectralScalar ours_theta = advect(st.u, st.theta, cfg);
    const SpectralScalar ref_theta = oracle::conv_advect(st.u, st.theta, cfg);
    CHECK(oracle::max_mode_error(ours_theta, ref_theta) < 1e-12);
  }
}

TEST_CASE("Taylor-Green self-advection matches the oracle (2D, 8^2)") {
  const SimConfig cfg = small_cfg(2, 8, 2.0);
  const SpectralVector u = truncate(taylor_green_velocity(cfg.grid, 1.0), cfg.R);
  for (int comp = 0; comp < 2; ++comp) {
    const SpectralScalar ours = advect(u, u[comp], cfg);
    const SpectralScalar ref = oracle::conv_advect(u, u[comp], cfg);
    CHECK(oracle::max_mode_error(ours, ref) < 1e-12);
  }
}

TEST_CASE("advective form equals divergence form for solenoidal velocity") {
  const SimConfig cfg = small_cfg(2, 32, 8.0);
  const State st = oracle::random_state(cfg, 7);
  const SpectralScalar adv = advect(st.u, st.theta, cfg);

  // divergence form: S_R[ sum_a d_a (u_a theta) ]
  const auto phys_u = inverse_transform(st.u);
  const PhysicalField phys_theta = inverse_transform(st.theta);
  SpectralScalar div_form(cfg.grid);
  for (int a = 0; a < 2; ++a) {
    PhysicalField prod(cfg.grid);
    for (std::size_t i = 0; i < cfg.grid.size(); ++i)
      prod.values[i] = phys_u[a].values[i] * phys_theta.values[i];
    div_form += directional_derivative(dealias(forward_transform(prod)), a);
  }
  div_form = truncate(dealias(div_form), cfg.R);

  const double scale = std::max(adv.max_abs(), 1e-30);
  CHECK(oracle::max_mode_error(adv, div_form) < 1e-12 * scale);
}

TEST_CASE("advect rejects a non-solenoidal advecting field") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  SpectralVector bad(cfg.grid);
  bad[0].set_mode({1, 0, 0}, Complex{0.0, -0.5});  // gradient-like: k || v
  Rng rng(3);
  const SpectralScalar g = random_band_scalar(cfg.grid, 1.0, 4.0, 1.0, rng);
  CHECK_THROWS_AS(advect(bad, g, cfg), ContractError);
}

TEST_CASE("rhs reduces to buoyancy forcing when u = b = 0") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  State st;
  st.u = SpectralVector(cfg.grid);
  st.u.set_solenoidal(true);
  st.b = SpectralVector(cfg.grid);
  st.b.set_solenoidal(true);
  Rng rng(4);
  st.theta = truncate(random_band_scalar(cfg.grid, 1.0, 4.0, 1.0, rng), cfg.R);

  const Tendency f = rhs(st, cfg);
  SpectralVector buoy(cfg.grid);
  buoy[1] = st.theta;  // e_n is the last axis by default
  const SpectralVector expect = leray_project(buoy);
  for (int a = 0; a < 2; ++a)
    CHECK(oracle::max_mode_error(f.du[a], expect[a]) < 1e-14);
  CHECK(f.dtheta.max_abs() == 0.0);
  CHECK(f.db.max_abs() == 0.0);
}

TEST_CASE("rhs with theta = b = 0 is truncated incompressible Euler") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  State st = oracle::random_state(cfg, 5);
  st.theta = SpectralScalar(cfg.grid);
  st.b = SpectralVector(cfg.grid);
  st.b.set_solenoidal(true);
  const Tendency f = rhs(st, cfg);
  CHECK(f.db.max_abs() == 0.0);
  // dtheta = S_R[u . e_n] survives as the Rayleigh-Benard source
  CHECK(oracle::max_mode_error(f.dtheta, st.u[1]) < 1e-14);
  CHECK(f.du.solenoidal());
}

TEST_CASE("Galerkin energy identity Eq-style cancellation on random states") {
  for (int dim : {2, 3}) {
    const SimConfig cfg = small_cfg(dim, 16, 5.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const State st = oracle::random_state(cfg, 1000 + seed);
      const Tendency f = rhs(st, cfg);
      const int axis = cfg.axis();
      const double lhs = inner_l2(f.du, st.u) + inner_l2(f.dtheta, st.theta) +
                         inner_l2(f.db, st.b);
      const double rhs_terms = inner_l2(st.theta, st.u[axis]) +
                               inner_l2(st.u[axis], st.theta);
      const double Y = norm_l2(st.u) * norm_l2(st.u) +
                       norm_l2(st.theta) * norm_l2(st.theta) +
                       norm_l2(st.b) * norm_l2(st.b);
      CHECK(std::abs(lhs - rhs_terms) < 1e-10 * std::max(Y, 1e-30));
    }
  }
}

TEST_CASE("trilinear cancellations: (S_R[(v.grad)g], g) = 0 for g in V_R") {
  const SimConfig cfg = small_cfg(2, 32, 10.0);
  const State st = oracle::random_state(cfg, 42);
  const double Y = norm_l2(st.u) * norm_l2(st.u);

  const double uu = inner_l2(advect(st.u, st.u, cfg), st.u);
  const double ut = inner_l2(advect(st.u, st.theta, cfg), st.theta);
  const double ub = inner_l2(advect(st.u, st.b, cfg), st.b);
  CHECK(std::abs(uu) < 1e-10 * std::max(Y, 1e-30));
  CHECK(std::abs(ut) < 1e-10 * std::max(Y, 1e-30));
  CHECK(std::abs(ub) < 1e-10 * std::max(Y, 1e-30));
}

TEST_CASE("antisymmetry: (advect(b,b),u) + (advect(b,u),b) = 0") {
  for (int dim : {2, 3}) {
    const SimConfig cfg = small_cfg(dim, 16, 5.0);
    const State st = oracle::random_state(cfg, 77 + dim);
    const double lhs = inner_l2(advect(st.b, st.b, cfg), st.u) +
                       inner_l2(advect(st.b, st.u, cfg), st.b);
    const double scale = norm_l2(st.u) * norm_l2(st.u) +
                         norm_l2(st.b) * norm_l2(st.b);
    CHECK(std::abs(lhs) < 1e-10 * std::max(scale, 1e-30));
  }
}

TEST_CASE("tendencies live in the ball and stay there under re-truncation") {
  const SimConfig cfg = small_cfg(2, 16, 4.0);
  const State st = oracle::random_state(cfg, 11);
  const Tendency f = rhs(st, cfg);
  CHECK(supported_in_ball(f.du, cfg.R));
  CHECK(supported_in_ball(f.db, cfg.R));
  CHECK(supported_in_ball(f.dtheta, cfg.R));
  for (int a = 0; a < 2; ++a) {
    const SpectralScalar again = truncate(f.du[a], cfg.R);
    for (std::size_t i = 0; i < cfg.grid.size(); ++i)
      CHECK(again[i] == f.du[a][i]);
  }
  CHECK(solenoidal_defect(f.du) <= 1e-10);
  CHECK(solenoidal_defect(f.db) <= 1e-10);
}

TEST_CASE("rhs is identical across worker counts") {
  SimConfig cfg = small_cfg(2, 16, 5.0);
  const State st = oracle::random_state(cfg, 123);
  cfg.workers = 1;
  const Tendency a = rhs(st, cfg);
  cfg.workers = 4;
  const Tendency b = rhs(st, cfg);
  for (int c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
      CHECK(a.du[c][i] == b.du[c][i]);
      CHECK(a.db[c][i] == b.db[c][i]);
    }
  }
  for (std::size_t i = 0; i < cfg.grid.size(); ++i)
    CHECK(a.dtheta[i] == b.dtheta[i]);
}

TEST_CASE("commutator: constants commute with J^s; J^0 is exact") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  SpectralVector c(cfg.grid);
  c[0].set_mode({0, 0, 0}, Complex{1.3, 0.0});
  Rng rng(6);
  const SpectralScalar g = random_band_scalar(cfg.grid, 1.0, 4.0, 1.0, rng);
  const SpectralScalar comm_const = commutator_js(c, g, 2.0, cfg);
  CHECK(comm_const.max_abs() < 1e-12 * std::max(1.0, g.max_abs()));

  const State st = oracle::random_state(cfg, 8, 4.0);
  const SpectralScalar comm_zero = commutator_js(st.u, g, 0.0, cfg);
  CHECK(comm_zero.max_abs() == 0.0);
}

TEST_CASE("commutator is bilinear in (f, g)") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  const State a = oracle::random_state(cfg, 21, 4.0);
  const State b = oracle::random_state(cfg, 22, 4.0);
  Rng rng(23);
  const SpectralScalar g1 = random_band_scalar(cfg.grid, 1.0, 4.0, 1.0, rng);
  const double s = 1.8;

  SpectralVector fsum = a.u;
  fsum += b.u;
  const SpectralScalar lhs = commutator_js(fsum, g1, s, cfg);
  const SpectralScalar rhs_sum =
      commutator_js(a.u, g1, s, cfg) + commutator_js(b.u, g1, s, cfg);
  const double scale = std::max(lhs.max_abs(), 1e-30);
  CHECK(oracle::max_mode_error(lhs, rhs_sum) < 1e-12 * scale);
}

TEST_CASE("commutator agrees with the mode-space convolution oracle on 8^2") {
  const SimConfig cfg = small_cfg(2, 8, 2.0);
  const State st = oracle::random_state(cfg, 31, 2.0);
  Rng rng(32);
  const SpectralScalar g = random_band_scalar(cfg.grid, 1.0, 2.0, 1.0, rng);
  for (double s : {1.0, 2.5}) {
    const SpectralScalar ours = commutator_js(st.u, g, s, cfg);
    const SpectralScalar ref = oracle::conv_commutator(st.u, g, s);
    const double scale = std::max({ours.max_abs(), ref.max_abs(), 1e-30});
    CHECK(oracle::max_mode_error(ours, ref) < 1e-12 * scale);
  }
}

TEST_CASE("commutator rejects operands outside the dealias-safe region") {
  const SimConfig cfg = small_cfg(2, 16, 5.0);
  SpectralScalar g(cfg.grid);
  g.set_mode({6, 0, 0}, Complex{1.0, 0.0});  // kmax is 5 on N = 16
  const State st = oracle::random_state(cfg, 9, 4.0);
  CHECK_THROWS_AS(commutator_js(st.u, g, 1.0, cfg), ContractError);
}
