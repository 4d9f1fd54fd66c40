#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "mbspec/norms.hpp"
#include "mbspec/operators.hpp"
#include "oracles.hpp"

using namespace mbspec;

namespace {

SpectralScalar random_field(const Grid& g, std::uint64_t seed,
                            double band_max = 0.0) {
  Rng rng(seed);
  if (band_max <= 0.0) band_max = g.n() / 2.0 - 1.0;
  return random_band_scalar(g, 1.0, band_max, 1.0, rng);
}

bool hermitian(const SpectralScalar& f) {
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (f[i] != std::conj(f[g.conjugate_index(i)])) return false;
  return true;
}

}  // namespace

TEST_CASE("bessel potential: unit multiplier, single-mode weight, inverse") {
  const Grid g(2, 16);
  SpectralScalar f = random_field(g, 1);

  const SpectralScalar same = bessel_potential(f, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(same[i] == f[i]);

  SpectralScalar one(g);
  one.set_mode({1, 0, 0}, Complex{0.3, 0.0});
  const SpectralScalar lifted = bessel_potential(one, 2.0);
  CHECK(std::abs(lifted.coeff({1, 0, 0}) - Complex{0.6, 0.0}) < 1e-15);

  const SpectralScalar round = bessel_potential(bessel_potential(f, 1.7), -1.7);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(round[i] - f[i]));
  CHECK(worst < 1e-12 * f.max_abs());
}

TEST_CASE("bessel potential semigroup: J^s J^t = J^{s+t} to 1e-12") {
  const Grid g(2, 16);
  for (std::uint64_t seed : {2, 3, 4}) {
    const SpectralScalar f = random_field(g, seed);
    const SpectralScalar a = bessel_potential(bessel_potential(f, 0.9), 1.4);
    const SpectralScalar b = bessel_potential(f, 2.3);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      worst = std::max(worst, std::abs(a[i] - b[i]));
      scale = std::max(scale, std::abs(b[i]));
    }
    CHECK(worst < 1e-12 * scale);
  }
}

TEST_CASE("truncate: ball coverage, indicator action, idempotence") {
  const Grid g(2, 16);
  SpectralScalar f = random_field(g, 5);

  const double cover = g.n() * std::sqrt(2.0) / 2.0;
  const SpectralScalar all = truncate(f, cover);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(all[i] == f[i]);

  SpectralScalar one(g);
  one.set_mode({3, 0, 0}, Complex{1.0, 0.5});
  CHECK(truncate(one, 2.0).max_abs() == 0.0);

  SpectralScalar two(g);
  two.set_mode({1, 0, 0}, Complex{1.0, 0.0});
  two.set_mode({0, 4, 0}, Complex{0.0, 2.0});
  const SpectralScalar cut = truncate(two, 2.0);
  CHECK(cut.coeff({1, 0, 0}) == Complex{1.0, 0.0});
  CHECK(cut.coeff({0, 4, 0}) == Complex{0.0, 0.0});

  const SpectralScalar once = truncate(f, 5.0);
  const SpectralScalar twice = truncate(once, 5.0);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(twice[i] == once[i]);

  CHECK_THROWS_AS(truncate(f, 0.0), ConfigError);
  CHECK_THROWS_AS(truncate(f, -1.0), ConfigError);
}

TEST_CASE("truncate is self-adjoint and commutes with bessel potential") {
  const Grid g(2, 16);
  const SpectralScalar f = random_field(g, 6);
  const SpectralScalar h = random_field(g, 7);
  const double lhs = inner_l2(truncate(f, 4.0), h);
  const double rhs_ip = inner_l2(f, truncate(h, 4.0));
  CHECK(lhs == doctest::Approx(rhs_ip).epsilon(1e-12));

  const SpectralScalar a = truncate(bessel_potential(f, 1.3), 4.0);
  const SpectralScalar b = bessel_potential(truncate(f, 4.0), 1.3);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(std::abs(a[i] - b[i]) <= 1e-15 * std::max(1.0, std::abs(a[i])));
}

TEST_CASE("truncation decay bound holds with constant 1 (slack 1 + 1e-10)") {
  const Grid g(2, 32);
  const double s = 2.0;
  for (double k : {1.0, 2.0}) {
    const double a = s + k + g.dim() / 2.0 + 0.51;
    const SpectralScalar f = power_law_scalar(g, a);
    const double denom = norm_hs(f, s + k);
    for (double R : {3.0, 5.0, 8.0, 12.0}) {
      const double err = norm_hs(truncate(f, R) - f, s);
      CHECK(err <= (1.0 + 1e-10) * denom / std::pow(R, k));
    }
  }
}

TEST_CASE("Sobolev interpolation holds with constant 1; equality for single modes") {
  const Grid g(2, 16);
  const double s = 3.0, sp = 1.2;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SpectralScalar f = random_field(g, 100 + seed);
    const double lhs = norm_hs(f, sp);
    const double rhs_b =
        std::pow(norm_l2(f), 1.0 - sp / s) * std::pow(norm_hs(f, s), sp / s);
    CHECK(lhs <= rhs_b * (1.0 + 1e-12));
  }
  SpectralScalar one(g);
  one.set_mode({2, 1, 0}, Complex{0.4, -0.2});
  const double lhs = norm_hs(one, sp);
  const double rhs_b =
      std::pow(norm_l2(one), 1.0 - sp / s) * std::pow(norm_hs(one, s), sp / s);
  CHECK(lhs == doctest::Approx(rhs_b).epsilon(1e-12));
}

TEST_CASE("leray projection: kernel, fixed points, per-mode split") {
  const Grid g(2, 16);
  const SpectralScalar phi = random_field(g, 8);
  const SpectralVector grad_phi = gradient(phi);
  SpectralVector killed = leray_project(grad_phi);
  // mode 0 of a gradient is zero, so the whole projection vanishes
  CHECK(killed.max_abs() < 1e-15 * std::max(1.0, grad_phi.max_abs()));

  Rng rng(9);
  SpectralVector v = random_band_vector(g, 1.0, 6.0, 1.0, rng);  // projected
  const SpectralVector again = leray_project(v);
  double worst = 0.0;
  for (int a = 0; a < 2; ++a)
    for (std::size_t i = 0; i < g.size(); ++i)
      worst = std::max(worst, std::abs(again[a][i] - v[a][i]));
  CHECK(worst <= 1e-14 * std::max(1.0, v.max_abs()));
  CHECK(again.solenoidal());

  // at k = (1,0): parallel content dies, perpendicular survives
  SpectralVector par(g), perp(g);
  par[0].set_mode({1, 0, 0}, Complex{1.0, 0.0});
  perp[1].set_mode({1, 0, 0}, Complex{1.0, 0.0});
  CHECK(leray_project(par).max_abs() < 1e-15);
  const SpectralVector kept = leray_project(perp);
  CHECK(std::abs(kept[1].coeff({1, 0, 0}) - Complex{1.0, 0.0}) < 1e-15);

  // mean mode is untouched
  SpectralVector mean(g);
  mean[0].set_mode({0, 0, 0}, Complex{2.0, 0.0});
  CHECK(leray_project(mean)[0].coeff({0, 0, 0}) == Complex{2.0, 0.0});
}

TEST_CASE("differential operators: analytic derivative, exact identities") {
  const Grid g(2, 16);
  // gradient of sin(x1) = (cos(x1), 0)
  SpectralScalar sinx(g);
  sinx.set_mode({1, 0, 0}, Complex{0.0, -0.5});
  const SpectralVector grad = gradient(sinx);
  CHECK(std::abs(grad[0].coeff({1, 0, 0}) - Complex{0.5, 0.0}) < 1e-15);
  CHECK(grad[1].max_abs() < 1e-16);

  // curl(grad(phi)) = 0 to machine precision (one rounding per k product)
  const SpectralScalar phi = random_field(g, 11);
  CHECK(curl_2d(gradient(phi)).max_abs() <
        16.0 * std::numeric_limits<double>::epsilon() * g.n() * phi.max_abs());

  const Grid g3(3, 8);
  const SpectralScalar phi3 = random_field(g3, 12, 3.0);
  const SpectralVector cg = curl_3d(gradient(phi3));
  CHECK(cg.max_abs() <
        16.0 * std::numeric_limits<double>::epsilon() * g3.n() * phi3.max_abs());

  // divergence(curl(A)) = 0 to machine precision in 3D
  SpectralVector A(g3);
  Rng rng(13);
  for (int a = 0; a < 3; ++a) A[a] = random_band_scalar(g3, 1.0, 3.0, 1.0, rng);
  CHECK(divergence(curl_3d(A)).max_abs() <
        16.0 * std::numeric_limits<double>::epsilon() * g3.n() * A.max_abs());

  // rank mismatches
  SpectralVector v2(g);
  CHECK_THROWS_AS(curl_3d(v2), UsageError);
  SpectralVector v3(g3);
  CHECK_THROWS_AS(curl_2d(v3), UsageError);
  CHECK_THROWS_AS(directional_derivative(phi, 2), UsageError);
}

TEST_CASE("2D Taylor-Green vorticity is 2 sin x sin y (symbolic oracle)") {
  const Grid g(2, 16);
  const SpectralVector u = taylor_green_velocity(g, 1.0);
  const SpectralScalar w = curl_2d(u);
  const SpectralScalar expected = product_sine_scalar(g, 2.0);
  CHECK(oracle::max_mode_error(w, expected) < 1e-15);
}

TEST_CASE("Littlewood-Paley blocks: membership, exact partition, orthogonality") {
  const Grid g(2, 16);
  SpectralScalar one(g);
  one.set_mode({3, 0, 0}, Complex{1.0, 0.0});
  CHECK(lp_block(one, 1).coeff({3, 0, 0}) == Complex{1.0, 0.0});  // 2 < 3 <= 4
  CHECK(lp_block(one, 0).max_abs() == 0.0);
  CHECK(lp_block(one, 2).max_abs() == 0.0);

  SpectralScalar dc(g);
  dc.set_mode({0, 0, 0}, Complex{1.5, 0.0});
  CHECK(lp_block(dc, -1).coeff({0, 0, 0}) == Complex{1.5, 0.0});

  const SpectralScalar f = random_field(g, 20);
  SpectralScalar sum(g);
  double l2sq_blocks = 0.0;
  for (int j = -1; j <= lp_block_max(g); ++j) {
    const SpectralScalar blk = lp_block(f, j);
    sum += blk;
    const double nb = norm_l2(blk);
    l2sq_blocks += nb * nb;
  }
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(sum[i] == f[i]);  // exact
  const double n2 = norm_l2(f) * norm_l2(f);
  CHECK(l2sq_blocks == doctest::Approx(n2).epsilon(1e-12));

  CHECK_THROWS_AS(lp_block(f, -2), UsageError);
}

TEST_CASE("Hermitian symmetry survives randomized operator compositions") {
  const Grid g(2, 16);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(300 + seed);
    SpectralScalar f = random_field(g, 400 + seed);
    f = bessel_potential(f, -0.7 + rng.uniform() * 3.0);
    f = truncate(f, 1.0 + rng.uniform() * 6.0);
    f = lp_block(f, int(rng.uniform() * 3.0));
    f = directional_derivative(f, int(rng.uniform() * 2.0));
    f = dealias(f);
    CHECK(hermitian(f));
  }
}
