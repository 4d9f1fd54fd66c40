#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>

#include "mbspec/norms.hpp"
#include "mbspec/operators.hpp"
#include "oracles.hpp"

using namespace mbspec;

TEST_CASE("H^s of a single lattice mode is a (1+|k|^2)^{s/2}") {
  const Grid g(2, 16);
  SpectralScalar f(g);
  f[g.index_of({2, 1, 0})] = Complex{0.0, 0.7};  // one entry, no partner
  const double expect = 0.7 * std::pow(1.0 + 5.0, 1.25);
  CHECK(norm_hs(f, 2.5) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(norm_l2(f) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("H^s matches the naive mode-by-mode summation oracle to 1e-12") {
  for (int dim : {2, 3}) {
    const Grid g(dim, dim == 2 ? 32 : 12);
    Rng rng(17);
    const SpectralScalar f =
        random_band_scalar(g, 1.0, g.n() / 2.0 - 1.0, 0.8, rng);
    for (double s : {0.0, 1.5, 3.0}) {
      const double ours = norm_hs(f, s);
      const double naive = oracle::naive_hs(f, s);
      CHECK(ours == doctest::Approx(naive).epsilon(1e-12));
    }
  }
}

TEST_CASE("quadrature L2 agrees with the Plancherel L2") {
  const Grid g(2, 32);
  Rng rng(21);
  const SpectralScalar f = random_band_scalar(g, 1.0, 9.0, 1.0, rng);
  CHECK(norm_lp(f, 2.0) == doctest::Approx(norm_l2(f)).epsilon(1e-12));
}

TEST_CASE("constant field has zero BMO and zero Besov-high blocks") {
  const Grid g(2, 16);
  SpectralScalar c(g);
  c.set_mode({0, 0, 0}, Complex{3.0, 0.0});
  CHECK(norm_bmo_approx(c) == 0.0);
  CHECK(norm_besov0_inf_inf(c) == doctest::Approx(3.0));  // block j = -1 only
  CHECK(norm_linf(c) == doctest::Approx(3.0));
}

TEST_CASE("BMO approx is bounded by 2 Linf; Besov by occupied blocks x Linf") {
  const Grid g(2, 16);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(500 + seed);
    const SpectralScalar f = random_band_scalar(g, 1.0, 7.0, 1.0, rng);
    const double linf = norm_linf(f);
    CHECK(norm_bmo_approx(f) <= 2.0 * linf * (1.0 + 1e-12));
    CHECK(norm_besov0_inf_inf(f) <=
          occupied_lp_blocks(f) * linf * (1.0 + 1e-12));
  }
}

TEST_CASE("Lp requires p >= 1") {
  const Grid g(2, 16);
  SpectralScalar f(g);
  f.set_mode({1, 0, 0}, Complex{1.0, 0.0});
  CHECK_THROWS_AS(norm_lp(f, 0.5), ConfigError);
  CHECK(norm_lp(f, 1.0) > 0.0);
}

TEST_CASE("vector norms use the pointwise Euclidean magnitude") {
  const Grid g(2, 16);
  SpectralVector v(g);
  // u = (cos x, cos x): |u(x)| = sqrt(2)|cos x|
  v[0].set_mode({1, 0, 0}, Complex{0.5, 0.0});
  v[1].set_mode({1, 0, 0}, Complex{0.5, 0.0});
  CHECK(norm_linf(v) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(norm_l2(v) ==
        doctest::Approx(std::sqrt(2.0 * (0.25 + 0.25))).epsilon(1e-13));
}

TEST_CASE("norm totals are reproducible across repeated evaluation and threads") {
  const Grid g(2, 32);
  Rng rng(33);
  const SpectralScalar f = random_band_scalar(g, 1.0, 10.0, 1.0, rng);
  const double base_hs = norm_hs(f, 2.7);
  const double base_bmo = norm_bmo_approx(f);
  const double base_lp = norm_lp(f, 3.0);

  // same totals regardless of how many threads run the suite concurrently
  std::vector<std::thread> pool;
  std::vector<double> hs(4), bmo(4), lp(4);
  for (int w = 0; w < 4; ++w)
    pool.emplace_back([&, w] {
      hs[w] = norm_hs(f, 2.7);
      bmo[w] = norm_bmo_approx(f);
      lp[w] = norm_lp(f, 3.0);
    });
  for (auto& t : pool) t.join();
  for (int w = 0; w < 4; ++w) {
    CHECK(hs[w] == base_hs);
    CHECK(bmo[w] == base_bmo);
    CHECK(lp[w] == base_lp);
  }
}

TEST_CASE("norm_suite dispatch covers the whole selector") {
  const Grid g(2, 16);
  Rng rng(44);
  const SpectralScalar f = random_band_scalar(g, 1.0, 5.0, 1.0, rng);
  CHECK(norm_suite(f, NormSpec::L2()) == norm_l2(f));
  CHECK(norm_suite(f, NormSpec::Hs(2.0)) == norm_hs(f, 2.0));
  CHECK(norm_suite(f, NormSpec::Lp(4.0)) == norm_lp(f, 4.0));
  CHECK(norm_suite(f, NormSpec::Linf()) == norm_linf(f));
  CHECK(norm_suite(f, NormSpec::Besov()) == norm_besov0_inf_inf(f));
  CHECK(norm_suite(f, NormSpec::Bmo()) == norm_bmo_approx(f));
}
