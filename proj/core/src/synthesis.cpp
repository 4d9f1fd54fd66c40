#include "mbspec/synthesis.hpp"

#include <cmath>

#include "mbspec/operators.hpp"

namespace mbspec {

namespace {

const Complex I{0.0, 1.0};

// enumerate the sign combinations of the +-1 tensor modes
template <class Fn>
void for_each_sign(int dim, Fn&& fn) {
  for (int sx = -1; sx <= 1; sx += 2)
    for (int sy = -1; sy <= 1; sy += 2) {
      if (dim == 2) {
        fn(sx, sy, 0);
      } else {
        for (int sz = -1; sz <= 1; sz += 2) fn(sx, sy, sz);
      }
    }
}

}  // namespace

SpectralVector taylor_green_velocity(const Grid& g, double amplitude) {
  SpectralVector u(g);
  if (g.dim() == 2) {
    // u = A (sin x cos y, -cos x sin y)
    for_each_sign(2, [&](int sx, int sy, int) {
      const std::array<int, 3> k{sx, sy, 0};
      u[0][g.index_of(k)] = amplitude * (-I) * (0.25 * sx);
      u[1][g.index_of(k)] = amplitude * I * (0.25 * sy);
    });
  } else {
    // u = A (sin x cos y cos z, -cos x sin y cos z, 0)
    for_each_sign(3, [&](int sx, int sy, int sz) {
      const std::array<int, 3> k{sx, sy, sz};
      u[0][g.index_of(k)] = amplitude * (-I) * (0.125 * sx);
      u[1][g.index_of(k)] = amplitude * I * (0.125 * sy);
    });
  }
  u.set_solenoidal(true);
  return u;
}

SpectralVector taylor_green_magnetic(const Grid& g, double amplitude) {
  SpectralVector b(g);
  if (amplitude == 0.0) {
    b.set_solenoidal(true);
    return b;
  }
  // b = A (-cos x sin y, sin x cos y [, 0]), from the potential cos x cos y
  for_each_sign(2, [&](int sx, int sy, int) {
    const std::array<int, 3> k{sx, sy, 0};
    b[0][g.index_of(k)] = amplitude * I * (0.25 * sy);
    b[1][g.index_of(k)] = amplitude * (-I) * (0.25 * sx);
  });
  b.set_solenoidal(true);
  return b;
}

SpectralScalar product_sine_scalar(const Grid& g, double amplitude) {
  SpectralScalar f(g);
  if (amplitude == 0.0) return f;
  if (g.dim() == 2) {
    // sin x sin y: coeff(sx, sy) = -sx sy / 4
    for_each_sign(2, [&](int sx, int sy, int) {
      f[g.index_of({sx, sy, 0})] = Complex{-amplitude * 0.25 * sx * sy, 0.0};
    });
  } else {
    // sin x sin y sin z: coeff = i sx sy sz / 8
    for_each_sign(3, [&](int sx, int sy, int sz) {
      f[g.index_of({sx, sy, sz})] = amplitude * I * (0.125 * sx * sy * sz);
    });
  }
  return f;
}

SpectralScalar random_band_scalar(const Grid& g, double band_min, double band_max,
                                  double spectrum_exponent, Rng& rng) {
  if (!(band_min >= 1.0) || !(band_max >= band_min))
    throw ConfigError("random band needs 1 <= band_min <= band_max");
  SpectralScalar f(g);
  const double lo2 = band_min * band_min, hi2 = band_max * band_max;
  const int nyq = g.n() / 2;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.wavevector(i);
    bool oddball = false;
    for (int a = 0; a < g.dim(); ++a)
      if (k[a] == -nyq) oddball = true;
    if (oddball) continue;
    const double k2 = static_cast<double>(g.k_squared(i));
    if (k2 < lo2 || k2 > hi2) continue;
    const std::size_t j = g.conjugate_index(i);
    if (j < i) continue;  // partner already assigned
    const double amp = std::pow(k2, -0.5 * spectrum_exponent);
    if (j == i) {
      f[i] = Complex{amp * rng.normal(), 0.0};
    } else {
      const Complex z{amp * rng.normal(), amp * rng.normal()};
      f[i] = z;
      f[j] = std::conj(z);
    }
  }
  return f;
}

SpectralVector random_band_vector(const Grid& g, double band_min, double band_max,
                                  double spectrum_exponent, Rng& rng) {
  SpectralVector v(g);
  for (int a = 0; a < g.dim(); ++a)
    v[a] = random_band_scalar(g, band_min, band_max, spectrum_exponent, rng);
  return leray_project(v);
}

SpectralScalar power_law_scalar(const Grid& g, double spectrum_exponent) {
  SpectralScalar f(g);
  const int nyq = g.n() / 2;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto k = g.wavevector(i);
    bool oddball = false;
    for (int a = 0; a < g.dim(); ++a)
      if (k[a] == -nyq) oddball = true;
    if (oddball) continue;
    const double k2 = static_cast<double>(g.k_squared(i));
    if (k2 == 0.0) continue;
    f[i] = Complex{std::pow(k2, -0.5 * spectrum_exponent), 0.0};
  }
  return f;
}

}  // namespace mbspec
