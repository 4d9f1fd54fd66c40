#include "mbspec/operators.hpp"

#include <cmath>
#include <cstdlib>

namespace mbspec {

SpectralScalar bessel_potential(const SpectralScalar& f, double s) {
  const Grid& g = f.grid();
  SpectralScalar out = f;
  auto c = out.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double w = 1.0 + static_cast<double>(g.k_squared(i));
    c[i] *= std::pow(w, 0.5 * s);
  }
  return out;
}

SpectralVector bessel_potential(const SpectralVector& v, double s) {
  SpectralVector out = v;
  for (int a = 0; a < v.dim(); ++a) out[a] = bessel_potential(v[a], s);
  return out;
}

SpectralScalar truncate(const SpectralScalar& f, double R) {
  if (!(R > 0.0)) throw ConfigError("truncation radius must be positive");
  const Grid& g = f.grid();
  const double R2 = R * R;
  SpectralScalar out = f;
  auto c = out.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (static_cast<double>(g.k_squared(i)) > R2) c[i] = Complex{0.0, 0.0};
  return out;
}

SpectralVector truncate(const SpectralVector& v, double R) {
  SpectralVector out = v;
  for (int a = 0; a < v.dim(); ++a) out[a] = truncate(v[a], R);
  out.set_solenoidal(v.solenoidal());  // multiplier ops preserve k.v = 0
  return out;
}

bool supported_in_ball(const SpectralScalar& f, double R) {
  const Grid& g = f.grid();
  const double R2 = R * R;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (static_cast<double>(g.k_squared(i)) > R2 && f[i] != Complex{0.0, 0.0})
      return false;
  return true;
}

bool supported_in_ball(const SpectralVector& v, double R) {
  for (int a = 0; a < v.dim(); ++a)
    if (!supported_in_ball(v[a], R)) return false;
  return true;
}

SpectralVector leray_project(const SpectralVector& v) {
  const Grid& g = v.grid();
  const int d = g.dim();
  SpectralVector out = v;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    const double k2 = static_cast<double>(g.k_squared(i));
    if (k2 == 0.0) continue;
    Complex dot{0.0, 0.0};
    for (int a = 0; a < d; ++a) dot += double(k[a]) * v[a][i];
    const Complex scale = dot / k2;
    for (int a = 0; a < d; ++a) out[a][i] -= double(k[a]) * scale;
  }
  out.set_solenoidal(true);
  return out;
}

SpectralScalar directional_derivative(const SpectralScalar& f, int axis) {
  const Grid& g = f.grid();
  if (axis < 0 || axis >= g.dim())
    throw UsageError("derivative axis out of range");
  SpectralScalar out = f;
  auto c = out.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    c[i] *= Complex{0.0, double(k[axis])};
  }
  return out;
}

SpectralVector gradient(const SpectralScalar& f) {
  const Grid& g = f.grid();
  SpectralVector out(g);
  for (int a = 0; a < g.dim(); ++a) out[a] = directional_derivative(f, a);
  return out;
}

SpectralScalar divergence(const SpectralVector& v) {
  const Grid& g = v.grid();
  SpectralScalar out(g);
  auto c = out.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    Complex dot{0.0, 0.0};
    for (int a = 0; a < g.dim(); ++a) dot += double(k[a]) * v[a][i];
    c[i] = Complex{0.0, 1.0} * dot;
  }
  return out;
}

SpectralScalar curl_2d(const SpectralVector& v) {
  if (v.dim() != 2) throw UsageError("curl_2d needs a 2-component field");
  const Grid& g = v.grid();
  SpectralScalar out(g);
  auto c = out.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    c[i] = Complex{0.0, 1.0} * (double(k[0]) * v[1][i] - double(k[1]) * v[0][i]);
  }
  return out;
}

SpectralVector curl_3d(const SpectralVector& v) {
  if (v.dim() != 3) throw UsageError("curl_3d needs a 3-component field");
  const Grid& g = v.grid();
  SpectralVector out(g);
  const Complex I{0.0, 1.0};
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    out[0][i] = I * (double(k[1]) * v[2][i] - double(k[2]) * v[1][i]);
    out[1][i] = I * (double(k[2]) * v[0][i] - double(k[0]) * v[2][i]);
    out[2][i] = I * (double(k[0]) * v[1][i] - double(k[1]) * v[0][i]);
  }
  out.set_solenoidal(true);  // div curl = 0 exactly in mode space
  return out;
}

SpectralScalar lp_block(const SpectralScalar& f, int j) {
  if (j < -1) throw UsageError("Littlewood-Paley index must be >= -1");
  const Grid& g = f.grid();
  SpectralScalar out(g);
  auto c = out.coeffs();
  // annulus bounds as exact integers: lo^2 < |k|^2 <= hi^2
  const std::int64_t lo2 = j == -1 ? -1 : (std::int64_t(1) << (2 * j));
  const std::int64_t hi2 = j == -1 ? 1 : (std::int64_t(1) << (2 * (j + 1)));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::int64_t k2 = g.k_squared(i);
    if (k2 > lo2 && k2 <= hi2) c[i] = f[i];
  }
  return out;
}

int lp_block_max(const Grid& g) {
  const double kmax = std::sqrt(double(g.dim())) * (g.n() / 2.0);
  int j = 0;
  while ((std::int64_t(1) << (j + 1)) < kmax) ++j;
  return j;
}

namespace {

template <class MaskedCopy>
SpectralScalar masked(const SpectralScalar& f, MaskedCopy keep) {
  const Grid& g = f.grid();
  SpectralScalar out = f;
  auto c = out.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    if (!keep(k)) c[i] = Complex{0.0, 0.0};
  }
  return out;
}

bool within_dealias_box(const Grid& g, const std::array<int, 3>& k) {
  for (int a = 0; a < g.dim(); ++a)
    if (std::abs(k[a]) > g.dealias_kmax()) return false;
  return true;
}

}  // namespace

SpectralScalar dealias(const SpectralScalar& f) {
  const Grid& g = f.grid();
  return masked(f, [&](const std::array<int, 3>& k) { return within_dealias_box(g, k); });
}

SpectralVector dealias(const SpectralVector& v) {
  SpectralVector out = v;
  for (int a = 0; a < v.dim(); ++a) out[a] = dealias(v[a]);
  out.set_solenoidal(v.solenoidal());
  return out;
}

bool dealias_safe(const SpectralScalar& f) {
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (f[i] != Complex{0.0, 0.0} && !within_dealias_box(g, g.wavevector(i)))
      return false;
  return true;
}

bool dealias_safe(const SpectralVector& v) {
  for (int a = 0; a < v.dim(); ++a)
    if (!dealias_safe(v[a])) return false;
  return true;
}

}  // namespace mbspec
