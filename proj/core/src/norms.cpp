#include "mbspec/norms.hpp"

#include <cmath>
#include <vector>

#include "mbspec/operators.hpp"
#include "mbspec/reduce.hpp"
#include "mbspec/transform.hpp"

namespace mbspec {

namespace {

double abs2(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Pointwise magnitude samples: |f| for scalars, Euclidean |v| for vectors.
std::vector<double> magnitude_samples(const SpectralScalar& f) {
  PhysicalField p = inverse_transform(f);
  for (double& v : p.values) v = std::abs(v);
  return std::move(p.values);
}

std::vector<double> magnitude_samples(const SpectralVector& v) {
  auto phys = inverse_transform(v);
  std::vector<double> mag(v.grid().size());
  for (std::size_t i = 0; i < mag.size(); ++i) {
    double s = 0.0;
    for (int a = 0; a < v.dim(); ++a) s += phys[a].values[i] * phys[a].values[i];
    mag[i] = std::sqrt(s);
  }
  return mag;
}

double quadrature_lp(const std::vector<double>& mag, double p) {
  if (p < 1.0) throw ConfigError("Lp norm requires p >= 1");
  const double mean =
      pairwise_sum(0, mag.size(), [&](std::size_t i) { return std::pow(mag[i], p); }) /
      static_cast<double>(mag.size());
  return std::pow(mean, 1.0 / p);
}

double max_of(const std::vector<double>& mag) {
  double m = 0.0;
  for (double v : mag) m = std::max(m, v);
  return m;
}

double linf_of_block(const SpectralScalar& f, int j) {
  return max_of(magnitude_samples(lp_block(f, j)));
}

double linf_of_block(const SpectralVector& v, int j) {
  SpectralVector blk(v.grid());
  for (int a = 0; a < v.dim(); ++a) blk[a] = lp_block(v[a], j);
  return max_of(magnitude_samples(blk));
}

template <class Field>
double besov_sup(const Field& f) {
  double best = 0.0;
  const int jmax = lp_block_max(f.grid());
  for (int j = -1; j <= jmax; ++j) best = std::max(best, linf_of_block(f, j));
  return best;
}

// Walk the aligned dyadic cube hierarchy. Cube side lengths are N, N/2, ...
// down to 2 points (levels whose side does not divide N are skipped; for
// power-of-two N this is the full hierarchy of the stated cube sides).
template <class PerCube>
void for_each_dyadic_cube(const Grid& g, PerCube&& per_cube) {
  const int n = g.n();
  for (int side = n; side >= 2; side /= 2) {
    if (n % side != 0) break;
    const int cubes = n / side;
    const int cl_count = g.dim() == 3 ? cubes : 1;
    for (int ci = 0; ci < cubes; ++ci)
      for (int cj = 0; cj < cubes; ++cj)
        for (int cl = 0; cl < cl_count; ++cl) {
          auto for_each_idx = [&](auto&& fn) {
            for (int i = 0; i < side; ++i)
              for (int j = 0; j < side; ++j) {
                if (g.dim() == 2) {
                  fn(std::size_t(ci * side + i) * n + (cj * side + j));
                } else {
                  for (int l = 0; l < side; ++l)
                    fn((std::size_t(ci * side + i) * n + (cj * side + j)) * n +
                       (cl * side + l));
                }
              }
          };
          per_cube(side, for_each_idx);
        }
  }
}

// Dyadic mean-oscillation sup for a d-component sample set (d = 1 for
// scalars), Euclidean deviation magnitude, global mean removed per component.
double bmo_dyadic(const Grid& g, std::vector<std::vector<double>> comp) {
  const int d = static_cast<int>(comp.size());
  for (auto& c : comp) {
    const double mean =
        pairwise_sum(0, c.size(), [&](std::size_t i) { return c[i]; }) /
        static_cast<double>(c.size());
    for (double& x : c) x -= mean;
  }

  double best = 0.0;
  std::vector<double> mean(d);
  for_each_dyadic_cube(g, [&](int side, auto&& for_each_idx) {
    const double inv_cube = 1.0 / std::pow(double(side), g.dim());
    for (int a = 0; a < d; ++a) mean[a] = 0.0;
    for_each_idx([&](std::size_t idx) {
      for (int a = 0; a < d; ++a) mean[a] += comp[a][idx];
    });
    for (int a = 0; a < d; ++a) mean[a] *= inv_cube;
    double osc = 0.0;
    for_each_idx([&](std::size_t idx) {
      double s2 = 0.0;
      for (int a = 0; a < d; ++a) {
        const double dv = comp[a][idx] - mean[a];
        s2 += dv * dv;
      }
      osc += std::sqrt(s2);
    });
    best = std::max(best, osc * inv_cube);
  });
  return best;
}

}  // namespace

double norm_l2(const SpectralScalar& f) {
  return std::sqrt(
      pairwise_sum(0, f.size(), [&](std::size_t i) { return abs2(f[i]); }));
}

double norm_l2(const SpectralVector& v) {
  double s = 0.0;
  for (int a = 0; a < v.dim(); ++a) {
    const double na = norm_l2(v[a]);
    s += na * na;
  }
  return std::sqrt(s);
}

double norm_hs(const SpectralScalar& f, double s) {
  const Grid& g = f.grid();
  return std::sqrt(pairwise_sum(0, f.size(), [&](std::size_t i) {
    const double w = 1.0 + static_cast<double>(g.k_squared(i));
    return std::pow(w, s) * abs2(f[i]);
  }));
}

double norm_hs(const SpectralVector& v, double s) {
  double acc = 0.0;
  for (int a = 0; a < v.dim(); ++a) {
    const double na = norm_hs(v[a], s);
    acc += na * na;
  }
  return std::sqrt(acc);
}

double inner_l2(const SpectralScalar& f, const SpectralScalar& g) {
  if (!(f.grid() == g.grid())) throw UsageError("grid mismatch in inner product");
  return pairwise_sum(0, f.size(), [&](std::size_t i) {
    return f[i].real() * g[i].real() + f[i].imag() * g[i].imag();
  });
}

double inner_l2(const SpectralVector& f, const SpectralVector& g) {
  if (f.dim() != g.dim()) throw UsageError("rank mismatch in inner product");
  double s = 0.0;
  for (int a = 0; a < f.dim(); ++a) s += inner_l2(f[a], g[a]);
  return s;
}

double norm_lp(const SpectralScalar& f, double p) {
  return quadrature_lp(magnitude_samples(f), p);
}

double norm_lp(const SpectralVector& v, double p) {
  return quadrature_lp(magnitude_samples(v), p);
}

double norm_linf(const SpectralScalar& f) { return max_of(magnitude_samples(f)); }

double norm_linf(const SpectralVector& v) { return max_of(magnitude_samples(v)); }

double norm_besov0_inf_inf(const SpectralScalar& f) { return besov_sup(f); }

double norm_besov0_inf_inf(const SpectralVector& v) { return besov_sup(v); }

double norm_bmo_approx(const SpectralScalar& f) {
  std::vector<std::vector<double>> comp(1);
  comp[0] = inverse_transform(f).values;
  return bmo_dyadic(f.grid(), std::move(comp));
}

double norm_bmo_approx(const SpectralVector& v) {
  auto phys = inverse_transform(v);
  std::vector<std::vector<double>> comp;
  comp.reserve(v.dim());
  for (auto& p : phys) comp.push_back(std::move(p.values));
  return bmo_dyadic(v.grid(), std::move(comp));
}

int occupied_lp_blocks(const SpectralScalar& f) {
  int count = 0;
  for (int j = -1; j <= lp_block_max(f.grid()); ++j)
    if (lp_block(f, j).max_abs() > 0.0) ++count;
  return count;
}

double norm_suite(const SpectralScalar& f, NormSpec spec) {
  switch (spec.kind) {
    case NormSpec::Kind::l2: return norm_l2(f);
    case NormSpec::Kind::hs: return norm_hs(f, spec.param);
    case NormSpec::Kind::lp: return norm_lp(f, spec.param);
    case NormSpec::Kind::linf: return norm_linf(f);
    case NormSpec::Kind::besov0_inf_inf: return norm_besov0_inf_inf(f);
    case NormSpec::Kind::bmo_approx: return norm_bmo_approx(f);
  }
  throw UsageError("unknown norm kind");
}

double norm_suite(const SpectralVector& v, NormSpec spec) {
  switch (spec.kind) {
    case NormSpec::Kind::l2: return norm_l2(v);
    case NormSpec::Kind::hs: return norm_hs(v, spec.param);
    case NormSpec::Kind::lp: return norm_lp(v, spec.param);
    case NormSpec::Kind::linf: return norm_linf(v);
    case NormSpec::Kind::besov0_inf_inf: return norm_besov0_inf_inf(v);
    case NormSpec::Kind::bmo_approx: return norm_bmo_approx(v);
  }
  throw UsageError("unknown norm kind");
}

}  // namespace mbspec
