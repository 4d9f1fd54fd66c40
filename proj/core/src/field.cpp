#include "mbspec/field.hpp"

#include <algorithm>
#include <cmath>

namespace mbspec {

PhysicalField::PhysicalField(Grid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size())
    throw UsageError("physical sample count does not match the grid");
}

SpectralScalar::SpectralScalar(Grid g, std::vector<Complex> coeffs)
    : grid_(g), c_(std::move(coeffs)) {
  if (c_.size() != grid_.size())
    throw UsageError("coefficient count does not match the grid");
}

void SpectralScalar::set_mode(const std::array<int, 3>& k, Complex v) {
  std::size_t i = grid_.index_of(k);
  std::size_t j = grid_.conjugate_index(i);
  c_[i] = v;
  if (j == i)
    c_[i] = Complex{v.real(), 0.0};
  else
    c_[j] = std::conj(v);
}

void SpectralScalar::hermitize() {
  const int n = grid_.n();
  const int nyq = n / 2;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    auto k = grid_.wavevector(i);
    bool oddball = false;
    for (int a = 0; a < grid_.dim(); ++a)
      if (k[a] == -nyq) oddball = true;
    if (oddball) {
      c_[i] = Complex{0.0, 0.0};
      continue;
    }
    std::size_t j = grid_.conjugate_index(i);
    if (j == i) {
      c_[i] = Complex{c_[i].real(), 0.0};
    } else if (i < j) {
      Complex avg = 0.5 * (c_[i] + std::conj(c_[j]));
      c_[i] = avg;
      c_[j] = std::conj(avg);
    }
  }
}

double SpectralScalar::max_abs() const {
  double m = 0.0;
  for (const Complex& z : c_) m = std::max(m, std::abs(z));
  return m;
}

bool SpectralScalar::all_finite() const {
  for (const Complex& z : c_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

SpectralScalar& SpectralScalar::operator+=(const SpectralScalar& o) {
  if (!(grid_ == o.grid_)) throw UsageError("grid mismatch in field arithmetic");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SpectralScalar& SpectralScalar::operator-=(const SpectralScalar& o) {
  if (!(grid_ == o.grid_)) throw UsageError("grid mismatch in field arithmetic");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SpectralScalar& SpectralScalar::operator*=(double a) {
  for (Complex& z : c_) z *= a;
  return *this;
}

SpectralScalar operator+(SpectralScalar a, const SpectralScalar& b) { return a += b; }
SpectralScalar operator-(SpectralScalar a, const SpectralScalar& b) { return a -= b; }
SpectralScalar operator*(double a, SpectralScalar f) { return f *= a; }

void axpy(SpectralScalar& y, double a, const SpectralScalar& x) {
  if (!(y.grid() == x.grid())) throw UsageError("grid mismatch in axpy");
  auto yc = y.coeffs();
  auto xc = x.coeffs();
  for (std::size_t i = 0; i < yc.size(); ++i) yc[i] += a * xc[i];
}

SpectralVector::SpectralVector(std::vector<SpectralScalar> comps)
    : comps_(std::move(comps)) {
  if (comps_.empty()) throw UsageError("vector field needs components");
  const Grid& g = comps_[0].grid();
  if (static_cast<int>(comps_.size()) != g.dim())
    throw UsageError("component count does not match grid dimension");
  for (const auto& c : comps_)
    if (!(c.grid() == g)) throw UsageError("vector components on mismatched grids");
}

double SpectralVector::max_abs() const {
  double m = 0.0;
  for (const auto& c : comps_) m = std::max(m, c.max_abs());
  return m;
}

bool SpectralVector::all_finite() const {
  for (const auto& c : comps_)
    if (!c.all_finite()) return false;
  return true;
}

SpectralVector& SpectralVector::operator+=(const SpectralVector& o) {
  if (dim() != o.dim()) throw UsageError("rank mismatch in vector arithmetic");
  for (int a = 0; a < dim(); ++a) comps_[a] += o.comps_[a];
  solenoidal_ = solenoidal_ && o.solenoidal_;
  return *this;
}

SpectralVector& SpectralVector::operator-=(const SpectralVector& o) {
  if (dim() != o.dim()) throw UsageError("rank mismatch in vector arithmetic");
  for (int a = 0; a < dim(); ++a) comps_[a] -= o.comps_[a];
  solenoidal_ = solenoidal_ && o.solenoidal_;
  return *this;
}

SpectralVector& SpectralVector::operator*=(double a) {
  for (auto& c : comps_) c *= a;
  return *this;
}

SpectralVector operator+(SpectralVector a, const SpectralVector& b) { return a += b; }
SpectralVector operator-(SpectralVector a, const SpectralVector& b) { return a -= b; }
SpectralVector operator*(double a, SpectralVector v) { return v *= a; }

void axpy(SpectralVector& y, double a, const SpectralVector& x) {
  if (y.dim() != x.dim()) throw UsageError("rank mismatch in axpy");
  for (int c = 0; c < y.dim(); ++c) axpy(y[c], a, x[c]);
  y.set_solenoidal(y.solenoidal() && x.solenoidal());
}

double solenoidal_defect(const SpectralVector& v) {
  const Grid& g = v.grid();
  double worst = 0.0;
  double amp = v.max_abs();
  if (amp == 0.0) return 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto k = g.wavevector(i);
    Complex dot{0.0, 0.0};
    for (int a = 0; a < g.dim(); ++a) dot += double(k[a]) * v[a][i];
    worst = std::max(worst, std::abs(dot));
  }
  return worst / amp;
}

SpectralVector& certify_solenoidal(SpectralVector& v) {
  if (solenoidal_defect(v) > 1e-10)
    throw ContractError("field failed solenoidal certification");
  v.set_solenoidal(true);
  return v;
}

}  // namespace mbspec
