#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mbspec/grid.hpp"

namespace mbspec {

using Complex = std::complex<double>;

/// Real samples on the N^dim physical grid, row-major, x_i = 2*pi*m_i/N.
struct PhysicalField {
  Grid grid;
  std::vector<double> values;

  PhysicalField() = default;
  explicit PhysicalField(Grid g) : grid(g), values(g.size(), 0.0) {}
  PhysicalField(Grid g, std::vector<double> v);
};

/// Complex Fourier coefficients of a real scalar field on the mode lattice.
///
/// Invariants maintained by the construction paths in this library:
///  - Hermitian symmetry  coeff(-k) = conj(coeff(k)),
///  - modes with any |k_i| = N/2 are identically zero (oddball exclusion).
class SpectralScalar {
 public:
  SpectralScalar() = default;
  explicit SpectralScalar(Grid g) : grid_(g), c_(g.size(), Complex{0.0, 0.0}) {}
  SpectralScalar(Grid g, std::vector<Complex> coeffs);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return c_.size(); }

  std::span<const Complex> coeffs() const { return c_; }
  std::span<Complex> coeffs() { return c_; }
  const Complex& operator[](std::size_t i) const { return c_[i]; }
  Complex& operator[](std::size_t i) { return c_[i]; }

  /// Coefficient of the lattice mode k.
  Complex coeff(const std::array<int, 3>& k) const { return c_[grid_.index_of(k)]; }

  /// Set coeff(k) and coeff(-k) = conj(v), keeping the field real.
  void set_mode(const std::array<int, 3>& k, Complex v);

  /// Enforce coeff(-k) = conj(coeff(k)) exactly and zero the oddball modes.
  void hermitize();

  /// max_k |coeff(k)|
  double max_abs() const;

  bool all_finite() const;

  SpectralScalar& operator+=(const SpectralScalar& o);
  SpectralScalar& operator-=(const SpectralScalar& o);
  SpectralScalar& operator*=(double a);

 private:
  Grid grid_;
  std::vector<Complex> c_;
};

SpectralScalar operator+(SpectralScalar a, const SpectralScalar& b);
SpectralScalar operator-(SpectralScalar a, const SpectralScalar& b);
SpectralScalar operator*(double a, SpectralScalar f);

/// y += a*x
void axpy(SpectralScalar& y, double a, const SpectralScalar& x);

/// dim-component vector field; the solenoidal flag certifies
/// max_k |k . v(k)| <= 1e-10 * max_k |v(k)|.
class SpectralVector {
 public:
  SpectralVector() = default;
  explicit SpectralVector(Grid g) : comps_(g.dim(), SpectralScalar(g)) {}
  explicit SpectralVector(std::vector<SpectralScalar> comps);

  const Grid& grid() const { return comps_.at(0).grid(); }
  int dim() const { return static_cast<int>(comps_.size()); }

  const SpectralScalar& operator[](int a) const { return comps_[a]; }
  SpectralScalar& operator[](int a) { return comps_[a]; }

  bool solenoidal() const { return solenoidal_; }
  void set_solenoidal(bool v) { solenoidal_ = v; }

  double max_abs() const;
  bool all_finite() const;

  SpectralVector& operator+=(const SpectralVector& o);
  SpectralVector& operator-=(const SpectralVector& o);
  SpectralVector& operator*=(double a);

 private:
  std::vector<SpectralScalar> comps_;
  bool solenoidal_ = false;
};

SpectralVector operator+(SpectralVector a, const SpectralVector& b);
SpectralVector operator-(SpectralVector a, const SpectralVector& b);
SpectralVector operator*(double a, SpectralVector v);
void axpy(SpectralVector& y, double a, const SpectralVector& x);

/// Measure the solenoidality defect max_k |k . v(k)| / max_k |v(k)| (0 for the
/// zero field) and set the certificate when it passes the 1e-10 tolerance.
double solenoidal_defect(const SpectralVector& v);
SpectralVector& certify_solenoidal(SpectralVector& v);

}  // namespace mbspec
