#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "mbspec/errors.hpp"

namespace mbspec {

/// Uniform periodic grid on the torus [0, 2pi)^dim.
///
/// The mode lattice is {k in Z^dim : -N/2 <= k_i < N/2} stored in DFT
/// frequency order (axis index m in [0, N) maps to wavenumber m for
/// m <= N/2-1 and m - N otherwise). dim and N are immutable.
class Grid {
 public:
  Grid() = default;
  Grid(int dim, int points_per_axis);

  int dim() const { return dim_; }
  int n() const { return n_; }
  std::size_t size() const { return size_; }  ///< total lattice sites N^dim

  /// Wavenumber of axis index m in [0, N).
  int freq(int m) const { return m <= n_ / 2 - 1 ? m : m - n_; }

  /// Decompose a flat row-major index into per-axis wavenumbers.
  std::array<int, 3> wavevector(std::size_t idx) const {
    std::array<int, 3> k{0, 0, 0};
    if (dim_ == 2) {
      k[0] = freq(static_cast<int>(idx / n_));
      k[1] = freq(static_cast<int>(idx % n_));
    } else {
      k[2] = freq(static_cast<int>(idx % n_));
      std::size_t r = idx / n_;
      k[1] = freq(static_cast<int>(r % n_));
      k[0] = freq(static_cast<int>(r / n_));
    }
    return k;
  }

  /// |k|^2 of the mode at flat index idx (exact integer arithmetic).
  std::int64_t k_squared(std::size_t idx) const {
    auto k = wavevector(idx);
    std::int64_t s = 0;
    for (int a = 0; a < dim_; ++a) s += std::int64_t(k[a]) * k[a];
    return s;
  }

  /// Flat index of the Hermitian partner -k of the mode at idx.
  std::size_t conjugate_index(std::size_t idx) const {
    if (dim_ == 2) {
      std::size_t i = idx / n_, j = idx % n_;
      return mirror(i) * n_ + mirror(j);
    }
    std::size_t l = idx % n_;
    std::size_t r = idx / n_;
    std::size_t j = r % n_, i = r / n_;
    return (mirror(i) * n_ + mirror(j)) * n_ + mirror(l);
  }

  /// Flat index of the lattice mode k (components in [-N/2, N/2)).
  std::size_t index_of(const std::array<int, 3>& k) const {
    auto wrap = [this](int c) { return std::size_t((c + n_) % n_); };
    if (dim_ == 2) return wrap(k[0]) * n_ + wrap(k[1]);
    return (wrap(k[0]) * n_ + wrap(k[1])) * n_ + wrap(k[2]);
  }

  /// Largest per-axis mode magnitude kept by the two-thirds dealias rule.
  /// Alias-free products need 3*kmax < N, so grids divisible by 3 drop the
  /// boundary mode |k_i| = N/3.
  int dealias_kmax() const { return n_ % 3 == 0 ? n_ / 3 - 1 : n_ / 3; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t mirror(std::size_t m) const { return (n_ - m) % n_; }

  int dim_ = 0;
  int n_ = 0;
  std::size_t size_ = 0;
};

}  // namespace mbspec
