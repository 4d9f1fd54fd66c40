#pragma once

#include "mbspec/field.hpp"

namespace mbspec {

/// Fourier multiplier (1+|k|^2)^{s/2}; J^s J^{-s} = identity on the finite
/// lattice for any real s.
SpectralScalar bessel_potential(const SpectralScalar& f, double s);
SpectralVector bessel_potential(const SpectralVector& v, double s);

/// Sharp truncation to the closed Euclidean ball |k| <= R. Idempotent,
/// self-adjoint, commutes with every multiplier operator here. R must be > 0.
SpectralScalar truncate(const SpectralScalar& f, double R);
SpectralVector truncate(const SpectralVector& v, double R);

/// True when every nonzero coefficient lies in the closed ball |k| <= R.
bool supported_in_ball(const SpectralScalar& f, double R);
bool supported_in_ball(const SpectralVector& v, double R);

/// Per mode k != 0: v - k (k.v)/|k|^2; mode 0 untouched. Output carries the
/// solenoidal certificate and the projection is idempotent.
SpectralVector leray_project(const SpectralVector& v);

/// Exact spectral differentiation (multiplication by i k_a).
SpectralScalar directional_derivative(const SpectralScalar& f, int axis);
SpectralVector gradient(const SpectralScalar& f);
SpectralScalar divergence(const SpectralVector& v);

/// 2D curl (scalar vorticity d_x v2 - d_y v1). Throws UsageError on rank mismatch.
SpectralScalar curl_2d(const SpectralVector& v);
/// 3D curl. Throws UsageError on rank mismatch.
SpectralVector curl_3d(const SpectralVector& v);

/// Inhomogeneous Littlewood-Paley block with sharp cutoffs:
/// j = -1 keeps |k| <= 1, j >= 0 keeps 2^j < |k| <= 2^{j+1}.
/// Blocks partition the lattice exactly. j < -1 is a UsageError.
SpectralScalar lp_block(const SpectralScalar& f, int j);

/// Largest block index with any lattice support (blocks above it are empty).
int lp_block_max(const Grid& g);

/// Two-thirds dealiasing: zero every mode with any |k_i| > floor(N/3).
SpectralScalar dealias(const SpectralScalar& f);
SpectralVector dealias(const SpectralVector& v);

/// True when the support satisfies the dealias-safe bound |k_i| <= floor(N/3).
bool dealias_safe(const SpectralScalar& f);
bool dealias_safe(const SpectralVector& v);

}  // namespace mbspec
