#pragma once

#include "mbspec/field.hpp"
#include "mbspec/rng.hpp"

namespace mbspec {

/// Taylor-Green velocity: (sin x cos y, -cos x sin y) in 2D,
/// (sin x cos y cos z, -cos x sin y cos z, 0) in 3D. Divergence-free exactly.
SpectralVector taylor_green_velocity(const Grid& g, double amplitude = 1.0);

/// Solenoidal companion pattern from the stream/vector potential cos x cos y:
/// (-cos x sin y, sin x cos y [, 0]).
SpectralVector taylor_green_magnetic(const Grid& g, double amplitude);

/// sin x sin y [sin z] scalar pattern.
SpectralScalar product_sine_scalar(const Grid& g, double amplitude);

/// Mean-zero random field with |coeff| ~ |k|^{-a} on band_min <= |k| <= band_max
/// and uniformly random phases; Hermitian by construction. Modes are visited in
/// a fixed lattice order, so a given Rng state yields one exact field.
SpectralScalar random_band_scalar(const Grid& g, double band_min, double band_max,
                                  double spectrum_exponent, Rng& rng);

/// Componentwise random band field, Leray-projected (certified solenoidal).
SpectralVector random_band_vector(const Grid& g, double band_min, double band_max,
                                  double spectrum_exponent, Rng& rng);

/// Deterministic radial power-law spectrum |coeff(k)| = |k|^{-a} with unit
/// phases, for truncation-decay studies.
SpectralScalar power_law_scalar(const Grid& g, double spectrum_exponent);

}  // namespace mbspec
