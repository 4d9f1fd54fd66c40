#pragma once

#include "mbspec/field.hpp"

namespace mbspec {

/// Unitary-normalized forward transform: coeff(k) = (1/N^dim) sum_x f(x) e^{-ik.x}.
///
/// The result is Hermitian-symmetrized exactly and the Nyquist (oddball)
/// modes are projected out; those modes are excluded from the representable
/// lattice, so round-trips are exact on it. Non-finite samples are rejected.
SpectralScalar forward_transform(const PhysicalField& f);

/// Inverse transform f(x) = sum_k coeff(k) e^{ik.x}, rendered as real samples.
PhysicalField inverse_transform(const SpectralScalar& f);

/// Componentwise physical rendering of a vector field.
std::vector<PhysicalField> inverse_transform(const SpectralVector& v);

}  // namespace mbspec
