#pragma once

#include "mbspec/field.hpp"

namespace mbspec {

/// Norm selector mirroring the suite available on every field.
struct NormSpec {
  enum class Kind { l2, hs, lp, linf, besov0_inf_inf, bmo_approx };
  Kind kind = Kind::l2;
  double param = 0.0;  // s for hs, p for lp

  static NormSpec L2() { return {Kind::l2, 0.0}; }
  static NormSpec Hs(double s) { return {Kind::hs, s}; }
  static NormSpec Lp(double p) { return {Kind::lp, p}; }
  static NormSpec Linf() { return {Kind::linf, 0.0}; }
  static NormSpec Besov() { return {Kind::besov0_inf_inf, 0.0}; }
  static NormSpec Bmo() { return {Kind::bmo_approx, 0.0}; }
};

double norm_suite(const SpectralScalar& f, NormSpec spec);
double norm_suite(const SpectralVector& v, NormSpec spec);

/// Plancherel norms over the mode lattice (deterministic pairwise sums).
double norm_l2(const SpectralScalar& f);
double norm_l2(const SpectralVector& v);
double norm_hs(const SpectralScalar& f, double s);
double norm_hs(const SpectralVector& v, double s);

/// L^2 inner products (real parts; exact for real fields).
double inner_l2(const SpectralScalar& f, const SpectralScalar& g);
double inner_l2(const SpectralVector& f, const SpectralVector& g);

/// Physical-space quadrature norms on the normalized measure dx/(2pi)^dim.
/// Vector fields use the pointwise Euclidean magnitude. p >= 1 required.
double norm_lp(const SpectralScalar& f, double p);
double norm_lp(const SpectralVector& v, double p);
double norm_linf(const SpectralScalar& f);
double norm_linf(const SpectralVector& v);

/// sup_j || Delta_j f ||_{L^inf} over the sharp Littlewood-Paley blocks.
double norm_besov0_inf_inf(const SpectralScalar& f);
double norm_besov0_inf_inf(const SpectralVector& v);

/// Dyadic BMO surrogate: global mean removed, then the max over the aligned
/// dyadic cube hierarchy (cube sides 2pi/2^m for every m >= 0 with 2^m
/// dividing N and at least 2 points per side) of the mean oscillation.
double norm_bmo_approx(const SpectralScalar& f);
double norm_bmo_approx(const SpectralVector& v);

/// Number of Littlewood-Paley blocks carrying any energy of f.
int occupied_lp_blocks(const SpectralScalar& f);

}  // namespace mbspec
