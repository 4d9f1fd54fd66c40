#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbspec/diagnostics.hpp"

namespace mbspec {

/// L^inf of the pointwise Frobenius magnitude of the gradient tensor.
double gradtensor_linf(const SpectralVector& v);

/// Single-pair Kato-Ponce ratio
///   ||[J^s, f] grad g||_L2 /
///   (||grad f||_inf ||J^{s-1} grad g||_L2 + ||J^s f||_L2 ||grad g||_inf).
double kato_ponce_ratio(const SpectralVector& f, const SpectralScalar& g,
                        double s, const SimConfig& cfg);

struct RatioEnsembleReport {
  std::string kind;
  int dim = 2;
  int N = 0;
  int count = 0;
  std::uint64_t seed = 0;
  double s = 0.0, p = 0.0, s_prime = 0.0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

/// Random band-limited pairs (f, g) within the dealias-safe box.
RatioEnsembleReport kato_ponce_ensemble(int dim, int N, double s, int count,
                                        std::uint64_t seed);

/// ||f||_inf / (1 + ||f||_bmo (1 + log+ ||J^s f||_Lp)) over mean-zero fields.
RatioEnsembleReport log_sobolev_ensemble(int dim, int N, double s, double p,
                                         int count, std::uint64_t seed);

/// ||f||_{H^s'} / (||f||_L2^{1-s'/s} ||f||_{H^s}^{s'/s}); bounded by 1.
RatioEnsembleReport interpolation_ensemble(int dim, int N, double s,
                                           double s_prime, int count,
                                           std::uint64_t seed);

/// ||grad w||_Lp / (||w||_L2^alpha ||w||_H3^{1-alpha}) with the
/// dimension-dependent exponent alpha (j=1, m=3, r=q=2).
RatioEnsembleReport gagliardo_nirenberg_ensemble(int dim, int N, double p,
                                                 int count, std::uint64_t seed);

std::string ratio_report_json(const RatioEnsembleReport& r);

}  // namespace mbspec
