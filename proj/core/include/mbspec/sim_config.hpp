#pragma once

#include <string>

#include "mbspec/grid.hpp"

namespace mbspec {

enum class DtPolicy { fixed, cfl };

enum class NormFlavor { linf, besov, bmo };

std::string to_string(NormFlavor f);
NormFlavor norm_flavor_from_string(const std::string& s);

/// Resolved simulation parameters. validate() enforces
///   s > dim/2 + 1,  0 < R <= N/3 (two-thirds dealiasing),  valid axis/policy.
struct SimConfig {
  Grid grid;
  double R = 0.0;           ///< truncation radius (closed Euclidean ball)
  double s = 3.0;           ///< Sobolev index for H^s diagnostics
  int buoyancy_axis = -1;   ///< 0-based; -1 means the last axis
  std::string dealias = "two_thirds";
  DtPolicy dt_policy = DtPolicy::fixed;
  double dt = 1e-3;         ///< fixed-policy step
  double cfl_cmax = 0.5;
  double dt_max = 1e-2;
  double t_end = 1.0;
  int workers = 1;

  int axis() const { return buoyancy_axis < 0 ? grid.dim() - 1 : buoyancy_axis; }

  void validate() const;
};

}  // namespace mbspec
