#pragma once

#include <string>

#include "mbspec/integrate.hpp"

namespace mbspec {

/// Self-describing binary container ("MBSPEC01"): magic bytes, a little-endian
/// uint64 header length, a JSON header (dim, N, R, s, t, step, resolved
/// config, diagnostics quadrature state, field names), then the named arrays
/// as little-endian float64 interleaved (re, im) in row-major mode order
/// (each axis ordered k = -N/2 .. N/2-1). Round-trips are bit-exact.
struct CheckpointData {
  SimConfig cfg;
  InitialSpec init;
  State state;
  int step = 0;
  DiagState diag;
};

void write_checkpoint(const std::string& path, const CheckpointData& data);

/// Throws DataError on missing/corrupt/truncated containers.
CheckpointData read_checkpoint(const std::string& path);

}  // namespace mbspec
