#pragma once

#include <cstddef>

namespace mbspec {

/// Deterministic pairwise summation of term(i) for i in [lo, hi).
///
/// The reduction tree depends only on the index range, never on thread
/// count or data, so totals are reproducible bit-for-bit. All norm and
/// inner-product reductions in the library go through this.
template <class Term>
double pairwise_sum(std::size_t lo, std::size_t hi, const Term& term) {
  const std::size_t n = hi - lo;
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = lo + n / 2;
  return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

}  // namespace mbspec
