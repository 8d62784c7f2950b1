#pragma once

#include <vector>

#include "hhcoh/algebra.hpp"

namespace hhcoh {

/// Start of the minimal projective resolution of the simple left module S_v.
struct SimpleResolution {
  int vertex = 0;
  /// tops[m]: vertices i with P_i = A e_i in the m-th term (sorted, with multiplicity)
  std::vector<std::vector<int>> tops;
  /// syzygy_dims[m] = dim Omega^m(S_v); entry 0 is dim S_v = 1
  std::vector<std::size_t> syzygy_dims;
};

/// Computes terms 0..length by taking projective covers of successive kernels.
template <class F>
SimpleResolution resolve_simple(const Algebra<F>& A, int vertex, int length);

}  // namespace hhcoh
