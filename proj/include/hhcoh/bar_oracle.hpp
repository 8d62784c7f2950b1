#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hhcoh/algebra.hpp"

namespace hhcoh {

class ResourceBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BarOracleOptions {
  int t_max = 3;
  std::size_t max_cochain_dim = 4'000'000;
};

/// Hochschild cohomology dimensions from the reduced bar complex relative to the
/// vertex subalgebra: C^t = Hom_{E-E}(rad^{(x)t}, A) with the standard differential.
template <class F>
class BarOracle {
 public:
  BarOracle(const Algebra<F>& A, BarOracleOptions opts = {});

  /// dim C^t (t <= t_max + 1).
  std::size_t cochain_dim(int t);
  /// rank of delta^t : C^t -> C^{t+1}.
  std::size_t coboundary_rank(int t);
  std::size_t hh_dim(int t);

 private:
  using Tuple = std::vector<std::size_t>;  // radical basis indices, a_1 first
  const std::vector<Tuple>& tuples(int t);
  std::size_t tuple_weight(const Tuple& tau) const;

  const Algebra<F>* A_;
  BarOracleOptions opts_;
  std::vector<std::size_t> radical_;  // algebra basis indices of paths of positive length
  std::vector<std::vector<Tuple>> tuples_;
  std::vector<long long> ranks_;
};

}  // namespace hhcoh
