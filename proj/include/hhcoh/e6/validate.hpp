#pragma once

#include <string>
#include <vector>

#include "hhcoh/e6/family.hpp"

namespace hhcoh::e6 {

/// Number of summands of Q_r (r <= 10) divided by s, as in the printed matrix headers.
int printed_term_size(int r);

/// Index of the syzygy of the simple module at v that is again simple: 9 for A and C vertices, 2 for B and D.
int simple_syzygy_period(int v, int s);

struct ResolutionCheck {
  std::string kind;  // "d2", "exact", "shape", "happel", "syzygy"
  int degree = 0;
  bool ok = false;
  std::string detail;
};

struct ResolutionReport {
  std::vector<ResolutionCheck> checks;
  bool ok() const;
  /// first failing check, or nullptr
  const ResolutionCheck* first_failure() const;
};

/// d_t d_{t+1} = 0 and exactness for t <= max_degree, summand counts of Q_0..Q_10 and of the
/// differentials against the printed headers, Ext multiplicities between simples against Q_m
/// for m <= min(max_degree, happel_degree), and the simple syzygies.
template <class F>
ResolutionReport verify_resolution(const Family<F>& fam, int max_degree, int happel_degree = 9);

}  // namespace hhcoh::e6
