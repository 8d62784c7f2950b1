#pragma once

#include <string>
#include <vector>

#include "hhcoh/e6/generators.hpp"

namespace hhcoh::e6 {

/// Families whose translates are tabulated in data/translates.hht.
const std::vector<int>& translate_families();

/// Table name for Omega^{r0}(Y^(family)); some items are split on s = 1 versus s > 1.
std::string translate_table_name(int family, int r0, int s);

/// Omega^{t0}(Y^(family)_t) : Q_{t+t0} -> Q_{t0}. The base matrix for r0 = t0 mod 11 is twisted on
/// the left by sigma^{l0}, l0 = t0 div 11, with the sign (-1)^{l0} for families 3 and 5.
template <class F>
BimoduleMap<F> translate_map(const Family<F>& fam, int family, int t, int t0);

struct TranslateCheck {
  int family = 0;
  int degree = 0;  // t of the generator
  int t0 = 0;
  bool realized = false;
  bool ok = false;  // t0 = 0: equals Y; otherwise the square with t0 - 1 commutes
  std::string error;
};

/// Checks Omega^0 = Y and d_{t0-1} Omega^{t0} = Omega^{t0-1} d_{t+t0-1} for 0 < t0 <= max_t0.
template <class F>
std::vector<TranslateCheck> verify_translates(const Family<F>& fam, int family, int t, int max_t0);

}  // namespace hhcoh::e6
