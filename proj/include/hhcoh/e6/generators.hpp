#pragma once

#include <string>
#include <vector>

#include "hhcoh/e6/family.hpp"

namespace hhcoh::e6 {

inline constexpr int kGeneratorFamilies = 24;

/// Families 1..22 exist for every s; 23 and 24 only for s = 1, and 23 not in characteristic 3.
bool generator_family_exists(int i, int s, unsigned characteristic);

/// Degrees 0 <= t < M at which Y^(i)_t is defined.
std::vector<int> generator_degrees(int i, int s, unsigned characteristic);

struct GeneratorId {
  int family = 0;
  int degree = 0;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

std::vector<GeneratorId> all_generators(int s, unsigned characteristic);
std::string to_string(const GeneratorId& g);

/// The matrix Y^(i)_t as a map Q_t -> Q_0. Throws FamilyError for inadmissible (i, t).
template <class F>
BimoduleMap<F> generator_map(const Family<F>& fam, int i, int t);

/// The cochain epsilon o Y^(i)_t.
template <class F>
std::vector<typename F::value_type> generator_cochain(const Family<F>& fam, int i, int t);

}  // namespace hhcoh::e6
