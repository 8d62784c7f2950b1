#include "hhcoh/e6/generators.hpp"

#include <algorithm>

namespace hhcoh::e6 {

bool generator_family_exists(int i, int s, unsigned characteristic) {
  if (i >= 1 && i <= 22) return true;
  if (i == 23) return s == 1 && characteristic != 3;
  if (i == 24) return s == 1;
  return false;
}

std::vector<int> generator_degrees(int i, int s, unsigned characteristic) {
  std::vector<int> out;
  if (!generator_family_exists(i, s, characteristic)) return out;
  if (i > 22) return {0};
  int M = period_data(s, characteristic).period;
  for (int t = 0; t < M; ++t) {
    auto c = classify_degree(s, characteristic, t);
    if (std::find(c.conditions.begin(), c.conditions.end(), i) != c.conditions.end()) out.push_back(t);
  }
  return out;
}

std::vector<GeneratorId> all_generators(int s, unsigned characteristic) {
  std::vector<GeneratorId> out;
  for (int i = 1; i <= kGeneratorFamilies; ++i)
    for (int t : generator_degrees(i, s, characteristic)) out.push_back({i, t});
  return out;
}

std::string to_string(const GeneratorId& g) {
  return "Y" + std::to_string(g.family) + "_" + std::to_string(g.degree);
}

template <class F>
BimoduleMap<F> generator_map(const Family<F>& fam, int i, int t) {
  unsigned p = fam.field().characteristic();
  auto degrees = generator_degrees(i, fam.s(), p);
  if (std::find(degrees.begin(), degrees.end(), t) == degrees.end())
    throw FamilyError("Y" + std::to_string(i) + " is not defined in degree " + std::to_string(t));
  auto dc = classify_degree(fam.s(), p, t);
  auto env = fam.env();
  env.vars["l"] = formula::Sym{dc.l, 0};
  env.vars["m"] = formula::Sym{dc.m, 0};
  auto name = "y" + std::to_string(i);
  auto ct = formula::instantiate(table(name), env);
  return fam.realize(ct, fam.term(t), fam.term(0), to_string(GeneratorId{i, t}));
}

template <class F>
std::vector<typename F::value_type> generator_cochain(const Family<F>& fam, int i, int t) {
  return augment(fam.complex(), generator_map(fam, i, t));
}

template BimoduleMap<PrimeField> generator_map(const Family<PrimeField>&, int, int);
template BimoduleMap<RationalField> generator_map(const Family<RationalField>&, int, int);
template std::vector<PrimeField::value_type> generator_cochain(const Family<PrimeField>&, int, int);
template std::vector<RationalField::value_type> generator_cochain(const Family<RationalField>&, int, int);

}  // namespace hhcoh::e6
