#include "hhcoh/e6/translates.hpp"

#include <optional>

namespace hhcoh::e6 {

const std::vector<int>& translate_families() {
  static const std::vector<int> families{1, 2, 3, 4, 5, 23, 24};
  return families;
}

std::string translate_table_name(int family, int r0, int s) {
  auto name = "tr" + std::to_string(family) + "_" + std::to_string(r0);
  if (has_table(name)) return name;
  name += s == 1 ? "_s1" : "_sn";
  if (!has_table(name)) throw FamilyError("no translate table for Y" + std::to_string(family));
  return name;
}

template <class F>
BimoduleMap<F> translate_map(const Family<F>& fam, int family, int t, int t0) {
  if (t0 < 0) throw FamilyError("negative translate degree");
  int r0 = t0 % 11, l0 = t0 / 11;
  auto dc = classify_degree(fam.s(), fam.field().characteristic(), t);
  auto env = fam.env();
  env.vars["l"] = formula::Sym{dc.l, 0};
  env.vars["m"] = formula::Sym{r0 / 2, 0};
  auto name = translate_table_name(family, r0, fam.s());
  auto ct = formula::instantiate(table(name), env);
  auto base = fam.realize(ct, fam.term(t + r0), fam.term(r0), name);
  if (l0 == 0) return base;
  const auto& phi = fam.sigma(l0);
  const auto& f = fam.field();
  bool flip = (family == 3 || family == 5) && l0 % 2 == 1;
  return base.map_left(fam.term(t + t0), fam.term(t0), [&](std::size_t a) {
    auto img = phi.image(a);
    if (flip)
      for (auto& [b, c] : img) c = f.neg(c);
    return img;
  });
}

template <class F>
std::vector<TranslateCheck> verify_translates(const Family<F>& fam, int family, int t, int max_t0) {
  std::vector<TranslateCheck> out;
  std::optional<BimoduleMap<F>> prev;
  for (int t0 = 0; t0 <= max_t0; ++t0) {
    TranslateCheck c{family, t, t0, false, false, {}};
    std::optional<BimoduleMap<F>> cur;
    try {
      cur.emplace(translate_map(fam, family, t, t0));
      c.realized = true;
      if (t0 == 0)
        c.ok = *cur == generator_map(fam, family, t);
      else if (prev)
        c.ok = compose(fam.differential(t0 - 1), *cur) == compose(*prev, fam.differential(t + t0 - 1));
      else
        c.error = "previous translate unavailable";
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    out.push_back(std::move(c));
    prev = std::move(cur);
  }
  return out;
}

#define HH_TRANSLATE_INSTANTIATE(F)                                                              \
  template BimoduleMap<F> translate_map(const Family<F>&, int, int, int);                       \
  template std::vector<TranslateCheck> verify_translates(const Family<F>&, int, int, int);

HH_TRANSLATE_INSTANTIATE(PrimeField)
HH_TRANSLATE_INSTANTIATE(RationalField)

}  // namespace hhcoh::e6
