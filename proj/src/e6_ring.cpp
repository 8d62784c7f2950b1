#include "hhcoh/e6/ring.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace hhcoh::e6 {

namespace {

// Product tables, upper triangular; "" marks the unused lower half.
// "(k)" refers to relation (rk); "s" is the parameter s.
struct ProductTable {
  std::array<int, 8> rows, cols;
  std::array<std::array<const char*, 8>, 8> cells;
};

const std::array<ProductTable, 3> kTables{{
    {{1, 2, 4, 6, 7, 8, 9, 11},
     {1, 2, 4, 6, 7, 8, 9, 11},
     {{{"X1", "X2", "X4", "X6", "X7", "X8", "X9", "X11"},
       {"", "0", "0", "0", "0", "0", "-X10", "0"},
       {"", "", "0", "(1)", "-X10", "0", "X11", "0"},
       {"", "", "", "(2)", "0", "0", "sX17", "0"},
       {"", "", "", "", "0", "0", "0", "0"},
       {"", "", "", "", "", "0", "0", "0"},
       {"", "", "", "", "", "", "0", "0"},
       {"", "", "", "", "", "", "", "0"}}}},
    {{1, 2, 4, 6, 7, 8, 9, 11},
     {12, 13, 14, 15, 16, 18, 20, 22},
     {{{"X12", "X13", "X14", "X15", "X16", "X18", "X20", "X22"},
       {"0", "0", "0", "X14", "0", "0", "0", "-X21"},
       {"X14", "X17", "0", "(3)", "0", "X20", "0", "0"},
       {"0", "X19", "0", "-X20", "0", "(4)", "0", "sX5"},
       {"0", "0", "0", "X19", "X21", "0", "0", "0"},
       {"0", "X21", "0", "0", "0", "0", "0", "0"},
       {"X19", "0", "X21", "-X22", "0", "sX3", "sX5", "0"},
       {"X21", "0", "0", "0", "0", "sX5", "0", "0"}}}},
    {{12, 13, 14, 15, 16, 18, 20, 22},
     {12, 13, 14, 15, 16, 18, 20, 22},
     {{{"0", "0", "0", "-X2", "0", "0", "0", "-X10"},
       {"", "0", "0", "X3", "X5", "X7", "X10", "0"},
       {"", "", "0", "0", "0", "0", "0", "0"},
       {"", "", "", "-X4", "0", "X6", "(5)", "X11"},
       {"", "", "", "", "0", "X8", "0", "0"},
       {"", "", "", "", "", "(6)", "(7)", "-sX17"},
       {"", "", "", "", "", "", "0", "0"},
       {"", "", "", "", "", "", "", "0"}}}},
}};

// (rk): char-2 or char-3 branch, otherwise zero
struct Numbered {
  int a, b;
  unsigned need_char;
  long long s_power;  // coefficient = sign * s^s_power
  int sign;
  int family;
};
const std::array<Numbered, 7> kNumbered{{
    {4, 6, 2, 0, 1, 8},
    {6, 6, 3, 1, -1, 14},
    {4, 15, 2, 0, 1, 16},
    {6, 18, 3, 1, -1, 2},
    {15, 20, 2, 0, 1, 8},
    {18, 18, 3, 1, 1, 12},
    {18, 20, 3, 1, 1, 14},
}};

const std::set<int> kThreeKills{2, 3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 19, 21};
const std::map<int, int> kThreeMaps{{1, 3}, {4, 5}, {6, 10}, {15, 17}, {18, 19}, {20, 21}};

PresentedProduct parse_cell(const std::string& cell, int s) {
  if (cell == "0") return {0, 0, ""};
  std::size_t k = 0;
  long long coeff = 1;
  if (cell[k] == '-') {
    coeff = -1;
    ++k;
  }
  if (cell[k] == 's') {
    coeff *= s;
    ++k;
  }
  if (cell[k] != 'X') throw FamilyError("bad table cell " + cell);
  return {coeff, std::stoi(cell.substr(k + 1)), ""};
}

std::optional<PresentedProduct> numbered(int k, int s, unsigned p) {
  const auto& n = kNumbered[static_cast<std::size_t>(k - 1)];
  PresentedProduct out{0, 0, "(r" + std::to_string(k) + ")"};
  if (p == n.need_char) {
    out.coeff = n.sign * (n.s_power ? s : 1);
    out.family = n.family;
  }
  return out;
}

std::optional<PresentedProduct> lookup(int s, unsigned p, const GeneratorId& x, const GeneratorId& y) {
  const int i = x.family, j = y.family;
  if (s == 1 && (j == 23 || j == 24)) {
    if (i == 1 && j == 23) return PresentedProduct{x.degree == 0 ? 1 : 0, x.degree == 0 ? 23 : 0, "s=1: X1 X23"};
    if (i == 1 && j == 24) {
      if (x.degree == 0) return PresentedProduct{1, 24, "s=1: X1 X24"};
      if (p == 3) return PresentedProduct{1, 2, "s=1: X1 X24"};
      return PresentedProduct{0, 0, "s=1: X1 X24"};
    }
    if (i == 9 && j == 24) return PresentedProduct{-1, 10, "s=1: X9 X24"};
    if (i == 15 && j == 24) return PresentedProduct{p == 3 ? 1 : 0, p == 3 ? 14 : 0, "s=1: X15 X24"};
    if (i == 22 && j == 24) return PresentedProduct{-1, 21, "s=1: X22 X24"};
    if (i >= 2 && i <= 24 && i != 9 && i != 15 && i != 22) return PresentedProduct{0, 0, "s=1: zero products with X23, X24"};
    return std::nullopt;
  }
  if (i == 3) {
    if (kThreeKills.count(j)) return PresentedProduct{0, 0, "X3 zero list"};
    if (auto it = kThreeMaps.find(j); it != kThreeMaps.end()) return PresentedProduct{1, it->second, "X3 row"};
  }
  for (int k = 1; k <= 7; ++k) {
    const auto& n = kNumbered[static_cast<std::size_t>(k - 1)];
    if (n.a == i && n.b == j) return numbered(k, s, p);
  }
  for (std::size_t t = 0; t < kTables.size(); ++t) {
    const auto& tab = kTables[t];
    auto r = std::find(tab.rows.begin(), tab.rows.end(), i);
    auto c = std::find(tab.cols.begin(), tab.cols.end(), j);
    if (r == tab.rows.end() || c == tab.cols.end()) continue;
    std::string cell = tab.cells[static_cast<std::size_t>(r - tab.rows.begin())][static_cast<std::size_t>(c - tab.cols.begin())];
    if (cell.empty()) continue;
    std::string where = "table " + std::to_string(t + 1);
    if (cell.front() == '(') {
      auto out = numbered(cell[1] - '0', s, p);
      out->rule += " via " + where;
      return out;
    }
    auto out = parse_cell(cell, s);
    out.rule = where;
    return out;
  }
  return std::nullopt;
}

template <class F>
bool is_zero_vec(const F& f, const std::vector<typename F::value_type>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <class F>
bool proportional(const F& f, const std::vector<typename F::value_type>& x, const std::vector<typename F::value_type>& y) {
  if (x.size() != y.size()) return false;
  bool zx = is_zero_vec(f, x), zy = is_zero_vec(f, y);
  if (zx || zy) return zx && zy;
  std::size_t k = 0;
  while (f.is_zero(y[k])) ++k;
  auto u = f.div(x[k], y[k]);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (f.sub(x[i], f.mul(u, y[i])) != f.zero()) return false;
  return true;
}

std::string describe(const PresentedProduct& p) {
  if (p.family == 0 || p.coeff == 0) return "0";
  std::string c = p.coeff == 1 ? "" : p.coeff == -1 ? "-" : std::to_string(p.coeff) + "*";
  return c + "X~" + std::to_string(p.family);
}

}  // namespace

std::optional<PresentedProduct> presented_product(int s, unsigned characteristic, const GeneratorId& a,
                                                  const GeneratorId& b) {
  if (auto r = lookup(s, characteristic, a, b)) return r;
  return lookup(s, characteristic, b, a);
}

template <class F>
RingModel<F>::RingModel(const Family<F>& fam)
    : fam_(&fam), gens_(all_generators(fam.s(), fam.field().characteristic())), lifter_(fam.complex()) {}

template <class F>
bool RingModel<F>::has_generator(const GeneratorId& g) const {
  return std::binary_search(gens_.begin(), gens_.end(), g);
}

template <class F>
const Cohomology<F>& RingModel<F>::cohomology(int t) {
  auto& slot = coh_[t];
  if (!slot) slot = std::make_unique<Cohomology<F>>(fam_->complex(), t);
  return *slot;
}

template <class F>
const std::vector<typename F::value_type>& RingModel<F>::cochain(const GeneratorId& g) {
  auto it = cochains_.find(g);
  if (it == cochains_.end()) it = cochains_.emplace(g, generator_cochain(*fam_, g.family, g.degree)).first;
  return it->second;
}

template <class F>
std::vector<typename F::value_type> RingModel<F>::generator_class(const GeneratorId& g, int k) {
  // Q_{t+kM} = Q_t with the same differentials, so T^k acts as the identity on cochains
  return cohomology(g.degree + k * period()).class_of(cochain(g));
}

template <class F>
const ChainMap<F>& RingModel<F>::translates(const GeneratorId& g, int horizon) {
  auto it = lifts_.find(g);
  if (it == lifts_.end()) {
    ChainMap<F> phi;
    phi.start_degree = g.degree;
    phi.maps.push_back(generator_map(*fam_, g.family, g.degree));
    it = lifts_.emplace(g, std::move(phi)).first;
  }
  if (static_cast<int>(it->second.maps.size()) <= horizon) lifter_.extend(it->second, horizon);
  return it->second;
}

template <class F>
std::vector<typename F::value_type> RingModel<F>::product(const GeneratorId& a, const GeneratorId& b) {
  const auto& phi = translates(b, a.degree);
  auto f = cup_cochain(fam_->complex(), cochain(a), a.degree, phi.maps[static_cast<std::size_t>(a.degree)]);
  return cohomology(a.degree + b.degree).class_of(f);
}

template <class F>
std::optional<std::vector<typename F::value_type>> RingModel<F>::presented_class(const PresentedProduct& p, int t) {
  const auto& f = fam_->field();
  if (p.family == 0 || p.coeff == 0) return std::vector<T>(cohomology(t).dim(), f.zero());
  GeneratorId g{p.family, t % period()};
  if (!has_generator(g)) return std::nullopt;
  auto v = generator_class(g, t / period());
  auto c = f.from_int(p.coeff);
  for (auto& x : v) x = f.mul(x, c);
  return v;
}

template <class F>
std::vector<GenerationCheck> verify_generation(RingModel<F>& ring) {
  std::vector<GenerationCheck> out;
  const auto& field = ring.family().field();
  for (int t = 0; t < ring.period(); ++t) {
    const auto& h = ring.cohomology(t);
    Matrix<F> classes(field, 0, h.dim());
    for (const auto& g : ring.generators())
      if (g.degree == t) classes.append_row(ring.generator_class(g));
    out.push_back({t, h.dim(), classes.rows(), rank(classes)});
  }
  return out;
}

template <class F>
RelationCheck check_pair(RingModel<F>& ring, const GeneratorId& a, const GeneratorId& b, const PresentedProduct& p) {
  const auto& field = ring.family().field();
  RelationCheck rc;
  rc.a = a;
  rc.b = b;
  rc.degree = a.degree + b.degree;
  rc.rule = p.rule;
  rc.expected = describe(p);
  auto computed = ring.product(a, b);
  for (const auto& x : computed) rc.computed.push_back(field.to_string(x));
  auto expected = ring.presented_class(p, rc.degree);
  if (!expected) {
    rc.rhs_defined = false;
    return rc;
  }
  rc.exact = computed == *expected;
  rc.up_to_unit = proportional(field, computed, *expected);
  return rc;
}

template <class F>
std::optional<RelationCheck> check_relation(RingModel<F>& ring, const GeneratorId& a, const GeneratorId& b) {
  const int s = ring.family().s();
  const unsigned p = ring.family().field().characteristic();
  // the presentation is written as X^(a) X^(b); try the printed order first
  if (auto pp = lookup(s, p, a, b)) return check_pair(ring, a, b, *pp);
  if (auto pp = lookup(s, p, b, a)) return check_pair(ring, b, a, *pp);
  return std::nullopt;
}

template <class F>
std::vector<RelationCheck> verify_relations(RingModel<F>& ring) {
  std::vector<RelationCheck> out;
  const auto& gens = ring.generators();
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x; y < gens.size(); ++y)
      if (auto c = check_relation(ring, gens[x], gens[y])) out.push_back(std::move(*c));
  return out;
}

template <class F>
std::vector<RelationCheck> duplicate_line_report(RingModel<F>& ring) {
  std::vector<RelationCheck> out;
  for (const auto& a : ring.generators()) {
    if (a.family != 3) continue;
    for (const auto& b : ring.generators())
      if (b.family == 21 || b.family == 22)
        out.push_back(check_pair(ring, a, b, PresentedProduct{0, 0, "X3 zero list, repeated entry"}));
  }
  return out;
}

template <class F>
std::vector<FactorizationCheck> verify_factorization(RingModel<F>& ring) {
  const std::array<std::pair<int, int>, 5> items{{{5, 4}, {10, 6}, {17, 15}, {19, 18}, {21, 20}}};
  std::vector<FactorizationCheck> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    auto [target, other] = items[k];
    for (const auto& g : ring.generators()) {
      if (g.family != target) continue;
      FactorizationCheck fc{static_cast<char>('a' + k), g, std::nullopt};
      auto want = ring.generator_class(g);
      for (const auto& a : ring.generators()) {
        if (a.family != 3 || fc.witness) continue;
        for (const auto& b : ring.generators()) {
          if (b.family != other || a.degree + b.degree != g.degree) continue;
          if (ring.product(a, b) == want) {
            fc.witness = std::pair{a, b};
            break;
          }
        }
      }
      out.push_back(fc);
    }
  }
  return out;
}

template <class F>
std::vector<CommutativityCheck> verify_commutativity(RingModel<F>& ring) {
  std::vector<CommutativityCheck> out;
  const auto& gens = ring.generators();
  for (std::size_t x = 0; x < gens.size(); ++x)
    for (std::size_t y = x + 1; y < gens.size(); ++y)
      out.push_back({gens[x], gens[y], ring.product(gens[x], gens[y]) == ring.product(gens[y], gens[x])});
  return out;
}

#define HH_RING_INSTANTIATE(F)                                                             \
  template class RingModel<F>;                                                             \
  template std::vector<GenerationCheck> verify_generation(RingModel<F>&);                  \
  template std::vector<RelationCheck> verify_relations(RingModel<F>&);                     \
  template std::optional<RelationCheck> check_relation(RingModel<F>&, const GeneratorId&,  \
                                                       const GeneratorId&);                \
  template std::vector<RelationCheck> duplicate_line_report(RingModel<F>&);                \
  template std::vector<FactorizationCheck> verify_factorization(RingModel<F>&);            \
  template std::vector<CommutativityCheck> verify_commutativity(RingModel<F>&);

HH_RING_INSTANTIATE(PrimeField)
HH_RING_INSTANTIATE(RationalField)

}  // namespace hhcoh::e6
