#include <mutex>
#include <numeric>

#include "hhcoh/e6/family.hpp"

namespace hhcoh::detail {
const std::map<std::string, std::string>& embedded_tables();
}

namespace hhcoh::e6 {

using formula::residue;

int vertex_count(int s) { return 6 * s; }

int label_vertex(long long label, int s) {
  long long L = residue(label, 8LL * s);
  long long x = L / 4;
  switch (L % 4) {
    case 0:
      return static_cast<int>(residue(x, s));
    case 1:
      return static_cast<int>(s + residue(x, 2 * s));
    case 2:
      return static_cast<int>(3 * s + residue(x, 2 * s));
    default:
      return static_cast<int>(5 * s + residue(x, s));
  }
}

int alpha_id(long long i, int s) { return static_cast<int>(residue(i, 6LL * s)); }
int gamma_id(long long i, int s) { return static_cast<int>(6LL * s + residue(i, s)); }

Quiver build_quiver(int s) {
  if (s < 1) throw FamilyError("s must be positive");
  Quiver q(vertex_count(s));
  for (int t = 0; t < 2 * s; ++t) {
    q.add_arrow("a" + std::to_string(3 * t), label_vertex(4 * t, s), label_vertex(4 * t + 1, s));
    q.add_arrow("a" + std::to_string(3 * t + 1), label_vertex(4 * t + 1, s), label_vertex(4 * t + 2, s));
    q.add_arrow("a" + std::to_string(3 * t + 2), label_vertex(4 * t + 2, s), label_vertex(4 * t + 3, s));
  }
  // alpha ids are assigned in creation order 0..6s-1, then gamma
  for (int i = 0; i < s; ++i) q.add_arrow("g" + std::to_string(i), label_vertex(4 * i + 3, s), label_vertex(4 * i + 4, s));
  return q;
}

std::vector<Relation> build_relations(int s) {
  Quiver q = build_quiver(s);
  std::vector<Relation> rels;
  auto a = [&](long long i) { return alpha_id(i, s); };
  for (int t = 0; t < s; ++t) {
    Relation r;
    r.terms.emplace_back(mpq_class(1), make_path(q, {a(3 * t), a(3 * t + 1), a(3 * t + 2)}));
    r.terms.emplace_back(mpq_class(-1), make_path(q, {a(3 * (t + s)), a(3 * (t + s) + 1), a(3 * (t + s) + 2)}));
    rels.push_back(std::move(r));
  }
  for (int t = 0; t < 2 * s; ++t) {
    Relation r;
    r.terms.emplace_back(mpq_class(1), make_path(q, {a(3 * (t + s) - 1), gamma_id(t - 1, s), a(3 * t)}));
    rels.push_back(std::move(r));
  }
  return rels;
}

template <class F>
std::shared_ptr<const Algebra<F>> build_algebra(int s, F field) {
  return std::make_shared<const Algebra<F>>(Algebra<F>::build(build_quiver(s), std::move(field), build_relations(s), 5));
}

std::vector<int> sigma_vertex_table(int s) {
  std::vector<int> out(static_cast<std::size_t>(vertex_count(s)));
  // every vertex has a label 4x+k with x < 2s
  for (int x = 0; x < 2 * s; ++x)
    for (int k = 0; k < 4; ++k)
      out[static_cast<std::size_t>(label_vertex(4 * x + k, s))] = label_vertex(4 * (kN + s) + 4 * x + k, s);
  return out;
}

std::vector<std::pair<int, int>> sigma_arrow_table(int s) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < 6 * s; ++i) {
    int sign;
    bool low = i < 3 * s;
    switch (i % 3) {
      case 0:
        sign = low ? -1 : 1;
        break;
      case 1:
        sign = -1;
        break;
      default:
        sign = low ? 1 : -1;
    }
    out.emplace_back(sign, alpha_id(3 * (kN + s) + i, s));
  }
  for (int i = 0; i < s; ++i) out.emplace_back(i == s - 1 ? 1 : -1, gamma_id(i + kN, s));
  return out;
}

int kappa_arrow(int s, int l, int arrow) {
  auto table = sigma_arrow_table(s);
  int sign = 1;
  for (int k = 0; k < l; ++k) {
    auto [c, img] = table.at(static_cast<std::size_t>(arrow));
    sign *= c;
    arrow = img;
  }
  return sign;
}

template <class F>
Automorphism<F> build_sigma(const Algebra<F>& A, int s) {
  std::vector<typename Automorphism<F>::ArrowImage> arrows;
  for (auto [sign, img] : sigma_arrow_table(s)) arrows.push_back({A.field().from_int(sign), img});
  return Automorphism<F>::from_generators(A, sigma_vertex_table(s), std::move(arrows));
}

PeriodData period_data(int s, unsigned characteristic) {
  PeriodData p;
  p.m0 = 2 * s / std::gcd(kN + s, 2 * s);
  p.sigma_order = (characteristic == 2 || p.m0 % 4 == 0) ? p.m0 : 2 * p.m0;
  p.period = 11 * p.sigma_order;
  return p;
}

namespace {

enum class Rhs { Zero, One, S, S1 };
enum class Parity { Any, Even, Odd };

struct Condition {
  int r;
  Rhs rhs;
  Parity parity;
  bool or_char2;  // parity requirement waived in characteristic 2
  unsigned need_char;
};

// the 22 degree conditions
constexpr std::array<Condition, 22> kConditions{{
    {0, Rhs::Zero, Parity::Even, true, 0},  {0, Rhs::S1, Parity::Even, false, 3},
    {1, Rhs::Zero, Parity::Even, true, 0},  {1, Rhs::S, Parity::Odd, true, 0},
    {2, Rhs::S1, Parity::Odd, true, 0},     {3, Rhs::Zero, Parity::Any, false, 0},
    {3, Rhs::S, Parity::Any, false, 2},     {4, Rhs::S1, Parity::Any, false, 2},
    {4, Rhs::S, Parity::Odd, false, 3},     {4, Rhs::One, Parity::Any, false, 0},
    {5, Rhs::Zero, Parity::Even, false, 3}, {5, Rhs::S, Parity::Odd, false, 3},
    {6, Rhs::Zero, Parity::Any, false, 2},  {6, Rhs::One, Parity::Even, false, 3},
    {6, Rhs::S, Parity::Any, false, 0},     {7, Rhs::Zero, Parity::Any, false, 2},
    {7, Rhs::S, Parity::Any, false, 0},     {8, Rhs::Zero, Parity::Even, true, 0},
    {9, Rhs::Zero, Parity::Even, true, 0},  {9, Rhs::S, Parity::Odd, true, 0},
    {10, Rhs::S1, Parity::Odd, true, 0},    {10, Rhs::Zero, Parity::Odd, false, 3},
}};

}  // namespace

DegreeClass classify_degree(int s, unsigned characteristic, int t) {
  if (t < 0) throw FamilyError("negative degree");
  DegreeClass d;
  d.t = t;
  d.l = t / 11;
  d.r = t % 11;
  d.m = d.r / 2;
  long long value = residue(static_cast<long long>(d.l) * (kN + s) + d.m, 2LL * s);
  for (std::size_t k = 0; k < kConditions.size(); ++k) {
    const auto& c = kConditions[k];
    if (c.r != d.r) continue;
    long long rhs = c.rhs == Rhs::Zero ? 0 : c.rhs == Rhs::One ? 1 : c.rhs == Rhs::S ? s : s + 1;
    if (value != residue(rhs, 2LL * s)) continue;
    bool parity_ok = c.parity == Parity::Any || (c.parity == Parity::Even) == (d.l % 2 == 0);
    if (c.or_char2) parity_ok = parity_ok || characteristic == 2;
    if (!parity_ok) continue;
    if (c.need_char != 0 && c.need_char != characteristic) continue;
    d.conditions.push_back(static_cast<int>(k) + 1);
  }
  return d;
}

std::vector<std::pair<long long, long long>> base_term_labels(int s, int r) {
  using formula::fn_f;
  using formula::fn_h;
  if (r < 0 || r > 10) throw FamilyError("base term degree out of range");
  const long long S = s;
  const long long m = r / 2;
  std::vector<std::pair<long long, long long>> out;
  // summands are listed group by group; inside a group the index is x + s*q, and when a group
  // has two inner indices (i, j) the sub-index is q = i + (number of i values) * j
  auto group = [&](int subs, auto&& gen) {
    for (int q = 0; q < subs; ++q)
      for (long long x = 0; x < S; ++x) out.push_back(gen(x, q));
  };
  if (r % 2 == 0) {
    long long f2 = fn_f(m, 2), f3 = fn_f(m, 3);
    group(static_cast<int>(1 + f2), [&](long long x, int i) {
      return std::pair{4 * (x + m) - 1 + fn_h(m, 2) + i, 4 * x};
    });
    group(static_cast<int>(2 * (1 + f3)), [&](long long x, int q) {
      long long i = q % (1 + f3), j = q / (1 + f3);
      return std::pair{4 * (x + m + j * S + fn_f(m, 2) * S + fn_f(m, 5) * S) + 2 - fn_h(m, 3) + i * (4 * S + 1),
                       4 * (x + j * S) + 1};
    });
    group(static_cast<int>(2 * (1 + f2)), [&](long long x, int q) {
      long long i = q % (1 + f2), j = q / (1 + f2);
      return std::pair{4 * (x + m + j * S + fn_f(m, 1) * S + fn_f(m, 4) * S + fn_f(m, 5) * S) + 1 + fn_h(m, 2) +
                           i * (4 * S + 1),
                       4 * (x + j * S) + 2};
    });
    group(static_cast<int>(1 + f3), [&](long long x, int i) {
      return std::pair{4 * (x + m + 1) - fn_h(m, 3) + i, 4 * x + 3};
    });
  } else {
    long long f0 = fn_f(m, 0), f4 = fn_f(m, 4);
    group(static_cast<int>(2 - f4), [&](long long x, int i) {
      return std::pair{4 * (x + m) + 1 + fn_h(m, 0) + 2 * f4 + 4 * S * i, 4 * x};
    });
    group(2, [&](long long x, int j) {
      return std::pair{4 * (x + m + 1 + j * S) - fn_h(m, 0) - 2 * f0, 4 * (x + j * S) + 1};
    });
    group(2, [&](long long x, int j) {
      return std::pair{4 * (x + m + 1 + j * S + f4 * S) - fn_h(m, 5) + 2 * f4, 4 * (x + j * S) + 2};
    });
    group(static_cast<int>(2 - f0), [&](long long x, int i) {
      return std::pair{4 * (x + m + 1) + 1 + fn_h(m, 5) - 2 * f0 + 4 * S * i, 4 * x + 3};
    });
  }
  return out;
}

Term base_term(int s, int r) {
  Term t;
  for (auto [a, b] : base_term_labels(s, r)) t.push_back({label_vertex(a, s), label_vertex(b, s)});
  return t;
}

const formula::TableSpec& table(const std::string& name) {
  static const std::map<std::string, formula::TableSpec> parsed = [] {
    std::map<std::string, formula::TableSpec> out;
    for (const auto& [file, text] : detail::embedded_tables()) {
      try {
        for (auto& spec : formula::parse_tables(text)) {
          auto key = spec.name;
          if (!out.emplace(key, std::move(spec)).second) throw FamilyError("duplicate table " + key);
        }
      } catch (const formula::FormulaError& e) {
        throw FamilyError(file + ".hht: " + e.what());
      }
    }
    return out;
  }();
  auto it = parsed.find(name);
  if (it == parsed.end()) throw FamilyError("no table named " + name);
  return it->second;
}

bool has_table(const std::string& name) {
  try {
    table(name);
    return true;
  } catch (const FamilyError&) {
    return false;
  }
}

std::pair<std::size_t, std::size_t> typo_position(int s, int r) {
  formula::Env env;
  env.s = s;
  auto ct = formula::instantiate(table("d" + std::to_string(r)), env);
  if (ct.entries.empty()) throw FamilyError("empty differential table");
  return {ct.entries.front().col, ct.entries.front().row};
}

template <class F>
Family<F>::Family(int s, F field, FamilyOptions opts)
    : s_(s), opts_(opts), algebra_(build_algebra(s, std::move(field))) {
  period_ = period_data(s, algebra_->field().characteristic());
  auto sigma = build_sigma(*algebra_, s);
  sigma_powers_.push_back(Automorphism<F>::identity(*algebra_));
  for (int k = 1; k < period_.sigma_order; ++k) sigma_powers_.push_back(sigma_powers_.back().compose(sigma));
  if (!sigma_powers_.back().compose(sigma).is_identity())
    throw FamilyError("sigma does not have the expected order " + std::to_string(period_.sigma_order));
  for (int r = 0; r <= 10; ++r) base_terms_[static_cast<std::size_t>(r)] = base_term(s, r);
  std::vector<SparseVec<F>> eps;
  for (const auto& p : base_terms_[0]) {
    if (p.left != p.right) throw FamilyError("Q_0 is not diagonal");
    eps.push_back(algebra_->basis_elem(algebra_->idempotent(p.left)));
  }
  complex_ = std::make_unique<BimoduleComplex<F>>(
      algebra_, [this](int t) { return term(t); }, [this](int t) { return differential(t); }, std::move(eps));
}

template <class F>
const Automorphism<F>& Family<F>::sigma(int l) const {
  return sigma_powers_[static_cast<std::size_t>(residue(l, period_.sigma_order))];
}

template <class F>
int Family<F>::sigma_vertex(int v, int l) const {
  return sigma(l).vertex(v);
}

template <class F>
Term Family<F>::term(int t) const {
  if (t < 0) throw FamilyError("negative degree");
  Term out = base_terms_[static_cast<std::size_t>(t % 11)];
  int l = t / 11;
  for (auto& p : out) p.left = sigma_vertex(p.left, l);
  return out;
}

template <class F>
formula::Env Family<F>::env() const {
  formula::Env env;
  env.s = s_;
  int s = s_;
  env.extra = [s](const std::string& name, const std::vector<long long>& args) -> std::optional<long long> {
    if (name == "a" && args.size() == 1) return alpha_id(args[0], s);
    if (name == "g" && args.size() == 1) return gamma_id(args[0], s);
    if (name == "kappa" && args.size() == 2) return kappa_arrow(s, static_cast<int>(args[0]), static_cast<int>(args[1]));
    return std::nullopt;
  };
  return env;
}

template <class F>
std::size_t Family<F>::path(const formula::LabelPath& p) const {
  long long len = p.to.c - p.from.c;
  // some s = 1 formulas write labels that agree only modulo the vertex count; the length is then
  // the residue of the label difference
  int v1 = label_vertex(p.from.value(s_), s_), v2 = label_vertex(p.to.value(s_), s_);
  if (len < 0 || len > 4) len = residue(len, 4) == 0 && v1 != v2 ? 4 : residue(len, 4);
  if (len < 0 || len > 4)
    throw FamilyError("path between labels " + std::to_string(p.from.value(s_)) + " and " +
                      std::to_string(p.to.value(s_)) + " has length " + std::to_string(len));
  return algebra_->unique_path(v1, v2, static_cast<int>(len));
}

template <class F>
BimoduleMap<F> Family<F>::realize(const formula::ConcreteTable& table, const Term& domain, const Term& codomain,
                                  const std::string& what) const {
  if (table.cols != domain.size() || table.rows != codomain.size())
    throw FamilyError(what + ": table shape " + std::to_string(table.rows) + "x" + std::to_string(table.cols) +
                      " does not match terms " + std::to_string(codomain.size()) + "x" + std::to_string(domain.size()));
  BimoduleMap<F> out(*algebra_, domain, codomain);
  const auto& f = algebra_->field();
  for (const auto& e : table.entries) {
    for (const auto& t : e.terms) {
      try {
        out.add_term(e.row, e.col, path(t.left), path(t.right), f.from_int(t.coeff));
      } catch (const std::exception& err) {
        throw FamilyError(what + " entry (" + std::to_string(e.row) + "," + std::to_string(e.col) + ") line " +
                          std::to_string(e.line) + ": " + err.what());
      }
    }
  }
  return out;
}

template <class F>
BimoduleMap<F> Family<F>::base_differential(int r) const {
  if (r < 0 || r > 10) throw FamilyError("base differential degree out of range");
  auto name = "d" + std::to_string(r);
  auto ct = formula::instantiate(table(name), env());
  if (opts_.typo && *opts_.typo == r && !ct.entries.empty())
    for (auto& t : ct.entries.front().terms) t.coeff = -t.coeff;
  return realize(ct, term(r + 1), base_terms_[static_cast<std::size_t>(r)], name);
}

template <class F>
BimoduleMap<F> Family<F>::differential(int t) const {
  if (t < 0) throw FamilyError("negative degree");
  int r = t % 11, l = t / 11;
  auto base = base_differential(r);
  if (l == 0) return base;
  const auto& phi = sigma(l);
  return base.map_left(term(t + 1), term(t), [&phi](std::size_t a) { return phi.image(a); });
}

#define HHCOH_E6_INSTANTIATE(F)                                                             \
  template std::shared_ptr<const Algebra<F>> build_algebra<F>(int, F);                      \
  template Automorphism<F> build_sigma<F>(const Algebra<F>&, int);                          \
  template class Family<F>;

HHCOH_E6_INSTANTIATE(PrimeField)
HHCOH_E6_INSTANTIATE(RationalField)

}  // namespace hhcoh::e6
