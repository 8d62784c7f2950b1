#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhcoh/bimodule.hpp"
#include "hhcoh/formula.hpp"

namespace hhcoh::e6 {

inline constexpr int kN = 6;

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertex ids: A_x = x (x < s), B_x = s + x, C_x = 3s + x (x < 2s), D_x = 5s + x (x < s).
/// Label 4x + k names A/B/C/D (k = 0..3) at position x, read mod s or mod 2s.
int label_vertex(long long label, int s);
int vertex_count(int s);
/// Arrow ids: alpha_i = i (i < 6s), gamma_i = 6s + i (i < s).
int alpha_id(long long i, int s);
int gamma_id(long long i, int s);

Quiver build_quiver(int s);
std::vector<Relation> build_relations(int s);

template <class F>
std::shared_ptr<const Algebra<F>> build_algebra(int s, F field);

/// Images of the arrows under sigma: (sign, arrow id) for each arrow id.
std::vector<std::pair<int, int>> sigma_arrow_table(int s);
std::vector<int> sigma_vertex_table(int s);

template <class F>
Automorphism<F> build_sigma(const Algebra<F>& A, int s);

/// Sign c with sigma^l(arrow) = c * arrow' (the kappa coefficient of a single arrow).
int kappa_arrow(int s, int l, int arrow);

struct PeriodData {
  int m0 = 0;
  int sigma_order = 0;
  int period = 0;  // M
};
PeriodData period_data(int s, unsigned characteristic);

struct DegreeClass {
  int t = 0;
  int l = 0;
  int r = 0;
  int m = 0;
  std::vector<int> conditions;  // matched items of the 22-condition list, ascending
};
DegreeClass classify_degree(int s, unsigned characteristic, int t);

/// Q_r for r <= 10 as label pairs (left, right), in summand order.
std::vector<std::pair<long long, long long>> base_term_labels(int s, int r);
Term base_term(int s, int r);

struct FamilyOptions {
  std::optional<int> typo;  // flip the sign of one entry of d_typo (mutation testing)
};

/// Column and row of the entry touched by a typo in d_r.
std::pair<std::size_t, std::size_t> typo_position(int s, int r);

/// The algebra R'_s together with its periodic bimodule resolution.
template <class F>
class Family {
 public:
  using T = typename F::value_type;

  Family(int s, F field, FamilyOptions opts = {});
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;

  int s() const { return s_; }
  const F& field() const { return algebra_->field(); }
  const Algebra<F>& algebra() const { return *algebra_; }
  std::shared_ptr<const Algebra<F>> algebra_ptr() const { return algebra_; }
  const PeriodData& period() const { return period_; }
  /// sigma^l (l reduced mod the order)
  const Automorphism<F>& sigma(int l = 1) const;
  int sigma_vertex(int v, int l) const;

  Term term(int t) const;
  BimoduleMap<F> base_differential(int r) const;
  BimoduleMap<F> differential(int t) const;
  const BimoduleComplex<F>& complex() const { return *complex_; }

  /// Basis index of the path with the given endpoint labels.
  std::size_t path(const formula::LabelPath& p) const;
  /// Evaluates a matrix table into a map between the given terms.
  BimoduleMap<F> realize(const formula::ConcreteTable& table, const Term& domain, const Term& codomain,
                         const std::string& what) const;
  formula::Env env() const;

 private:
  int s_;
  FamilyOptions opts_;
  std::shared_ptr<const Algebra<F>> algebra_;
  PeriodData period_;
  std::vector<Automorphism<F>> sigma_powers_;
  std::array<Term, 11> base_terms_;
  std::unique_ptr<BimoduleComplex<F>> complex_;
};

/// Parsed tables embedded at build time, keyed by table name.
const formula::TableSpec& table(const std::string& name);
bool has_table(const std::string& name);

}  // namespace hhcoh::e6

namespace hhcoh::e6 {

struct ExpectedDims {
  long long hom = 0;     // dim Hom(Q_t, R)
  long long image = 0;   // dim Im delta^t
  long long hh = 0;      // dim HH^t from the additive theorems
  long long hh_from_ranks = 0;  // hom - image(t) - image(t-1)
};

long long expected_hom(int s, int t);
long long expected_image(int s, unsigned characteristic, int t);
long long expected_hh(int s, unsigned characteristic, int t);
ExpectedDims expected_dims(int s, unsigned characteristic, int t);

}  // namespace hhcoh::e6
