#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhcoh/e6/generators.hpp"

namespace hhcoh::e6 {

/// Right-hand side of X^(a) X^(b) in the presented ring: coeff * X~^(family), or zero when family == 0.
struct PresentedProduct {
  long long coeff = 0;
  int family = 0;
  std::string rule;  // which relation produced it
};

/// Looks the product up in the relation list (either factor order). nullopt when the presentation
/// says nothing about this pair.
std::optional<PresentedProduct> presented_product(int s, unsigned characteristic, const GeneratorId& a,
                                                  const GeneratorId& b);

/// Cohomology classes of generators and their cup products for one family.
template <class F>
class RingModel {
 public:
  using T = typename F::value_type;
  explicit RingModel(const Family<F>& fam);

  const Family<F>& family() const { return *fam_; }
  int period() const { return fam_->period().period; }
  const std::vector<GeneratorId>& generators() const { return gens_; }
  bool has_generator(const GeneratorId& g) const;

  const Cohomology<F>& cohomology(int t);
  const std::vector<T>& cochain(const GeneratorId& g);
  /// Class of T^k Y in degree g.degree + k*M.
  std::vector<T> generator_class(const GeneratorId& g, int k = 0);
  /// cl(Y_a o Omega^{t_a}(Y_b)): class in degree t_a + t_b.
  std::vector<T> product(const GeneratorId& a, const GeneratorId& b);
  /// Class of coeff * X~^(family) in degree t (zero vector if family == 0); nullopt if undefined there.
  std::optional<std::vector<T>> presented_class(const PresentedProduct& p, int t);

 private:
  const ChainMap<F>& translates(const GeneratorId& g, int horizon);

  const Family<F>* fam_;
  std::vector<GeneratorId> gens_;
  Lifter<F> lifter_;
  std::map<int, std::unique_ptr<Cohomology<F>>> coh_;
  std::map<GeneratorId, std::vector<T>> cochains_;
  std::map<GeneratorId, ChainMap<F>> lifts_;
};

struct RelationCheck {
  GeneratorId a, b;
  int degree = 0;
  std::string rule;
  std::string expected;             // e.g. "-2*X~14" or "0"
  std::vector<std::string> computed;  // class coordinates
  bool rhs_defined = true;          // X~^(c) exists in this degree
  bool exact = false;
  bool up_to_unit = false;
};

struct GenerationCheck {
  int degree = 0;
  std::size_t hh = 0;
  std::size_t generators = 0;
  std::size_t rank = 0;
  bool ok() const { return rank == hh; }
};

struct FactorizationCheck {
  char item = 'a';
  GeneratorId target;
  std::optional<std::pair<GeneratorId, GeneratorId>> witness;
};

struct CommutativityCheck {
  GeneratorId a, b;
  bool ok = false;
};

template <class F>
std::vector<GenerationCheck> verify_generation(RingModel<F>& ring);

/// The presented relation for the pair (either order), checked; nullopt if the presentation has none.
template <class F>
std::optional<RelationCheck> check_relation(RingModel<F>& ring, const GeneratorId& a, const GeneratorId& b);

/// Every presented relation over all admissible degree pairs.
template <class F>
std::vector<RelationCheck> verify_relations(RingModel<F>& ring);

/// X^(3) X^(21) and X^(3) X^(22) (the duplicated line of the relation list), computed and reported.
template <class F>
std::vector<RelationCheck> duplicate_line_report(RingModel<F>& ring);

template <class F>
std::vector<FactorizationCheck> verify_factorization(RingModel<F>& ring);

template <class F>
std::vector<CommutativityCheck> verify_commutativity(RingModel<F>& ring);

}  // namespace hhcoh::e6
