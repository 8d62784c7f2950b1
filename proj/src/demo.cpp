#include "hhcoh/demo.hpp"

namespace hhcoh {

template <class F>
std::shared_ptr<const Algebra<F>> dual_numbers(F field) {
  Quiver q(1);
  int x = q.add_arrow("x", 0, 0);
  Relation rel{{{mpq_class(1), make_path(q, {x, x})}}};
  return std::make_shared<const Algebra<F>>(Algebra<F>::build(q, field, {rel}, 3));
}

template <class F>
BimoduleComplex<F> dual_numbers_resolution(std::shared_ptr<const Algebra<F>> A) {
  const Algebra<F>* a = A.get();
  auto terms = [](int) { return Term{{0, 0}}; };
  auto diffs = [a](int t) {
    const auto& f = a->field();
    BimoduleMap<F> d(*a, Term{{0, 0}}, Term{{0, 0}});
    std::size_t e = a->idempotent(0);
    std::size_t x = a->unique_path(0, 0, 1);
    d.add_term(0, 0, x, e, f.one());
    d.add_term(0, 0, e, x, t % 2 == 0 ? f.neg(f.one()) : f.one());
    return d;
  };
  std::vector<SparseVec<F>> eps{A->basis_elem(A->idempotent(0))};
  return BimoduleComplex<F>(A, terms, diffs, eps);
}

template std::shared_ptr<const Algebra<PrimeField>> dual_numbers(PrimeField);
template std::shared_ptr<const Algebra<RationalField>> dual_numbers(RationalField);
template BimoduleComplex<PrimeField> dual_numbers_resolution(std::shared_ptr<const Algebra<PrimeField>>);
template BimoduleComplex<RationalField> dual_numbers_resolution(std::shared_ptr<const Algebra<RationalField>>);

}  // namespace hhcoh
