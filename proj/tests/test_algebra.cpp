#include <gtest/gtest.h>

#include "hhcoh/algebra.hpp"

using namespace hhcoh;

namespace {

Algebra<PrimeField> dual_numbers(std::uint32_t p) {
  Quiver q(1);
  int x = q.add_arrow("x", 0, 0);
  Relation rel{{{mpq_class(1), make_path(q, {x, x})}}};
  return Algebra<PrimeField>::build(q, PrimeField(p), {rel}, 3);
}

Algebra<RationalField> a3() {
  Quiver q(3);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  return Algebra<RationalField>::build(q, RationalField{}, {}, 3);
}

}  // namespace

TEST(Algebra, DualNumbers) {
  auto A = dual_numbers(2);
  EXPECT_EQ(A.dim(), 2u);
  EXPECT_EQ(A.corner_basis(0, 0).size(), 2u);
  EXPECT_THROW(A.unique_path(0, 0), AmbiguousPath);
  EXPECT_EQ(A.basis_path(A.unique_path(0, 0, 1)).length(), 1u);
  EXPECT_EQ(A.center_dimension(), 2u);
}

TEST(Algebra, A3Linear) {
  auto A = a3();
  EXPECT_EQ(A.dim(), 6u);
  EXPECT_EQ(A.corner_basis(2, 0).size(), 1u);
  EXPECT_EQ(A.basis_path(A.unique_path(0, 2)).length(), 2u);
  EXPECT_THROW(A.unique_path(2, 0), NoPath);
}

TEST(Algebra, IdempotentsAndAssociativity) {
  auto A = a3();
  auto one = Algebra<RationalField>::Elem{};
  for (int v = 0; v < 3; ++v) one = A.add(one, A.basis_elem(A.idempotent(v)));
  for (std::size_t b = 0; b < A.dim(); ++b) {
    EXPECT_EQ(A.mul(one, A.basis_elem(b)), A.basis_elem(b));
    EXPECT_EQ(A.mul(A.basis_elem(b), one), A.basis_elem(b));
  }
  for (int v = 0; v < 3; ++v)
    for (int w = 0; w < 3; ++w) {
      auto p = A.product(A.idempotent(v), A.idempotent(w));
      EXPECT_EQ(p.empty(), v != w);
    }
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t b = 0; b < A.dim(); ++b)
      for (std::size_t c = 0; c < A.dim(); ++c)
        EXPECT_EQ(A.mul(A.product(a, b), A.basis_elem(c)), A.mul(A.basis_elem(a), A.product(b, c)));
}

TEST(Algebra, CommutativeSquare) {
  // a square with one commutativity relation: b a = d c
  Quiver q(4);
  int a = q.add_arrow("a", 0, 1), b = q.add_arrow("b", 1, 3);
  int c = q.add_arrow("c", 0, 2), d = q.add_arrow("d", 2, 3);
  Relation rel{{{mpq_class(1), make_path(q, {a, b})}, {mpq_class(-1), make_path(q, {c, d})}}};
  auto A = Algebra<PrimeField>::build(q, PrimeField(5), {rel}, 4);
  EXPECT_EQ(A.dim(), 4u + 4u + 1u);
  auto x = A.normal_form(make_path(q, {a, b}));
  auto y = A.normal_form(make_path(q, {c, d}));
  EXPECT_EQ(x, y);
  EXPECT_NO_THROW(A.unique_path(0, 3));
}

TEST(Algebra, RejectsBadIdeals) {
  Quiver q(2);
  int a = q.add_arrow("a", 0, 1);
  Relation mixed{{{mpq_class(1), make_path(q, {a})}, {mpq_class(1), trivial_path(0)}}};
  EXPECT_THROW(Algebra<PrimeField>::build(q, PrimeField(2), {mixed}, 3), AlgebraError);
  Relation unit{{{mpq_class(1), trivial_path(0)}}};
  EXPECT_THROW(Algebra<PrimeField>::build(q, PrimeField(2), {unit}, 3), AlgebraError);
  EXPECT_THROW(q.add_arrow("a", 1, 0), AlgebraError);
  EXPECT_THROW(q.add_arrow("z", 0, 5), AlgebraError);
}

TEST(Algebra, AutomorphismOfDualNumbers) {
  auto A = dual_numbers(5);
  using Phi = Automorphism<PrimeField>;
  auto neg = Phi::from_generators(A, {0}, {{A.field().from_int(-1), 0}});
  EXPECT_TRUE(neg.is_multiplicative());
  EXPECT_EQ(neg.order(), 2);
  EXPECT_TRUE(Phi::identity(A).is_identity());
  EXPECT_TRUE(neg.power(2).is_identity());
}
