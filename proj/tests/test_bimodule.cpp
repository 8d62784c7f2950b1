#include <gtest/gtest.h>

#include <random>

#include "hhcoh/bar_oracle.hpp"
#include "hhcoh/bimodule.hpp"
#include "hhcoh/demo.hpp"

using namespace hhcoh;

namespace {

template <class F>
std::vector<std::size_t> resolution_hh(F field, int tmax) {
  auto A = dual_numbers(field);
  auto C = dual_numbers_resolution(A);
  std::vector<std::size_t> out;
  for (int t = 0; t <= tmax; ++t) out.push_back(Cohomology<F>(C, t).dim());
  return out;
}

template <class F>
std::vector<std::size_t> oracle_hh(F field, int tmax) {
  auto A = dual_numbers(field);
  BarOracle<F> bar(*A, {tmax, 1000000});
  std::vector<std::size_t> out;
  for (int t = 0; t <= tmax; ++t) out.push_back(bar.hh_dim(t));
  return out;
}

}  // namespace

TEST(Bimodule, ProjectiveDims) {
  auto A = dual_numbers(PrimeField(2));
  EXPECT_EQ(projective_dim(*A, {0, 0}), 4u);
  Quiver q(3);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  auto B = Algebra<RationalField>::build(q, RationalField{}, {}, 3);
  // A e_0 is spanned by e_0, a, ba; e_2 A by e_2, b, ba
  EXPECT_EQ(projective_dim(B, {0, 2}), 9u);
  EXPECT_EQ(projective_dim(B, {2, 0}), 1u);
}

TEST(Bimodule, DualNumbersComplex) {
  auto A = dual_numbers(PrimeField(3));
  auto C = dual_numbers_resolution(A);
  for (int t = 0; t < 6; ++t) EXPECT_TRUE(composes_to_zero(C, t));
  auto rep = verify_exactness(C, 6);
  EXPECT_TRUE(rep.ok()) << rep.summary();
  auto id = identity_map(*A, C.term(0));
  EXPECT_EQ(compose(C.d(0), id), C.d(0));
  EXPECT_EQ(underlying_matrix(id), Matrix<PrimeField>::identity(A->field(), 4));
  EXPECT_TRUE(underlying_matrix(BimoduleMap<PrimeField>(*A, C.term(0), C.term(0))).is_zero());
  for (int t = 0; t < 4; ++t) EXPECT_EQ(cochain_layout(*A, C.term(t)).dim, 2u);
}

TEST(Bimodule, BrokenSignIsDetected) {
  auto A = dual_numbers(PrimeField(3));
  const Algebra<PrimeField>* a = A.get();
  auto terms = [](int) { return Term{{0, 0}}; };
  auto diffs = [a](int) {
    BimoduleMap<PrimeField> d(*a, Term{{0, 0}}, Term{{0, 0}});
    d.add_term(0, 0, a->unique_path(0, 0, 1), a->idempotent(0), 1);
    d.add_term(0, 0, a->idempotent(0), a->unique_path(0, 0, 1), 1);
    return d;
  };
  BimoduleComplex<PrimeField> C(A, terms, diffs, {A->basis_elem(A->idempotent(0))});
  EXPECT_FALSE(composes_to_zero(C, 0));
  // x(x)x squares to zero but is far from exact
  auto square_zero = [a](int) {
    BimoduleMap<PrimeField> d(*a, Term{{0, 0}}, Term{{0, 0}});
    d.add_term(0, 0, a->unique_path(0, 0, 1), a->unique_path(0, 0, 1), 1);
    return d;
  };
  BimoduleComplex<PrimeField> D(A, terms, square_zero, {A->basis_elem(A->idempotent(0))});
  EXPECT_TRUE(composes_to_zero(D, 0));
  auto rep = verify_exactness(D, 2);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.degrees[0].exact);
}

TEST(Bimodule, FunctorialityOfUnderlyingMatrices) {
  auto A = dual_numbers(PrimeField(5));
  std::mt19937 rng(7);
  Term t{{0, 0}, {0, 0}};
  auto random_map = [&] {
    BimoduleMap<PrimeField> f(*A, t, t);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) f.add_term(r, c, a, b, A->field().from_int(static_cast<int>(rng() % 5)));
    return f;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_map(), g = random_map();
    EXPECT_EQ(underlying_matrix(compose(f, g)), underlying_matrix(f) * underlying_matrix(g));
  }
}

TEST(Bimodule, DualNumbersCohomologyMatchesOracle) {
  EXPECT_EQ(resolution_hh(PrimeField(2), 4), (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_EQ(oracle_hh(PrimeField(2), 4), (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_EQ(resolution_hh(RationalField{}, 4), (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(oracle_hh(RationalField{}, 4), (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(resolution_hh(PrimeField(3), 4), oracle_hh(PrimeField(3), 4));
}

TEST(Bimodule, OracleResourceBound) {
  auto A = dual_numbers(PrimeField(2));
  BarOracle<PrimeField> bar(*A, {2, 1000});
  EXPECT_THROW(bar.hh_dim(3), ResourceBoundExceeded);
}

TEST(Bimodule, LiftingAndCupProduct) {
  auto A = dual_numbers(PrimeField(2));
  auto C = dual_numbers_resolution(A);
  Lifter<PrimeField> lifter(C);
  Cohomology<PrimeField> h0(C, 0), h1(C, 1), h2(C, 2);
  ASSERT_EQ(h1.dim(), 2u);
  // unit class lifts to the identity chain map
  std::vector<PrimeField::value_type> unit(2, 0);
  unit[A->corner_position(A->idempotent(0))] = 1;
  auto phi = lifter.lift(unit, 0, 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(phi.maps[static_cast<std::size_t>(k)], identity_map(*A, C.term(k)));
  for (std::size_t r = 0; r < h1.dim(); ++r) {
    auto f = h1.representatives().row(r);
    auto lf = lifter.lift(f, 1, 3);
    for (int k = 0; k < 3; ++k) EXPECT_TRUE(lifter.commutes(lf, k));
    EXPECT_EQ(augment(C, lf.maps[0]), f);
    // unit . f = f
    auto prod = cup_cochain(C, unit, 0, lf.maps[0]);
    EXPECT_EQ(h1.class_of(prod), h1.class_of(f));
  }
}
