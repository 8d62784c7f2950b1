#include <gtest/gtest.h>

#include <random>

#include "hhcoh/field.hpp"
#include "hhcoh/matrix.hpp"

using namespace hhcoh;

TEST(Field, ScalarExamples) {
  auto gf3 = FieldSpec::prime(3);
  EXPECT_EQ((Scalar(gf3, 2) + Scalar(gf3, 2)).to_string(), "1");
  auto gf5 = FieldSpec::prime(5);
  EXPECT_EQ((Scalar(gf5, 4) / Scalar(gf5, 3)).to_string(), "3");
  auto q = FieldSpec::rationals();
  EXPECT_EQ((Scalar(q, mpq_class(1, 2)) + Scalar(q, mpq_class(1, 3))).to_string(), "5/6");
}

TEST(Field, Errors) {
  auto gf5 = FieldSpec::prime(5);
  EXPECT_THROW(Scalar(gf5, 1) / Scalar(gf5, 0), FieldError);
  EXPECT_THROW(Scalar(gf5, 1) + Scalar(FieldSpec::prime(3), 1), FieldError);
  EXPECT_THROW(Scalar(FieldSpec::rationals(), 1) / Scalar(FieldSpec::rationals(), 0), FieldError);
  EXPECT_THROW(FieldSpec::prime(4), FieldError);
  EXPECT_THROW(FieldSpec::prime(1ULL << 31), FieldError);
  EXPECT_EQ(FieldSpec::prime(7).characteristic(), 7u);
  EXPECT_EQ(FieldSpec::rationals().characteristic(), 0u);
}

TEST(Field, CanonicalForms) {
  auto gf7 = FieldSpec::prime(7);
  EXPECT_EQ(Scalar(gf7, -1).residue(), 6u);
  Scalar r(FieldSpec::rationals(), mpq_class(4, -6));
  EXPECT_EQ(r.to_string(), "-2/3");
  EXPECT_EQ(Scalar(gf7, mpq_class(1, 2)).residue(), 4u);
}

TEST(Matrix, RankExamples) {
  PrimeField gf2(2);
  EXPECT_EQ(rank(Matrix<PrimeField>::identity(gf2, 3)), 3u);
  EXPECT_EQ(rank(Matrix<PrimeField>(gf2, 4, 7)), 0u);
  RationalField q;
  Matrix<RationalField> m(q, 2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rank(Matrix<RationalField>(q, 0, 0)), 0u);
}

template <class F>
Matrix<F> random_matrix(const F& f, std::mt19937& rng, std::size_t r, std::size_t c) {
  Matrix<F> m(f, r, c);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (sparse(rng)) m(i, j) = f.from_int(dist(rng));
  return m;
}

template <class F>
void rank_properties(const F& f, unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rng() % 9, c = rng() % 9;
    auto m = random_matrix(f, rng, r, c);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.rows(), c);
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      auto v = m.apply(ker.row(k));
      for (auto& x : v) EXPECT_TRUE(f.is_zero(x));
    }
    // permuting rows and columns keeps the rank
    std::vector<std::size_t> pr(r), pc(c);
    for (std::size_t i = 0; i < r; ++i) pr[i] = i;
    for (std::size_t j = 0; j < c; ++j) pc[j] = j;
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    Matrix<F> p(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p(i, j) = m(pr[i], pc[j]);
    EXPECT_EQ(rank(p), rank(m));
    // solve recovers a consistent right-hand side
    std::vector<typename F::value_type> x(c, f.zero());
    for (auto& xi : x) xi = f.from_int(static_cast<int>(rng() % 5));
    auto b = m.apply(x);
    auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
    LinearSolver<F> ls(m);
    auto sol2 = ls.solve(b);
    ASSERT_TRUE(sol2.has_value());
    EXPECT_EQ(m.apply(*sol2), b);
    EXPECT_EQ(ls.rank(), rank(m));
  }
}

TEST(Matrix, RankNullityAndPermutation) {
  rank_properties(PrimeField(2), 1);
  rank_properties(PrimeField(3), 2);
  rank_properties(PrimeField(5), 3);
  rank_properties(RationalField{}, 4);
}

TEST(Matrix, SparseEchelonAgreesWithDense) {
  std::mt19937 rng(11);
  PrimeField f(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(f, rng, 7, 6);
    SparseEchelon<PrimeField> e(f);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      SparseVec<PrimeField> v;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!f.is_zero(m(r, c))) v.emplace_back(c, m(r, c));
      e.insert(v);
    }
    EXPECT_EQ(e.rank(), rank(m));
  }
}
