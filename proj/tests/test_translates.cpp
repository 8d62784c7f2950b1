#include <gtest/gtest.h>

#include <map>

#include "hhcoh/e6/translates.hpp"

using namespace hhcoh;
using namespace hhcoh::e6;

namespace {

template <class Fn>
void for_each_field(Fn fn) {
  fn(RationalField{}, 0u);
  for (unsigned p : {2u, 3u, 5u}) fn(PrimeField(p), p);
}

// negates every term of the entry at (row, col)
template <class F>
BimoduleMap<F> negate_entry(const BimoduleMap<F>& f, std::size_t row, std::size_t col) {
  BimoduleMap<F> out(f.algebra(), f.domain(), f.codomain());
  const auto& fld = f.algebra().field();
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& [r, entry] : f.column(c))
      for (const auto& t : entry) out.add_term(r, c, t.a, t.b, r == row && c == col ? fld.neg(t.coeff) : t.coeff);
  return out;
}

}  // namespace

TEST(Translates, EveryTableIsPresent) {
  for (int family : translate_families())
    for (int r0 = 0; r0 <= 10; ++r0)
      for (int s : {1, 2}) EXPECT_NO_THROW(translate_table_name(family, r0, s)) << family << " " << r0;
  EXPECT_EQ(translate_table_name(4, 5, 1), "tr4_5_s1");
  EXPECT_EQ(translate_table_name(4, 5, 2), "tr4_5_sn");
  EXPECT_EQ(translate_table_name(4, 4, 2), "tr4_4");
}

TEST(Translates, ChainSquaresAndTwist) {
  std::map<int, int> covered;
  for (int s : {1, 2}) {
    for_each_field([&](auto field, unsigned p) {
      using F = decltype(field);
      Family<F> fam(s, field);
      for (int family : translate_families()) {
        for (int t : generator_degrees(family, s, p)) {
          // t0 up to 21 covers r0 = 0..10, the seam and the sigma-twisted copy with l0 = 1
          auto checks = verify_translates(fam, family, t, 21);
          ASSERT_EQ(checks.size(), 22u);
          for (const auto& c : checks)
            EXPECT_TRUE(c.ok) << "Y" << family << "_" << t << " t0=" << c.t0 << " s=" << s << " p=" << p << " "
                              << c.error;
          ++covered[family];
        }
      }
    });
  }
  for (int family : translate_families()) EXPECT_GT(covered[family], 0) << family;
}

TEST(Translates, SpotExamples) {
  Family<PrimeField> fam2(2, PrimeField(3));
  auto phi0 = translate_map(fam2, 1, 0, 0);
  EXPECT_EQ(phi0.nonzero_entries(), 12u);
  EXPECT_EQ(phi0, generator_map(fam2, 1, 0));

  Family<PrimeField> fam1(1, PrimeField(3));
  auto phi10 = translate_map(fam1, 24, 0, 10);
  EXPECT_EQ(phi10.nonzero_entries(), 3u);
  auto phi9 = translate_map(fam1, 24, 0, 9);
  EXPECT_EQ(compose(fam1.differential(9), phi10), compose(phi9, fam1.differential(9)));

  auto y2 = translate_map(fam1, 2, 0, 1);
  EXPECT_EQ(y2.nonzero_entries(), 1u);
}

TEST(Translates, MutationsBreakTheSquares) {
  Family<PrimeField> fam(1, PrimeField(3));
  // flipping one entry of a tabulated translate
  for (int family : {1, 3, 4, 5, 24}) {
    int t = generator_degrees(family, 1, 3).front();
    for (int r0 = 1; r0 <= 10; ++r0) {
      auto phi = translate_map(fam, family, t, r0);
      auto prev = translate_map(fam, family, t, r0 - 1);
      ASSERT_EQ(compose(fam.differential(r0 - 1), phi), compose(prev, fam.differential(t + r0 - 1)));
      if (phi.is_zero()) continue;
      std::size_t col = 0;
      while (phi.column(col).empty()) ++col;
      auto bad = negate_entry(phi, phi.column(col).begin()->first, col);
      EXPECT_NE(compose(fam.differential(r0 - 1), bad), compose(prev, fam.differential(t + r0 - 1)))
          << "Y" << family << " r0=" << r0;
    }
  }
  // dropping the (-1)^{l0} of the twist rule for Y3 breaks the seam square
  int t = 1;
  auto phi10 = translate_map(fam, 3, t, 10);
  auto phi11 = translate_map(fam, 3, t, 11);
  ASSERT_EQ(compose(fam.differential(10), phi11), compose(phi10, fam.differential(t + 10)));
  const auto& f = fam.field();
  auto unsigned11 = phi11.map_left(phi11.domain(), phi11.codomain(), [&](std::size_t a) {
    SparseVec<PrimeField> v{{a, f.neg(f.one())}};
    return v;
  });
  EXPECT_NE(compose(fam.differential(10), unsigned11), compose(phi10, fam.differential(t + 10)));
}
