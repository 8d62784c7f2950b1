#include <gtest/gtest.h>

#include <set>

#include "hhcoh/e6/validate.hpp"

using namespace hhcoh;
using namespace hhcoh::e6;

TEST(Validate, CleanResolutionPasses) {
  for (int s : {1, 2, 3}) {
    Family<PrimeField> fam(s, PrimeField(5));
    auto rep = verify_resolution(fam, 11, s == 3 ? 4 : 9);
    EXPECT_TRUE(rep.ok()) << "s=" << s << " " << (rep.first_failure() ? rep.first_failure()->detail : "");
    std::set<std::string> kinds;
    for (const auto& c : rep.checks) kinds.insert(c.kind);
    EXPECT_EQ(kinds, (std::set<std::string>{"d2", "exact", "shape", "happel", "syzygy"}));
  }
}

TEST(Validate, TypoIsLocated) {
  for (int k = 0; k <= 10; ++k) {
    Family<PrimeField> fam(2, PrimeField(3), FamilyOptions{k});
    auto rep = verify_resolution(fam, 11);
    ASSERT_FALSE(rep.ok()) << "d" << k;
    // every failing square involves d_k or its twisted copy d_{k+11}
    std::set<int> bad;
    for (const auto& c : rep.checks)
      if (c.kind == "d2" && !c.ok) bad.insert(c.degree);
    ASSERT_FALSE(bad.empty()) << "d" << k;
    for (int t : bad) EXPECT_TRUE(t % 11 == k || (t + 1) % 11 == k) << "d" << k << " square at " << t;
  }
}

TEST(Validate, SyzygyPeriods) {
  // A_0, B_0, C_0, D_0 at s = 2
  EXPECT_EQ(simple_syzygy_period(0, 2), 9);
  EXPECT_EQ(simple_syzygy_period(2, 2), 2);
  EXPECT_EQ(simple_syzygy_period(6, 2), 9);
  EXPECT_EQ(simple_syzygy_period(10, 2), 2);
  EXPECT_EQ(printed_term_size(4), 9);
  EXPECT_THROW(printed_term_size(11), FamilyError);
}
