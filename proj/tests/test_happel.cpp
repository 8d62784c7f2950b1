#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "hhcoh/e6/family.hpp"
#include "hhcoh/modules.hpp"

using namespace hhcoh;
using namespace hhcoh::e6;

namespace {

// Resolution terms of simple modules by label, read off the known one-sided resolutions.
// Beyond the listed terms the resolution continues as that of the simple syzygy.
std::vector<long long> expected_labels(long long label, int s, int m) {
  long long x = label / 4, k = label % 4;
  long long S = s;
  std::vector<std::vector<long long>> terms;
  long long next = 0;
  if (k == 0) {
    long long r = x;
    terms = {{4 * r},
             {4 * r + 1, 4 * (r + S) + 1},
             {4 * r + 3},
             {4 * (r + 1) + 2, 4 * (r + S + 1) + 2},
             {4 * (r + 1) + 3, 4 * (r + 2)},
             {4 * (r + 2) + 1, 4 * (r + S + 2) + 1},
             {4 * (r + 3)},
             {4 * (r + 3) + 2, 4 * (r + S + 3) + 2},
             {4 * (r + 3) + 3}};
    next = 4 * (r + 4) + 3;
  } else if (k == 1) {
    terms = {{4 * x + 1}, {4 * x + 2}};
    next = 4 * (x + 1) + 2;
  } else if (k == 2) {
    long long r = x;
    terms = {{4 * r + 2},     {4 * r + 3},     {4 * (r + S + 1) + 1},
             {4 * (r + 2)},   {4 * (r + 2) + 1, 4 * (r + S + 2) + 2},
             {4 * (r + 2) + 3}, {4 * (r + 3) + 2}, {4 * (r + 4)},
             {4 * (r + S + 4) + 1}};
    next = 4 * (r + S + 5) + 1;
  } else {
    terms = {{4 * x + 3}, {4 * (x + 1)}};
    next = 4 * (x + 2);
  }
  if (m < static_cast<int>(terms.size())) return terms[static_cast<std::size_t>(m)];
  return expected_labels(next, s, m - static_cast<int>(terms.size()));
}

std::vector<int> expected_tops(long long label, int s, int m) {
  std::vector<int> out;
  for (long long l : expected_labels(label, s, m)) out.push_back(label_vertex(l, s));
  std::sort(out.begin(), out.end());
  return out;
}

// representative label of each vertex
std::map<int, long long> vertex_labels(int s) {
  std::map<int, long long> out;
  for (long long l = 0; l < 8LL * s; ++l) out.emplace(label_vertex(l, s), l);
  return out;
}

}  // namespace

TEST(Happel, SimpleResolutionsMatchKnownTerms) {
  for (int s : {1, 2, 3}) {
    Family<PrimeField> fam(s, PrimeField(3));
    for (auto [v, label] : vertex_labels(s)) {
      auto res = resolve_simple(fam.algebra(), v, 9);
      for (int m = 0; m <= 9; ++m)
        EXPECT_EQ(res.tops[static_cast<std::size_t>(m)], expected_tops(label, s, m))
            << "s=" << s << " label=" << label << " m=" << m;
      // simple syzygies
      std::size_t k = static_cast<std::size_t>(label % 4);
      std::size_t period = (k == 0 || k == 2) ? 9 : 2;
      EXPECT_EQ(res.syzygy_dims[period], 1u) << "s=" << s << " label=" << label;
    }
  }
}

TEST(Happel, BimoduleTermsMatchExtBetweenSimples) {
  for (int s : {1, 2}) {
    Family<RationalField> fam(s, RationalField{});
    int n = fam.algebra().vertex_count();
    std::vector<SimpleResolution> res;
    for (int v = 0; v < n; ++v) res.push_back(resolve_simple(fam.algebra(), v, 9));
    for (int m = 0; m <= 9; ++m) {
      std::map<std::pair<int, int>, int> mult;
      for (const auto& p : fam.term(m)) ++mult[{p.left, p.right}];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const auto& tops = res[static_cast<std::size_t>(j)].tops[static_cast<std::size_t>(m)];
          int ext = static_cast<int>(std::count(tops.begin(), tops.end(), i));
          EXPECT_EQ(mult[std::make_pair(i, j)], ext) << "s=" << s << " m=" << m << " P(" << i << "," << j << ")";
        }
    }
  }
}

TEST(Happel, ResolutionOfPathAlgebraSimple) {
  Quiver q(3);
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  auto A = Algebra<RationalField>::build(q, RationalField{}, {}, 3);
  auto r0 = resolve_simple(A, 0, 2);
  EXPECT_EQ(r0.tops[1], (std::vector<int>{1}));
  EXPECT_TRUE(r0.tops[2].empty());
  EXPECT_EQ(r0.syzygy_dims[1], 2u);
  auto r2 = resolve_simple(A, 2, 1);
  EXPECT_TRUE(r2.tops[1].empty());
}
