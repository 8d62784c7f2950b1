#include <gtest/gtest.h>

#include <algorithm>

#include "hhcoh/e6/ring.hpp"
#include "hhcoh/e6/translates.hpp"

using namespace hhcoh;
using namespace hhcoh::e6;

namespace {

template <class Fn>
void for_each_field(Fn fn) {
  fn(RationalField{}, 0u);
  for (unsigned p : {2u, 3u, 5u}) fn(PrimeField(p), p);
}

template <class F>
bool is_zero(const F& f, const std::vector<typename F::value_type>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <class F>
const RelationCheck* find_check(const std::vector<RelationCheck>& checks, int fa, int fb) {
  for (const auto& c : checks)
    if ((c.a.family == fa && c.b.family == fb) || (c.a.family == fb && c.b.family == fa)) return &c;
  return nullptr;
}

}  // namespace

TEST(Ring, GeneratorsAreNonzeroCocycles) {
  for (int s : {1, 2}) {
    for_each_field([s](auto field, unsigned p) {
      using F = decltype(field);
      Family<F> fam(s, field);
      RingModel<F> ring(fam);
      ASSERT_FALSE(ring.generators().empty());
      for (const auto& g : ring.generators()) {
        const auto& y = ring.cochain(g);
        auto& h = ring.cohomology(g.degree);
        EXPECT_TRUE(h.is_cocycle(y)) << to_string(g) << " s=" << s << " p=" << p;
        EXPECT_FALSE(is_zero(fam.field(), h.class_of(y))) << to_string(g) << " s=" << s << " p=" << p;
      }
    });
  }
}

TEST(Ring, GeneratorsSpanEveryDegree) {
  for (int s : {1, 2}) {
    for_each_field([s](auto field, unsigned p) {
      using F = decltype(field);
      Family<F> fam(s, field);
      RingModel<F> ring(fam);
      auto checks = verify_generation(ring);
      EXPECT_EQ(static_cast<int>(checks.size()), ring.period());
      for (const auto& c : checks) {
        EXPECT_TRUE(c.ok()) << "s=" << s << " p=" << p << " t=" << c.degree;
        EXPECT_EQ(c.generators, c.hh) << "s=" << s << " p=" << p << " t=" << c.degree;
      }
    });
  }
  Family<RationalField> fam(1, RationalField{});
  RingModel<RationalField> ring(fam);
  EXPECT_EQ(verify_generation(ring)[0].hh, 3u);
  Family<PrimeField> fam2(2, PrimeField(3));
  RingModel<PrimeField> ring2(fam2);
  EXPECT_EQ(verify_generation(ring2)[0].hh, 1u);
}

TEST(Ring, PrintedGeneratorEntries) {
  Family<PrimeField> fam(2, PrimeField(3));
  auto y3 = generator_map(fam, 3, 1);
  EXPECT_EQ(y3.nonzero_entries(), 2u);
  EXPECT_NE(y3.entry(0, 0), nullptr);
  EXPECT_NE(y3.entry(0, 2), nullptr);

  Family<RationalField> fam1(1, RationalField{});
  auto y24 = generator_map(fam1, 24, 0);
  EXPECT_EQ(y24.nonzero_entries(), 1u);
  ASSERT_NE(y24.entry(5, 5), nullptr);
  ASSERT_EQ(y24.entry(5, 5)->size(), 1u);
  EXPECT_EQ(fam1.algebra().basis_path(y24.entry(5, 5)->front().a).length(), 4u);

  EXPECT_THROW(generator_map(fam1, 3, 2), FamilyError);
  EXPECT_THROW(generator_map(fam, 24, 0), FamilyError);
}

TEST(Ring, RelationsHoldExactly) {
  for (int s : {1, 2}) {
    for_each_field([s](auto field, unsigned p) {
      using F = decltype(field);
      Family<F> fam(s, field);
      RingModel<F> ring(fam);
      auto checks = verify_relations(ring);
      EXPECT_FALSE(checks.empty());
      for (const auto& c : checks) {
        EXPECT_TRUE(c.rhs_defined) << to_string(c.a) << "*" << to_string(c.b) << " " << c.rule;
        EXPECT_TRUE(c.exact) << to_string(c.a) << "*" << to_string(c.b) << " " << c.rule << " s=" << s
                             << " p=" << p;
        EXPECT_TRUE(c.up_to_unit);
      }
    });
  }
}

TEST(Ring, CharacteristicBranchesAreExercised) {
  auto nonzero_rules = [](auto field) {
    using F = decltype(field);
    Family<F> fam(1, field);
    RingModel<F> ring(fam);
    std::set<std::string> out;
    for (const auto& c : verify_relations(ring))
      if (c.rule.size() >= 4 && c.rule[0] == '(' && c.expected != "0" && c.exact) out.insert(c.rule.substr(0, 4));
    return out;
  };
  auto two = nonzero_rules(PrimeField(2));
  for (const char* r : {"(r1)", "(r3)", "(r5)"}) EXPECT_TRUE(two.count(r)) << r;
  auto three = nonzero_rules(PrimeField(3));
  for (const char* r : {"(r2)", "(r4)", "(r6)", "(r7)"}) EXPECT_TRUE(three.count(r)) << r;
}

TEST(Ring, SmallSExtras) {
  Family<RationalField> fam(1, RationalField{});
  RingModel<RationalField> ring(fam);
  auto checks = verify_relations(ring);
  auto* c = find_check<RationalField>(checks, 22, 24);
  ASSERT_EQ(c, nullptr);  // no X22 outside characteristic 3
  Family<PrimeField> fam3(1, PrimeField(3));
  RingModel<PrimeField> ring3(fam3);
  auto checks3 = verify_relations(ring3);
  c = find_check<PrimeField>(checks3, 22, 24);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->expected, "-X~21");
  EXPECT_TRUE(c->exact);
  c = find_check<PrimeField>(checks3, 9, 24);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->expected, "-X~10");
  EXPECT_TRUE(c->exact);
}

TEST(Ring, WrongRightHandSideIsRejected) {
  Family<PrimeField> fam(1, PrimeField(3));
  RingModel<PrimeField> ring(fam);
  int tested = 0;
  for (const auto& c : verify_relations(ring)) {
    auto p = presented_product(1, 3, c.a, c.b);
    ASSERT_TRUE(p.has_value());
    if (p->family == 0 || p->coeff == 0) continue;
    auto flipped = *p;
    flipped.coeff = -flipped.coeff;
    auto wrong = ring.presented_class(flipped, c.degree);
    ASSERT_TRUE(wrong.has_value());
    EXPECT_NE(ring.product(c.a, c.b), *wrong) << to_string(c.a) << "*" << to_string(c.b);
    auto zero = ring.presented_class(PresentedProduct{0, 0, "zero"}, c.degree);
    EXPECT_NE(ring.product(c.a, c.b), *zero);
    ++tested;
  }
  EXPECT_GT(tested, 10);
}

TEST(Ring, UnitRowAndCommutativity) {
  for (int s : {1, 2}) {
    for_each_field([s](auto field, unsigned p) {
      using F = decltype(field);
      Family<F> fam(s, field);
      RingModel<F> ring(fam);
      GeneratorId unit{1, 0};
      for (const auto& g : ring.generators())
        EXPECT_EQ(ring.product(unit, g), ring.generator_class(g)) << to_string(g) << " s=" << s << " p=" << p;
      for (const auto& c : verify_commutativity(ring))
        EXPECT_TRUE(c.ok) << to_string(c.a) << "*" << to_string(c.b) << " s=" << s << " p=" << p;
    });
  }
}

TEST(Ring, FactorizationLemma) {
  for_each_field([](auto field, unsigned p) {
    using F = decltype(field);
    Family<F> fam(1, field);
    RingModel<F> ring(fam);
    auto checks = verify_factorization(ring);
    std::set<char> items;
    for (const auto& c : checks) {
      EXPECT_TRUE(c.witness.has_value()) << c.item << " " << to_string(c.target) << " p=" << p;
      items.insert(c.item);
    }
    EXPECT_EQ(items.size(), 5u) << "p=" << p;
  });
  // the worked example: Y4 Y3 = Y5 in degree 13
  Family<PrimeField> fam(1, PrimeField(5));
  RingModel<PrimeField> ring(fam);
  EXPECT_EQ(ring.product({4, 12}, {3, 1}), ring.generator_class({5, 13}));
  EXPECT_EQ(ring.product({3, 1}, {4, 12}), ring.generator_class({5, 13}));
}

TEST(Ring, DuplicatedLineIsReported) {
  Family<PrimeField> fam(1, PrimeField(3));
  RingModel<PrimeField> ring(fam);
  auto rep = duplicate_line_report(ring);
  std::set<int> seen;
  for (const auto& c : rep) {
    seen.insert(c.b.family);
    EXPECT_TRUE(c.exact) << to_string(c.a) << "*" << to_string(c.b);
  }
  EXPECT_TRUE(seen.count(21));
  EXPECT_TRUE(seen.count(22));
}

TEST(Ring, ProductsDoNotDependOnTheLift) {
  // the tabulated translates are a second chain-map lift; cup products must agree
  for (int s : {1, 2}) {
    for_each_field([s](auto field, unsigned p) {
      using F = decltype(field);
      Family<F> fam(s, field);
      RingModel<F> ring(fam);
      for (const auto& b : ring.generators()) {
        const auto& fams = translate_families();
        if (std::find(fams.begin(), fams.end(), b.family) == fams.end()) continue;
        for (const auto& a : ring.generators()) {
          auto phi = translate_map(fam, b.family, b.degree, a.degree);
          auto f = cup_cochain(fam.complex(), ring.cochain(a), a.degree, phi);
          EXPECT_EQ(ring.cohomology(a.degree + b.degree).class_of(f), ring.product(a, b))
              << to_string(a) << "*" << to_string(b) << " s=" << s << " p=" << p;
        }
      }
    });
  }
}
