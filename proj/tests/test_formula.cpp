#include <gtest/gtest.h>

#include "hhcoh/formula.hpp"

using namespace hhcoh::formula;

TEST(Formula, HelperFunctions) {
  EXPECT_EQ(fn_f(2, 2), 1);
  EXPECT_EQ(fn_f(2, 3), 0);
  EXPECT_EQ(fn_h(2, 5), 1);
  EXPECT_EQ(fn_h(2, 1), 0);
  EXPECT_EQ(fn_h(3, 3), 1);
  EXPECT_EQ(fn_h(3, 4), 0);
  EXPECT_EQ(fn_f0(0, 1), 1);
  EXPECT_EQ(fn_f0(1, 1), 0);
  EXPECT_EQ(fn_f1(0, 1), 1);
  EXPECT_EQ(fn_f1(1, 0), -1);
  EXPECT_EQ(fn_f2(1, 1), 1);
  EXPECT_EQ(fn_f2(1, 0), -1);
  EXPECT_EQ(residue(-1, 5), 4);
  EXPECT_EQ(residue(7, 5), 2);
  EXPECT_THROW(residue(1, 0), FormulaError);
}

TEST(Formula, ExpressionsKeepTheSPart) {
  Env env;
  env.s = 3;
  env.vars["j"] = Sym{2, 1};
  EXPECT_EQ(eval(parse_expr("4(j+1)-1"), env), (Sym{11, 4}));
  EXPECT_EQ(eval(parse_expr("2s + j"), env), (Sym{2, 3}));
  EXPECT_EQ(eval_int(parse_expr("mod(j+1, s)"), env), 0);
  EXPECT_EQ(eval_int(parse_expr("(-1)^j"), env), -1);
  EXPECT_EQ(eval_int(parse_expr("7/2"), env), 3);
  EXPECT_EQ(eval_int(parse_expr("-7/2"), env), -4);
  EXPECT_TRUE(eval_bool(parse_expr("s <= j < 2s"), env));
  EXPECT_FALSE(eval_bool(parse_expr("j < s or j = 6s-1"), env));
  EXPECT_TRUE(eval_bool(parse_expr("j != 0 and f(1,1) = 1"), env));
  EXPECT_THROW(eval(parse_expr("q + 1"), env), FormulaError);
  EXPECT_THROW(parse_expr("1 +"), FormulaError);
  EXPECT_THROW(parse_expr("(1"), FormulaError);
  env.extra = [](const std::string& n, const std::vector<long long>& a) -> std::optional<long long> {
    if (n == "twice") return 2 * a.at(0);
    return std::nullopt;
  };
  EXPECT_EQ(eval_int(parse_expr("twice(s)"), env), 6);
  EXPECT_THROW(eval(parse_expr("thrice(s)"), env), FormulaError);
}

TEST(Formula, TablesInstantiate) {
  const char* text = R"(
# a toy table
table toy
shape 2s, s
let m = 1
block 0 <= j < s
  i = j : w(4j, 4j+1) x e(4j) - f1(j, 1) w(4j, 4(j+m)) x e(4j)
block s <= j < 2s
  i = j - s where j2 = 1 for q = 0..1 : (-1)^q e(0) x e(q)
table single
shape 1, 1
at 0, 0 : e(0) x w(0, 2)
)";
  auto tables = parse_tables(text);
  ASSERT_EQ(tables.size(), 2u);
  Env env;
  env.s = 2;
  auto toy = instantiate(tables[0], env);
  EXPECT_EQ(toy.cols, 4u);
  EXPECT_EQ(toy.rows, 2u);
  // two columns in the first block, two loop iterations per column in the second
  ASSERT_EQ(toy.entries.size(), 6u);
  const auto& first = toy.entries[0];
  EXPECT_EQ(first.row, 0u);
  ASSERT_EQ(first.terms.size(), 2u);
  EXPECT_EQ(first.terms[0].coeff, 1);
  EXPECT_EQ(first.terms[1].coeff, -1);
  EXPECT_EQ(first.terms[1].left.to, (Sym{4, 0}));
  EXPECT_EQ(toy.entries[1].terms[1].coeff, 1);  // f1(1,1) = -1
  EXPECT_EQ(toy.entries[2].col, 2u);
  EXPECT_EQ(toy.entries[2].terms[0].right.from, (Sym{0, 0}));
  EXPECT_EQ(toy.entries[3].terms[0].coeff, -1);
  auto single = instantiate(tables[1], env);
  ASSERT_EQ(single.entries.size(), 1u);
  EXPECT_EQ(single.entries[0].terms[0].right.to, (Sym{2, 0}));
}

TEST(Formula, TableErrorsCarryLineNumbers) {
  try {
    parse_tables("table t\nshape 1, 1\nblock 0 <= j < 1\n  i = 0 : w(0,1)\n");
    FAIL();
  } catch (const FormulaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_THROW(parse_tables("shape 1, 1\n"), FormulaError);
  auto t = parse_tables("table t\nshape 1, 1\nblock 0 <= j < 1\n  i = 3 : e(0) x e(0)\n");
  EXPECT_THROW(instantiate(t[0], Env{}), FormulaError);
}
