#include <gtest/gtest.h>

#include "hhcoh/e6/family.hpp"
#include "hhcoh/json_io.hpp"

using namespace hhcoh;

TEST(JsonIo, PathAlgebraRoundTrip) {
  for (int s : {1, 2}) {
    auto q = e6::build_quiver(s);
    auto rels = e6::build_relations(s);
    Json j = path_algebra_to_json(q, rels, 5);
    auto back = path_algebra_from_json(Json::parse(j.dump()));
    ASSERT_EQ(back.quiver.vertex_count(), q.vertex_count());
    ASSERT_EQ(back.quiver.arrows().size(), q.arrows().size());
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      EXPECT_EQ(back.quiver.arrows()[a].label, q.arrows()[a].label);
      EXPECT_EQ(back.quiver.arrows()[a].source, q.arrows()[a].source);
      EXPECT_EQ(back.quiver.arrows()[a].target, q.arrows()[a].target);
    }
    ASSERT_EQ(back.relations.size(), rels.size());
    for (std::size_t r = 0; r < rels.size(); ++r) {
      ASSERT_EQ(back.relations[r].terms.size(), rels[r].terms.size());
      for (std::size_t k = 0; k < rels[r].terms.size(); ++k) {
        EXPECT_EQ(back.relations[r].terms[k].first, rels[r].terms[k].first);
        EXPECT_EQ(back.relations[r].terms[k].second, rels[r].terms[k].second);
      }
    }
    EXPECT_EQ(back.nilpotency_bound, 5);
    auto A = Algebra<PrimeField>::build(back.quiver, PrimeField(2), back.relations, back.nilpotency_bound);
    EXPECT_EQ(A.dim(), e6::build_algebra(s, PrimeField(2))->dim());
  }
}

TEST(JsonIo, HandWrittenAlgebra) {
  // two loops x, y at one vertex with xy = yx and x^2 = y^2 = 0
  auto j = Json::parse(R"({
    "vertices": 1,
    "arrows": [{"label": "x", "source": 0, "target": 0}, {"label": "y", "source": 0, "target": 0}],
    "relations": [
      [{"coeff": "1", "path": ["x", "y"]}, {"coeff": "-1", "path": ["y", "x"]}],
      [{"path": ["x", "x"]}],
      [{"coeff": "2/2", "path": ["y", "y"]}]
    ],
    "nilpotency_bound": 3
  })");
  auto d = path_algebra_from_json(j);
  EXPECT_EQ(d.relations.size(), 3u);
  EXPECT_EQ(d.relations[2].terms[0].first, 1);
  auto A = Algebra<RationalField>::build(d.quiver, RationalField{}, d.relations, d.nilpotency_bound);
  EXPECT_EQ(A.dim(), 4u);  // 1, x, y, xy
  EXPECT_EQ(A.center_dimension(), 4u);
}

TEST(JsonIo, MalformedInputIsRejected) {
  EXPECT_THROW(path_algebra_from_json(Json::parse(R"({"arrows": []})")), AlgebraError);
  EXPECT_THROW(path_algebra_from_json(Json::parse(
                   R"({"vertices": 1, "arrows": [{"label": "x", "source": 0, "target": 3}], "nilpotency_bound": 2})")),
               AlgebraError);
  EXPECT_THROW(path_algebra_from_json(Json::parse(
                   R"({"vertices": 1, "arrows": [], "relations": [[{"path": ["z"]}]], "nilpotency_bound": 2})")),
               AlgebraError);
  EXPECT_THROW(path_algebra_from_json(Json::parse(
                   R"({"vertices": 2, "arrows": [{"label": "a", "source": 0, "target": 1}],
                       "relations": [[{"path": ["a", "a"]}]], "nilpotency_bound": 2})")),
               AlgebraError);
  EXPECT_THROW(path_algebra_from_json(Json::parse(R"({"vertices": 1, "arrows": [], "nilpotency_bound": 0})")),
               AlgebraError);
  EXPECT_THROW(read_path_algebra("/nonexistent/algebra.json"), AlgebraError);
}

TEST(JsonIo, MapExport) {
  e6::Family<PrimeField> fam(1, PrimeField(3));
  auto j = map_to_json(fam.differential(0));
  EXPECT_EQ(j["domain"].size(), 7u);
  EXPECT_EQ(j["codomain"].size(), 6u);
  std::size_t terms = 0;
  for (const auto& e : j["entries"]) terms += e["terms"].size();
  std::size_t want = 0;
  for (std::size_t c = 0; c < fam.differential(0).cols(); ++c)
    for (const auto& [r, entry] : fam.differential(0).column(c)) want += entry.size();
  EXPECT_EQ(terms, want);
  // each d_0 column is a (x) e - e (x) a for one arrow a
  const auto& first = j["entries"][0]["terms"][0];
  EXPECT_EQ(first["a"]["path"].size() + first["b"]["path"].size(), 1u);
}

TEST(JsonIo, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
  EXPECT_EQ(csv_field(""), "");
  EXPECT_EQ(csv_row({"X3*X4", "-2*X~14", "1 0,2"}), "X3*X4,-2*X~14,\"1 0,2\"\r\n");
}
