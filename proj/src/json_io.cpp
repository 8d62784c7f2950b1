#include "hhcoh/json_io.hpp"

#include <fstream>

namespace hhcoh {

namespace {

Json path_json(const Quiver& q, const PathWord& p) {
  Json labels = Json::array();
  for (int a : p.arrows) labels.push_back(q.arrow(a).label);
  return Json{{"vertex", p.source}, {"path", labels}};
}

Json term_json(const Term& t) {
  Json out = Json::array();
  for (const auto& p : t) out.push_back(Json::array({p.left, p.right}));
  return out;
}

}  // namespace

Json path_algebra_to_json(const Quiver& q, const std::vector<Relation>& relations, int nilpotency_bound) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back(Json{{"label", a.label}, {"source", a.source}, {"target", a.target}});
  Json rels = Json::array();
  for (const auto& r : relations) {
    Json terms = Json::array();
    for (const auto& [c, p] : r.terms) {
      Json t = path_json(q, p);
      t["coeff"] = c.get_str();
      terms.push_back(std::move(t));
    }
    rels.push_back(std::move(terms));
  }
  return Json{{"vertices", q.vertex_count()},
              {"arrows", std::move(arrows)},
              {"relations", std::move(rels)},
              {"nilpotency_bound", nilpotency_bound}};
}

PathAlgebraData path_algebra_from_json(const Json& j) {
  try {
    PathAlgebraData out{Quiver(j.at("vertices").get<int>()), {}, j.value("nilpotency_bound", 0)};
    for (const auto& a : j.at("arrows")) {
      int src = a.at("source").get<int>(), tgt = a.at("target").get<int>();
      if (src < 0 || tgt < 0 || src >= out.quiver.vertex_count() || tgt >= out.quiver.vertex_count())
        throw AlgebraError("arrow " + a.at("label").get<std::string>() + " has an endpoint outside the quiver");
      out.quiver.add_arrow(a.at("label").get<std::string>(), src, tgt);
    }
    for (const auto& r : j.value("relations", Json::array())) {
      Relation rel;
      for (const auto& t : r) {
        std::vector<int> word;
        for (const auto& l : t.at("path")) word.push_back(out.quiver.require(l.get<std::string>()));
        std::optional<int> v;
        if (t.contains("vertex")) v = t.at("vertex").get<int>();
        mpq_class c(t.value("coeff", std::string("1")));
        c.canonicalize();
        rel.terms.emplace_back(c, make_path(out.quiver, word, v));
      }
      out.relations.push_back(std::move(rel));
    }
    if (out.nilpotency_bound <= 0) throw AlgebraError("nilpotency_bound must be positive");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed path algebra: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw AlgebraError(std::string("malformed coefficient: ") + e.what());
  }
}

PathAlgebraData read_path_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(path + ": " + e.what());
  }
  return path_algebra_from_json(j);
}

template <class F>
Json map_to_json(const BimoduleMap<F>& f) {
  const auto& A = f.algebra();
  const auto& q = A.quiver();
  Json entries = Json::array();
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& [r, entry] : f.column(c)) {
      Json terms = Json::array();
      for (const auto& t : entry)
        terms.push_back(Json{{"a", path_json(q, A.basis_path(t.a))},
                             {"b", path_json(q, A.basis_path(t.b))},
                             {"coeff", A.field().to_string(t.coeff)}});
      entries.push_back(Json{{"row", r}, {"col", c}, {"terms", std::move(terms)}});
    }
  return Json{{"domain", term_json(f.domain())}, {"codomain", term_json(f.codomain())}, {"entries", std::move(entries)}};
}

template <class F>
Json cochain_to_json(const Algebra<F>& A, const Term& term, int degree, const std::vector<typename F::value_type>& v) {
  Json values = Json::array();
  for (const auto& x : v) values.push_back(A.field().to_string(x));
  return Json{{"degree", degree}, {"term", term_json(term)}, {"values", std::move(values)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

template Json map_to_json(const BimoduleMap<PrimeField>&);
template Json map_to_json(const BimoduleMap<RationalField>&);
template Json cochain_to_json(const Algebra<PrimeField>&, const Term&, int, const std::vector<PrimeField::value_type>&);
template Json cochain_to_json(const Algebra<RationalField>&, const Term&, int,
                              const std::vector<RationalField::value_type>&);

}  // namespace hhcoh
