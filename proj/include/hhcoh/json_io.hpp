#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hhcoh/bimodule.hpp"

namespace hhcoh {

using Json = nlohmann::ordered_json;

/// Quiver with relations as read from the path-algebra JSON shape:
///   {"vertices": n, "arrows": [{"label", "source", "target"}],
///    "relations": [[{"coeff": "p/q", "path": [labels in traversal order]}, ...]],
///    "nilpotency_bound": N}
/// An empty "path" needs "vertex" and denotes the idempotent there.
struct PathAlgebraData {
  Quiver quiver;
  std::vector<Relation> relations;
  int nilpotency_bound = 0;
};

Json path_algebra_to_json(const Quiver& q, const std::vector<Relation>& relations, int nilpotency_bound);
PathAlgebraData path_algebra_from_json(const Json& j);
PathAlgebraData read_path_algebra(const std::string& path);

/// {"domain": [[i, j], ...], "codomain": ..., "entries": [{"row", "col", "terms": [{"a", "b", "coeff"}]}]}
/// with a and b written as arrow words.
template <class F>
Json map_to_json(const BimoduleMap<F>& f);

/// {"degree", "term": [[i, j], ...], "values": ["coeff", ...]} in the cochain coordinates of the term.
template <class F>
Json cochain_to_json(const Algebra<F>& A, const Term& term, int degree, const std::vector<typename F::value_type>& v);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace hhcoh
