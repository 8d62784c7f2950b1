#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhcoh {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  explicit Quiver(int vertex_count = 0) : vertex_count_(vertex_count) {}

  int add_arrow(std::string label, int source, int target);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<std::size_t>(a)); }
  std::optional<int> find(const std::string& label) const;
  int require(const std::string& label) const;

  /// Arrows leaving vertex v, in insertion order.
  std::vector<int> out_arrows(int v) const;

 private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
};

/// A path in traversal order: arrows[0] is traversed first. The empty path at v is e_v.
/// Products compose right-to-left, so the word a_k ... a_1 a_0 is stored as {a_0, a_1, ..., a_k}.
struct PathWord {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  friend auto operator<=>(const PathWord&, const PathWord&) = default;
};

PathWord trivial_path(int v);
/// Concatenate: first `first`, then `second`. Throws if not composable.
PathWord then(const Quiver& q, const PathWord& first, const PathWord& second);
PathWord make_path(const Quiver& q, const std::vector<int>& traversal, std::optional<int> vertex = std::nullopt);
std::string to_string(const Quiver& q, const PathWord& p);

/// K-linear combination of parallel paths; coefficients are rationals mapped into the field later.
struct Relation {
  std::vector<std::pair<mpq_class, PathWord>> terms;
};

}  // namespace hhcoh
