#include "hhcoh/quiver.hpp"

namespace hhcoh {

int Quiver::add_arrow(std::string label, int source, int target) {
  if (source < 0 || source >= vertex_count_ || target < 0 || target >= vertex_count_)
    throw AlgebraError("arrow " + label + ": endpoint out of range");
  if (find(label)) throw AlgebraError("duplicate arrow label " + label);
  arrows_.push_back({std::move(label), source, target});
  return static_cast<int>(arrows_.size()) - 1;
}

std::optional<int> Quiver::find(const std::string& label) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].label == label) return static_cast<int>(a);
  return std::nullopt;
}

int Quiver::require(const std::string& label) const {
  auto a = find(label);
  if (!a) throw AlgebraError("unknown arrow " + label);
  return *a;
}

std::vector<int> Quiver::out_arrows(int v) const {
  std::vector<int> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(static_cast<int>(a));
  return out;
}

PathWord trivial_path(int v) { return PathWord{v, v, {}}; }

PathWord then(const Quiver& q, const PathWord& first, const PathWord& second) {
  (void)q;
  if (first.target != second.source) throw AlgebraError("paths are not composable");
  PathWord p{first.source, second.target, first.arrows};
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

PathWord make_path(const Quiver& q, const std::vector<int>& traversal, std::optional<int> vertex) {
  if (traversal.empty()) {
    if (!vertex) throw AlgebraError("empty path needs a vertex");
    return trivial_path(*vertex);
  }
  PathWord p{q.arrow(traversal.front()).source, q.arrow(traversal.front()).source, {}};
  for (int a : traversal) {
    if (q.arrow(a).source != p.target)
      throw AlgebraError("arrow " + q.arrow(a).label + " does not compose with the path so far");
    p.arrows.push_back(a);
    p.target = q.arrow(a).target;
  }
  return p;
}

std::string to_string(const Quiver& q, const PathWord& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += q.arrow(*it).label;
  }
  return s;
}

}  // namespace hhcoh
