#include "hhcoh/algebra.hpp"

#include <algorithm>
#include <string>

namespace hhcoh {

namespace {

void enumerate_paths(const Quiver& q, int bound, std::vector<PathWord>& out) {
  std::vector<PathWord> frontier;
  for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(trivial_path(v));
  while (!frontier.empty()) {
    std::vector<PathWord> next;
    for (auto& p : frontier) {
      if (static_cast<int>(p.length()) + 1 < bound)
        for (int a : q.out_arrows(p.target)) {
          PathWord e = p;
          e.arrows.push_back(a);
          e.target = q.arrow(a).target;
          next.push_back(std::move(e));
        }
      out.push_back(std::move(p));
    }
    frontier = std::move(next);
  }
}

// Ordering used to choose basis representatives: shorter paths first, then by word.
bool path_less(const PathWord& a, const PathWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  return a.arrows < b.arrows;
}

}  // namespace

template <class F>
Algebra<F> Algebra<F>::build(Quiver quiver, F field, std::vector<Relation> relations, int nilpotency_bound) {
  if (nilpotency_bound < 1) throw AlgebraError("nilpotency bound must be positive");
  Algebra A(field);
  A.quiver_ = std::move(quiver);
  A.relations_ = std::move(relations);
  A.bound_ = nilpotency_bound;
  const Quiver& q = A.quiver_;
  const int nv = q.vertex_count();

  std::vector<PathWord> paths;
  enumerate_paths(q, nilpotency_bound, paths);
  std::sort(paths.begin(), paths.end(), path_less);

  // group by (source, target); columns ordered largest first so pivots land on large paths
  std::map<std::pair<int, int>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < paths.size(); ++i) blocks[{paths[i].source, paths[i].target}].push_back(i);
  std::map<PathWord, std::size_t> path_index;
  for (std::size_t i = 0; i < paths.size(); ++i) path_index[paths[i]] = i;

  // ideal generators u * rho * v restricted to short paths
  std::map<std::pair<int, int>, std::vector<std::map<std::size_t, T>>> gens;
  for (const auto& rel : A.relations_) {
    if (rel.terms.empty()) continue;
    const int src = rel.terms.front().second.source, tgt = rel.terms.front().second.target;
    std::size_t minlen = rel.terms.front().second.length();
    for (const auto& [c, p] : rel.terms) {
      if (p.source != src || p.target != tgt) throw AlgebraError("relation mixes non-parallel paths");
      minlen = std::min(minlen, p.length());
    }
    for (const auto& pre : paths) {
      if (pre.target != src) continue;
      for (const auto& post : paths) {
        if (post.source != tgt) continue;
        if (pre.length() + post.length() + minlen >= static_cast<std::size_t>(nilpotency_bound)) continue;
        std::map<std::size_t, T> row;
        for (const auto& [c, p] : rel.terms) {
          if (pre.length() + post.length() + p.length() >= static_cast<std::size_t>(nilpotency_bound)) continue;
          PathWord w = then(q, then(q, pre, p), post);
          auto idx = path_index.at(w);
          auto v = field.add(row.count(idx) ? row[idx] : field.zero(), field.from_rational(c));
          row[idx] = v;
        }
        std::erase_if(row, [&](const auto& kv) { return field.is_zero(kv.second); });
        if (!row.empty()) gens[{pre.source, post.target}].push_back(std::move(row));
      }
    }
  }

  std::vector<bool> is_basis(paths.size(), true);
  std::map<std::size_t, std::map<std::size_t, T>> reduction;  // pivot path -> combination of basis paths
  for (auto& [key, cols] : blocks) {
    auto git = gens.find(key);
    if (git == gens.end()) continue;
    std::vector<std::size_t> order(cols.rbegin(), cols.rend());
    std::map<std::size_t, std::size_t> colpos;
    for (std::size_t c = 0; c < order.size(); ++c) colpos[order[c]] = c;
    Matrix<F> m(field, git->second.size(), order.size());
    for (std::size_t r = 0; r < git->second.size(); ++r)
      for (auto& [idx, v] : git->second[r]) m(r, colpos.at(idx)) = v;
    auto piv = rref_in_place(m);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      std::size_t pidx = order[piv[r]];
      if (paths[pidx].length() == 0)
        throw AlgebraError("ideal is not admissible: e" + std::to_string(paths[pidx].source) + " lies in it");
      is_basis[pidx] = false;
      std::map<std::size_t, T> comb;
      for (std::size_t c = piv[r] + 1; c < order.size(); ++c)
        if (!field.is_zero(m(r, c))) comb[order[c]] = field.neg(m(r, c));
      reduction[pidx] = std::move(comb);
    }
  }

  std::vector<std::size_t> basis_of_path(paths.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (is_basis[i]) {
      basis_of_path[i] = A.basis_.size();
      A.basis_.push_back(paths[i]);
    }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Elem e;
    if (is_basis[i]) {
      e = Elem{{basis_of_path[i], field.one()}};
    } else {
      for (auto& [idx, v] : reduction[i]) {
        if (!is_basis[idx]) throw AlgebraError("internal: reduction onto a non-basis path");
        e.emplace_back(basis_of_path[idx], v);
      }
      std::sort(e.begin(), e.end(), [](auto& x, auto& y) { return x.first < y.first; });
    }
    A.normal_[paths[i]] = std::move(e);
  }

  A.idempotent_.assign(static_cast<std::size_t>(nv), 0);
  A.corners_.assign(static_cast<std::size_t>(nv * nv), {});
  A.corner_pos_.assign(A.basis_.size(), 0);
  for (std::size_t b = 0; b < A.basis_.size(); ++b) {
    const auto& p = A.basis_[b];
    if (p.length() == 0) A.idempotent_[static_cast<std::size_t>(p.source)] = b;
    auto& corner = A.corners_[static_cast<std::size_t>(p.target * nv + p.source)];
    A.corner_pos_[b] = corner.size();
    corner.push_back(b);
  }

  const std::size_t d = A.basis_.size();
  A.table_.assign(d * d, Elem{});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const auto& pa = A.basis_[a];
      const auto& pb = A.basis_[b];
      if (pb.target != pa.source) continue;
      A.table_[a * d + b] = A.normal_form(then(q, pb, pa));
    }
  return A;
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::normal_form(const PathWord& p) const {
  if (static_cast<int>(p.length()) >= bound_) return {};
  auto it = normal_.find(p);
  if (it == normal_.end()) throw AlgebraError("normal_form: not a path of the quiver");
  return it->second;
}

template <class F>
std::size_t Algebra<F>::unique_path(int source, int target, std::optional<int> length) const {
  std::vector<std::size_t> hits;
  for (auto b : corner_basis(target, source))
    if (!length || static_cast<int>(basis_[b].length()) == *length) hits.push_back(b);
  auto where = [&] {
    return "path " + std::to_string(source) + " -> " + std::to_string(target) +
           (length ? " of length " + std::to_string(*length) : std::string());
  };
  if (hits.empty()) throw NoPath("no nonzero " + where());
  if (hits.size() > 1) throw AmbiguousPath("more than one independent " + where());
  return hits.front();
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::add(const Elem& x, const Elem& y) const {
  Elem out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      auto v = field_.add(x[i].second, y[j].second);
      if (!field_.is_zero(v)) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::scale(const Elem& x, const T& c) const {
  if (field_.is_zero(c)) return {};
  Elem out = x;
  for (auto& [i, v] : out) v = field_.mul(v, c);
  return out;
}

template <class F>
typename Algebra<F>::Elem Algebra<F>::mul(const Elem& x, const Elem& y) const {
  std::map<std::size_t, T> acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      const auto& p = product(a, b);
      if (p.empty()) continue;
      auto c = field_.mul(ca, cb);
      for (const auto& [k, ck] : p) {
        auto it = acc.find(k);
        auto v = field_.mul(c, ck);
        if (it == acc.end())
          acc.emplace(k, v);
        else
          it->second = field_.add(it->second, v);
      }
    }
  Elem out;
  for (auto& [k, v] : acc)
    if (!field_.is_zero(v)) out.emplace_back(k, v);
  return out;
}

template <class F>
std::size_t Algebra<F>::center_dimension() const {
  // z is central iff it commutes with every idempotent and every arrow
  const std::size_t d = dim();
  std::vector<Elem> gens;
  for (int v = 0; v < vertex_count(); ++v) gens.push_back(basis_elem(idempotent(v)));
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    auto nf = normal_form(make_path(quiver_, {static_cast<int>(a)}));
    if (!nf.empty()) gens.push_back(nf);
  }
  Matrix<F> m(field_, gens.size() * d, d);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t b = 0; b < d; ++b) {
      auto comm = add(mul(basis_elem(b), gens[g]), scale(mul(gens[g], basis_elem(b)), field_.neg(field_.one())));
      for (auto& [k, v] : comm) m(g * d + k, b) = v;
    }
  return d - rank(std::move(m));
}

template <class F>
Automorphism<F> Automorphism<F>::from_generators(const Algebra<F>& a, std::vector<int> vertex_map,
                                                 std::vector<ArrowImage> arrow_map) {
  const Quiver& q = a.quiver();
  if (static_cast<int>(vertex_map.size()) != q.vertex_count() || arrow_map.size() != q.arrows().size())
    throw AlgebraError("automorphism: wrong number of vertex or arrow images");
  for (std::size_t x = 0; x < arrow_map.size(); ++x) {
    const auto& src = q.arrow(static_cast<int>(x));
    const auto& dst = q.arrow(arrow_map[x].arrow);
    if (dst.source != vertex_map[static_cast<std::size_t>(src.source)] ||
        dst.target != vertex_map[static_cast<std::size_t>(src.target)])
      throw AlgebraError("automorphism: image of arrow " + src.label + " is not incidence-compatible");
  }
  Automorphism phi;
  phi.algebra_ = &a;
  phi.vertex_map_ = std::move(vertex_map);
  const auto& f = a.field();
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& p = a.basis_path(b);
    T c = f.one();
    std::vector<int> word;
    for (int x : p.arrows) {
      c = f.mul(c, arrow_map[static_cast<std::size_t>(x)].coeff);
      word.push_back(arrow_map[static_cast<std::size_t>(x)].arrow);
    }
    auto img = a.normal_form(make_path(q, word, phi.vertex_map_[static_cast<std::size_t>(p.source)]));
    phi.images_.push_back(a.scale(img, c));
  }
  return phi;
}

template <class F>
Automorphism<F> Automorphism<F>::identity(const Algebra<F>& a) {
  Automorphism phi;
  phi.algebra_ = &a;
  for (int v = 0; v < a.vertex_count(); ++v) phi.vertex_map_.push_back(v);
  for (std::size_t b = 0; b < a.dim(); ++b) phi.images_.push_back(a.basis_elem(b));
  return phi;
}

template <class F>
typename Automorphism<F>::Elem Automorphism<F>::apply(const Elem& x) const {
  Elem out;
  for (const auto& [b, c] : x) out = algebra_->add(out, algebra_->scale(images_[b], c));
  return out;
}

template <class F>
Automorphism<F> Automorphism<F>::compose(const Automorphism& other) const {
  Automorphism phi;
  phi.algebra_ = algebra_;
  for (int v : other.vertex_map_) phi.vertex_map_.push_back(vertex(v));
  for (const auto& img : other.images_) phi.images_.push_back(apply(img));
  return phi;
}

template <class F>
Automorphism<F> Automorphism<F>::power(int k) const {
  if (k < 0) throw AlgebraError("negative automorphism power");
  Automorphism result = identity(*algebra_);
  Automorphism base = *this;
  while (k > 0) {
    if (k & 1) result = result.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return result;
}

template <class F>
bool Automorphism<F>::is_identity() const {
  for (std::size_t v = 0; v < vertex_map_.size(); ++v)
    if (vertex_map_[v] != static_cast<int>(v)) return false;
  for (std::size_t b = 0; b < images_.size(); ++b)
    if (images_[b] != algebra_->basis_elem(b)) return false;
  return true;
}

template <class F>
int Automorphism<F>::order(int cap) const {
  Automorphism cur = *this;
  for (int k = 1; k <= cap; ++k) {
    if (cur.is_identity()) return k;
    cur = cur.compose(*this);
  }
  throw AlgebraError("automorphism order exceeds " + std::to_string(cap));
}

template <class F>
bool Automorphism<F>::is_multiplicative() const {
  const auto& a = *algebra_;
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y)
      if (apply(a.product(x, y)) != a.mul(images_[x], images_[y])) return false;
  return true;
}

template class Algebra<PrimeField>;
template class Algebra<RationalField>;
template class Automorphism<PrimeField>;
template class Automorphism<RationalField>;

}  // namespace hhcoh
