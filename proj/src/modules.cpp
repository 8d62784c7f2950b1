#include "hhcoh/modules.hpp"

#include <algorithm>

#include "hhcoh/matrix.hpp"

namespace hhcoh {

namespace {

// A submodule of a free module with summands A e_{v_k}, given by a vertex-homogeneous spanning set.
template <class F>
struct Submodule {
  using T = typename F::value_type;
  std::vector<int> summands;
  std::vector<std::size_t> offset;  // coordinate offset of each summand
  std::size_t dim = 0;
  std::vector<std::vector<T>> vecs;
  std::vector<int> vec_vertex;
};

template <class F>
class Resolver {
 public:
  using T = typename F::value_type;
  explicit Resolver(const Algebra<F>& A) : A_(A), by_source_(static_cast<std::size_t>(A.vertex_count())) {
    local_.assign(A.dim(), 0);
    for (std::size_t b = 0; b < A.dim(); ++b) {
      auto& list = by_source_[static_cast<std::size_t>(A.basis_path(b).source)];
      local_[b] = list.size();
      list.push_back(b);
    }
    for (std::size_t a = 0; a < A.quiver().arrows().size(); ++a)
      arrows_.push_back(A.normal_form(make_path(A.quiver(), {static_cast<int>(a)})));
  }

  Submodule<F> ambient(std::vector<int> summands) const {
    Submodule<F> m;
    m.summands = std::move(summands);
    for (int v : m.summands) {
      m.offset.push_back(m.dim);
      m.dim += by_source_[static_cast<std::size_t>(v)].size();
    }
    return m;
  }

  // x -> y . x for an algebra element y, componentwise in the ambient free module
  std::vector<T> act(const SparseVec<F>& y, const Submodule<F>& m, const std::vector<T>& x) const {
    const auto& f = A_.field();
    std::vector<T> out(m.dim, f.zero());
    for (std::size_t k = 0; k < m.summands.size(); ++k) {
      const auto& src = by_source_[static_cast<std::size_t>(m.summands[k])];
      for (std::size_t i = 0; i < src.size(); ++i) {
        const auto& c = x[m.offset[k] + i];
        if (f.is_zero(c)) continue;
        auto prod = A_.mul(y, A_.basis_elem(src[i]));
        for (const auto& [b, cb] : prod) {
          auto& slot = out[m.offset[k] + local_[b]];
          slot = f.add(slot, f.mul(c, cb));
        }
      }
    }
    return out;
  }

  // vertices of a minimal generating set, plus the generators themselves
  std::vector<std::pair<int, std::vector<T>>> top(const Submodule<F>& m) const {
    const auto& f = A_.field();
    std::vector<std::pair<int, std::vector<T>>> gens;
    for (int w = 0; w < A_.vertex_count(); ++w) {
      Matrix<F> span(f, 0, m.dim);
      for (std::size_t i = 0; i < m.vecs.size(); ++i)
        for (std::size_t a = 0; a < arrows_.size(); ++a) {
          if (A_.quiver().arrow(static_cast<int>(a)).target != w) continue;
          if (A_.quiver().arrow(static_cast<int>(a)).source != m.vec_vertex[i]) continue;
          span.append_row(act(arrows_[a], m, m.vecs[i]));
        }
      std::size_t rk = rank(span);
      for (std::size_t i = 0; i < m.vecs.size(); ++i) {
        if (m.vec_vertex[i] != w) continue;
        span.append_row(m.vecs[i]);
        std::size_t r2 = rank(span);
        if (r2 > rk) {
          gens.emplace_back(w, m.vecs[i]);
          rk = r2;
        }
      }
    }
    return gens;
  }

  // kernel of the projective cover of m, as a submodule of the cover
  Submodule<F> syzygy(const Submodule<F>& m, const std::vector<std::pair<int, std::vector<T>>>& gens) const {
    const auto& f = A_.field();
    std::vector<int> summands;
    for (const auto& g : gens) summands.push_back(g.first);
    auto cover = ambient(summands);
    for (int u = 0; u < A_.vertex_count(); ++u) {
      std::vector<std::size_t> coords;
      std::vector<std::vector<T>> images;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& src = by_source_[static_cast<std::size_t>(gens[k].first)];
        for (std::size_t i = 0; i < src.size(); ++i) {
          if (A_.basis_path(src[i]).target != u) continue;
          coords.push_back(cover.offset[k] + i);
          images.push_back(act(A_.basis_elem(src[i]), m, gens[k].second));
        }
      }
      if (coords.empty()) continue;
      Matrix<F> mat(f, m.dim, coords.size());
      for (std::size_t c = 0; c < coords.size(); ++c)
        for (std::size_t r = 0; r < m.dim; ++r) mat(r, c) = images[c][r];
      auto ker = kernel_basis(mat);
      for (std::size_t r = 0; r < ker.rows(); ++r) {
        std::vector<T> v(cover.dim, f.zero());
        for (std::size_t c = 0; c < coords.size(); ++c) v[coords[c]] = ker(r, c);
        cover.vecs.push_back(std::move(v));
        cover.vec_vertex.push_back(u);
      }
    }
    return cover;
  }

  Submodule<F> radical_of_projective(int v) const {
    auto m = ambient({v});
    const auto& src = by_source_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (A_.basis_path(src[i]).length() == 0) continue;
      std::vector<T> x(m.dim, A_.field().zero());
      x[i] = A_.field().one();
      m.vecs.push_back(std::move(x));
      m.vec_vertex.push_back(A_.basis_path(src[i]).target);
    }
    return m;
  }

 private:
  const Algebra<F>& A_;
  std::vector<std::vector<std::size_t>> by_source_;
  std::vector<std::size_t> local_;
  std::vector<SparseVec<F>> arrows_;
};

}  // namespace

template <class F>
SimpleResolution resolve_simple(const Algebra<F>& A, int vertex, int length) {
  Resolver<F> res(A);
  SimpleResolution out;
  out.vertex = vertex;
  out.tops.push_back({vertex});
  out.syzygy_dims.push_back(1);
  auto omega = res.radical_of_projective(vertex);
  for (int m = 1; m <= length; ++m) {
    out.syzygy_dims.push_back(omega.vecs.size());
    auto gens = res.top(omega);
    std::vector<int> tops;
    for (const auto& g : gens) tops.push_back(g.first);
    std::sort(tops.begin(), tops.end());
    out.tops.push_back(tops);
    if (m < length) omega = res.syzygy(omega, gens);
  }
  return out;
}

template SimpleResolution resolve_simple(const Algebra<PrimeField>&, int, int);
template SimpleResolution resolve_simple(const Algebra<RationalField>&, int, int);

}  // namespace hhcoh
