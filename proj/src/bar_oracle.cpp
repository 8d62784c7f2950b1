#include "hhcoh/bar_oracle.hpp"

#include <map>
#include <string>

namespace hhcoh {

template <class F>
BarOracle<F>::BarOracle(const Algebra<F>& A, BarOracleOptions opts) : A_(&A), opts_(opts) {
  for (std::size_t b = 0; b < A.dim(); ++b)
    if (A.basis_path(b).length() > 0) radical_.push_back(b);
}

template <class F>
const std::vector<typename BarOracle<F>::Tuple>& BarOracle<F>::tuples(int t) {
  if (t > opts_.t_max + 1)
    throw ResourceBoundExceeded("bar oracle: degree " + std::to_string(t) + " beyond t_max " +
                                std::to_string(opts_.t_max));
  while (static_cast<int>(tuples_.size()) <= t) {
    const int k = static_cast<int>(tuples_.size());
    std::vector<Tuple> next;
    if (k == 0) {
      next.push_back({});
    } else {
      // a_1 (x) ... (x) a_k is nonzero over E iff source(a_i) = target(a_{i+1})
      for (const auto& tau : tuples_.back())
        for (auto r : radical_) {
          if (!tau.empty() && A_->basis_path(tau.back()).source != A_->basis_path(r).target) continue;
          Tuple x = tau;
          x.push_back(r);
          next.push_back(std::move(x));
        }
    }
    tuples_.push_back(std::move(next));
    std::size_t dim = cochain_dim(k);
    if (dim > opts_.max_cochain_dim)
      throw ResourceBoundExceeded("bar oracle: C^" + std::to_string(k) + " has dimension " + std::to_string(dim) +
                                  " > bound " + std::to_string(opts_.max_cochain_dim));
  }
  return tuples_[static_cast<std::size_t>(t)];
}

template <class F>
std::size_t BarOracle<F>::cochain_dim(int t) {
  const auto& tu = tuples(t);
  std::size_t n = 0;
  if (t == 0) {
    for (int v = 0; v < A_->vertex_count(); ++v) n += A_->corner_basis(v, v).size();
    return n;
  }
  for (const auto& tau : tu)
    n += A_->corner_basis(A_->basis_path(tau.front()).target, A_->basis_path(tau.back()).source).size();
  return n;
}

template <class F>
std::size_t BarOracle<F>::coboundary_rank(int t) {
  if (t < 0) return 0;
  if (static_cast<int>(ranks_.size()) > t && ranks_[static_cast<std::size_t>(t)] >= 0)
    return static_cast<std::size_t>(ranks_[static_cast<std::size_t>(t)]);
  const auto& A = *A_;
  const auto& f = A.field();
  const auto& src = tuples(t);
  const auto& dst = tuples(t + 1);

  // column index of (tau, z) in C^t
  std::map<Tuple, std::size_t> col_offset;
  {
    std::size_t off = 0;
    if (t == 0) {
      for (int v = 0; v < A.vertex_count(); ++v) {
        col_offset[Tuple{static_cast<std::size_t>(v)}] = off;
        off += A.corner_basis(v, v).size();
      }
    } else {
      for (const auto& tau : src) {
        col_offset[tau] = off;
        off += A.corner_basis(A.basis_path(tau.front()).target, A.basis_path(tau.back()).source).size();
      }
    }
  }
  // f(tau) as a list of (column, basis value)
  auto value_columns = [&](const Tuple& tau, int out, int in) {
    std::vector<std::pair<std::size_t, std::size_t>> cols;
    Tuple key = t == 0 ? Tuple{static_cast<std::size_t>(out)} : tau;
    auto it = col_offset.find(key);
    if (it == col_offset.end()) return cols;
    const auto& corner = A.corner_basis(out, in);
    for (std::size_t z = 0; z < corner.size(); ++z) cols.emplace_back(it->second + z, corner[z]);
    return cols;
  };

  SparseEchelon<F> ech(f);
  const auto minus_one = f.neg(f.one());
  for (const auto& sigma : dst) {
    const int out = A.basis_path(sigma.front()).target;
    const int in = A.basis_path(sigma.back()).source;
    const auto& corner = A.corner_basis(out, in);
    // row vectors indexed by the value basis element w of the output corner
    std::vector<std::map<std::size_t, typename F::value_type>> rows(corner.size());
    auto accumulate = [&](std::size_t col, const SparseVec<F>& val, const typename F::value_type& sign) {
      for (const auto& [w, c] : val) {
        auto& slot = rows[A.corner_position(w)];
        auto v = f.mul(sign, c);
        auto jt = slot.find(col);
        if (jt == slot.end())
          slot.emplace(col, v);
        else
          jt->second = f.add(jt->second, v);
      }
    };
    const std::size_t n = sigma.size();  // = t + 1
    // a_1 f(a_2 .. a_{t+1})
    {
      Tuple rest(sigma.begin() + 1, sigma.end());
      int o = t == 0 ? in : A.basis_path(rest.front()).target;
      for (auto [col, z] : value_columns(rest, o, in)) accumulate(col, A.product(sigma.front(), z), f.one());
    }
    // sum (-1)^i f(.., a_i a_{i+1}, ..)
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto& prod = A.product(sigma[i], sigma[i + 1]);
      if (prod.empty()) continue;
      auto sign = (i + 1) % 2 == 1 ? minus_one : f.one();
      for (const auto& [p, cp] : prod) {
        Tuple merged(sigma.begin(), sigma.begin() + static_cast<long>(i));
        merged.push_back(p);
        merged.insert(merged.end(), sigma.begin() + static_cast<long>(i) + 2, sigma.end());
        for (auto [col, z] : value_columns(merged, out, in)) accumulate(col, A.basis_elem(z), f.mul(sign, cp));
      }
    }
    // (-1)^{t+1} f(a_1 .. a_t) a_{t+1}
    {
      Tuple head(sigma.begin(), sigma.end() - 1);
      int i2 = t == 0 ? out : A.basis_path(head.back()).source;
      auto sign = (t + 1) % 2 == 1 ? minus_one : f.one();
      for (auto [col, z] : value_columns(head, out, i2)) accumulate(col, A.product(z, sigma.back()), sign);
    }
    for (auto& row : rows) {
      SparseVec<F> v;
      for (auto& [c, x] : row)
        if (!f.is_zero(x)) v.emplace_back(c, x);
      if (!v.empty()) ech.insert(std::move(v));
    }
  }
  if (static_cast<int>(ranks_.size()) <= t) ranks_.resize(static_cast<std::size_t>(t) + 1, -1);
  ranks_[static_cast<std::size_t>(t)] = static_cast<long long>(ech.rank());
  return ech.rank();
}

template <class F>
std::size_t BarOracle<F>::hh_dim(int t) {
  if (t > opts_.t_max)
    throw ResourceBoundExceeded("bar oracle: requested degree " + std::to_string(t) + " > t_max " +
                                std::to_string(opts_.t_max));
  return cochain_dim(t) - coboundary_rank(t) - coboundary_rank(t - 1);
}

template class BarOracle<PrimeField>;
template class BarOracle<RationalField>;

}  // namespace hhcoh
