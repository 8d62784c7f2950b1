#include "hhcoh/bimodule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hhcoh {

namespace {

template <class F>
void add_into(const F& f, TensorEntry<F>& entry, std::size_t a, std::size_t b, const typename F::value_type& c) {
  auto it = std::lower_bound(entry.begin(), entry.end(), std::pair{a, b},
                             [](const TensorTerm<F>& t, const std::pair<std::size_t, std::size_t>& k) {
                               return std::pair{t.a, t.b} < k;
                             });
  if (it != entry.end() && it->a == a && it->b == b) {
    it->coeff = f.add(it->coeff, c);
    if (f.is_zero(it->coeff)) entry.erase(it);
  } else if (!f.is_zero(c)) {
    entry.insert(it, TensorTerm<F>{a, b, c});
  }
}

template <class F>
std::size_t count_source(const Algebra<F>& A, int v) {
  std::size_t n = 0;
  for (int x = 0; x < A.vertex_count(); ++x) n += A.corner_basis(x, v).size();
  return n;
}

template <class F>
std::size_t count_target(const Algebra<F>& A, int v) {
  std::size_t n = 0;
  for (int y = 0; y < A.vertex_count(); ++y) n += A.corner_basis(v, y).size();
  return n;
}

}  // namespace

template <class F>
BlockBasis block_basis(const Algebra<F>& A, const Term& term, int x, int y) {
  BlockBasis bb;
  for (std::size_t k = 0; k < term.size(); ++k)
    for (auto p : A.corner_basis(x, term[k].left))
      for (auto q : A.corner_basis(term[k].right, y)) {
        UnderlyingIndex u{k, p, q};
        bb.position[u] = bb.elems.size();
        bb.elems.push_back(u);
      }
  return bb;
}

template <class F>
std::size_t projective_dim(const Algebra<F>& A, ProjectiveIndex p) {
  return count_source(A, p.left) * count_target(A, p.right);
}

template <class F>
std::size_t term_dim(const Algebra<F>& A, const Term& term) {
  std::size_t n = 0;
  for (auto p : term) n += projective_dim(A, p);
  return n;
}

template <class F>
BimoduleMap<F>::BimoduleMap(const Algebra<F>& algebra, Term domain, Term codomain)
    : algebra_(&algebra), domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(domain_.size()) {}

template <class F>
void BimoduleMap<F>::add_term(std::size_t row, std::size_t col, std::size_t a, std::size_t b, const T& coeff) {
  if (row >= rows() || col >= cols()) throw BimoduleError("add_term: index out of range");
  const auto& pa = algebra_->basis_path(a);
  const auto& pb = algebra_->basis_path(b);
  const auto& r = codomain_[row];
  const auto& c = domain_[col];
  if (pa.source != r.left || pa.target != c.left || pb.source != c.right || pb.target != r.right) {
    std::ostringstream os;
    os << "ill-typed tensor at (" << row << "," << col << "): P_{" << c.left << "," << c.right << "} -> P_{"
       << r.left << "," << r.right << "} with left path " << pa.source << "->" << pa.target << ", right path "
       << pb.source << "->" << pb.target;
    throw BimoduleError(os.str());
  }
  auto& entry = columns_[col][row];
  add_into(algebra_->field(), entry, a, b, coeff);
  if (entry.empty()) columns_[col].erase(row);
}

template <class F>
void BimoduleMap<F>::add_tensor(std::size_t row, std::size_t col, const SparseVec<F>& x, const SparseVec<F>& y) {
  const auto& f = algebra_->field();
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) add_term(row, col, a, b, f.mul(ca, cb));
}

template <class F>
const TensorEntry<F>* BimoduleMap<F>::entry(std::size_t row, std::size_t col) const {
  auto it = columns_.at(col).find(row);
  return it == columns_[col].end() ? nullptr : &it->second;
}

template <class F>
bool BimoduleMap<F>::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

template <class F>
std::size_t BimoduleMap<F>::nonzero_entries() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

template <class F>
BimoduleMap<F> compose(const BimoduleMap<F>& f, const BimoduleMap<F>& g) {
  if (g.codomain() != f.domain()) throw BimoduleError("compose: codomain/domain mismatch");
  const auto& A = f.algebra();
  const auto& fld = A.field();
  BimoduleMap<F> out(A, g.domain(), f.codomain());
  for (std::size_t c = 0; c < g.cols(); ++c)
    for (const auto& [k, ge] : g.column(c))
      for (const auto& [r, fe] : f.column(k))
        for (const auto& gt : ge)
          for (const auto& ft : fe) {
            const auto& left = A.product(gt.a, ft.a);
            if (left.empty()) continue;
            const auto& right = A.product(ft.b, gt.b);
            if (right.empty()) continue;
            auto c0 = fld.mul(gt.coeff, ft.coeff);
            for (const auto& [x, cx] : left)
              for (const auto& [y, cy] : right) out.add_term(r, c, x, y, fld.mul(c0, fld.mul(cx, cy)));
          }
  return out;
}

template <class F>
BimoduleMap<F> identity_map(const Algebra<F>& A, const Term& term) {
  BimoduleMap<F> id(A, term, term);
  for (std::size_t k = 0; k < term.size(); ++k)
    id.add_term(k, k, A.idempotent(term[k].left), A.idempotent(term[k].right), A.field().one());
  return id;
}

template <class F>
Matrix<F> underlying_block(const BimoduleMap<F>& f, int x, int y) {
  const auto& A = f.algebra();
  const auto& fld = A.field();
  auto dom = block_basis(A, f.domain(), x, y);
  auto cod = block_basis(A, f.codomain(), x, y);
  Matrix<F> m(fld, cod.elems.size(), dom.elems.size());
  for (std::size_t j = 0; j < dom.elems.size(); ++j) {
    const auto& u = dom.elems[j];
    for (const auto& [r, entry] : f.column(u.summand))
      for (const auto& t : entry) {
        const auto& left = A.product(u.left, t.a);
        if (left.empty()) continue;
        const auto& right = A.product(t.b, u.right);
        for (const auto& [p, cp] : left)
          for (const auto& [q, cq] : right) {
            auto i = cod.position.at(UnderlyingIndex{r, p, q});
            m(i, j) = fld.add(m(i, j), fld.mul(t.coeff, fld.mul(cp, cq)));
          }
      }
  }
  return m;
}

template <class F>
Matrix<F> underlying_matrix(const BimoduleMap<F>& f) {
  const auto& A = f.algebra();
  const int n = A.vertex_count();
  std::size_t rows = term_dim(A, f.codomain()), cols = term_dim(A, f.domain());
  Matrix<F> m(A.field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto b = underlying_block(f, x, y);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
      r0 += b.rows();
      c0 += b.cols();
    }
  return m;
}

template <class F>
std::size_t map_rank(const BimoduleMap<F>& f) {
  std::size_t r = 0;
  const int n = f.algebra().vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r += rank(underlying_block(f, x, y));
  return r;
}

template <class F>
BimoduleComplex<F>::BimoduleComplex(std::shared_ptr<const Algebra<F>> algebra, TermFn terms, DiffFn diffs,
                                    std::vector<SparseVec<F>> augmentation)
    : algebra_(std::move(algebra)),
      term_fn_(std::move(terms)),
      diff_fn_(std::move(diffs)),
      augmentation_(std::move(augmentation)) {}

template <class F>
const Term& BimoduleComplex<F>::term(int t) const {
  {
    std::lock_guard lock(mutex_);
    auto it = terms_.find(t);
    if (it != terms_.end()) return *it->second;
  }
  auto built = std::make_unique<Term>(term_fn_(t));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = terms_.emplace(t, std::move(built));
  return *it->second;
}

template <class F>
const BimoduleMap<F>& BimoduleComplex<F>::d(int t) const {
  {
    std::lock_guard lock(mutex_);
    auto it = diffs_.find(t);
    if (it != diffs_.end()) return *it->second;
  }
  auto built = std::make_unique<BimoduleMap<F>>(diff_fn_(t));
  if (built->domain() != term(t + 1) || built->codomain() != term(t))
    throw BimoduleError("differential d_" + std::to_string(t) + " does not match the terms");
  std::lock_guard lock(mutex_);
  auto [it, inserted] = diffs_.emplace(t, std::move(built));
  return *it->second;
}

template <class F>
bool composes_to_zero(const BimoduleComplex<F>& C, int t) {
  return compose(C.d(t), C.d(t + 1)).is_zero();
}

namespace {

template <class F>
Matrix<F> augmentation_block(const BimoduleComplex<F>& C, int x, int y) {
  const auto& A = C.algebra();
  const auto& fld = A.field();
  const auto& q0 = C.term(0);
  auto dom = block_basis(A, q0, x, y);
  const auto& target = A.corner_basis(x, y);
  Matrix<F> m(fld, target.size(), dom.elems.size());
  for (std::size_t j = 0; j < dom.elems.size(); ++j) {
    const auto& u = dom.elems[j];
    auto v = A.mul(A.mul(A.basis_elem(u.left), C.augmentation(u.summand)), A.basis_elem(u.right));
    for (const auto& [b, c] : v) m(A.corner_position(b), j) = c;
  }
  return m;
}

}  // namespace

bool ExactnessReport::ok() const {
  if (!augmentation_surjective) return false;
  return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.exact; });
}

std::string ExactnessReport::summary() const {
  std::ostringstream os;
  if (!augmentation_surjective) os << "augmentation not surjective; ";
  for (const auto& d : degrees)
    if (!d.exact)
      os << "degree " << d.t << ": rank in " << d.rank_in << " + rank out " << d.rank_out << " != dim " << d.dim_term
         << "; ";
  std::string s = os.str();
  return s.empty() ? "exact" : s;
}

template <class F>
ExactnessReport verify_exactness(const BimoduleComplex<F>& C, int through_degree) {
  const auto& A = C.algebra();
  const int n = A.vertex_count();
  ExactnessReport rep;
  std::size_t eps_rank = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) eps_rank += rank(augmentation_block(C, x, y));
  rep.augmentation_surjective = eps_rank == A.dim();
  std::size_t out_rank = eps_rank;
  for (int t = 0; t <= through_degree; ++t) {
    std::size_t in_rank = map_rank(C.d(t));
    std::size_t dim = term_dim(A, C.term(t));
    rep.degrees.push_back({t, dim, in_rank, out_rank, in_rank + out_rank == dim});
    out_rank = in_rank;
  }
  return rep;
}

template <class F>
CochainLayout cochain_layout(const Algebra<F>& A, const Term& term) {
  CochainLayout L;
  for (auto p : term) {
    L.offset.push_back(L.dim);
    L.dim += A.corner_basis(p.left, p.right).size();
  }
  return L;
}

template <class F>
Matrix<F> coboundary_matrix(const BimoduleComplex<F>& C, int t) {
  const auto& A = C.algebra();
  const auto& fld = A.field();
  const auto& d = C.d(t);
  auto src = cochain_layout(A, C.term(t));
  auto dst = cochain_layout(A, C.term(t + 1));
  Matrix<F> m(fld, dst.dim, src.dim);
  for (std::size_t c = 0; c < d.cols(); ++c)
    for (const auto& [k, entry] : d.column(c)) {
      const auto& p = C.term(t)[k];
      const auto& corner = A.corner_basis(p.left, p.right);
      for (std::size_t z = 0; z < corner.size(); ++z)
        for (const auto& tt : entry) {
          const auto& az = A.product(tt.a, corner[z]);
          if (az.empty()) continue;
          auto v = A.mul(az, A.basis_elem(tt.b));
          for (const auto& [b, cb] : v) {
            std::size_t row = dst.offset[c] + A.corner_position(b);
            std::size_t col = src.offset[k] + z;
            m(row, col) = fld.add(m(row, col), fld.mul(tt.coeff, cb));
          }
        }
    }
  return m;
}

template <class F>
Cohomology<F>::Cohomology(const BimoduleComplex<F>& C, int t)
    : degree_(t),
      delta_(coboundary_matrix(C, t)),
      representatives_(C.algebra().field(), 0, 0),
      coboundaries_(C.algebra().field(), 0, 0) {
  const auto& fld = C.algebra().field();
  cochain_dim_ = delta_.cols();
  auto ker = kernel_basis(delta_);
  kernel_dim_ = ker.rows();
  image_out_ = cochain_dim_ - kernel_dim_;
  if (t > 0) {
    auto prev = coboundary_matrix(C, t - 1);
    coboundaries_ = row_space_basis(prev.transpose());
  } else {
    coboundaries_ = Matrix<F>(fld, 0, cochain_dim_);
  }
  // representatives: kernel rows independent modulo the coboundaries, in order
  SparseEchelon<F> ech(fld);
  auto sparse = [&](const Matrix<F>& m, std::size_t r) {
    SparseVec<F> v;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!fld.is_zero(m(r, c))) v.emplace_back(c, m(r, c));
    return v;
  };
  for (std::size_t r = 0; r < coboundaries_.rows(); ++r) ech.insert(sparse(coboundaries_, r));
  representatives_ = Matrix<F>(fld, 0, cochain_dim_);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    if (ech.insert(sparse(ker, r))) representatives_.append_row(ker.row(r));
  // columns [reps | coboundaries] for coordinate extraction
  Matrix<F> basis(fld, cochain_dim_, representatives_.rows() + coboundaries_.rows());
  for (std::size_t r = 0; r < representatives_.rows(); ++r)
    for (std::size_t c = 0; c < cochain_dim_; ++c) basis(c, r) = representatives_(r, c);
  for (std::size_t r = 0; r < coboundaries_.rows(); ++r)
    for (std::size_t c = 0; c < cochain_dim_; ++c) basis(c, representatives_.rows() + r) = coboundaries_(r, c);
  coords_ = std::make_unique<LinearSolver<F>>(basis);
}

template <class F>
bool Cohomology<F>::is_cocycle(const std::vector<T>& v) const {
  auto img = delta_.apply(v);
  const auto& fld = delta_.field();
  return std::all_of(img.begin(), img.end(), [&](const T& x) { return fld.is_zero(x); });
}

template <class F>
std::vector<typename F::value_type> Cohomology<F>::class_of(const std::vector<T>& cocycle) const {
  if (!is_cocycle(cocycle)) throw BimoduleError("class_of: cochain is not a cocycle");
  auto x = coords_->solve(cocycle);
  if (!x) throw BimoduleError("class_of: cocycle outside the computed span");
  x->resize(dim());
  return *x;
}

template <class F>
std::vector<SparseVec<F>> cochain_values(const Algebra<F>& A, const Term& term,
                                         const std::vector<typename F::value_type>& v) {
  auto L = cochain_layout(A, term);
  if (v.size() != L.dim) throw BimoduleError("cochain_values: wrong cochain length");
  std::vector<SparseVec<F>> out(term.size());
  for (std::size_t k = 0; k < term.size(); ++k) {
    const auto& corner = A.corner_basis(term[k].left, term[k].right);
    for (std::size_t z = 0; z < corner.size(); ++z)
      if (!A.field().is_zero(v[L.offset[k] + z])) out[k].emplace_back(corner[z], v[L.offset[k] + z]);
  }
  return out;
}

template <class F>
std::vector<typename F::value_type> cochain_vector(const Algebra<F>& A, const Term& term,
                                                   const std::vector<SparseVec<F>>& values) {
  auto L = cochain_layout(A, term);
  std::vector<typename F::value_type> v(L.dim, A.field().zero());
  for (std::size_t k = 0; k < term.size(); ++k)
    for (const auto& [b, c] : values[k]) {
      const auto& p = A.basis_path(b);
      if (p.target != term[k].left || p.source != term[k].right)
        throw BimoduleError("cochain_vector: value outside e_i A e_j");
      v[L.offset[k] + A.corner_position(b)] = c;
    }
  return v;
}

template <class F>
std::vector<typename F::value_type> augment(const BimoduleComplex<F>& C, const BimoduleMap<F>& phi) {
  const auto& A = C.algebra();
  std::vector<SparseVec<F>> values(phi.cols());
  for (std::size_t c = 0; c < phi.cols(); ++c)
    for (const auto& [k, entry] : phi.column(c))
      for (const auto& t : entry) {
        auto v = A.mul(A.mul(A.basis_elem(t.a, t.coeff), C.augmentation(k)), A.basis_elem(t.b));
        values[c] = A.add(values[c], v);
      }
  return cochain_vector(A, phi.domain(), values);
}

template <class F>
std::vector<typename F::value_type> cup_cochain(const BimoduleComplex<F>& C,
                                                const std::vector<typename F::value_type>& f2, int t2,
                                                const BimoduleMap<F>& phi) {
  const auto& A = C.algebra();
  if (phi.codomain() != C.term(t2)) throw BimoduleError("cup_cochain: translate lands in the wrong term");
  auto vals = cochain_values(A, C.term(t2), f2);
  std::vector<SparseVec<F>> out(phi.cols());
  for (std::size_t c = 0; c < phi.cols(); ++c)
    for (const auto& [k, entry] : phi.column(c)) {
      if (vals[k].empty()) continue;
      for (const auto& t : entry) {
        auto v = A.mul(A.mul(A.basis_elem(t.a, t.coeff), vals[k]), A.basis_elem(t.b));
        out[c] = A.add(out[c], v);
      }
    }
  return cochain_vector(A, phi.domain(), out);
}

template <class F>
const LinearSolver<F>& Lifter<F>::solver(int k, int x, int y) {
  std::lock_guard lock(mutex_);
  auto key = std::tuple{k, x, y};
  auto it = solvers_.find(key);
  if (it != solvers_.end()) return *it->second;
  Matrix<F> m = k == 0 ? augmentation_block(*C_, x, y) : underlying_block(C_->d(k - 1), x, y);
  auto [pos, ins] = solvers_.emplace(key, std::make_unique<LinearSolver<F>>(m));
  bases_.emplace(key, block_basis(C_->algebra(), C_->term(k), x, y));
  return *pos->second;
}

template <class F>
ChainMap<F> Lifter<F>::lift(const std::vector<T>& cocycle, int t, int horizon) {
  const auto& A = C_->algebra();
  const auto& qt = C_->term(t);
  auto vals = cochain_values(A, qt, cocycle);
  ChainMap<F> phi;
  phi.start_degree = t;
  BimoduleMap<F> phi0(A, qt, C_->term(0));
  for (std::size_t c = 0; c < qt.size(); ++c) {
    if (vals[c].empty()) continue;
    const int x = qt[c].left, y = qt[c].right;
    const auto& S = solver(0, x, y);
    std::vector<T> rhs(A.corner_basis(x, y).size(), A.field().zero());
    for (const auto& [b, cb] : vals[c]) rhs[A.corner_position(b)] = cb;
    auto u = S.solve(rhs);
    if (!u) throw LiftError("lift: augmentation cannot realize the cochain at column " + std::to_string(c));
    const BlockBasis* bb;
    {
      std::lock_guard lock(mutex_);
      bb = &bases_.at(std::tuple{0, x, y});
    }
    for (std::size_t i = 0; i < u->size(); ++i)
      if (!A.field().is_zero((*u)[i])) {
        const auto& e = bb->elems[i];
        phi0.add_term(e.summand, c, e.left, e.right, (*u)[i]);
      }
  }
  phi.maps.push_back(std::move(phi0));
  extend(phi, horizon);
  return phi;
}

template <class F>
void Lifter<F>::extend(ChainMap<F>& phi, int horizon) {
  const auto& A = C_->algebra();
  const int t = phi.start_degree;
  while (static_cast<int>(phi.maps.size()) <= horizon) {
    const int k = static_cast<int>(phi.maps.size()) - 1;  // build phi_{k+1}
    auto rhs_map = compose(phi.maps.back(), C_->d(t + k));  // Q_{t+k+1} -> Q_k
    const auto& dom = C_->term(t + k + 1);
    BimoduleMap<F> next(A, dom, C_->term(k + 1));
    for (std::size_t c = 0; c < dom.size(); ++c) {
      const auto& col = rhs_map.column(c);
      if (col.empty()) continue;
      const int x = dom[c].left, y = dom[c].right;
      const auto& S = solver(k + 1, x, y);
      auto target = block_basis(A, C_->term(k), x, y);
      std::vector<T> rhs(target.elems.size(), A.field().zero());
      for (const auto& [r, entry] : col)
        for (const auto& tt : entry) rhs[target.position.at(UnderlyingIndex{r, tt.a, tt.b})] = tt.coeff;
      auto u = S.solve(rhs);
      if (!u)
        throw LiftError("lift: no solution for phi_" + std::to_string(k + 1) + " at column " + std::to_string(c) +
                        " (degree " + std::to_string(t) + ")");
      const BlockBasis* bb;
      {
        std::lock_guard lock(mutex_);
        bb = &bases_.at(std::tuple{k + 1, x, y});
      }
      for (std::size_t i = 0; i < u->size(); ++i)
        if (!A.field().is_zero((*u)[i])) {
          const auto& e = bb->elems[i];
          next.add_term(e.summand, c, e.left, e.right, (*u)[i]);
        }
    }
    phi.maps.push_back(std::move(next));
  }
}

template <class F>
bool Lifter<F>::commutes(const ChainMap<F>& phi, int k) const {
  return compose(C_->d(k), phi.maps.at(static_cast<std::size_t>(k + 1))) ==
         compose(phi.maps.at(static_cast<std::size_t>(k)), C_->d(phi.start_degree + k));
}

#define HHCOH_INSTANTIATE(F)                                                                                   \
  template BlockBasis block_basis<F>(const Algebra<F>&, const Term&, int, int);                                \
  template std::size_t projective_dim<F>(const Algebra<F>&, ProjectiveIndex);                                  \
  template std::size_t term_dim<F>(const Algebra<F>&, const Term&);                                            \
  template class BimoduleMap<F>;                                                                               \
  template BimoduleMap<F> compose<F>(const BimoduleMap<F>&, const BimoduleMap<F>&);                            \
  template BimoduleMap<F> identity_map<F>(const Algebra<F>&, const Term&);                                     \
  template Matrix<F> underlying_block<F>(const BimoduleMap<F>&, int, int);                                     \
  template Matrix<F> underlying_matrix<F>(const BimoduleMap<F>&);                                              \
  template std::size_t map_rank<F>(const BimoduleMap<F>&);                                                     \
  template class BimoduleComplex<F>;                                                                           \
  template bool composes_to_zero<F>(const BimoduleComplex<F>&, int);                                           \
  template ExactnessReport verify_exactness<F>(const BimoduleComplex<F>&, int);                                \
  template CochainLayout cochain_layout<F>(const Algebra<F>&, const Term&);                                    \
  template Matrix<F> coboundary_matrix<F>(const BimoduleComplex<F>&, int);                                     \
  template class Cohomology<F>;                                                                                \
  template class Lifter<F>;                                                                                    \
  template std::vector<SparseVec<F>> cochain_values<F>(const Algebra<F>&, const Term&,                        \
                                                       const std::vector<F::value_type>&);                     \
  template std::vector<F::value_type> cochain_vector<F>(const Algebra<F>&, const Term&,                        \
                                                        const std::vector<SparseVec<F>>&);                     \
  template std::vector<F::value_type> augment<F>(const BimoduleComplex<F>&, const BimoduleMap<F>&);            \
  template std::vector<F::value_type> cup_cochain<F>(const BimoduleComplex<F>&, const std::vector<F::value_type>&, \
                                                     int, const BimoduleMap<F>&);

HHCOH_INSTANTIATE(PrimeField)
HHCOH_INSTANTIATE(RationalField)

}  // namespace hhcoh
