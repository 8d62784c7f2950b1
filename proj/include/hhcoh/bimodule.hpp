#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hhcoh/algebra.hpp"

namespace hhcoh {

class BimoduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P_{i,j} = A e_i (x) e_j A.
struct ProjectiveIndex {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const ProjectiveIndex&, const ProjectiveIndex&) = default;
};

using Term = std::vector<ProjectiveIndex>;

/// One summand a (x) b of a matrix entry P_{col} -> P_{row}: the generator of the
/// column summand goes to a * E_row * b, with a in e_{col.left} A e_{row.left} and
/// b in e_{row.right} A e_{col.right}.
template <class F>
struct TensorTerm {
  std::size_t a;
  std::size_t b;
  typename F::value_type coeff;
};

template <class F>
using TensorEntry = std::vector<TensorTerm<F>>;

/// Basis element (summand, left path, right path) of the underlying space of a term.
struct UnderlyingIndex {
  std::size_t summand;
  std::size_t left;
  std::size_t right;
  friend auto operator<=>(const UnderlyingIndex&, const UnderlyingIndex&) = default;
};

/// Basis of e_x Q e_y for a term Q: all (k, p, q) with p in e_x A e_{k.left}, q in e_{k.right} A e_y.
struct BlockBasis {
  std::vector<UnderlyingIndex> elems;
  std::map<UnderlyingIndex, std::size_t> position;
};

template <class F>
BlockBasis block_basis(const Algebra<F>& A, const Term& term, int x, int y);

template <class F>
std::size_t projective_dim(const Algebra<F>& A, ProjectiveIndex p);

template <class F>
std::size_t term_dim(const Algebra<F>& A, const Term& term);

/// Homomorphism between direct sums of indecomposable projective bimodules.
template <class F>
class BimoduleMap {
 public:
  using T = typename F::value_type;
  using Column = std::map<std::size_t, TensorEntry<F>>;

  BimoduleMap(const Algebra<F>& algebra, Term domain, Term codomain);

  const Algebra<F>& algebra() const { return *algebra_; }
  const Term& domain() const { return domain_; }
  const Term& codomain() const { return codomain_; }
  std::size_t rows() const { return codomain_.size(); }
  std::size_t cols() const { return domain_.size(); }

  /// Adds coeff * (a (x) b) at (row, col); checks the bimodule typing.
  void add_term(std::size_t row, std::size_t col, std::size_t a, std::size_t b, const T& coeff);
  /// Adds (x (x) y) for algebra elements x, y.
  void add_tensor(std::size_t row, std::size_t col, const SparseVec<F>& x, const SparseVec<F>& y);

  const Column& column(std::size_t col) const { return columns_[col]; }
  const TensorEntry<F>* entry(std::size_t row, std::size_t col) const;
  bool is_zero() const;
  std::size_t nonzero_entries() const;

  /// Left factors transformed by phi, e.g. the sigma-twist of a differential.
  template <class Fn>
  BimoduleMap map_left(Term new_domain, Term new_codomain, Fn&& phi) const {
    BimoduleMap out(*algebra_, std::move(new_domain), std::move(new_codomain));
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, entry] : columns_[c])
        for (const auto& t : entry) {
          auto img = phi(t.a);
          for (const auto& [a2, ca] : img)
            out.add_term(r, c, a2, t.b, algebra_->field().mul(ca, t.coeff));
        }
    return out;
  }

  friend bool operator==(const BimoduleMap& f, const BimoduleMap& g) {
    return f.domain_ == g.domain_ && f.codomain_ == g.codomain_ && f.columns_ == g.columns_;
  }

 private:
  const Algebra<F>* algebra_;
  Term domain_;
  Term codomain_;
  std::vector<Column> columns_;
};

template <class F>
bool operator==(const TensorTerm<F>& x, const TensorTerm<F>& y) {
  return x.a == y.a && x.b == y.b && x.coeff == y.coeff;
}

/// f after g.
template <class F>
BimoduleMap<F> compose(const BimoduleMap<F>& f, const BimoduleMap<F>& g);

template <class F>
BimoduleMap<F> identity_map(const Algebra<F>& A, const Term& term);

/// The K-linear map on the block e_x(-)e_y of the underlying spaces.
template <class F>
Matrix<F> underlying_block(const BimoduleMap<F>& f, int x, int y);

/// The full K-linear map in the product bases (blocks in (x,y) order, then block order).
template <class F>
Matrix<F> underlying_matrix(const BimoduleMap<F>& f);

/// A (possibly unbounded) complex of projective bimodules with augmentation Q_0 -> A.
/// Terms and differentials are produced on demand and cached; d(t) maps Q_{t+1} -> Q_t.
template <class F>
class BimoduleComplex {
 public:
  using TermFn = std::function<Term(int)>;
  using DiffFn = std::function<BimoduleMap<F>(int)>;

  BimoduleComplex(std::shared_ptr<const Algebra<F>> algebra, TermFn terms, DiffFn diffs,
                  std::vector<SparseVec<F>> augmentation);

  const Algebra<F>& algebra() const { return *algebra_; }
  std::shared_ptr<const Algebra<F>> algebra_ptr() const { return algebra_; }
  const Term& term(int t) const;
  const BimoduleMap<F>& d(int t) const;
  /// epsilon(E_k) for summand k of Q_0.
  const SparseVec<F>& augmentation(std::size_t k) const { return augmentation_[k]; }

 private:
  std::shared_ptr<const Algebra<F>> algebra_;
  TermFn term_fn_;
  DiffFn diff_fn_;
  std::vector<SparseVec<F>> augmentation_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Term>> terms_;
  mutable std::map<int, std::unique_ptr<BimoduleMap<F>>> diffs_;
};

struct ExactnessReport {
  struct Degree {
    int t;
    std::size_t dim_term;
    std::size_t rank_in;   // rank of the map into Q_t (d_{t-1}, or epsilon for t = -1 convention)
    std::size_t rank_out;  // rank of the map out of Q_t (d_t ... written as rank d_{t-1} for t>0)
    bool exact;
  };
  bool augmentation_surjective = true;
  std::vector<Degree> degrees;
  bool ok() const;
  std::string summary() const;
};

/// d_t d_{t+1} = 0 check.
template <class F>
bool composes_to_zero(const BimoduleComplex<F>& C, int t);

/// Rank identities rank d_{t} + rank d_{t+1} = dim Q_{t+1} for t < through, plus exactness at Q_0.
template <class F>
ExactnessReport verify_exactness(const BimoduleComplex<F>& C, int through_degree);

template <class F>
std::size_t map_rank(const BimoduleMap<F>& f);

/// Cochain coordinates: Hom(P_{i,j}, A) = e_i A e_j, concatenated over the summands.
struct CochainLayout {
  std::vector<std::size_t> offset;  // per summand
  std::size_t dim = 0;
};

template <class F>
CochainLayout cochain_layout(const Algebra<F>& A, const Term& term);

/// delta^t : Hom(Q_t, A) -> Hom(Q_{t+1}, A) as a (dim C^{t+1}) x (dim C^t) matrix.
template <class F>
Matrix<F> coboundary_matrix(const BimoduleComplex<F>& C, int t);

template <class F>
class Cohomology {
 public:
  using T = typename F::value_type;
  Cohomology(const BimoduleComplex<F>& C, int t);

  int degree() const { return degree_; }
  std::size_t cochain_dim() const { return cochain_dim_; }
  std::size_t kernel_dim() const { return kernel_dim_; }
  std::size_t image_in_dim() const { return coboundaries_.rows(); }   // dim Im delta^{t-1}
  std::size_t image_out_dim() const { return image_out_; }            // dim Im delta^t
  std::size_t dim() const { return representatives_.rows(); }
  const Matrix<F>& representatives() const { return representatives_; }
  const Matrix<F>& coboundaries() const { return coboundaries_; }
  bool is_cocycle(const std::vector<T>& v) const;
  /// Coordinates of the class of a cocycle in the representative basis.
  std::vector<T> class_of(const std::vector<T>& cocycle) const;

 private:
  int degree_;
  std::size_t cochain_dim_ = 0, kernel_dim_ = 0, image_out_ = 0;
  Matrix<F> delta_;
  Matrix<F> representatives_;
  Matrix<F> coboundaries_;
  std::unique_ptr<LinearSolver<F>> coords_;
};

/// Lifting of a cocycle of degree t: maps phi_k : Q_{t+k} -> Q_k.
template <class F>
struct ChainMap {
  int start_degree = 0;
  std::vector<BimoduleMap<F>> maps;
};

class LiftError : public BimoduleError {
 public:
  using BimoduleError::BimoduleError;
};

/// Solves the lifting squares block-wise; caches factorizations of the differentials.
template <class F>
class Lifter {
 public:
  using T = typename F::value_type;
  explicit Lifter(const BimoduleComplex<F>& C) : C_(&C) {}

  /// Lift a cocycle given in cochain coordinates; phi_0 .. phi_horizon.
  ChainMap<F> lift(const std::vector<T>& cocycle, int t, int horizon);
  /// Extend a chain map (whose phi_0 is given) through the horizon.
  void extend(ChainMap<F>& phi, int horizon);
  /// Check d_k phi_{k+1} = phi_k d_{t+k} for k < maps.size()-1.
  bool commutes(const ChainMap<F>& phi, int k) const;

 private:
  const LinearSolver<F>& solver(int k, int x, int y);  // for d_{k-1} on block (x,y), or epsilon when k == 0

  const BimoduleComplex<F>* C_;
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<LinearSolver<F>>> solvers_;
  std::map<std::tuple<int, int, int>, BlockBasis> bases_;
};

/// Cochain f: Q_t -> A realized on the generators; value on summand k.
template <class F>
std::vector<SparseVec<F>> cochain_values(const Algebra<F>& A, const Term& term,
                                         const std::vector<typename F::value_type>& v);
template <class F>
std::vector<typename F::value_type> cochain_vector(const Algebra<F>& A, const Term& term,
                                                   const std::vector<SparseVec<F>>& values);

/// epsilon o phi for a map phi : Q_t -> Q_0 given as a bimodule map, as a cochain.
template <class F>
std::vector<typename F::value_type> augment(const BimoduleComplex<F>& C, const BimoduleMap<F>& phi);

/// f2 o phi where phi : Q_{t1+t2} -> Q_{t2} and f2 is a cochain on Q_{t2}: the cup product cochain.
template <class F>
std::vector<typename F::value_type> cup_cochain(const BimoduleComplex<F>& C, const std::vector<typename F::value_type>& f2,
                                                int t2, const BimoduleMap<F>& phi);

}  // namespace hhcoh
