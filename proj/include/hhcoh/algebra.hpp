#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hhcoh/field.hpp"
#include "hhcoh/matrix.hpp"
#include "hhcoh/quiver.hpp"

namespace hhcoh {

class NoPath : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class AmbiguousPath : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Finite-dimensional quotient K Q / I with a basis of path representatives.
template <class F>
class Algebra {
 public:
  using T = typename F::value_type;
  using Elem = SparseVec<F>;

  /// Paths of length >= nilpotency_bound are declared zero in addition to the relations.
  static Algebra build(Quiver quiver, F field, std::vector<Relation> relations, int nilpotency_bound);

  const Quiver& quiver() const { return quiver_; }
  const F& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int nilpotency_bound() const { return bound_; }
  int vertex_count() const { return quiver_.vertex_count(); }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<PathWord>& basis() const { return basis_; }
  const PathWord& basis_path(std::size_t b) const { return basis_[b]; }
  std::size_t idempotent(int v) const { return idempotent_[static_cast<std::size_t>(v)]; }

  /// Basis of e_target A e_source, i.e. paths from source to target.
  const std::vector<std::size_t>& corner_basis(int target, int source) const {
    return corners_[static_cast<std::size_t>(target * vertex_count() + source)];
  }
  /// Position of basis element b inside its corner list.
  std::size_t corner_position(std::size_t b) const { return corner_pos_[b]; }

  /// The unique nonzero path source -> target (optionally of fixed length).
  std::size_t unique_path(int source, int target, std::optional<int> length = std::nullopt) const;

  Elem normal_form(const PathWord& p) const;
  Elem basis_elem(std::size_t b, T c) const { return field_.is_zero(c) ? Elem{} : Elem{{b, c}}; }
  Elem basis_elem(std::size_t b) const { return Elem{{b, field_.one()}}; }
  /// Product of basis elements: a * b means first b, then a.
  const Elem& product(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }

  Elem add(const Elem& x, const Elem& y) const;
  Elem scale(const Elem& x, const T& c) const;
  Elem mul(const Elem& x, const Elem& y) const;
  /// x += c * y
  void axpy(Elem& x, const T& c, const Elem& y) const { x = add(x, scale(y, c)); }

  std::size_t center_dimension() const;

 private:
  explicit Algebra(F field) : field_(std::move(field)) {}

  Quiver quiver_;
  F field_;
  std::vector<Relation> relations_;
  int bound_ = 0;
  std::vector<PathWord> basis_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::vector<std::size_t>> corners_;
  std::vector<std::size_t> corner_pos_;
  std::map<PathWord, Elem> normal_;
  std::vector<Elem> table_;
};

/// Algebra automorphism given on vertices and arrows (each arrow to a scalar times an arrow).
template <class F>
class Automorphism {
 public:
  using T = typename F::value_type;
  using Elem = SparseVec<F>;

  struct ArrowImage {
    T coeff;
    int arrow;
  };

  static Automorphism from_generators(const Algebra<F>& a, std::vector<int> vertex_map,
                                      std::vector<ArrowImage> arrow_map);
  static Automorphism identity(const Algebra<F>& a);

  int vertex(int v) const { return vertex_map_[static_cast<std::size_t>(v)]; }
  const Elem& image(std::size_t b) const { return images_[b]; }
  Elem apply(const Elem& x) const;
  /// this after other
  Automorphism compose(const Automorphism& other) const;
  Automorphism power(int k) const;
  bool is_identity() const;
  /// Smallest k >= 1 with phi^k = id (throws beyond the cap).
  int order(int cap = 10000) const;
  /// Checks phi(ab) = phi(a) phi(b) on all basis pairs.
  bool is_multiplicative() const;

 private:
  const Algebra<F>* algebra_ = nullptr;
  std::vector<int> vertex_map_;
  std::vector<Elem> images_;
};

}  // namespace hhcoh
