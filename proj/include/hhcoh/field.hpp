#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hhcoh {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// Which exact field we compute over: GF(p) for a word-sized prime p, or Q.
struct FieldSpec {
  std::uint32_t p = 0;  // 0 encodes the rationals

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec{}; }

  std::uint32_t characteristic() const { return p; }
  bool is_rational() const { return p == 0; }
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;
};

/// GF(p) with elements stored as canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  FieldSpec spec() const { return FieldSpec{p_}; }
  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_rational(const mpq_class& q) const;
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals with arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_rational(const mpq_class& q) const { return q; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const;
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  std::string to_string(const value_type& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept ExactField = requires(const F f, typename F::value_type a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.spec() } -> std::convertible_to<FieldSpec>;
};

/// A field element that carries its field. Mixing fields is an error.
class Scalar {
 public:
  Scalar(FieldSpec field, std::int64_t value);
  Scalar(FieldSpec field, const mpq_class& value);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  std::string to_string() const;
  std::uint32_t residue() const { return residue_; }
  const mpq_class& rational() const { return rational_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldSpec field_;
  std::uint32_t residue_ = 0;
  mpq_class rational_;
};

}  // namespace hhcoh
