#include "hhcoh/field.hpp"

namespace hhcoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw FieldError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw FieldError("GF(" + std::to_string(p) + "): modulus is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw FieldError("division by zero in " + spec().name());
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return from_int(t);
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw FieldError("rational " + q.get_str() + " has no image in " + spec().name());
  return div(from_int(num.get_si()), from_int(den.get_si()));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero in Q");
  mpq_class r = 1 / a;
  r.canonicalize();
  return r;
}

RationalField::value_type RationalField::div(const value_type& a, const value_type& b) const {
  if (sgn(b) == 0) throw FieldError("division by zero in Q");
  mpq_class r = a / b;
  r.canonicalize();
  return r;
}

Scalar::Scalar(FieldSpec field, std::int64_t value) : field_(field) {
  if (field.is_rational())
    rational_ = mpq_class(static_cast<long>(value));
  else
    residue_ = PrimeField(field.p).from_int(value);
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    // rebuild from the parts so non-canonical inputs (negative denominator) are accepted
    rational_ = mpq_class(mpz_class(value.get_num()), mpz_class(value.get_den()));
    rational_.canonicalize();
    return;
  }
  residue_ = PrimeField(field.p).from_rational(value);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0; }

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw FieldError("mixed-field operands: " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational_ + b.rational_));
  Scalar r = a;
  r.residue_ = PrimeField(a.field_.p).add(a.residue_, b.residue_);
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational_ - b.rational_));
  Scalar r = a;
  r.residue_ = PrimeField(a.field_.p).sub(a.residue_, b.residue_);
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational_ * b.rational_));
  Scalar r = a;
  r.residue_ = PrimeField(a.field_.p).mul(a.residue_, b.residue_);
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.is_rational()) return Scalar(a.field_, RationalField{}.div(a.rational_, b.rational_));
  Scalar r = a;
  r.residue_ = PrimeField(a.field_.p).div(a.residue_, b.residue_);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

}  // namespace hhcoh
