#ifndef BVALG_SCALAR_HPP
#define BVALG_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bvalg {

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class FieldSpec {
public:
  enum class Kind { Rational, PrimeField };

  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec{}; }
  /// Throws FieldError unless p is prime.
  static FieldSpec prime(std::uint32_t p);

  Kind kind() const { return characteristic_ == 0 ? Kind::Rational : Kind::PrimeField; }
  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  /// "Q" or "F<p>", the same spelling the presentation format uses.
  std::string name() const;
  /// Inverse of name(); also accepts "F_p" and "Fp". Throws FieldError.
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  explicit FieldSpec(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t p);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field values are canonical residues 0..p-1.
class Scalar {
public:
  Scalar() = default;
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);
  /// num/den, reduced into the field. Throws FieldError when den is zero in it.
  static Scalar fraction(FieldSpec field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }

  const FieldSpec& field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Plain exact spelling: "3", "-1/2"; residues print as their canonical representative.
  std::string str() const;
  /// Report spelling: rationals as str(), residues as "1 (mod 5)".
  std::string report_str() const;

private:
  void reduce();
  void check_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  mpq_class value_;
};

/// (-1)^e as a scalar of the given field.
Scalar sign_scalar(FieldSpec field, long exponent);

} // namespace bvalg

#endif
