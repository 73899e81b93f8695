#include "bvalg/scalar.hpp"

namespace bvalg {

bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p))
    throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q")
    return rational();
  std::string_view digits = text;
  if (digits.starts_with("F<") && digits.ends_with(">"))
    digits = digits.substr(2, digits.size() - 3);
  else if (digits.starts_with("F_"))
    digits = digits.substr(2);
  else if (digits.starts_with("F"))
    digits = digits.substr(1);
  else
    throw FieldError("unknown field '" + std::string(text) + "'");
  if (digits.empty() || digits.size() > 9 ||
      digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw FieldError("unknown field '" + std::string(text) + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(std::string(digits))));
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(characteristic_);
}

Scalar::Scalar(FieldSpec field, long value) : field_(field), value_(value) { reduce(); }

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field), value_(value) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::fraction(FieldSpec field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0)
      throw FieldError("division by zero");
    return Scalar(field, mpq_class(num, den));
  }
  Scalar n(field, mpq_class(num));
  Scalar d(field, mpq_class(den));
  if (d.is_zero())
    throw FieldError("denominator " + den.get_str() + " vanishes in " + field.name());
  return n / d;
}

void Scalar::reduce() {
  if (field_.is_rational())
    return;
  // Only integral values reach here for prime fields.
  mpz_class p(field_.characteristic());
  mpz_class r = value_.get_num() % p;
  if (r < 0)
    r += p;
  value_ = mpq_class(r);
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_))
    throw FieldError("mixing scalars of " + field_.name() + " and " + rhs.field_.name());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw FieldError("inverse of zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
  } else {
    mpz_class inv;
    mpz_class p(field_.characteristic());
    mpz_class v = value_.get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    r.value_ = mpq_class(inv);
  }
  return r;
}

std::string Scalar::str() const { return value_.get_str(); }

std::string Scalar::report_str() const {
  if (field_.is_rational())
    return str();
  return str() + " (mod " + std::to_string(field_.characteristic()) + ")";
}

Scalar sign_scalar(FieldSpec field, long exponent) {
  return Scalar(field, (exponent % 2 == 0) ? 1L : -1L);
}

} // namespace bvalg
