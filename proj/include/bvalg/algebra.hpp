#ifndef BVALG_ALGEBRA_HPP
#define BVALG_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvalg/scalar.hpp"

namespace bvalg {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string id;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Factor {
  std::size_t gen = 0;
  int exponent = 0;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Normal-form monomial: factors sorted by generator index (which the owning
/// FreeAlgebra keeps sorted by (degree, id)), exponents positive. Only a
/// FreeAlgebra builds non-unit monomials, so the cached degree is trustworthy.
class Monomial {
public:
  Monomial() = default;

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int wordlength() const { return wordlength_; }
  bool is_unit() const { return factors_.empty(); }
  int exponent_of(std::size_t gen) const;

  /// The monomial written out letter by letter, e.g. a^2 b -> (a, a, b).
  std::vector<std::size_t> word() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0)
      return c;
    return a.factors_ <=> b.factors_;
  }

private:
  friend class FreeAlgebra;
  std::vector<Factor> factors_;
  int degree_ = 0;
  int wordlength_ = 0;
};

/// Sparse linear combination of monomials. Zero coefficients are never stored.
/// `out_of_window` marks a value from which terms above the truncation degree
/// were removed; it survives every arithmetic operation.
class Element {
public:
  Element() = default;
  explicit Element(FieldSpec field) : field_(field) {}
  static Element term(const Monomial& m, const Scalar& c);

  const FieldSpec& field() const { return field_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  /// Common degree of all terms; nullopt for zero or mixed-degree elements.
  std::optional<int> degree() const;
  /// True for zero and for elements whose terms share one degree.
  bool is_homogeneous() const;

  bool out_of_window() const { return out_of_window_; }
  void mark_out_of_window() { out_of_window_ = true; }

  void add_term(const Monomial& m, const Scalar& c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& s);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

private:
  FieldSpec field_;
  std::map<Monomial, Scalar> terms_;
  bool out_of_window_ = false;
};

/// The free graded-commutative algebra on a finite set of generators over a
/// field, restricted to total degree <= max_degree. Transposing homogeneous
/// factors a, b costs (-1)^{|a||b|}. Outside characteristic 2 odd generators
/// square to zero; in characteristic 2 the algebra is the full polynomial ring.
class FreeAlgebra {
public:
  static constexpr int kUnbounded = 1 << 28;

  FreeAlgebra() = default;
  FreeAlgebra(FieldSpec field, std::vector<Generator> generators, int max_degree = kUnbounded);

  const FieldSpec& field() const { return field_; }
  int max_degree() const { return max_degree_; }
  std::span<const Generator> generators() const { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  std::size_t generator_count() const { return generators_.size(); }
  int generator_degree(std::size_t i) const { return generators_.at(i).degree; }
  std::optional<std::size_t> find(std::string_view id) const;

  /// Same generators and field, different window.
  FreeAlgebra with_max_degree(int max_degree) const;

  /// Whether a generator can appear with exponent > 1.
  bool is_polynomial(std::size_t gen) const;

  Scalar scalar(long v) const { return Scalar(field_, v); }
  Element zero() const { return Element(field_); }
  Element one() const;
  Element letter(std::size_t gen) const;
  Monomial unit() const { return Monomial{}; }
  Monomial letter_monomial(std::size_t gen) const;
  /// Throws AlgebraError on unknown generators or exponents that vanish.
  Monomial monomial(std::vector<Factor> factors) const;

  /// Koszul-signed normal form of the word g_1 g_2 ... g_k times coeff.
  Element normalize_word(std::span<const std::size_t> word, const Scalar& coeff) const;

  /// Product of normal forms: the sign and the product monomial, or nullopt
  /// when the product vanishes (a repeated odd generator outside char 2).
  std::optional<std::pair<Scalar, Monomial>> multiply(const Monomial& a, const Monomial& b) const;
  Element multiply(const Element& a, const Element& b) const;
  Element multiply(std::initializer_list<std::reference_wrapper<const Element>> factors) const;

  /// (-1)^{|a||b|} in this field.
  Scalar koszul(int deg_a, int deg_b) const;

  /// Monomial basis in one degree, sorted. Throws AlgebraError when a
  /// degree-0 generator would make the basis infinite.
  std::vector<Monomial> basis(int degree) const;
  /// Basis of degrees 0..min(max_degree, window), ordered by degree.
  std::vector<Monomial> basis_up_to(int degree) const;

  std::string render(const Monomial& m) const;
  /// Expression spelling, e.g. "2*a*b^2 - 1/2*c"; the DSL parses it back.
  std::string render(const Element& e) const;

  friend bool operator==(const FreeAlgebra&, const FreeAlgebra&) = default;

private:
  void enumerate(int degree, std::size_t from, std::vector<Factor>& current, int remaining,
                 std::vector<Monomial>& out) const;

  FieldSpec field_;
  std::vector<Generator> generators_;
  int max_degree_ = kUnbounded;
};

} // namespace bvalg

#endif
