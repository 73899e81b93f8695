#ifndef BVALG_HOPF_HPP
#define BVALG_HOPF_HPP

#include <map>
#include <vector>

#include "bvalg/algebra.hpp"
#include "bvalg/graded_map.hpp"
#include "bvalg/report.hpp"

namespace bvalg {

/// Element of a tensor power A^{⊗k}, sparse over tuples of basis monomials.
class Tensor {
public:
  using Key = std::vector<Monomial>;

  Tensor(FieldSpec field, std::size_t arity) : field_(field), arity_(arity) {}

  std::size_t arity() const { return arity_; }
  const FieldSpec& field() const { return field_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Key key, const Scalar& c);
  Tensor& operator+=(const Tensor& rhs);
  Tensor& operator-=(const Tensor& rhs);
  Tensor& operator*=(const Scalar& s);
  friend bool operator==(const Tensor&, const Tensor&) = default;

private:
  FieldSpec field_;
  std::size_t arity_;
  std::map<Key, Scalar> terms_;
};

/// Generators are primitive and Δ is an algebra map into A ⊗ A with the
/// Koszul sign on the middle swap.
Tensor coproduct(const FreeAlgebra& algebra, const Element& a);
/// Δ applied to tensor slot `slot`; raises arity by one.
Tensor coproduct_at(const FreeAlgebra& algebra, const Tensor& t, std::size_t slot);
/// Componentwise product in A^{⊗k} with Koszul signs.
Tensor tensor_multiply(const FreeAlgebra& algebra, const Tensor& a, const Tensor& b);
/// Multiplies the factors of every tensor back together.
Element multiply_out(const FreeAlgebra& algebra, const Tensor& t);

Scalar counit(const Element& a);

/// Δ(a) - a⊗1 - 1⊗a.
Tensor reduced_coproduct(const FreeAlgebra& algebra, const Element& a);

/// Basis of the primitive subspace of the given degree.
std::vector<Element> primitives(const FreeAlgebra& algebra, int degree);

/// Convolution inverse of the identity, solved degree by degree.
Element antipode(const FreeAlgebra& algebra, const Element& a);

/// Applies `op` to one tensor slot with the Koszul sign from the slots before it.
/// Returns nullopt when an undefined value is needed.
std::optional<Tensor> apply_at(const GradedMap& op, const Tensor& t, std::size_t slot);

/// Checks Δ∘op = (op⊗id + id⊗op)∘Δ on every tabulated basis monomial.
Report is_coderivation(const GradedMap& op);

std::string render(const FreeAlgebra& algebra, const Tensor& t);
RenderedElement render_terms(const FreeAlgebra& algebra, const Tensor& t);

} // namespace bvalg

#endif
