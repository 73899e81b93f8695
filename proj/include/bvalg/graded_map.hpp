#ifndef BVALG_GRADED_MAP_HPP
#define BVALG_GRADED_MAP_HPP

#include <functional>
#include <map>
#include <optional>

#include "bvalg/algebra.hpp"

namespace bvalg {

/// A linear map of fixed degree on a FreeAlgebra, tabulated on basis
/// monomials whose image stays inside the window. A monomial with no entry,
/// or an entry explicitly marked undefined, has no known value.
class GradedMap {
public:
  using Rule = std::function<std::optional<Element>(const Monomial&)>;

  GradedMap(FreeAlgebra algebra, int degree);

  /// Evaluates `rule` on every basis monomial of the tabulation domain; a
  /// nullopt from the rule records the monomial as undefined.
  static GradedMap tabulate(const FreeAlgebra& algebra, int degree, const Rule& rule);
  static GradedMap zero(const FreeAlgebra& algebra, int degree);

  const FreeAlgebra& algebra() const { return algebra_; }
  int degree() const { return degree_; }

  /// Basis monomials m with 0 <= |m| <= D and |m| + degree <= D.
  std::vector<Monomial> domain() const;
  bool in_domain(const Monomial& m) const;

  /// Throws AlgebraError when the value has the wrong degree.
  void set(const Monomial& m, Element value);
  void set_undefined(const Monomial& m);

  bool is_defined(const Monomial& m) const;
  std::optional<Element> value(const Monomial& m) const;

  /// Linear extension. Terms whose image would leave the window make the
  /// result out_of_window; any undefined term makes the result nullopt.
  std::optional<Element> apply(const Element& e) const;

  std::size_t defined_count() const;

  GradedMap operator+(const GradedMap& rhs) const;
  /// (this ∘ rhs), degree adds.
  GradedMap after(const GradedMap& rhs) const;

private:
  FreeAlgebra algebra_;
  int degree_;
  std::map<Monomial, std::optional<Element>> values_;
};

/// The derivation determined by its values on generators (missing ones are
/// zero): T(ab) = T(a)b + (-1)^{degree |a|} a T(b).
GradedMap derivation_from_generators(const FreeAlgebra& algebra, int degree,
                                     const std::map<std::size_t, Element>& on_generators);

} // namespace bvalg

#endif
