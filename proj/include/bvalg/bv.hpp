#ifndef BVALG_BV_HPP
#define BVALG_BV_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvalg/algebra.hpp"
#include "bvalg/graded_map.hpp"
#include "bvalg/lie.hpp"
#include "bvalg/report.hpp"

namespace bvalg {

/// A value that may be unknown because it depends on an undefined table entry.
struct Partial {
  std::optional<Element> value;
  std::string blocker;

  bool defined() const { return value.has_value(); }
  const Element& operator*() const { return *value; }
  const Element* operator->() const { return &*value; }
  static Partial of(Element e) { return Partial{std::move(e), {}}; }
  static Partial undefined(std::string why) { return Partial{std::nullopt, std::move(why)}; }
};

enum class Provenance { Free, UserSupplied };
enum class MissingEntries { Zero, Undefined };

/// An e_n-algebra on a free graded-commutative algebra, optionally with a
/// BV operator of degree n-1.
///
/// Free structures come from a LiePresentation: the algebra is Λ(s^{1-n}L),
/// the bracket extends s^{1-n}{x,y} by the Poisson rule, and for even n the
/// operator is d0 + d1. User-supplied structures carry a bracket table on
/// generator pairs and BV either on generators (extended through the
/// bracket-deviation recursion) or as an explicit tabulated map.
class BVStructure {
public:
  static BVStructure free(const LiePresentation& lie, int max_degree);
  static BVStructure user(FreeAlgebra algebra, int shift, MissingEntries missing);

  const FreeAlgebra& algebra() const { return algebra_; }
  int shift() const { return shift_; }
  int bv_degree() const { return shift_ - 1; }
  Provenance provenance() const { return provenance_; }
  bool has_bv() const { return has_bv_; }
  MissingEntries missing() const { return missing_; }
  const LiePresentation* lie() const { return lie_ ? &*lie_ : nullptr; }
  bool has_bv_table() const { return bv_table_.has_value(); }
  const GradedMap* bv_table() const { return bv_table_ ? &*bv_table_ : nullptr; }

  /// Same structure, different truncation window.
  BVStructure with_max_degree(int max_degree) const;

  /// Throw AlgebraError on a degree mismatch or on a free structure.
  void set_bracket(std::size_t g, std::size_t h, Element value);
  void set_bracket_undefined(std::size_t g, std::size_t h);
  void set_bv(std::size_t g, Element value);
  void set_bv_undefined(std::size_t g);
  void set_bv_table(GradedMap table);
  /// Declares that an operator exists; its generator values then follow
  /// the missing-entry policy until set.
  void declare_bv() { has_bv_ = true; }
  /// Declares an e_n structure without an operator.
  void drop_bv();

  /// nullopt when the entry is undefined.
  std::optional<Element> generator_bracket(std::size_t g, std::size_t h) const;
  std::optional<Element> generator_bv(std::size_t g) const;

  const std::map<std::pair<std::size_t, std::size_t>, std::optional<Element>>& bracket_entries() const {
    return brackets_;
  }
  const std::map<std::size_t, std::optional<Element>>& bv_entries() const { return bv_; }

  /// For free structures: s^{1-n} of an element of L, and the L index of an algebra generator.
  Element desuspend(const LieVector& v) const;
  std::size_t lie_index(std::size_t algebra_gen) const { return to_lie_.at(algebra_gen); }

private:
  BVStructure() = default;

  FreeAlgebra algebra_;
  int shift_ = 0;
  Provenance provenance_ = Provenance::UserSupplied;
  MissingEntries missing_ = MissingEntries::Zero;
  bool has_bv_ = false;
  std::optional<LiePresentation> lie_;
  std::vector<std::size_t> to_lie_;
  std::vector<std::size_t> to_algebra_;
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Element>> brackets_;
  std::map<std::size_t, std::optional<Element>> bv_;
  std::optional<GradedMap> bv_table_;
};

/// Bracket and operator evaluation with per-monomial caches. Holds a
/// reference to the structure, which must outlive it.
class StructureEvaluator {
public:
  explicit StructureEvaluator(const BVStructure& s) : s_(s) {}

  const BVStructure& structure() const { return s_; }
  const FreeAlgebra& algebra() const { return s_.algebra(); }

  Partial bracket(const Monomial& a, const Monomial& b);
  Partial bracket(const Element& a, const Element& b);
  Partial bv(const Monomial& m);
  Partial bv(const Element& a);

  /// BV from the generator values through the bracket-deviation recursion,
  /// peeling the first letter. Ignores any tabulated operator.
  Partial bv_recursive(const Monomial& m);
  /// The same recursion peeling the last letter, for the well-definedness audit.
  Partial bv_last_peel(const Monomial& m);

  Element d0(const Monomial& m);
  Element d1(const Monomial& m);

  Element product(const Element& a, const Element& b) const { return algebra().multiply(a, b); }
  Element clamp(Element e) const;
  Element unit_term(const Monomial& m) const { return Element::term(m, algebra().scalar(1)); }

private:
  const BVStructure& s_;
  std::map<std::pair<Monomial, Monomial>, Partial> bracket_cache_;
  std::map<Monomial, Partial> bv_cache_;
  std::map<Monomial, Partial> recursive_cache_;
  std::map<Monomial, Element> d0_cache_;
  std::map<Monomial, Element> d1_cache_;
};

/// Thrown by bv_extend when two peeling orders give different values.
class InconsistentStructure : public std::runtime_error {
public:
  InconsistentStructure(const std::string& what, Certificate c)
      : std::runtime_error(what), certificate(std::move(c)) {}
  Certificate certificate;
};

Partial poisson_bracket(const Element& a, const Element& b, const BVStructure& s);

/// Free structures with even shift only; throw AlgebraError otherwise.
Element d0(const Element& a, const BVStructure& s);
Element d1(const Element& a, const BVStructure& s);
Element free_bv(const Element& a, const BVStructure& s);

/// BV through the recursion BV(ab) = (-1)^{|a|}{a,b} + (BVa)b + (-1)^{|a|}a(BVb),
/// peeling the first letter, from the operator's generator values. Audits
/// every monomial against the last-letter peeling and throws
/// InconsistentStructure on disagreement.
Partial bv_extend(const BVStructure& s, const Element& a);

/// The structure's operator, whichever way it is given.
Partial bv_apply(const BVStructure& s, const Element& a);

/// The operator tabulated on the window; undefined values stay marked.
GradedMap bv_map(const BVStructure& s);
GradedMap d0_map(const BVStructure& s);
GradedMap d1_map(const BVStructure& s);

/// (-1)^{|a|}(op(ab) - op(a)b - (-1)^{|a|} a op(b)) for basis monomials a, b.
std::optional<Element> deviation_bracket(const GradedMap& op, const Monomial& a, const Monomial& b);

/// Shifted antisymmetry, Jacobi and the Poisson relation on every basis
/// pair/triple whose computation stays inside degree `max_degree`.
Report verify_en_axioms(const BVStructure& s, int max_degree);

/// verify_en_axioms plus BV∘BV = 0, the bracket-deviation identity, BV as a
/// derivation of the bracket, and well-definedness for generator-valued
/// operators. Undefined data counts as skipped coverage.
Report verify_bv_axioms(const BVStructure& s, int max_degree);

/// d0² = 0, d1² = 0, d0d1 + d1d0 = 0, (d0+d1)² = 0 and bv_extend = d0 + d1.
Report verify_free_identities(const BVStructure& s, int max_degree);

struct MorphismResult {
  bool accepted = false;
  std::map<Monomial, Element> table;
  Report report;
};

/// Multiplicative extension of a generator assignment from a free structure
/// into `target`. Accepted only when the assignment respects degrees,
/// brackets and the operators on generators; the extension is then checked
/// against both operators on the whole window.
MorphismResult extend_morphism(const std::map<std::size_t, Element>& assignment, const BVStructure& source,
                               const BVStructure& target);

struct DiagonalAction {
  GradedMap bv_diag;
  Report report;
};

/// Sum of a source-side operator and a target-side operator of the same
/// degree, with checks that the target side is a derivation and that it does
/// not change the deviation bracket.
DiagonalAction diagonal_primitive_action(const GradedMap& act_source, const GradedMap& act_target);

} // namespace bvalg

#endif
