#ifndef BVALG_LIE_HPP
#define BVALG_LIE_HPP

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bvalg/algebra.hpp"
#include "bvalg/report.hpp"

namespace bvalg {

/// Sparse vector in the span of a presentation's generators.
using LieVector = std::map<std::size_t, Scalar>;

/// Finite graded Lie algebra L with an ordinary (degree 0) bracket, meant to
/// be read through the desuspension s^{1-n}L, where its bracket has degree
/// n-1. Generator degrees are degrees in L. A differential, when present,
/// has degree n-1 (so -1 for the Chevalley-Eilenberg case n = 0). Missing
/// table entries are zero; a pair stored in one orientation only gets the
/// other from antisymmetry.
class LiePresentation {
public:
  LiePresentation(FieldSpec field, int shift, std::vector<Generator> generators);

  const FieldSpec& field() const { return field_; }
  int shift() const { return shift_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  int degree(std::size_t gen) const { return generators_.at(gen).degree; }
  std::optional<std::size_t> find(std::string_view id) const;

  void set_bracket(std::size_t x, std::size_t y, LieVector value);
  void set_differential(std::size_t x, LieVector value);
  bool has_differential() const { return !differential_.empty(); }

  const std::map<std::pair<std::size_t, std::size_t>, LieVector>& bracket_table() const { return brackets_; }
  const std::map<std::size_t, LieVector>& differential_table() const { return differential_; }

  LieVector bracket(std::size_t x, std::size_t y) const;
  LieVector bracket(const LieVector& a, const LieVector& b) const;
  LieVector differential(std::size_t x) const;
  LieVector differential(const LieVector& a) const;

  LieVector basis_vector(std::size_t x) const;
  /// Degree of a nonzero homogeneous vector, nullopt otherwise.
  std::optional<int> degree(const LieVector& v) const;

  RenderedElement render_terms(const LieVector& v) const;
  std::string render(const LieVector& v) const;

  friend bool operator==(const LiePresentation&, const LiePresentation&) = default;

private:
  FieldSpec field_;
  int shift_;
  std::vector<Generator> generators_;
  std::map<std::pair<std::size_t, std::size_t>, LieVector> brackets_;
  std::map<std::size_t, LieVector> differential_;
};

void add_to(LieVector& acc, const LieVector& v, const Scalar& c);

/// Degree consistency of the table, then antisymmetry and Jacobi on all
/// generator pairs/triples. Axiom checks are skipped after a degree error.
Report check_lie_axioms(const LiePresentation& lie);

/// Degree n-1, d^2 = 0 and d{x,y} = {dx,y} + (-1)^{(n-1)|x|}{x,dy}.
Report check_differential(const LiePresentation& lie);

/// Generators of s^{1-n}L: same ids, degrees |x| - (n-1). Throws
/// AlgebraError if a degree would become negative.
std::vector<Generator> desuspend(const LiePresentation& lie);

} // namespace bvalg

#endif
