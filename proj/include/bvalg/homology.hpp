#ifndef BVALG_HOMOLOGY_HPP
#define BVALG_HOMOLOGY_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bvalg/algebra.hpp"
#include "bvalg/graded_map.hpp"
#include "bvalg/lie.hpp"
#include "bvalg/linalg.hpp"

namespace bvalg {

enum class Grading { TotalDegree, Wordlength };

/// A complex of finite-dimensional vector spaces in grades 0..top, with a
/// differential of fixed step (grade g maps to grade g + step). Boundary
/// matrices act on column vectors: rows index the target grade's basis.
/// A grade whose outgoing or incoming map is not fully known (it leaves the
/// truncation window or hits undefined values) has unknown homology.
class ChainComplex {
public:
  ChainComplex(FieldSpec field, int step, std::vector<std::size_t> dims);

  /// The complex (A, op) on the basis monomials of op's window. Throws
  /// AlgebraError unless op is homogeneous for the grading, or if d∘d ≠ 0.
  static ChainComplex from_operator(const GradedMap& op, Grading grading = Grading::TotalDegree);

  const FieldSpec& field() const { return field_; }
  int step() const { return step_; }
  int top() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dimension(int grade) const;

  /// Known map out of `grade`; throws on a dimension mismatch.
  void set_boundary(int grade, Matrix m);
  void mark_outgoing_unknown(int grade) { unknown_out_.insert(grade); }
  void mark_incoming_unknown(int grade) { unknown_in_.insert(grade); }

  /// nullopt when unknown; a zero matrix when the target grade is empty.
  std::optional<Matrix> boundary(int grade) const;
  bool incoming_known(int grade) const;

  /// Throws AlgebraError when some known composite is nonzero.
  void check_square_zero() const;

  /// Monomial labels of each grade for complexes built from an operator.
  const std::vector<std::vector<Monomial>>& bases() const { return bases_; }

private:
  FieldSpec field_;
  int step_;
  std::vector<std::size_t> dims_;
  std::map<int, Matrix> maps_;
  std::set<int> unknown_out_;
  std::set<int> unknown_in_;
  std::vector<std::vector<Monomial>> bases_;
};

/// (Λ(sL), d0 + d1) for a shift-0 presentation, graded by total degree up to D.
/// Throws AlgebraError unless the shift is 0.
ChainComplex build_ce_complex(const LiePresentation& lie, int max_degree);

/// dim ker - rank of the incoming map in each grade 0..top; nullopt where unknown.
std::vector<std::optional<long>> betti(const ChainComplex& c);

/// Σ (-1)^g dim C_g over grades 0..top.
long euler_characteristic_of_chains(const ChainComplex& c);

} // namespace bvalg

#endif
