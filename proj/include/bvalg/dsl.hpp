#ifndef BVALG_DSL_HPP
#define BVALG_DSL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bvalg/algebra.hpp"
#include "bvalg/bv.hpp"
#include "bvalg/lie.hpp"

namespace bvalg {

struct Diagnostic {
  int line = 0;
  int column = 0;
  std::string message;

  std::string str() const;
};

class ParseError : public std::runtime_error {
public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  std::vector<Diagnostic> diagnostics;
};

/// A parsed presentation file.
///
/// A file with at least one `bv` line describes an e_n/BV structure directly:
/// generator degrees are degrees in A, brackets have degree |x|+|y|+n-1 and
/// may be arbitrary element expressions. Otherwise it describes a Lie
/// presentation: degrees are degrees in L, brackets and `diff` values are
/// linear combinations of generators.
struct PresentationSource {
  struct Bracket {
    std::string x, y;
    Element value;
    friend bool operator==(const Bracket&, const Bracket&) = default;
  };
  struct Assignment {
    std::string x;
    Element value;
    friend bool operator==(const Assignment&, const Assignment&) = default;
  };

  FieldSpec field;
  int shift = 1;
  std::vector<Generator> generators;
  std::vector<Bracket> brackets;
  std::vector<Assignment> differentials;
  std::vector<Assignment> bv;
  std::optional<int> truncate;

  bool bv_mode() const { return !bv.empty(); }
  /// The generators as a free algebra with declared degrees, unbounded window.
  FreeAlgebra algebra() const { return FreeAlgebra(field, generators); }
  int max_degree(int fallback = 10) const { return truncate.value_or(fallback); }

  friend bool operator==(const PresentationSource&, const PresentationSource&) = default;
};

/// Throws ParseError carrying every diagnostic found.
PresentationSource parse_presentation(std::string_view text);

/// Canonical spelling; parse_presentation(render_presentation(p)) == p.
std::string render_presentation(const PresentationSource& p);

/// Parses an element expression over the given algebra: sums of products of
/// coefficients ("3", "-1/2") and generators with optional "^k". Throws
/// ParseError with column positions on line 1.
Element parse_element(std::string_view text, const FreeAlgebra& algebra);

/// Lie-mode files only; throws AlgebraError otherwise.
LiePresentation to_lie_presentation(const PresentationSource& p);

/// BV-mode files give a user structure with undefined missing entries; Lie-mode
/// files give the free structure on the presentation.
BVStructure to_structure(const PresentationSource& p, int fallback_max_degree = 10);

} // namespace bvalg

#endif
