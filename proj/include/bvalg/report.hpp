#ifndef BVALG_REPORT_HPP
#define BVALG_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvalg/algebra.hpp"

namespace bvalg {

/// Rendered element: (monomial, coefficient) pairs in the algebra's term order.
using RenderedElement = std::vector<std::pair<std::string, std::string>>;

RenderedElement render_terms(const FreeAlgebra& algebra, const Element& e);

/// Both sides of a failed identity, with the inputs that reproduce it.
struct Certificate {
  std::string check;
  std::vector<std::string> inputs;
  std::string lhs_label;
  RenderedElement lhs;
  std::string rhs_label;
  RenderedElement rhs;
  std::string note;
};

enum class Status { Pass, Fail, Skipped };

const char* status_name(Status s);

struct Verdict {
  std::string check;
  Status status = Status::Pass;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<Certificate> certificate;
  std::string note;
};

/// Tally for one named identity. The first counterexample is kept; later
/// failures only bump the counter.
class CheckTally {
public:
  explicit CheckTally(std::string name) : name_(std::move(name)) {}

  void pass() { ++checked_; }
  void skip() { ++skipped_; }
  void fail(Certificate c);
  bool failed() const { return failures_ > 0; }

  Verdict verdict() const;

private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t skipped_ = 0;
  std::size_t failures_ = 0;
  std::optional<Certificate> first_;
};

struct NamedValue {
  std::string label;
  RenderedElement value;
  bool defined = true;
  std::string note;
};

struct Report {
  std::vector<Verdict> verdicts;
  std::vector<NamedValue> values;
  std::vector<std::optional<long>> betti;
  std::vector<std::string> notes;
  double seconds = 0.0;

  void add(Verdict v) { verdicts.push_back(std::move(v)); }
  void add(const CheckTally& t) { verdicts.push_back(t.verdict()); }
  void merge(const Report& other);

  bool passed() const;
  const Verdict* find(const std::string& check) const;
  std::size_t checked() const;
  std::size_t skipped() const;
  /// Evaluated instances over enumerated instances, as an exact fraction;
  /// 1 when nothing was enumerated.
  mpq_class coverage() const;
};

} // namespace bvalg

#endif
