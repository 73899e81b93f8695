#include "bvalg/report.hpp"

namespace bvalg {

RenderedElement render_terms(const FreeAlgebra& algebra, const Element& e) {
  RenderedElement out;
  for (const auto& [m, c] : e.terms())
    out.emplace_back(algebra.render(m), c.report_str());
  return out;
}

const char* status_name(Status s) {
  switch (s) {
  case Status::Pass:
    return "pass";
  case Status::Fail:
    return "fail";
  case Status::Skipped:
    return "skipped";
  }
  return "?";
}

void CheckTally::fail(Certificate c) {
  ++checked_;
  ++failures_;
  if (!first_) {
    c.check = name_;
    first_ = std::move(c);
  }
}

Verdict CheckTally::verdict() const {
  Verdict v;
  v.check = name_;
  v.checked = checked_;
  v.skipped = skipped_;
  v.certificate = first_;
  if (failures_ > 0) {
    v.status = Status::Fail;
    v.note = std::to_string(failures_) + " failing instance(s)";
  } else if (checked_ == 0 && skipped_ > 0) {
    v.status = Status::Skipped;
  } else {
    v.status = Status::Pass;
  }
  return v;
}

void Report::merge(const Report& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
  values.insert(values.end(), other.values.begin(), other.values.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  if (!other.betti.empty())
    betti = other.betti;
  seconds += other.seconds;
}

bool Report::passed() const {
  for (const auto& v : verdicts)
    if (v.status == Status::Fail)
      return false;
  return true;
}

const Verdict* Report::find(const std::string& check) const {
  for (const auto& v : verdicts)
    if (v.check == check)
      return &v;
  return nullptr;
}

std::size_t Report::checked() const {
  std::size_t n = 0;
  for (const auto& v : verdicts)
    n += v.checked;
  return n;
}

std::size_t Report::skipped() const {
  std::size_t n = 0;
  for (const auto& v : verdicts)
    n += v.skipped;
  return n;
}

mpq_class Report::coverage() const {
  std::size_t total = checked() + skipped();
  if (total == 0)
    return mpq_class(1);
  mpq_class c(static_cast<unsigned long>(checked()), static_cast<unsigned long>(total));
  c.canonicalize();
  return c;
}

} // namespace bvalg
