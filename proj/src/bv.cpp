#include "bvalg/bv.hpp"

#include <algorithm>

namespace bvalg {

namespace {

Monomial from_letters(const FreeAlgebra& alg, const std::vector<std::size_t>& word, std::size_t begin,
                      std::size_t end, std::size_t skip_a = SIZE_MAX, std::size_t skip_b = SIZE_MAX) {
  std::vector<Factor> factors;
  for (std::size_t i = begin; i < end; ++i) {
    if (i == skip_a || i == skip_b)
      continue;
    if (!factors.empty() && factors.back().gen == word[i])
      ++factors.back().exponent;
    else
      factors.push_back({word[i], 1});
  }
  return alg.monomial(std::move(factors));
}

Element as_element(const FreeAlgebra& alg, const Monomial& m) { return Element::term(m, alg.scalar(1)); }

Scalar parity_sign(const FreeAlgebra& alg, long e) { return sign_scalar(alg.field(), e); }

void check_value_degree(const FreeAlgebra& alg, const Element& value, int expected, const std::string& what) {
  if (!value.is_zero() && value.degree() != expected)
    throw AlgebraError(what + " must have degree " + std::to_string(expected) + ", got " + alg.render(value));
  if (!value.is_zero() && !(value.field() == alg.field()))
    throw AlgebraError(what + " has coefficients in the wrong field");
}

} // namespace

BVStructure BVStructure::free(const LiePresentation& lie, int max_degree) {
  BVStructure s;
  s.algebra_ = FreeAlgebra(lie.field(), bvalg::desuspend(lie), max_degree);
  s.shift_ = lie.shift();
  s.provenance_ = Provenance::Free;
  s.has_bv_ = lie.shift() % 2 == 0;
  s.lie_ = lie;
  s.to_algebra_.resize(lie.size());
  s.to_lie_.resize(lie.size());
  for (std::size_t l = 0; l < lie.size(); ++l) {
    std::size_t a = *s.algebra_.find(lie.generators()[l].id);
    s.to_algebra_[l] = a;
    s.to_lie_[a] = l;
  }
  return s;
}

BVStructure BVStructure::user(FreeAlgebra algebra, int shift, MissingEntries missing) {
  BVStructure s;
  s.algebra_ = std::move(algebra);
  s.shift_ = shift;
  s.missing_ = missing;
  return s;
}

BVStructure BVStructure::with_max_degree(int max_degree) const {
  BVStructure s = *this;
  s.algebra_ = algebra_.with_max_degree(max_degree);
  return s;
}

void BVStructure::set_bracket(std::size_t g, std::size_t h, Element value) {
  if (provenance_ == Provenance::Free)
    throw AlgebraError("the bracket of a free structure comes from its Lie presentation");
  if (g >= algebra_.generator_count() || h >= algebra_.generator_count())
    throw AlgebraError("bracket on unknown generator");
  int expected = algebra_.generator_degree(g) + algebra_.generator_degree(h) + bv_degree();
  check_value_degree(algebra_, value,  expected,
                     "{" + algebra_.generator(g).id + "," + algebra_.generator(h).id + "}");
  brackets_.erase({h, g});
  brackets_[{g, h}] = std::move(value);
}

void BVStructure::set_bracket_undefined(std::size_t g, std::size_t h) {
  if (provenance_ == Provenance::Free)
    throw AlgebraError("the bracket of a free structure comes from its Lie presentation");
  brackets_.erase({h, g});
  brackets_[{g, h}] = std::nullopt;
}

void BVStructure::set_bv(std::size_t g, Element value) {
  if (provenance_ == Provenance::Free)
    throw AlgebraError("the operator of a free structure is d0 + d1");
  if (g >= algebra_.generator_count())
    throw AlgebraError("BV on unknown generator");
  check_value_degree(algebra_, value, algebra_.generator_degree(g) + bv_degree(),
                     "BV(" + algebra_.generator(g).id + ")");
  bv_[g] = std::move(value);
  has_bv_ = true;
}

void BVStructure::set_bv_undefined(std::size_t g) {
  if (provenance_ == Provenance::Free)
    throw AlgebraError("the operator of a free structure is d0 + d1");
  bv_[g] = std::nullopt;
  has_bv_ = true;
}

void BVStructure::set_bv_table(GradedMap table) {
  if (provenance_ == Provenance::Free)
    throw AlgebraError("the operator of a free structure is d0 + d1");
  if (table.degree() != bv_degree())
    throw AlgebraError("BV table must have degree " + std::to_string(bv_degree()));
  bv_table_ = std::move(table);
  has_bv_ = true;
}

void BVStructure::drop_bv() {
  has_bv_ = false;
  bv_.clear();
  bv_table_.reset();
}

Element BVStructure::desuspend(const LieVector& v) const {
  Element e = algebra_.zero();
  for (const auto& [l, c] : v)
    e.add_term(algebra_.letter_monomial(to_algebra_.at(l)), c);
  return e;
}

std::optional<Element> BVStructure::generator_bracket(std::size_t g, std::size_t h) const {
  if (provenance_ == Provenance::Free)
    return desuspend(lie_->bracket(to_lie_.at(g), to_lie_.at(h)));
  if (auto it = brackets_.find({g, h}); it != brackets_.end())
    return it->second;
  if (auto it = brackets_.find({h, g}); it != brackets_.end()) {
    if (!it->second)
      return std::nullopt;
    const int k = bv_degree();
    return *it->second * -algebra_.koszul(algebra_.generator_degree(g) + k, algebra_.generator_degree(h) + k);
  }
  if (missing_ == MissingEntries::Zero)
    return algebra_.zero();
  return std::nullopt;
}

std::optional<Element> BVStructure::generator_bv(std::size_t g) const {
  if (!has_bv_)
    return std::nullopt;
  if (provenance_ == Provenance::Free)
    return -desuspend(lie_->differential(to_lie_.at(g)));
  if (bv_table_)
    return bv_table_->value(algebra_.letter_monomial(g));
  if (auto it = bv_.find(g); it != bv_.end())
    return it->second;
  if (missing_ == MissingEntries::Zero)
    return algebra_.zero();
  return std::nullopt;
}

Element StructureEvaluator::clamp(Element e) const {
  const int top = algebra().max_degree();
  bool dropped = false;
  Element r = algebra().zero();
  if (e.out_of_window())
    r.mark_out_of_window();
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() > top)
      dropped = true;
    else
      r.add_term(m, c);
  }
  if (dropped)
    r.mark_out_of_window();
  return r;
}

Partial StructureEvaluator::bracket(const Monomial& a, const Monomial& b) {
  const FreeAlgebra& alg = algebra();
  if (a.is_unit() || b.is_unit())
    return Partial::of(alg.zero());
  auto key = std::pair(a, b);
  if (auto it = bracket_cache_.find(key); it != bracket_cache_.end())
    return it->second;

  const int k = s_.bv_degree();
  Partial result = [&]() -> Partial {
    if (b.wordlength() == 1) {
      std::size_t h = b.factors().front().gen;
      if (a.wordlength() == 1) {
        std::size_t g = a.factors().front().gen;
        if (auto v = s_.generator_bracket(g, h))
          return Partial::of(clamp(*v));
        return Partial::undefined("{" + alg.generator(g).id + "," + alg.generator(h).id + "}");
      }
      // Longer first slot: flip through shifted antisymmetry.
      Partial flipped = bracket(b, a);
      if (!flipped.defined())
        return flipped;
      return Partial::of(*flipped * -alg.koszul(a.degree() + k, b.degree() + k));
    }
    auto word = b.word();
    Element acc = alg.zero();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      Partial inner = bracket(a, alg.letter_monomial(word[i]));
      if (!inner.defined())
        return inner;
      Element prefix = as_element(alg, from_letters(alg, word, 0, i));
      Element suffix = as_element(alg, from_letters(alg, word, i + 1, word.size()));
      acc += alg.multiply({prefix, *inner, suffix}) * alg.koszul(a.degree() + k, prefix_degree);
      prefix_degree += alg.generator_degree(word[i]);
    }
    return Partial::of(clamp(acc));
  }();
  bracket_cache_.emplace(key, result);
  return result;
}

Partial StructureEvaluator::bracket(const Element& a, const Element& b) {
  Element r = algebra().zero();
  if (a.out_of_window() || b.out_of_window())
    r.mark_out_of_window();
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Partial v = bracket(ma, mb);
      if (!v.defined())
        return v;
      r += *v * (ca * cb);
    }
  return Partial::of(std::move(r));
}

Partial StructureEvaluator::bv(const Monomial& m) {
  const FreeAlgebra& alg = algebra();
  if (!s_.has_bv())
    return Partial::undefined("no BV operator");
  if (m.is_unit())
    return Partial::of(alg.zero());
  if (auto it = bv_cache_.find(m); it != bv_cache_.end())
    return it->second;
  Partial result = [&]() -> Partial {
    if (const GradedMap* table = s_.bv_table()) {
      if (!table->in_domain(m)) {
        Element e = alg.zero();
        e.mark_out_of_window();
        return Partial::of(e);
      }
      if (auto v = table->value(m))
        return Partial::of(clamp(*v));
      return Partial::undefined("BV(" + alg.render(m) + ")");
    }
    if (s_.provenance() == Provenance::Free)
      return Partial::of(clamp(d0(m) + d1(m)));
    return bv_recursive(m);
  }();
  bv_cache_.emplace(m, result);
  return result;
}

Partial StructureEvaluator::bv(const Element& a) {
  Element r = algebra().zero();
  if (a.out_of_window())
    r.mark_out_of_window();
  for (const auto& [m, c] : a.terms()) {
    Partial v = bv(m);
    if (!v.defined())
      return v;
    r += *v * c;
  }
  return Partial::of(std::move(r));
}

Partial StructureEvaluator::bv_recursive(const Monomial& m) {
  const FreeAlgebra& alg = algebra();
  if (!s_.has_bv())
    return Partial::undefined("no BV operator");
  if (m.is_unit())
    return Partial::of(alg.zero());
  if (auto it = recursive_cache_.find(m); it != recursive_cache_.end())
    return it->second;
  Partial result = [&]() -> Partial {
    auto word = m.word();
    std::size_t g = word.front();
    if (word.size() == 1) {
      if (auto v = s_.generator_bv(g))
        return Partial::of(clamp(*v));
      return Partial::undefined("BV(" + alg.generator(g).id + ")");
    }
    Monomial head = alg.letter_monomial(g);
    Monomial rest = from_letters(alg, word, 1, word.size());
    Partial br = bracket(head, rest);
    Partial bv_head = bv_recursive(head);
    Partial bv_rest = bv_recursive(rest);
    for (const Partial* p : {&br, &bv_head, &bv_rest})
      if (!p->defined())
        return *p;
    Scalar sg = parity_sign(alg, alg.generator_degree(g));
    Element r = *br * sg + alg.multiply(*bv_head, as_element(alg, rest)) +
                alg.multiply(as_element(alg, head), *bv_rest) * sg;
    return Partial::of(clamp(r));
  }();
  recursive_cache_.emplace(m, result);
  return result;
}

Partial StructureEvaluator::bv_last_peel(const Monomial& m) {
  const FreeAlgebra& alg = algebra();
  if (m.wordlength() < 2)
    return bv_recursive(m);
  auto word = m.word();
  Monomial last = alg.letter_monomial(word.back());
  Monomial front = from_letters(alg, word, 0, word.size() - 1);
  Partial br = bracket(front, last);
  Partial bv_front = bv_recursive(front);
  Partial bv_last = bv_recursive(last);
  for (const Partial* p : {&br, &bv_front, &bv_last})
    if (!p->defined())
      return *p;
  Scalar sg = parity_sign(alg, front.degree());
  Element r = *br * sg + alg.multiply(*bv_front, as_element(alg, last)) +
              alg.multiply(as_element(alg, front), *bv_last) * sg;
  return Partial::of(clamp(r));
}

Element StructureEvaluator::d0(const Monomial& m) {
  const FreeAlgebra& alg = algebra();
  if (s_.provenance() != Provenance::Free || s_.shift() % 2 != 0)
    throw AlgebraError("d0 needs a free structure with even shift");
  if (auto it = d0_cache_.find(m); it != d0_cache_.end())
    return it->second;
  auto word = m.word();
  Element acc = alg.zero();
  int prefix_degree = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Element dx = s_.desuspend(s_.lie()->differential(s_.lie_index(word[i])));
    if (!dx.is_zero()) {
      Element prefix = as_element(alg, from_letters(alg, word, 0, i));
      Element suffix = as_element(alg, from_letters(alg, word, i + 1, word.size()));
      acc -= alg.multiply({prefix, dx, suffix}) * parity_sign(alg, prefix_degree);
    }
    prefix_degree += alg.generator_degree(word[i]);
  }
  acc = clamp(acc);
  d0_cache_.emplace(m, acc);
  return acc;
}

Element StructureEvaluator::d1(const Monomial& m) {
  const FreeAlgebra& alg = algebra();
  if (s_.provenance() != Provenance::Free || s_.shift() % 2 != 0)
    throw AlgebraError("d1 needs a free structure with even shift");
  if (auto it = d1_cache_.find(m); it != d1_cache_.end())
    return it->second;
  auto word = m.word();
  std::vector<long> before(word.size() + 1, 0);
  for (std::size_t i = 0; i < word.size(); ++i)
    before[i + 1] = before[i] + alg.generator_degree(word[i]);
  Element acc = alg.zero();
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j) {
      Element br = *s_.generator_bracket(word[i], word[j]);
      if (br.is_zero())
        continue;
      long di = alg.generator_degree(word[i]);
      long dj = alg.generator_degree(word[j]);
      // Sign of moving letters i and j to the front of the word.
      long nij = di * before[i] + dj * (before[j] - di);
      Element rest = as_element(alg, from_letters(alg, word, 0, word.size(), i, j));
      acc += alg.multiply(br, rest) * parity_sign(alg, di + nij);
    }
  acc = clamp(acc);
  d1_cache_.emplace(m, acc);
  return acc;
}

namespace {

void require_free_even(const BVStructure& s, const char* what) {
  if (s.provenance() != Provenance::Free || s.shift() % 2 != 0)
    throw AlgebraError(std::string(what) + " needs a free structure with even shift");
}

template <class F> Element linear(const Element& a, const FreeAlgebra& alg, F&& f) {
  Element r = alg.zero();
  if (a.out_of_window())
    r.mark_out_of_window();
  for (const auto& [m, c] : a.terms())
    r += f(m) * c;
  return r;
}

} // namespace

Partial poisson_bracket(const Element& a, const Element& b, const BVStructure& s) {
  StructureEvaluator ev(s);
  return ev.bracket(a, b);
}

Element d0(const Element& a, const BVStructure& s) {
  require_free_even(s, "d0");
  StructureEvaluator ev(s);
  return linear(a, s.algebra(), [&](const Monomial& m) { return ev.d0(m); });
}

Element d1(const Element& a, const BVStructure& s) {
  require_free_even(s, "d1");
  StructureEvaluator ev(s);
  return linear(a, s.algebra(), [&](const Monomial& m) { return ev.d1(m); });
}

Element free_bv(const Element& a, const BVStructure& s) {
  require_free_even(s, "free_bv");
  StructureEvaluator ev(s);
  return linear(a, s.algebra(), [&](const Monomial& m) { return ev.d0(m) + ev.d1(m); });
}

Partial bv_extend(const BVStructure& s, const Element& a) {
  const FreeAlgebra& alg = s.algebra();
  StructureEvaluator ev(s);
  Element r = alg.zero();
  if (a.out_of_window())
    r.mark_out_of_window();
  for (const auto& [m, c] : a.terms()) {
    Partial v = ev.bv_recursive(m);
    if (!v.defined())
      return v;
    // Audit m and every tail the first-letter recursion passes through.
    auto word = m.word();
    for (std::size_t start = 0; start + 1 < word.size(); ++start) {
      Monomial tail = from_letters(alg, word, start, word.size());
      Partial first = ev.bv_recursive(tail);
      Partial last = ev.bv_last_peel(tail);
      if (first.defined() && last.defined() && !(*first - *last).is_zero()) {
        Certificate cert;
        cert.check = "bv-well-defined";
        cert.inputs = {alg.render(tail)};
        cert.lhs_label = "BV by first-letter peeling";
        cert.lhs = render_terms(alg, *first);
        cert.rhs_label = "BV by last-letter peeling";
        cert.rhs = render_terms(alg, *last);
        throw InconsistentStructure("BV is not well defined on " + alg.render(tail), std::move(cert));
      }
    }
    r += *v * c;
  }
  return Partial::of(std::move(r));
}

Partial bv_apply(const BVStructure& s, const Element& a) {
  StructureEvaluator ev(s);
  return ev.bv(a);
}

GradedMap bv_map(const BVStructure& s) {
  StructureEvaluator ev(s);
  return GradedMap::tabulate(s.algebra(), s.bv_degree(), [&](const Monomial& m) -> std::optional<Element> {
    Partial v = ev.bv(m);
    return v.value;
  });
}

GradedMap d0_map(const BVStructure& s) {
  require_free_even(s, "d0");
  StructureEvaluator ev(s);
  return GradedMap::tabulate(s.algebra(), s.bv_degree(), [&](const Monomial& m) { return std::optional(ev.d0(m)); });
}

GradedMap d1_map(const BVStructure& s) {
  require_free_even(s, "d1");
  StructureEvaluator ev(s);
  return GradedMap::tabulate(s.algebra(), s.bv_degree(), [&](const Monomial& m) { return std::optional(ev.d1(m)); });
}

std::optional<Element> deviation_bracket(const GradedMap& op, const Monomial& a, const Monomial& b) {
  const FreeAlgebra& alg = op.algebra();
  Element ea = as_element(alg, a), eb = as_element(alg, b);
  auto ab = op.apply(alg.multiply(ea, eb));
  auto oa = op.apply(ea);
  auto ob = op.apply(eb);
  if (!ab || !oa || !ob)
    return std::nullopt;
  Scalar sa = parity_sign(alg, a.degree());
  Element r = (*ab - alg.multiply(*oa, eb) - alg.multiply(ea, *ob) * sa) * sa;
  return r;
}

namespace {

/// Compares two partial values and files the outcome; out-of-window or
/// undefined values count as skipped.
class Comparator {
public:
  Comparator(const FreeAlgebra& alg, CheckTally& tally) : alg_(alg), tally_(tally) {}

  void operator()(const std::vector<Monomial>& inputs, const std::string& lhs_label, const Partial& lhs,
                  const std::string& rhs_label, const Partial& rhs) {
    std::vector<std::string> names;
    for (const auto& m : inputs)
      names.push_back(alg_.render(m));
    check(std::move(names), lhs_label, lhs, rhs_label, rhs);
  }

  void check(std::vector<std::string> inputs, const std::string& lhs_label, const Partial& lhs,
             const std::string& rhs_label, const Partial& rhs, const std::string& note = {}) {
    if (!lhs.defined() || !rhs.defined() || lhs->out_of_window() || rhs->out_of_window()) {
      tally_.skip();
      return;
    }
    if ((*lhs - *rhs).is_zero()) {
      tally_.pass();
      return;
    }
    Certificate c;
    c.inputs = std::move(inputs);
    c.lhs_label = lhs_label;
    c.lhs = render_terms(alg_, *lhs);
    c.rhs_label = rhs_label;
    c.rhs = render_terms(alg_, *rhs);
    c.note = note;
    tally_.fail(std::move(c));
  }

private:
  const FreeAlgebra& alg_;
  CheckTally& tally_;
};

Partial scaled(const Partial& p, const Scalar& c) { return p.defined() ? Partial::of(*p * c) : p; }

Partial sum(const Partial& a, const Partial& b) {
  if (!a.defined())
    return a;
  if (!b.defined())
    return b;
  return Partial::of(*a + *b);
}

Partial product(const FreeAlgebra& alg, const Partial& a, const Partial& b) {
  if (!a.defined())
    return a;
  if (!b.defined())
    return b;
  return Partial::of(alg.multiply(*a, *b));
}

std::vector<Monomial> positive_basis(const FreeAlgebra& alg) {
  auto basis = alg.basis_up_to(alg.max_degree());
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Monomial& m) { return m.is_unit(); }),
              basis.end());
  return basis;
}

BVStructure windowed(const BVStructure& s, int max_degree) {
  return s.with_max_degree(std::max(0, std::min(max_degree, s.algebra().max_degree())));
}

} // namespace

Report verify_en_axioms(const BVStructure& s0, int max_degree) {
  BVStructure s = windowed(s0, max_degree);
  const FreeAlgebra& alg = s.algebra();
  const int D = alg.max_degree();
  const int k = s.bv_degree();
  StructureEvaluator ev(s);
  auto basis = positive_basis(alg);
  auto el = [&](const Monomial& m) { return Partial::of(as_element(alg, m)); };

  CheckTally antisym("en-antisymmetry");
  Comparator anti(alg, antisym);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Monomial &a = basis[i], &b = basis[j];
      if (a.degree() + b.degree() + k > D)
        continue;
      anti({a, b}, "{a,b}", ev.bracket(a, b), "-(-1)^{(|a|+n-1)(|b|+n-1)}{b,a}",
           scaled(ev.bracket(b, a), -alg.koszul(a.degree() + k, b.degree() + k)));
    }

  CheckTally jacobi("en-jacobi");
  CheckTally poisson("en-poisson");
  Comparator jac(alg, jacobi), poi(alg, poisson);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.degree() + b.degree() + k > D)
        continue;
      for (const auto& c : basis) {
        int da = a.degree(), db = b.degree(), dc = c.degree();
        bool pairs_fit = da + dc + k <= D && db + dc + k <= D;
        if (pairs_fit && da + db + dc + 2 * k <= D && da + db + dc + k <= D) {
          Partial bc = ev.bracket(b, c);
          Partial lhs = bc.defined() ? ev.bracket(as_element(alg, a), *bc) : bc;
          Partial ab = ev.bracket(a, b);
          Partial ac = ev.bracket(a, c);
          Partial first = ab.defined() ? ev.bracket(*ab, as_element(alg, c)) : ab;
          Partial second = ac.defined() ? ev.bracket(as_element(alg, b), *ac) : ac;
          jac({a, b, c}, "{a,{b,c}}", lhs, "{{a,b},c} + (-1)^{(|a|+n-1)(|b|+n-1)}{b,{a,c}}",
              sum(first, scaled(second, alg.koszul(da + k, db + k))));
        }
        if (db + dc <= D && pairs_fit && da + db + dc + k <= D) {
          Element bc = alg.multiply(as_element(alg, b), as_element(alg, c));
          Partial lhs = ev.bracket(as_element(alg, a), bc);
          Partial rhs = sum(product(alg, ev.bracket(a, b), el(c)),
                            scaled(product(alg, el(b), ev.bracket(a, c)), alg.koszul(da + k, db)));
          poi({a, b, c}, "{a,bc}", lhs, "{a,b}c + (-1)^{(|a|+n-1)|b|}b{a,c}", rhs);
        }
      }
    }

  Report report;
  report.add(antisym);
  report.add(jacobi);
  report.add(poisson);
  return report;
}

Report verify_bv_axioms(const BVStructure& s0, int max_degree) {
  Report report = verify_en_axioms(s0, max_degree);
  if (!s0.has_bv()) {
    report.notes.push_back("no BV operator; e_n axioms only");
    return report;
  }
  BVStructure s = windowed(s0, max_degree);
  const FreeAlgebra& alg = s.algebra();
  const int D = alg.max_degree();
  const int k = s.bv_degree();
  StructureEvaluator ev(s);
  auto basis = positive_basis(alg);
  auto el = [&](const Monomial& m) { return as_element(alg, m); };

  CheckTally square("bv-square-zero");
  Comparator sq(alg, square);
  for (const auto& m : basis) {
    if (m.degree() + k > D || m.degree() + 2 * k > D)
      continue;
    Partial once = ev.bv(m);
    Partial twice = once.defined() ? ev.bv(*once) : once;
    sq({m}, "BV(BV(m))", twice, "0", Partial::of(alg.zero()));
  }

  CheckTally deviation("bv-deviation");
  CheckTally derivation("bv-bracket-derivation");
  Comparator dev(alg, deviation), der(alg, derivation);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      int da = a.degree(), db = b.degree();
      if (da + db <= D && da + db + k <= D) {
        Element ab = alg.multiply(el(a), el(b));
        Partial bv_ab = ev.bv(ab);
        Partial bv_a = ev.bv(a);
        Partial bv_b = ev.bv(b);
        Scalar sa = parity_sign(alg, da);
        Partial rhs = sum(sum(bv_ab, scaled(product(alg, bv_a, Partial::of(el(b))), -alg.scalar(1))),
                          scaled(product(alg, Partial::of(el(a)), bv_b), -sa));
        dev({a, b}, "{a,b}", ev.bracket(a, b), "(-1)^{|a|}(BV(ab) - BV(a)b - (-1)^{|a|}aBV(b))",
            scaled(rhs, sa));
      }
      if (da + db + 2 * k <= D && da + db + k <= D && da + k <= D && db + k <= D) {
        Partial br = ev.bracket(a, b);
        Partial lhs = br.defined() ? ev.bv(*br) : br;
        Partial bv_a = ev.bv(a);
        Partial bv_b = ev.bv(b);
        Partial first = bv_a.defined() ? ev.bracket(*bv_a, el(b)) : bv_a;
        Partial second = bv_b.defined() ? ev.bracket(el(a), *bv_b) : bv_b;
        der({a, b}, "BV{a,b}", lhs, "{BV(a),b} + (-1)^{(|a|+n-1)(n-1)}{a,BV(b)}",
            sum(first, scaled(second, alg.koszul(da + k, k))));
      }
    }

  report.add(square);
  report.add(deviation);
  report.add(derivation);

  if (s.provenance() == Provenance::UserSupplied) {
    CheckTally known("bv-defined");
    for (const auto& m : basis) {
      if (m.degree() + k <= D && ev.bv(m).defined())
        known.pass();
      else
        known.skip();
    }
    report.add(known);
  }

  if (s.provenance() == Provenance::UserSupplied && !s.has_bv_table()) {
    CheckTally wd("bv-well-defined");
    Comparator cmp(alg, wd);
    for (const auto& m : basis) {
      if (m.wordlength() < 2 || m.degree() + k > D)
        continue;
      cmp({m}, "BV by first-letter peeling", ev.bv_recursive(m), "BV by last-letter peeling", ev.bv_last_peel(m));
    }
    report.add(wd);
  }
  return report;
}

Report verify_free_identities(const BVStructure& s0, int max_degree) {
  require_free_even(s0, "verify_free_identities");
  BVStructure s = windowed(s0, max_degree);
  const FreeAlgebra& alg = s.algebra();
  const int D = alg.max_degree();
  const int k = s.bv_degree();
  StructureEvaluator ev(s);
  auto basis = positive_basis(alg);

  CheckTally d0sq("d0-square-zero"), d1sq("d1-square-zero"), anti("d0-d1-anticommute"),
      bvsq("free-bv-square-zero"), agree("bv-extend-agrees");
  Comparator c0(alg, d0sq), c1(alg, d1sq), ca(alg, anti), cb(alg, bvsq), cx(alg, agree);
  auto apply = [&](auto&& f, const Element& e) {
    return linear(e, alg, [&](const Monomial& m) { return f(m); });
  };
  auto f0 = [&](const Monomial& m) { return ev.d0(m); };
  auto f1 = [&](const Monomial& m) { return ev.d1(m); };
  Partial zero = Partial::of(alg.zero());
  for (const auto& m : basis) {
    if (m.degree() + k > D)
      continue;
    Element a0 = ev.d0(m), a1 = ev.d1(m);
    cx({m}, "bv_extend(m)", ev.bv_recursive(m), "(d0 + d1)(m)", Partial::of(a0 + a1));
    if (m.degree() + 2 * k > D)
      continue;
    Element d00 = apply(f0, a0), d11 = apply(f1, a1);
    Element mixed = apply(f0, a1) + apply(f1, a0);
    c0({m}, "d0(d0(m))", Partial::of(d00), "0", zero);
    c1({m}, "d1(d1(m))", Partial::of(d11), "0", zero);
    ca({m}, "d0(d1(m)) + d1(d0(m))", Partial::of(mixed), "0", zero);
    cb({m}, "BV(BV(m))", Partial::of(d00 + d11 + mixed), "0", zero);
  }
  Report report;
  for (const CheckTally* t : {&d0sq, &d1sq, &anti, &bvsq, &agree})
    report.add(*t);
  return report;
}

MorphismResult extend_morphism(const std::map<std::size_t, Element>& assignment, const BVStructure& source,
                               const BVStructure& target) {
  if (source.provenance() != Provenance::Free)
    throw AlgebraError("extend_morphism needs a free source structure");
  if (source.shift() != target.shift() || !(source.algebra().field() == target.algebra().field()))
    throw AlgebraError("source and target must share shift and field");

  MorphismResult out;
  const FreeAlgebra& src = source.algebra();
  const FreeAlgebra& tgt = target.algebra();
  const int k = source.bv_degree();

  std::vector<Element> phi_gen;
  CheckTally degrees("morphism-degrees");
  for (std::size_t g = 0; g < src.generator_count(); ++g) {
    auto it = assignment.find(g);
    Element v = it == assignment.end() ? tgt.zero() : it->second;
    if (!v.is_zero() && v.degree() != src.generator_degree(g)) {
      Certificate c;
      c.inputs = {src.generator(g).id};
      c.lhs_label = "phi(" + src.generator(g).id + ")";
      c.lhs = render_terms(tgt, v);
      c.note = "image must have degree " + std::to_string(src.generator_degree(g));
      degrees.fail(std::move(c));
    } else {
      degrees.pass();
    }
    phi_gen.push_back(std::move(v));
  }
  out.report.add(degrees);
  if (degrees.failed())
    return out;

  std::map<Monomial, Element> memo;
  auto phi_monomial = [&](const Monomial& m) -> Element {
    if (auto it = memo.find(m); it != memo.end())
      return it->second;
    Element r = tgt.one();
    for (std::size_t g : m.word())
      r = tgt.multiply(r, phi_gen[g]);
    memo.emplace(m, r);
    return r;
  };
  auto phi = [&](const Partial& p) -> Partial {
    if (!p.defined())
      return p;
    Element r = tgt.zero();
    if (p->out_of_window())
      r.mark_out_of_window();
    for (const auto& [m, c] : p->terms())
      r += phi_monomial(m) * c;
    return Partial::of(std::move(r));
  };

  StructureEvaluator sev(source), tev(target);
  CheckTally gen_bracket("morphism-bracket-generators");
  Comparator gb(tgt, gen_bracket);
  for (std::size_t g = 0; g < src.generator_count(); ++g)
    for (std::size_t h = g; h < src.generator_count(); ++h) {
      Monomial mg = src.letter_monomial(g), mh = src.letter_monomial(h);
      Partial lhs = phi(sev.bracket(mg, mh));
      Partial rhs = tev.bracket(phi_gen[g], phi_gen[h]);
      std::string x = src.generator(g).id, y = src.generator(h).id;
      gb.check({x, y}, "phi({x,y})", lhs, "{phi(x),phi(y)}", rhs,
               "not a Lie morphism on the pair (" + x + "," + y + ")");
    }
  out.report.add(gen_bracket);

  if (source.has_bv() && target.has_bv()) {
    CheckTally gen_bv("morphism-bv-generators");
    Comparator gv(tgt, gen_bv);
    for (std::size_t g = 0; g < src.generator_count(); ++g) {
      Monomial mg = src.letter_monomial(g);
      gv.check({src.generator(g).id}, "phi(-d_L x)", phi(sev.bv(mg)), "BV(phi(x))", tev.bv(phi_gen[g]));
    }
    out.report.add(gen_bv);
  }
  if (!out.report.passed() || out.report.skipped() > 0)
    return out;

  const int D = std::min(src.max_degree(), tgt.max_degree());
  auto basis = src.basis_up_to(D);
  for (const auto& m : basis)
    out.table.emplace(m, phi_monomial(m));

  if (source.has_bv() && target.has_bv()) {
    CheckTally commutes("morphism-commutes-bv");
    Comparator cmp(tgt, commutes);
    for (const auto& m : basis) {
      if (m.is_unit() || m.degree() + k > D)
        continue;
      cmp.check({src.render(m)}, "phi(BV(m))", phi(sev.bv(m)), "BV(phi(m))", tev.bv(phi_monomial(m)));
    }
    out.report.add(commutes);
  }
  CheckTally brackets("morphism-commutes-bracket");
  Comparator cmp(tgt, brackets);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.is_unit() || b.is_unit() || a.degree() + b.degree() + k > D)
        continue;
      cmp.check({src.render(a), src.render(b)}, "phi({a,b})", phi(sev.bracket(a, b)), "{phi(a),phi(b)}",
          tev.bracket(phi_monomial(a), phi_monomial(b)));
    }
  out.report.add(brackets);
  out.accepted = out.report.passed() && out.report.skipped() == 0;
  return out;
}

DiagonalAction diagonal_primitive_action(const GradedMap& act_source, const GradedMap& act_target) {
  if (act_source.degree() != act_target.degree() || !(act_source.algebra() == act_target.algebra()))
    throw AlgebraError("both actions must have the same degree on the same algebra");
  const FreeAlgebra& alg = act_source.algebra();
  const int D = alg.max_degree();
  const int t = act_target.degree();
  DiagonalAction out{act_source + act_target, {}};
  auto basis = positive_basis(alg);

  CheckTally leibniz("target-derivation");
  Comparator lz(alg, leibniz);
  auto lift = [](std::optional<Element> v) { return v ? Partial::of(*v) : Partial::undefined("undefined value"); };
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.degree() + b.degree() > D || a.degree() + b.degree() + t > D)
        continue;
      Element ea = as_element(alg, a), eb = as_element(alg, b);
      Partial lhs = lift(act_target.apply(alg.multiply(ea, eb)));
      Partial rhs = sum(product(alg, lift(act_target.apply(ea)), Partial::of(eb)),
                        scaled(product(alg, Partial::of(ea), lift(act_target.apply(eb))), alg.koszul(t, a.degree())));
      lz({a, b}, "T(ab)", lhs, "T(a)b + (-1)^{|T||a|}aT(b)", rhs);
    }

  CheckTally unchanged("bracket-unchanged");
  Comparator uc(alg, unchanged);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (a.degree() + b.degree() > D || a.degree() + b.degree() + t > D)
        continue;
      uc({a, b}, "deviation bracket of BV_S + BV_T", lift(deviation_bracket(out.bv_diag, a, b)),
         "deviation bracket of BV_S", lift(deviation_bracket(act_source, a, b)));
    }
  out.report.add(leibniz);
  out.report.add(unchanged);
  return out;
}

} // namespace bvalg
