#include "bvalg/graded_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvalg {

GradedMap::GradedMap(FreeAlgebra algebra, int degree) : algebra_(std::move(algebra)), degree_(degree) {}

GradedMap GradedMap::tabulate(const FreeAlgebra& algebra, int degree, const Rule& rule) {
  GradedMap map(algebra, degree);
  for (const auto& m : map.domain()) {
    auto v = rule(m);
    if (v)
      map.set(m, std::move(*v));
    else
      map.set_undefined(m);
  }
  return map;
}

GradedMap GradedMap::zero(const FreeAlgebra& algebra, int degree) {
  return tabulate(algebra, degree, [&](const Monomial&) { return algebra.zero(); });
}

std::vector<Monomial> GradedMap::domain() const {
  int top = algebra_.max_degree() - std::max(0, degree_);
  if (top < 0)
    return {};
  return algebra_.basis_up_to(top);
}

bool GradedMap::in_domain(const Monomial& m) const {
  return m.degree() <= algebra_.max_degree() && m.degree() + degree_ <= algebra_.max_degree();
}

void GradedMap::set(const Monomial& m, Element value) {
  if (!in_domain(m))
    throw AlgebraError("monomial " + algebra_.render(m) + " is outside the map's window");
  if (!value.is_zero() && value.degree() != m.degree() + degree_)
    throw AlgebraError("value of " + algebra_.render(m) + " must have degree " +
                       std::to_string(m.degree() + degree_) + ", got " + algebra_.render(value));
  values_[m] = std::move(value);
}

void GradedMap::set_undefined(const Monomial& m) { values_[m] = std::nullopt; }

bool GradedMap::is_defined(const Monomial& m) const {
  if (m.degree() + degree_ < 0)
    return true;
  auto it = values_.find(m);
  return it != values_.end() && it->second.has_value();
}

std::optional<Element> GradedMap::value(const Monomial& m) const {
  if (m.degree() + degree_ < 0)
    return algebra_.zero();
  auto it = values_.find(m);
  if (it == values_.end())
    return std::nullopt;
  return it->second;
}

std::optional<Element> GradedMap::apply(const Element& e) const {
  Element r = algebra_.zero();
  if (e.out_of_window())
    r.mark_out_of_window();
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() + degree_ > algebra_.max_degree()) {
      r.mark_out_of_window();
      continue;
    }
    auto v = value(m);
    if (!v)
      return std::nullopt;
    r += *v * c;
  }
  return r;
}

std::size_t GradedMap::defined_count() const {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(),
                                                [](const auto& kv) { return kv.second.has_value(); }));
}

GradedMap GradedMap::operator+(const GradedMap& rhs) const {
  if (degree_ != rhs.degree_ || !(algebra_ == rhs.algebra_))
    throw AlgebraError("adding graded maps of different degree or on different algebras");
  return tabulate(algebra_, degree_, [&](const Monomial& m) -> std::optional<Element> {
    auto a = value(m);
    auto b = rhs.value(m);
    if (!a || !b)
      return std::nullopt;
    return *a + *b;
  });
}

GradedMap GradedMap::after(const GradedMap& rhs) const {
  if (!(algebra_ == rhs.algebra_))
    throw AlgebraError("composing graded maps on different algebras");
  return tabulate(algebra_, degree_ + rhs.degree_, [&](const Monomial& m) -> std::optional<Element> {
    auto inner = rhs.value(m);
    if (!inner)
      return std::nullopt;
    return apply(*inner);
  });
}

GradedMap derivation_from_generators(const FreeAlgebra& algebra, int degree,
                                     const std::map<std::size_t, Element>& on_generators) {
  std::map<Monomial, Element> memo;
  std::function<Element(const Monomial&)> eval = [&](const Monomial& m) -> Element {
    if (m.is_unit())
      return algebra.zero();
    if (auto it = memo.find(m); it != memo.end())
      return it->second;
    Element result = algebra.zero();
    if (m.wordlength() == 1) {
      auto it = on_generators.find(m.factors().front().gen);
      if (it != on_generators.end())
        result = it->second;
    } else {
      // m = g * rest with g the first letter; the word product has no sign.
      std::size_t g = m.factors().front().gen;
      std::vector<Factor> rest_f = m.factors();
      if (--rest_f.front().exponent == 0)
        rest_f.erase(rest_f.begin());
      Monomial rest = algebra.monomial(rest_f);
      Element head = algebra.letter(g);
      Element tail = Element::term(rest, algebra.scalar(1));
      result = algebra.multiply(eval(head.terms().begin()->first), tail) +
               algebra.koszul(degree, algebra.generator_degree(g)) * algebra.multiply(head, eval(rest));
    }
    memo.emplace(m, result);
    return result;
  };
  return GradedMap::tabulate(algebra, degree, [&](const Monomial& m) { return std::optional(eval(m)); });
}

} // namespace bvalg
