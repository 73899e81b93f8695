#include "bvalg/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace bvalg {

int Monomial::exponent_of(std::size_t gen) const {
  for (const auto& f : factors_)
    if (f.gen == gen)
      return f.exponent;
  return 0;
}

std::vector<std::size_t> Monomial::word() const {
  std::vector<std::size_t> w;
  w.reserve(static_cast<std::size_t>(wordlength_));
  for (const auto& f : factors_)
    for (int k = 0; k < f.exponent; ++k)
      w.push_back(f.gen);
  return w;
}

Element Element::term(const Monomial& m, const Scalar& c) {
  Element e(c.field());
  e.add_term(m, c);
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<int> Element::degree() const {
  if (terms_.empty() || !is_homogeneous())
    return std::nullopt;
  return terms_.begin()->first.degree();
}

bool Element::is_homogeneous() const {
  if (terms_.empty())
    return true;
  // Map order is by degree first.
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (!(c.field() == field_))
    throw FieldError("coefficient field " + c.field().name() + " does not match element field " +
                     field_.name());
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [m, c] : rhs.terms_)
    add_term(m, c);
  out_of_window_ = out_of_window_ || rhs.out_of_window_;
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [m, c] : rhs.terms_)
    add_term(m, -c);
  out_of_window_ = out_of_window_ || rhs.out_of_window_;
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_)
    c *= s;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_)
    c = -c;
  return r;
}

FreeAlgebra::FreeAlgebra(FieldSpec field, std::vector<Generator> generators, int max_degree)
    : field_(field), generators_(std::move(generators)), max_degree_(max_degree) {
  if (max_degree_ < 0)
    throw AlgebraError("truncation degree must be >= 0");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.degree < 0)
      throw AlgebraError("generator " + g.id + " has negative degree");
    if (!seen.insert(g.id).second)
      throw AlgebraError("duplicate generator " + g.id);
  }
  std::stable_sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.degree, a.id) < std::tie(b.degree, b.id);
  });
}

std::optional<std::size_t> FreeAlgebra::find(std::string_view id) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].id == id)
      return i;
  return std::nullopt;
}

FreeAlgebra FreeAlgebra::with_max_degree(int max_degree) const {
  FreeAlgebra r = *this;
  if (max_degree < 0)
    throw AlgebraError("truncation degree must be >= 0");
  r.max_degree_ = max_degree;
  return r;
}

bool FreeAlgebra::is_polynomial(std::size_t gen) const {
  return field_.characteristic() == 2 || generators_.at(gen).degree % 2 == 0;
}

Element FreeAlgebra::one() const { return Element::term(unit(), scalar(1)); }

Monomial FreeAlgebra::letter_monomial(std::size_t gen) const { return monomial({{gen, 1}}); }

Element FreeAlgebra::letter(std::size_t gen) const {
  Monomial m = letter_monomial(gen);
  Element e = Element::term(m, scalar(1));
  if (m.degree() > max_degree_) {
    e = zero();
    e.mark_out_of_window();
  }
  return e;
}

Monomial FreeAlgebra::monomial(std::vector<Factor> factors) const {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& f : factors) {
    if (f.gen >= generators_.size())
      throw AlgebraError("unknown generator index " + std::to_string(f.gen));
    if (f.exponent < 0)
      throw AlgebraError("negative exponent");
    if (f.exponent == 0)
      continue;
    if (!m.factors_.empty() && m.factors_.back().gen == f.gen) {
      m.factors_.back().exponent += f.exponent;
    } else {
      m.factors_.push_back(f);
    }
  }
  for (const auto& f : m.factors_) {
    if (f.exponent > 1 && !is_polynomial(f.gen))
      throw AlgebraError("odd generator " + generators_[f.gen].id + " squares to zero");
    m.degree_ += f.exponent * generators_[f.gen].degree;
    m.wordlength_ += f.exponent;
  }
  return m;
}

Scalar FreeAlgebra::koszul(int deg_a, int deg_b) const {
  return sign_scalar(field_, static_cast<long>(deg_a % 2) * (deg_b % 2));
}

std::optional<std::pair<Scalar, Monomial>> FreeAlgebra::multiply(const Monomial& a,
                                                                 const Monomial& b) const {
  // Moving each factor of b left past the factors of a with larger index.
  long parity = 0;
  for (const auto& fb : b.factors_) {
    long odd_after = 0;
    for (const auto& fa : a.factors_)
      if (fa.gen > fb.gen)
        odd_after += static_cast<long>(fa.exponent) * (generators_[fa.gen].degree % 2);
    parity += odd_after * fb.exponent * (generators_[fb.gen].degree % 2);
  }
  Monomial r;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->gen < ib->gen)) {
      r.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->gen < ia->gen) {
      r.factors_.push_back(*ib++);
    } else {
      if (!is_polynomial(ia->gen))
        return std::nullopt;
      r.factors_.push_back({ia->gen, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  r.wordlength_ = a.wordlength_ + b.wordlength_;
  return std::make_pair(sign_scalar(field_, parity), std::move(r));
}

Element FreeAlgebra::multiply(const Element& a, const Element& b) const {
  Element r(field_);
  if (a.out_of_window() || b.out_of_window())
    r.mark_out_of_window();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = multiply(ma, mb);
      if (!prod)
        continue;
      if (prod->second.degree() > max_degree_) {
        r.mark_out_of_window();
        continue;
      }
      r.add_term(prod->second, prod->first * ca * cb);
    }
  }
  return r;
}

Element FreeAlgebra::multiply(std::initializer_list<std::reference_wrapper<const Element>> factors) const {
  Element r = one();
  for (const Element& f : factors)
    r = multiply(r, f);
  return r;
}

Element FreeAlgebra::normalize_word(std::span<const std::size_t> word, const Scalar& coeff) const {
  Element r = Element::term(unit(), coeff);
  for (std::size_t g : word)
    r = multiply(r, Element::term(monomial({{g, 1}}), scalar(1)));
  return r;
}

void FreeAlgebra::enumerate(int degree, std::size_t from, std::vector<Factor>& current, int remaining,
                            std::vector<Monomial>& out) const {
  if (remaining == 0) {
    out.push_back(monomial(current));
    return;
  }
  for (std::size_t g = from; g < generators_.size(); ++g) {
    int d = generators_[g].degree;
    if (d > remaining)
      break;
    int max_exp = is_polynomial(g) ? remaining / d : 1;
    for (int e = 1; e <= max_exp; ++e) {
      current.push_back({g, e});
      enumerate(degree, g + 1, current, remaining - e * d, out);
      current.pop_back();
    }
  }
}

std::vector<Monomial> FreeAlgebra::basis(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0 || degree > max_degree_)
    return out;
  for (const auto& g : generators_)
    if (g.degree == 0)
      throw AlgebraError("generator " + g.id + " has degree 0; the monomial basis is infinite");
  std::vector<Factor> current;
  enumerate(degree, 0, current, degree, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> FreeAlgebra::basis_up_to(int degree) const {
  std::vector<Monomial> out;
  int top = std::min(degree, max_degree_);
  for (int d = 0; d <= top; ++d) {
    auto b = basis(d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::string FreeAlgebra::render(const Monomial& m) const {
  if (m.is_unit())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& f : m.factors()) {
    if (!first)
      os << '*';
    first = false;
    os << generators_[f.gen].id;
    if (f.exponent > 1)
      os << '^' << f.exponent;
  }
  return os.str();
}

std::string FreeAlgebra::render(const Element& e) const {
  if (e.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    bool negative = sgn(c.value()) < 0;
    mpq_class mag = negative ? mpq_class(-c.value()) : c.value();
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.is_unit()) {
      os << mag.get_str();
    } else {
      if (mag != 1)
        os << mag.get_str() << '*';
      os << render(m);
    }
  }
  return os.str();
}

} // namespace bvalg
