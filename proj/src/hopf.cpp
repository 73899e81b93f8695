#include "bvalg/hopf.hpp"

#include <functional>
#include <sstream>

#include "bvalg/linalg.hpp"

namespace bvalg {

void Tensor::add_term(Key key, const Scalar& c) {
  if (key.size() != arity_)
    throw AlgebraError("tensor arity mismatch");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
  for (const auto& [k, c] : rhs.terms_)
    add_term(k, c);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
  for (const auto& [k, c] : rhs.terms_)
    add_term(k, -c);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_)
    c *= s;
  return *this;
}

Tensor tensor_multiply(const FreeAlgebra& algebra, const Tensor& a, const Tensor& b) {
  if (a.arity() != b.arity())
    throw AlgebraError("tensor arity mismatch");
  Tensor r(algebra.field(), a.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // (a_1⊗..⊗a_k)(b_1⊗..⊗b_k): b_j moves left past a_i for i > j.
      long parity = 0;
      for (std::size_t j = 0; j < kb.size(); ++j)
        for (std::size_t i = j + 1; i < ka.size(); ++i)
          parity += static_cast<long>(ka[i].degree() % 2) * (kb[j].degree() % 2);
      Scalar c = sign_scalar(algebra.field(), parity) * ca * cb;
      Tensor::Key key;
      bool vanishes = false;
      for (std::size_t i = 0; i < ka.size(); ++i) {
        auto prod = algebra.multiply(ka[i], kb[i]);
        if (!prod) {
          vanishes = true;
          break;
        }
        c *= prod->first;
        key.push_back(std::move(prod->second));
      }
      if (!vanishes)
        r.add_term(std::move(key), c);
    }
  }
  return r;
}

namespace {

Tensor coproduct_monomial(const FreeAlgebra& algebra, const Monomial& m) {
  Tensor r(algebra.field(), 2);
  r.add_term({algebra.unit(), algebra.unit()}, algebra.scalar(1));
  for (std::size_t g : m.word()) {
    Tensor dg(algebra.field(), 2);
    Monomial x = algebra.letter_monomial(g);
    dg.add_term({x, algebra.unit()}, algebra.scalar(1));
    dg.add_term({algebra.unit(), x}, algebra.scalar(1));
    r = tensor_multiply(algebra, r, dg);
  }
  return r;
}

} // namespace

Tensor coproduct(const FreeAlgebra& algebra, const Element& a) {
  Tensor r(algebra.field(), 2);
  for (const auto& [m, c] : a.terms()) {
    Tensor t = coproduct_monomial(algebra, m);
    t *= c;
    r += t;
  }
  return r;
}

Tensor coproduct_at(const FreeAlgebra& algebra, const Tensor& t, std::size_t slot) {
  Tensor r(algebra.field(), t.arity() + 1);
  for (const auto& [k, c] : t.terms()) {
    Tensor split = coproduct_monomial(algebra, k.at(slot));
    for (const auto& [sk, sc] : split.terms()) {
      Tensor::Key key(k.begin(), k.begin() + static_cast<long>(slot));
      key.push_back(sk[0]);
      key.push_back(sk[1]);
      key.insert(key.end(), k.begin() + static_cast<long>(slot) + 1, k.end());
      r.add_term(std::move(key), c * sc);
    }
  }
  return r;
}

Element multiply_out(const FreeAlgebra& algebra, const Tensor& t) {
  Element r = algebra.zero();
  for (const auto& [k, c] : t.terms()) {
    Element p = Element::term(algebra.unit(), c);
    for (const auto& m : k)
      p = algebra.multiply(p, Element::term(m, algebra.scalar(1)));
    r += p;
  }
  return r;
}

Scalar counit(const Element& a) { return a.coefficient(Monomial{}); }

Tensor reduced_coproduct(const FreeAlgebra& algebra, const Element& a) {
  Tensor r = coproduct(algebra, a);
  Tensor edge(algebra.field(), 2);
  for (const auto& [m, c] : a.terms()) {
    edge.add_term({m, algebra.unit()}, c);
    edge.add_term({algebra.unit(), m}, c);
  }
  r -= edge;
  return r;
}

std::vector<Element> primitives(const FreeAlgebra& algebra, int degree) {
  auto basis = algebra.basis(degree);
  std::vector<Tensor> images;
  std::map<Tensor::Key, std::size_t> rows;
  for (const auto& m : basis) {
    images.push_back(reduced_coproduct(algebra, Element::term(m, algebra.scalar(1))));
    for (const auto& [k, c] : images.back().terms())
      rows.try_emplace(k, rows.size());
  }
  Matrix mat(algebra.field(), rows.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [k, c] : images[j].terms())
      mat.at(rows.at(k), j) = c;
  std::vector<Element> out;
  for (const auto& v : kernel(mat)) {
    Element e = algebra.zero();
    for (std::size_t j = 0; j < basis.size(); ++j)
      e.add_term(basis[j], v[j]);
    out.push_back(std::move(e));
  }
  return out;
}

Element antipode(const FreeAlgebra& algebra, const Element& a) {
  std::map<Monomial, Element> memo;
  std::function<Element(const Monomial&)> chi = [&](const Monomial& m) -> Element {
    if (m.is_unit())
      return algebra.one();
    if (auto it = memo.find(m); it != memo.end())
      return it->second;
    // Σ χ(a')a'' = 0 in positive degree; the a'' = 1 term is χ(m) itself.
    Element acc = algebra.zero();
    Tensor delta = coproduct_monomial(algebra, m);
    for (const auto& [k, c] : delta.terms()) {
      if (k[1].is_unit())
        continue;
      acc += algebra.multiply(chi(k[0]), Element::term(k[1], c));
    }
    Element result = -acc;
    memo.emplace(m, result);
    return result;
  };
  Element r = algebra.zero();
  for (const auto& [m, c] : a.terms())
    r += chi(m) * c;
  return r;
}

std::optional<Tensor> apply_at(const GradedMap& op, const Tensor& t, std::size_t slot) {
  const FreeAlgebra& algebra = op.algebra();
  Tensor r(algebra.field(), t.arity());
  for (const auto& [k, c] : t.terms()) {
    int before = 0;
    for (std::size_t i = 0; i < slot; ++i)
      before += k[i].degree();
    auto v = op.apply(Element::term(k.at(slot), algebra.scalar(1)));
    if (!v || v->out_of_window())
      return std::nullopt;
    Scalar sign = algebra.koszul(op.degree(), before);
    for (const auto& [vm, vc] : v->terms()) {
      Tensor::Key key = k;
      key[slot] = vm;
      r.add_term(std::move(key), sign * c * vc);
    }
  }
  return r;
}

std::string render(const FreeAlgebra& algebra, const Tensor& t) {
  if (t.is_zero())
    return "0";
  std::string out;
  for (const auto& [k, c] : t.terms()) {
    std::string coeff = c.str();
    bool negative = coeff[0] == '-';
    if (negative)
      coeff.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (coeff != "1")
      out += coeff + "*";
    for (std::size_t i = 0; i < k.size(); ++i)
      out += (i == 0 ? "" : " ⊗ ") + algebra.render(k[i]);
  }
  return out;
}

RenderedElement render_terms(const FreeAlgebra& algebra, const Tensor& t) {
  RenderedElement out;
  for (const auto& [k, c] : t.terms()) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i)
      s += (i == 0 ? "" : " ⊗ ") + algebra.render(k[i]);
    out.emplace_back(s, c.report_str());
  }
  return out;
}

Report is_coderivation(const GradedMap& op) {
  const FreeAlgebra& algebra = op.algebra();
  CheckTally tally("coderivation");
  for (const auto& m : op.domain()) {
    auto image = op.value(m);
    if (!image) {
      tally.skip();
      continue;
    }
    Tensor delta = coproduct_monomial(algebra, m);
    auto left = apply_at(op, delta, 0);
    auto right = apply_at(op, delta, 1);
    if (!left || !right) {
      tally.skip();
      continue;
    }
    Tensor lhs = coproduct(algebra, *image);
    Tensor rhs = *left;
    rhs += *right;
    if (lhs == rhs) {
      tally.pass();
    } else {
      Certificate cert;
      cert.inputs = {algebra.render(m)};
      cert.lhs_label = "Δ(op(m))";
      cert.lhs = render_terms(algebra, lhs);
      cert.rhs_label = "(op⊗id + id⊗op)Δ(m)";
      cert.rhs = render_terms(algebra, rhs);
      tally.fail(std::move(cert));
    }
  }
  Report report;
  report.add(tally);
  return report;
}

} // namespace bvalg
