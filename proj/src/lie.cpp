#include "bvalg/lie.hpp"

#include <set>
#include <sstream>

namespace bvalg {

LiePresentation::LiePresentation(FieldSpec field, int shift, std::vector<Generator> generators)
    : field_(field), shift_(shift), generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.degree < 0)
      throw AlgebraError("generator " + g.id + " has negative degree");
    if (!seen.insert(g.id).second)
      throw AlgebraError("duplicate generator " + g.id);
  }
}

std::optional<std::size_t> LiePresentation::find(std::string_view id) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].id == id)
      return i;
  return std::nullopt;
}

namespace {

void prune(LieVector& v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

} // namespace

void add_to(LieVector& acc, const LieVector& v, const Scalar& c) {
  for (const auto& [g, s] : v) {
    auto [it, inserted] = acc.try_emplace(g, s * c);
    if (!inserted)
      it->second += s * c;
  }
  prune(acc);
}

void LiePresentation::set_bracket(std::size_t x, std::size_t y, LieVector value) {
  if (x >= size() || y >= size())
    throw AlgebraError("bracket on unknown generator");
  prune(value);
  brackets_[{x, y}] = std::move(value);
}

void LiePresentation::set_differential(std::size_t x, LieVector value) {
  if (x >= size())
    throw AlgebraError("differential on unknown generator");
  prune(value);
  differential_[x] = std::move(value);
}

LieVector LiePresentation::bracket(std::size_t x, std::size_t y) const {
  if (auto it = brackets_.find({x, y}); it != brackets_.end())
    return it->second;
  if (auto it = brackets_.find({y, x}); it != brackets_.end()) {
    LieVector r;
    // {x,y} = -(-1)^{|x||y|}{y,x}
    add_to(r, it->second, -sign_scalar(field_, static_cast<long>(degree(x)) * degree(y)));
    return r;
  }
  return {};
}

LieVector LiePresentation::bracket(const LieVector& a, const LieVector& b) const {
  LieVector r;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      add_to(r, bracket(x, y), cx * cy);
  return r;
}

LieVector LiePresentation::differential(std::size_t x) const {
  auto it = differential_.find(x);
  return it == differential_.end() ? LieVector{} : it->second;
}

LieVector LiePresentation::differential(const LieVector& a) const {
  LieVector r;
  for (const auto& [x, c] : a)
    add_to(r, differential(x), c);
  return r;
}

LieVector LiePresentation::basis_vector(std::size_t x) const { return {{x, Scalar::one(field_)}}; }

std::optional<int> LiePresentation::degree(const LieVector& v) const {
  std::optional<int> d;
  for (const auto& [g, c] : v) {
    if (d && *d != degree(g))
      return std::nullopt;
    d = degree(g);
  }
  return d;
}

RenderedElement LiePresentation::render_terms(const LieVector& v) const {
  RenderedElement out;
  for (const auto& [g, c] : v)
    out.emplace_back(generators_[g].id, c.report_str());
  return out;
}

std::string LiePresentation::render(const LieVector& v) const {
  if (v.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : v) {
    bool negative = sgn(c.value()) < 0;
    mpq_class mag = negative ? mpq_class(-c.value()) : c.value();
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (mag != 1)
      os << mag.get_str() << '*';
    os << generators_[g].id;
  }
  return os.str();
}

namespace {

Certificate vector_certificate(const LiePresentation& lie, std::vector<std::string> inputs,
                               std::string lhs_label, const LieVector& lhs, std::string rhs_label,
                               const LieVector& rhs) {
  Certificate c;
  c.inputs = std::move(inputs);
  c.lhs_label = std::move(lhs_label);
  c.lhs = lie.render_terms(lhs);
  c.rhs_label = std::move(rhs_label);
  c.rhs = lie.render_terms(rhs);
  return c;
}

// Every term of `value` must sit in degree `expected`; returns the first offending degree.
std::optional<int> degree_mismatch(const LiePresentation& lie, const LieVector& value, int expected) {
  for (const auto& [g, c] : value)
    if (lie.degree(g) != expected)
      return lie.degree(g);
  return std::nullopt;
}

} // namespace

Report check_lie_axioms(const LiePresentation& lie) {
  Report report;
  const auto& gens = lie.generators();
  CheckTally degrees("bracket-degrees");
  for (const auto& [key, value] : lie.bracket_table()) {
    int expected = lie.degree(key.first) + lie.degree(key.second);
    if (auto got = degree_mismatch(lie, value, expected)) {
      Certificate c = vector_certificate(lie, {gens[key.first].id, gens[key.second].id}, "{x,y}", value,
                                         "degree", {});
      c.note = "bracket degree " + std::to_string(expected) + " expected, got " + std::to_string(*got);
      degrees.fail(std::move(c));
    } else {
      degrees.pass();
    }
  }
  report.add(degrees);
  if (degrees.failed())
    return report;

  const FieldSpec& f = lie.field();
  CheckTally antisym("lie-antisymmetry");
  for (std::size_t x = 0; x < lie.size(); ++x) {
    for (std::size_t y = x; y < lie.size(); ++y) {
      LieVector xy = lie.bracket(x, y);
      LieVector yx = lie.bracket(y, x);
      LieVector rhs;
      add_to(rhs, yx, -sign_scalar(f, static_cast<long>(lie.degree(x)) * lie.degree(y)));
      if (xy == rhs)
        antisym.pass();
      else
        antisym.fail(vector_certificate(lie, {gens[x].id, gens[y].id}, "{x,y}", xy, "-(-1)^{|x||y|}{y,x}", rhs));
    }
  }
  report.add(antisym);

  CheckTally jacobi("lie-jacobi");
  for (std::size_t a = 0; a < lie.size(); ++a)
    for (std::size_t b = 0; b < lie.size(); ++b)
      for (std::size_t c = 0; c < lie.size(); ++c) {
        LieVector va = lie.basis_vector(a), vb = lie.basis_vector(b), vc = lie.basis_vector(c);
        LieVector lhs = lie.bracket(va, lie.bracket(vb, vc));
        LieVector rhs = lie.bracket(lie.bracket(va, vb), vc);
        add_to(rhs, lie.bracket(vb, lie.bracket(va, vc)),
               sign_scalar(f, static_cast<long>(lie.degree(a)) * lie.degree(b)));
        if (lhs == rhs)
          jacobi.pass();
        else
          jacobi.fail(vector_certificate(lie, {gens[a].id, gens[b].id, gens[c].id}, "{a,{b,c}}", lhs,
                                         "{{a,b},c} + (-1)^{|a||b|}{b,{a,c}}", rhs));
      }
  report.add(jacobi);
  return report;
}

Report check_differential(const LiePresentation& lie) {
  Report report;
  const auto& gens = lie.generators();
  const FieldSpec& f = lie.field();
  const int d_degree = lie.shift() - 1;

  CheckTally degrees("differential-degrees");
  for (const auto& [x, value] : lie.differential_table()) {
    int expected = lie.degree(x) + d_degree;
    if (auto got = degree_mismatch(lie, value, expected)) {
      Certificate c = vector_certificate(lie, {gens[x].id}, "d(x)", value, "degree", {});
      c.note = "differential degree " + std::to_string(expected) + " expected, got " + std::to_string(*got);
      degrees.fail(std::move(c));
    } else {
      degrees.pass();
    }
  }
  report.add(degrees);
  if (degrees.failed())
    return report;

  CheckTally square("differential-square-zero");
  for (std::size_t x = 0; x < lie.size(); ++x) {
    LieVector dd = lie.differential(lie.differential(x));
    if (dd.empty())
      square.pass();
    else
      square.fail(vector_certificate(lie, {gens[x].id}, "d(d(x))", dd, "0", {}));
  }
  report.add(square);

  CheckTally leibniz("differential-derivation");
  for (std::size_t x = 0; x < lie.size(); ++x)
    for (std::size_t y = 0; y < lie.size(); ++y) {
      LieVector vx = lie.basis_vector(x), vy = lie.basis_vector(y);
      LieVector lhs = lie.differential(lie.bracket(vx, vy));
      LieVector rhs = lie.bracket(lie.differential(vx), vy);
      add_to(rhs, lie.bracket(vx, lie.differential(vy)),
             sign_scalar(f, static_cast<long>(d_degree) * lie.degree(x)));
      if (lhs == rhs)
        leibniz.pass();
      else
        leibniz.fail(vector_certificate(lie, {gens[x].id, gens[y].id}, "d{x,y}", lhs,
                                        "{dx,y} + (-1)^{(n-1)|x|}{x,dy}", rhs));
    }
  report.add(leibniz);
  return report;
}

std::vector<Generator> desuspend(const LiePresentation& lie) {
  std::vector<Generator> out;
  for (const auto& g : lie.generators()) {
    int d = g.degree - (lie.shift() - 1);
    if (d < 0)
      throw AlgebraError("generator " + g.id + " of degree " + std::to_string(g.degree) +
                         " has negative degree after desuspension by " + std::to_string(lie.shift() - 1));
    out.push_back({g.id, d});
  }
  return out;
}

} // namespace bvalg
