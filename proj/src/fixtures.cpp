#include "bvalg/fixtures.hpp"

#include <charconv>

namespace bvalg {

LiePresentation sphere_loop_lie(int m, int shift) {
  if (m < 2)
    throw AlgebraError("sphere dimension must be >= 2, got " + std::to_string(m));
  const FieldSpec q = FieldSpec::rational();
  if (m % 2 == 1)
    return LiePresentation(q, shift, {{"a", m - 1}});
  LiePresentation lie(q, shift, {{"a", m - 1}, {"b", 2 * m - 2}});
  lie.set_bracket(0, 0, {{1, Scalar::one(q)}});
  return lie;
}

BVStructure loopspace_model(int n, int m, int max_degree) {
  if (n < 2)
    throw AlgebraError("loop space model needs n >= 2, got " + std::to_string(n));
  if (m <= n)
    throw AlgebraError("loop space model needs m > n so that S^m is n-connected; got n=" + std::to_string(n) +
                       ", m=" + std::to_string(m));
  return BVStructure::free(sphere_loop_lie(m, n), max_degree);
}

StructureDescriptor fd_descriptor(int n, FieldSpec field) {
  if (n < 2)
    throw AlgebraError("descriptor needs n >= 2, got " + std::to_string(n));
  StructureDescriptor d;
  d.n = n;
  d.field = field;
  d.bv_degree = n - 1;
  if (!field.is_rational()) {
    if (n != 2)
      throw AlgebraError("descriptor over " + field.name() + " is only known for n = 2");
    d.bv = true;
    d.generators.push_back({"a1", 1, false, true});
    d.spherical_vanishing = field.characteristic() != 2;
    if (field.characteristic() == 2)
      d.notes.push_back("BV need not vanish on spherical classes: BV(u1) = u1^2 in H_*(Omega^2 S^3; F2)");
    return d;
  }
  const int k = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
  for (int i = 1; i <= k; ++i)
    d.generators.push_back({"a" + std::to_string(4 * i - 1), 4 * i - 1, true, false});
  if (n % 2 == 0) {
    d.bv = true;
    std::string id = "a" + std::to_string(n - 1);
    for (const auto& g : d.generators)
      if (g.id == id)
        id += "'";
    d.generators.push_back({id, n - 1, false, true});
  }
  return d;
}

Partial spherical_bv(const SphericalTag& tag, FieldSpec field) {
  if (field.characteristic() != 2)
    return Partial::of(Element(field));
  switch (tag.eta) {
  case SphericalTag::Eta::Zero:
    return Partial::of(Element(field));
  case SphericalTag::Eta::Tabulated:
    if (!tag.eta_composite)
      return Partial::undefined(tag.witness + " o Sigma^" + std::to_string(tag.j) + " eta");
    if (!tag.eta_composite->is_zero() && !(tag.eta_composite->field() == field))
      throw AlgebraError("tabulated composite for " + tag.witness + " is not over " + field.name());
    return Partial::of(*tag.eta_composite);
  case SphericalTag::Eta::Unknown:
    break;
  }
  return Partial::undefined(tag.witness + " o Sigma^" + std::to_string(tag.j) + " eta");
}

BVStructure omega2_s3_f2(int max_degree, std::optional<Element> u1_bracket) {
  if (max_degree < 1)
    throw AlgebraError("truncation degree must be >= 1, got " + std::to_string(max_degree));
  std::vector<Generator> gens;
  for (int k = 1; (1L << k) - 1 <= max_degree; ++k)
    gens.push_back({"u" + std::to_string(k), (1 << k) - 1});
  FreeAlgebra alg(FieldSpec::prime(2), gens, max_degree);
  BVStructure s = BVStructure::user(alg, 2, MissingEntries::Undefined);
  std::size_t u1 = *alg.find("u1");
  s.set_bv(u1, Element::term(alg.monomial({{u1, 2}}), alg.scalar(1)));
  if (u1_bracket)
    s.set_bracket(u1, u1, *u1_bracket);
  return s;
}

SphericalTag omega2_s3_f2_tag(const BVStructure& s) {
  const FreeAlgebra& alg = s.algebra();
  std::size_t u1 = *alg.find("u1");
  return {"id_S3", 1, SphericalTag::Eta::Tabulated, Element::term(alg.monomial({{u1, 2}}), alg.scalar(1))};
}

GradedMap omega2_s3_f2_bv_diag(const BVStructure& s) {
  GradedMap op(s.algebra(), s.bv_degree());
  Monomial u1 = s.algebra().letter_monomial(*s.algebra().find("u1"));
  if (op.in_domain(u1))
    op.set(u1, s.algebra().zero());
  return op;
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw AlgebraError("bad number '" + std::string(text) + "' in fixture name '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

} // namespace

Fixture resolve_fixture(std::string_view name, int max_degree) {
  Fixture f;
  f.name = std::string(name);
  auto parts = split(name, ':');
  if (parts[0] == "sphere-lie" && parts.size() == 2) {
    f.lie = sphere_loop_lie(parse_int(parts[1], name));
  } else if (parts[0] == "loopspace" && parts.size() == 3) {
    int n = parse_int(parts[1], name), m = parse_int(parts[2], name);
    f.structure = loopspace_model(n, m, max_degree);
    f.lie = *f.structure->lie();
  } else if (parts[0] == "omega2-s3-f2" && parts.size() == 1) {
    f.structure = omega2_s3_f2(max_degree);
  } else if (parts[0] == "fd" && parts.size() == 3) {
    f.descriptor = fd_descriptor(parse_int(parts[1], name), FieldSpec::parse(parts[2]));
  } else {
    throw AlgebraError("unknown fixture '" + std::string(name) +
                       "'; expected sphere-lie:<m>, loopspace:<n>:<m>, omega2-s3-f2 or fd:<n>:<field>");
  }
  return f;
}

} // namespace bvalg
