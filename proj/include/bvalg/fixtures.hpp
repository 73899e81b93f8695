#ifndef BVALG_FIXTURES_HPP
#define BVALG_FIXTURES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bvalg/bv.hpp"
#include "bvalg/lie.hpp"

namespace bvalg {

/// Rational homotopy Lie algebra of ΩS^m with the Samelson bracket, read
/// through the given shift. m odd: a in degree m-1, abelian. m even: a in
/// degree m-1, b in degree 2m-2, {a,a} = b. Throws AlgebraError for m < 2.
LiePresentation sphere_loop_lie(int m, int shift = 1);

/// The free e_n-algebra on s^{1-n}(sphere_loop_lie(m)) over Q, truncated at D;
/// with the free BV operator (zero differential) when n is even. Requires
/// n >= 2 and m > n.
BVStructure loopspace_model(int n, int m, int max_degree);

struct DescriptorGenerator {
  std::string id;
  int degree = 0;
  /// Acts on A trivially (as a derivation contributing nothing).
  bool action_trivial = true;
  /// This generator is the degree-(n-1) class defining BV.
  bool defines_bv = false;
};

/// What an fD_n-algebra over the field amounts to, after the known
/// structure theorems.
struct StructureDescriptor {
  int n = 2;
  FieldSpec field;
  bool en_bracket = true;
  bool bv = false;
  int bv_degree = 1;
  /// Exterior generators of H_*(SO(n)).
  std::vector<DescriptorGenerator> generators;
  bool spherical_vanishing = true;
  std::vector<std::string> notes;
};

/// Over Q for any n >= 2; over F_p only for n = 2. Throws AlgebraError otherwise.
StructureDescriptor fd_descriptor(int n, FieldSpec field);

/// A homology class in the image of the Hurewicz map, hur(ad2(g)) for a class
/// g of degree j + 2, together with what is known of hur(ad2(g∘Σ^j η)).
struct SphericalTag {
  enum class Eta { Tabulated, Zero, Unknown };

  std::string witness;
  int j = 0;
  Eta eta = Eta::Unknown;
  std::optional<Element> eta_composite;

  int degree() const { return j + 2; }
};

/// BV on a tagged class for n = 2: zero outside characteristic 2; in
/// characteristic 2 the tabulated composite (the sign is 1 mod 2), zero, or undefined.
Partial spherical_bv(const SphericalTag& tag, FieldSpec field);

/// H_*(Ω²S³; F_2) = F_2[u_1, u_2, ...], deg u_k = 2^k - 1, truncated at D,
/// shift 2. BV(u_1) = u_1^2; every other operator value and every
/// bracket is undefined unless {u_1,u_1} is supplied.
BVStructure omega2_s3_f2(int max_degree, std::optional<Element> u1_bracket = std::nullopt);

/// hur(ad2(Ση)) = u_1^2 tag for the class u_1.
SphericalTag omega2_s3_f2_tag(const BVStructure& s);

/// The diagonal-action operator on the same algebra, known only on u_1 where
/// it vanishes; all other values undefined. The u_1 value is an
/// equivariance argument, not a computed one.
GradedMap omega2_s3_f2_bv_diag(const BVStructure& s);

/// A fixture resolved from its CLI name: sphere-lie:<m>, loopspace:<n>:<m>,
/// omega2-s3-f2, fd:<n>:<field>.
struct Fixture {
  std::string name;
  std::optional<LiePresentation> lie;
  std::optional<BVStructure> structure;
  std::optional<StructureDescriptor> descriptor;
};

/// Throws AlgebraError on unknown names or invalid parameters.
Fixture resolve_fixture(std::string_view name, int max_degree);

} // namespace bvalg

#endif
