#include <doctest.h>

#include "bvalg/bv.hpp"
#include "bvalg/fixtures.hpp"
#include "bvalg/homology.hpp"
#include "heisenberg_oracle.hpp"
#include "helpers.hpp"

using namespace bvalg;
using bvalg::testing::Q;

namespace {

LiePresentation abelian(int k) {
  std::vector<Generator> gens;
  for (int i = 0; i < k; ++i)
    gens.push_back({"x" + std::to_string(i), 0});
  return LiePresentation(Q(), 0, gens);
}

LiePresentation heisenberg() {
  LiePresentation lie(Q(), 0, {{"x", 0}, {"y", 0}, {"z", 0}});
  lie.set_bracket(0, 1, {{2, Scalar::one(Q())}});
  return lie;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::vector<long> known(const std::vector<std::optional<long>>& b) {
  std::vector<long> out;
  for (const auto& x : b) {
    REQUIRE(x.has_value());
    out.push_back(*x);
  }
  return out;
}

}

TEST_SUITE("homology") {

TEST_CASE("hand-built oracle for h3") {
  auto hand = bvalg::testing::read_hand_complex(bvalg::testing::source_path("tests/data/heisenberg_ce.txt"));
  long total = 0;
  for (long d : hand.dims)
    total += d;
  CHECK(total == 8);
  CHECK(bvalg::testing::hand_square_zero(hand));
  CHECK(bvalg::testing::hand_betti(hand) == std::vector<long>{1, 2, 2, 1});
}

TEST_CASE("heisenberg homology matches the oracle") {
  auto hand = bvalg::testing::read_hand_complex(bvalg::testing::source_path("tests/data/heisenberg_ce.txt"));
  ChainComplex c = build_ce_complex(heisenberg(), 3);
  std::vector<long> dims;
  for (int g = 0; g <= c.top(); ++g)
    dims.push_back(static_cast<long>(c.dimension(g)));
  CHECK(dims == hand.dims);
  CHECK(known(betti(c)) == bvalg::testing::hand_betti(hand));
  for (int g = 1; g <= 3; ++g) {
    auto m = c.boundary(g);
    REQUIRE(m.has_value());
    CHECK(static_cast<long>(rank(*m)) == bvalg::testing::hand_rank(hand.maps.at(g)));
  }
}

TEST_CASE("abelian algebras give binomial coefficients") {
  for (int k = 1; k <= 5; ++k) {
    ChainComplex c = build_ce_complex(abelian(k), k);
    auto b = known(betti(c));
    REQUIRE(b.size() == static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i)
      CHECK(b[i] == binomial(k, i));
  }
}

TEST_CASE("one generator with forced zero self-bracket") {
  ChainComplex c = build_ce_complex(abelian(1), 4);
  long total = 0;
  for (int g = 0; g <= c.top(); ++g)
    total += static_cast<long>(c.dimension(g));
  CHECK(total == 2);
  CHECK(c.boundary(1)->is_zero());
}

TEST_CASE("nonzero shift is rejected") {
  CHECK_THROWS_AS(build_ce_complex(sphere_loop_lie(3), 4), AlgebraError);
}

TEST_CASE("sphere model complex") {
  BVStructure s = loopspace_model(2, 4, 9);
  ChainComplex c = ChainComplex::from_operator(bv_map(s));
  auto b = betti(c);
  REQUIRE(b[0].has_value());
  CHECK(*b[0] == 1);
  long chi_b = 0;
  bool complete = true;
  for (std::size_t g = 0; g < b.size(); ++g) {
    if (!b[g]) {
      complete = false;
      break;
    }
    chi_b += (g % 2 == 0 ? 1 : -1) * *b[g];
  }
  if (complete)
    CHECK(chi_b == euler_characteristic_of_chains(c));
}

TEST_CASE("euler characteristic of a complete window") {
  ChainComplex c = build_ce_complex(heisenberg(), 3);
  auto b = known(betti(c));
  long chi = 0;
  for (std::size_t g = 0; g < b.size(); ++g)
    chi += (g % 2 == 0 ? 1 : -1) * b[g];
  CHECK(chi == euler_characteristic_of_chains(c));
}

TEST_CASE("wordlength grading") {
  BVStructure s = loopspace_model(2, 4, 10);
  ChainComplex c = ChainComplex::from_operator(d1_map(s), Grading::Wordlength);
  CHECK(c.step() == -1);
  CHECK(betti(c)[0] == 1);
}

TEST_CASE("pivot order does not change ranks") {
  ChainComplex c = build_ce_complex(heisenberg(), 3);
  auto m = *c.boundary(2);
  std::vector<std::size_t> rows{2, 0, 1}, cols{1, 2, 0};
  CHECK(rank(m.permuted(rows, cols)) == rank(m));
}

TEST_CASE("square-zero is checked on construction") {
  ChainComplex c(Q(), -1, {1, 1, 1});
  Matrix one(Q(), 1, 1);
  one.at(0, 0) = Scalar::one(Q());
  c.set_boundary(1, one);
  c.set_boundary(2, one);
  CHECK_THROWS_AS(c.check_square_zero(), AlgebraError);
}

}
