#ifndef BVALG_TESTS_RANDOM_PRESENTATIONS_HPP
#define BVALG_TESTS_RANDOM_PRESENTATIONS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bvalg/lie.hpp"

namespace bvalg::testing {

struct SampleStats {
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

inline std::string describe(const LiePresentation& lie) {
  std::string s = "n=" + std::to_string(lie.shift());
  for (const auto& g : lie.generators())
    s += " " + g.id + "(" + std::to_string(g.degree) + ")";
  for (const auto& [key, v] : lie.bracket_table())
    s += " [" + lie.generators()[key.first].id + "," + lie.generators()[key.second].id + "]=" + lie.render(v);
  for (const auto& [x, v] : lie.differential_table())
    s += " d" + lie.generators()[x].id + "=" + lie.render(v);
  return s;
}

/// One candidate: n in {0,2,4}, 1..3 generators of L-degree <= 6 (and large
/// enough that the desuspension has positive degree), random nonzero
/// structure constants in -2..2 on every degree-compatible slot. Not checked.
inline LiePresentation random_candidate(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int shifts[] = {0, 2, 4};
  const int n = shifts[pick(0, 2)];
  const int lo = n == 0 ? 0 : n;
  const int count = pick(1, 3);
  std::vector<int> degrees;
  for (int i = 0; i < count; ++i)
    degrees.push_back(pick(lo, 6));
  // bias towards brackets and differentials that land somewhere
  if (count == 3 && pick(0, 1) == 1 && degrees[0] + degrees[1] <= 6)
    degrees[2] = degrees[0] + degrees[1];
  if (count >= 2 && n > 0 && pick(0, 2) == 0 && degrees[0] + n - 1 <= 6)
    degrees[1] = degrees[0] + n - 1;
  if (count >= 2 && n == 0 && pick(0, 2) == 0 && degrees[0] >= 1)
    degrees[1] = degrees[0] - 1;
  std::sort(degrees.begin(), degrees.end());

  const char* names[] = {"x", "y", "z"};
  std::vector<Generator> gens;
  for (int i = 0; i < count; ++i)
    gens.push_back({names[i], degrees[i]});
  const FieldSpec q = FieldSpec::rational();
  LiePresentation lie(q, n, gens);

  auto random_value = [&](int degree) {
    LieVector v;
    for (int g = 0; g < count; ++g)
      if (degrees[g] == degree && pick(0, 2) > 0)
        v[g] = Scalar(q, std::array<long, 4>{-2, -1, 1, 2}[pick(0, 3)]);
    return v;
  };
  for (int i = 0; i < count; ++i)
    for (int j = i; j < count; ++j)
      if (auto v = random_value(degrees[i] + degrees[j]); !v.empty())
        lie.set_bracket(i, j, v);
  if (pick(0, 1) == 1)
    for (int i = 0; i < count; ++i)
      if (auto v = random_value(degrees[i] + n - 1); !v.empty())
        lie.set_differential(i, v);
  return lie;
}

inline bool valid(const LiePresentation& lie) {
  bool nontrivial = false;
  for (const auto& [key, v] : lie.bracket_table())
    nontrivial = nontrivial || !v.empty();
  for (const auto& [x, v] : lie.differential_table())
    nontrivial = nontrivial || !v.empty();
  if (!nontrivial)
    return false;
  if (!check_lie_axioms(lie).passed())
    return false;
  return !lie.has_differential() || check_differential(lie).passed();
}

/// Rejection sampling with a fixed seed: the first `wanted` valid candidates.
inline std::vector<LiePresentation> random_presentations(std::uint32_t seed, std::size_t wanted,
                                                         SampleStats* stats = nullptr,
                                                         std::size_t max_attempts = 20000) {
  std::mt19937 rng(seed);
  std::vector<LiePresentation> out;
  SampleStats local;
  while (out.size() < wanted && local.attempts < max_attempts) {
    ++local.attempts;
    LiePresentation lie = random_candidate(rng);
    if (valid(lie))
      out.push_back(std::move(lie));
    else
      ++local.rejected;
  }
  if (stats)
    *stats = local;
  return out;
}

} // namespace bvalg::testing

#endif
