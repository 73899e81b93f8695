#ifndef BVALG_TESTS_HEISENBERG_ORACLE_HPP
#define BVALG_TESTS_HEISENBERG_ORACLE_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bvalg::testing {

/// Boundary matrices read from a hand-written file, ranked by plain Gaussian
/// elimination on mpq_class. Shares no code with the library.
struct HandComplex {
  std::vector<long> dims;
  std::map<int, std::vector<std::vector<mpq_class>>> maps;
};

inline HandComplex read_hand_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("missing oracle file " + path);
  HandComplex c;
  std::string line;
  int current = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "dims") {
      long d;
      while (ss >> d)
        c.dims.push_back(d);
    } else if (head == "map") {
      ss >> current;
      c.maps[current];
    } else {
      std::istringstream row(line);
      std::vector<mpq_class> r;
      std::string tok;
      while (row >> tok)
        r.emplace_back(tok);
      c.maps.at(current).push_back(r);
    }
  }
  return c;
}

inline long hand_rank(std::vector<std::vector<mpq_class>> m) {
  long rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<long>(rows); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][col] == 0)
        continue;
      mpq_class f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k)
        m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline bool hand_square_zero(const HandComplex& c) {
  for (const auto& [g, outer] : c.maps) {
    auto inner = c.maps.find(g + 1);
    if (inner == c.maps.end())
      continue;
    for (std::size_t i = 0; i < outer.size(); ++i)
      for (std::size_t j = 0; j < inner->second[0].size(); ++j) {
        mpq_class s = 0;
        for (std::size_t k = 0; k < inner->second.size(); ++k)
          s += outer[i][k] * inner->second[k][j];
        if (s != 0)
          return false;
      }
  }
  return true;
}

/// b_g = dim C_g - rank(out of g) - rank(into g), maps going g -> g-1.
inline std::vector<long> hand_betti(const HandComplex& c) {
  std::vector<long> b;
  for (std::size_t g = 0; g < c.dims.size(); ++g) {
    long out = c.maps.count(static_cast<int>(g)) ? hand_rank(c.maps.at(static_cast<int>(g))) : 0;
    long in = c.maps.count(static_cast<int>(g) + 1) ? hand_rank(c.maps.at(static_cast<int>(g) + 1)) : 0;
    b.push_back(c.dims[g] - out - in);
  }
  return b;
}

} // namespace bvalg::testing

#endif
