#ifndef BVALG_TESTS_HELPERS_HPP
#define BVALG_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "bvalg/algebra.hpp"
#include "bvalg/dsl.hpp"

namespace bvalg::testing {

inline FieldSpec Q() { return FieldSpec::rational(); }

inline Element el(const FreeAlgebra& alg, const std::string& text) { return parse_element(text, alg); }

inline std::string source_path(const std::string& relative) { return std::string(BVALG_SOURCE_DIR) + "/" + relative; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace bvalg::testing

#endif
