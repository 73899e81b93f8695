#ifndef BVALG_LINALG_HPP
#define BVALG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "bvalg/scalar.hpp"

namespace bvalg {

/// Dense exact matrix. Sizes here are desk-scale (a few hundred at most).
class Matrix {
public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix operator*(const Matrix& rhs) const;

  /// Rows and columns reordered: result(i, j) = this(row_order[i], col_order[j]).
  Matrix permuted(const std::vector<std::size_t>& row_order,
                  const std::vector<std::size_t>& col_order) const;

private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination over Q, plain elimination mod p.
std::size_t rank(const Matrix& m);

/// Basis of the null space {v : m v = 0}, one vector per free column of the
/// reduced row echelon form.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

} // namespace bvalg

#endif
