#include "bvalg/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bvalg {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (!rhs.at(k, j).is_zero())
          r.at(i, j) += a * rhs.at(k, j);
    }
  return r;
}

Matrix Matrix::permuted(const std::vector<std::size_t>& row_order,
                        const std::vector<std::size_t>& col_order) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r.at(i, j) = at(row_order.at(i), col_order.at(j));
  return r;
}

namespace {

std::size_t rank_bareiss(const Matrix& m) {
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).value().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpq_class v = m.at(i, j).value() * l;
      a[i][j] = v.get_num();
    }
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const Matrix& m) {
  const std::int64_t p = m.field().characteristic();
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m.at(i, j).value().get_num().get_si();
  auto inv = [p](std::int64_t v) {
    std::int64_t r = 1, e = p - 2, b = v % p;
    while (e > 0) {
      if (e & 1)
        r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    std::swap(a[pivot], a[rank]);
    std::int64_t s = inv(a[rank][col]);
    for (std::size_t j = col; j < m.cols(); ++j)
      a[rank][j] = a[rank][j] * s % p;
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      std::int64_t f = a[i][col];
      if (f == 0)
        continue;
      for (std::size_t j = col; j < m.cols(); ++j)
        a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t rank(const Matrix& m) {
  return m.field().is_rational() ? rank_bareiss(m) : rank_mod_p(m);
}

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a.at(pivot, col).is_zero())
      ++pivot;
    if (pivot == a.rows())
      continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      std::swap(a.at(pivot, j), a.at(row, j));
    Scalar s = a.at(row, col).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j)
      a.at(row, j) *= s;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero())
        continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) -= f * a.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end())
      continue;
    std::vector<Scalar> v(a.cols(), Scalar::zero(a.field()));
    v[free] = Scalar::one(a.field());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      v[pivot_cols[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace bvalg
