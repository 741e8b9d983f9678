#ifndef BISETFUN_MATRIX_HPP
#define BISETFUN_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bisetfun/field.hpp"

namespace bisetfun {

/// Dense matrix with exact rational entries. Entries meant for a prime
/// field are stored as their canonical residues (see reduce).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class &at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const mpq_class &at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_identity() const;

  Matrix operator+(const Matrix &rhs) const;
  Matrix operator*(const Matrix &rhs) const;
  Matrix scaled(const mpq_class &c) const;
  friend bool operator==(const Matrix &, const Matrix &);

  std::string to_string() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> a_;
};

/// Entries mapped into the field: identity on Q, canonical residue in
/// [0, p) on F_p. Throws input_error when a denominator vanishes mod p.
Matrix reduce(const Matrix &m, const Field &k);

/// Exact rank over the field: fraction-free (Bareiss) elimination over Q,
/// Gaussian elimination over F_p. The matrix is reduced into the field
/// first.
std::size_t rank(const Matrix &m, const Field &k);

} // namespace bisetfun

#endif
