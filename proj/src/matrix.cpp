#include "bisetfun/matrix.hpp"

#include <sstream>

#include "bisetfun/errors.hpp"

namespace bisetfun {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const mpq_class &x : a_)
    if (x != 0)
      return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw input_error("matrix addition shape mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw input_error("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return out;
}

Matrix Matrix::scaled(const mpq_class &c) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = a_[i] * c;
  return out;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << at(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

namespace {

mpz_class residue(const mpq_class &x, unsigned long long p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = x.get_num() % pz;
  if (num < 0)
    num += pz;
  mpz_class den = x.get_den() % pz;
  if (den == 0)
    throw input_error("entry " + x.get_str() +
                      " has no meaning in characteristic " + std::to_string(p));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw internal_error("non-invertible nonzero residue modulo a prime");
  return (num * inv) % pz;
}

std::size_t rank_mod_p(const Matrix &m, unsigned long long p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  mpz_class pz(static_cast<unsigned long>(p));
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i * cols + j] = residue(m.at(i, j), p);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(a[r * cols + j], a[piv * cols + j]);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a[r * cols + c].get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i * cols + c] == 0)
        continue;
      mpz_class f = (a[i * cols + c] * inv) % pz;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = ((a[i * cols + j] - f * a[r * cols + j]) % pz + pz) % pz;
    }
    ++r;
  }
  return r;
}

std::size_t rank_rational(const Matrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // clear denominators row by row (rank-preserving), then Bareiss
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = m.at(i, j) * mpq_class(l);
      a[i * cols + j] = scaled.get_num(); // denominator is 1
    }
  }

  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(a[r * cols + j], a[piv * cols + j]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[i * cols + j] * a[r * cols + c] -
                      a[i * cols + c] * a[r * cols + j];
        mpz_divexact(a[i * cols + j].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = a[r * cols + c];
    ++r;
  }
  return r;
}

} // namespace

Matrix reduce(const Matrix &m, const Field &k) {
  if (k.is_rational())
    return m;
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = mpq_class(residue(m.at(i, j), k.characteristic));
  return out;
}

std::size_t rank(const Matrix &m, const Field &k) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  return k.is_rational() ? rank_rational(m) : rank_mod_p(m, k.characteristic);
}

} // namespace bisetfun
