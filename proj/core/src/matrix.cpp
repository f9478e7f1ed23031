#include "starsurgery/matrix.hpp"

namespace starsurgery {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMat::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  IntVec out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMat::add_row(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMat::add_col(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

Int IntMat::determinant() const {
  if (!is_square())
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return Int(1);
  IntMat a(*this);
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // Bareiss: exact division by the previous pivot.
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  Int det = a.at(n - 1, n - 1);
  return sign > 0 ? det : Int(-det);
}

IntMat IntMat::adjugate() const {
  if (!is_square())
    throw Error(ErrorCode::DimensionMismatch, "adjugate of non-square matrix");
  std::size_t n = rows_;
  IntMat adj(n, n);
  if (n == 0) return adj;
  // Cofactor expansion via (n-1)x(n-1) Bareiss determinants; matrices here
  // are small, so the n^2 minors are cheap.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = minor.determinant();
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;
    }
  return adj;
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()) {
  data_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) data_.emplace_back(m.at(i, j));
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
  RatMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

RatVec RatMat::operator*(const RatVec& v) const {
  if (cols_ != v.size())
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  RatVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// Gauss-Jordan over Q on [M | rhs]; rhs has any number of columns.
RatMat eliminate(const IntMat& M, RatMat rhs) {
  std::size_t n = M.rows();
  RatMat a(M);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "pivot vanished");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        std::swap(rhs.at(k, j), rhs.at(p, j));
    }
    Rat inv = 1 / a.at(k, k);
    for (std::size_t j = 0; j < n; ++j) a.at(k, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        rhs.at(i, j) -= f * rhs.at(k, j);
    }
  }
  return rhs;
}

}  // namespace

RatVec solve_rational(const IntMat& M, const IntVec& t) {
  if (!M.is_square())
    throw Error(ErrorCode::DimensionMismatch, "solve needs a square matrix");
  if (t.size() != M.rows())
    throw Error(ErrorCode::DimensionMismatch, "solve rhs size");
  RatMat rhs(M.rows(), 1);
  for (std::size_t i = 0; i < t.size(); ++i) rhs.at(i, 0) = Rat(t[i]);
  RatMat x = eliminate(M, rhs);
  RatVec out(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) out[i] = x.at(i, 0);
  return out;
}

RatMat invert_rational(const IntMat& M) {
  if (!M.is_square())
    throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  return eliminate(M, RatMat::identity(M.rows()));
}

}  // namespace starsurgery
