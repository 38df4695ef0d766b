#include "gkspin/linalg/exact_matrix.hpp"

#include <stdexcept>

namespace gkspin {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = FieldScalar(1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<ExactVector> &cols) {
  if (cols.empty())
    return {};
  ExactMatrix m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_)
      throw std::invalid_argument("ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i)
      m(i, j) = cols[j][i];
  }
  return m;
}

ExactVector ExactMatrix::column(std::size_t j) const {
  ExactVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldScalar &x = (*this)(i, k);
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero())
          r(i, j) += x * o(k, j);
    }
  return r;
}

ExactVector ExactMatrix::operator*(const ExactVector &v) const {
  if (cols_ != v.size())
    throw std::invalid_argument("matrix shape mismatch");
  ExactVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero() && !(*this)(i, k).is_zero())
        r[i] += (*this)(i, k) * v[k];
  return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix &o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k)
    r.a_[k] += o.a_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix &o) const { return *this + o.scaled(FieldScalar(-1)); }

ExactMatrix ExactMatrix::scaled(const FieldScalar &c) const {
  ExactMatrix r = *this;
  for (auto &x : r.a_)
    x *= c;
  return r;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(j, i) = (*this)(i, j);
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix &o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool ExactMatrix::is_zero() const {
  for (const auto &x : a_)
    if (!x.is_zero())
      return false;
  return true;
}

std::vector<std::size_t> ExactMatrix::reduce() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, c).is_zero())
      ++p;
    if (p == rows_)
      continue;
    if (p != row)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(p, j), (*this)(row, j));
    FieldScalar inv = (*this)(row, c).inverse();
    for (std::size_t j = c; j < cols_; ++j)
      (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, c).is_zero())
        continue;
      FieldScalar f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        if (!(*this)(row, j).is_zero())
          (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix m = *this;
  return m.reduce().size();
}

std::vector<ExactVector> ExactMatrix::kernel() const {
  ExactMatrix m = *this;
  auto pivots = m.reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    ExactVector v(cols_);
    v[free] = FieldScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> ExactMatrix::solve(const ExactVector &b) const {
  if (b.size() != rows_)
    throw std::invalid_argument("right-hand side size mismatch");
  ExactMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = aug.reduce();
  if (!pivots.empty() && pivots.back() == cols_)
    return std::nullopt;
  ExactVector x(cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, cols_);
  return x;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = rows_;
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = (*this)(i, j);
    aug(i, n + i) = FieldScalar(1);
  }
  auto pivots = aug.reduce();
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

FieldScalar ExactMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("determinant of a non-square matrix");
  ExactMatrix m = *this;
  FieldScalar det(1);
  std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero())
      ++p;
    if (p == n)
      return FieldScalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    FieldScalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero())
        continue;
      FieldScalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<FieldScalar> ExactMatrix::leading_minors() const {
  std::vector<FieldScalar> out;
  for (std::size_t k = 1; k <= std::min(rows_, cols_); ++k) {
    ExactMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        b(i, j) = (*this)(i, j);
    out.push_back(b.determinant());
  }
  return out;
}

std::string ExactMatrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j)
      s += (j ? ", " : "") + (*this)(i, j).str();
  }
  return s + "]";
}

} // namespace gkspin
