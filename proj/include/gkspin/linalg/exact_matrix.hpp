#pragma once

#include "gkspin/scalar/field_scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkspin {

using ExactVector = std::vector<FieldScalar>;

// Dense matrix over the exact scalar field with Gaussian elimination.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_columns(const std::vector<ExactVector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldScalar &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldScalar &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  ExactVector column(std::size_t j) const;

  ExactMatrix operator*(const ExactMatrix &o) const;
  ExactVector operator*(const ExactVector &v) const;
  ExactMatrix operator+(const ExactMatrix &o) const;
  ExactMatrix operator-(const ExactMatrix &o) const;
  ExactMatrix scaled(const FieldScalar &c) const;
  ExactMatrix transposed() const;
  bool operator==(const ExactMatrix &o) const;
  bool is_zero() const;

  std::size_t rank() const;
  // Basis of the right null space.
  std::vector<ExactVector> kernel() const;
  std::optional<ExactVector> solve(const ExactVector &b) const;
  std::optional<ExactMatrix> inverse() const;
  FieldScalar determinant() const;
  // Determinants of the top-left k x k blocks, k = 1..n.
  std::vector<FieldScalar> leading_minors() const;

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldScalar> a_;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> reduce();
};

} // namespace gkspin
