#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "frobdeg/field.hpp"

namespace frobdeg {

// Dense row-major matrix over a Field. Exact arithmetic throughout; sized for
// desk-scale elimination, not performance.
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Matrix from_columns(const Field& f, const std::vector<std::vector<FieldElement>>& cols);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Matrix transposed() const;
  // Concatenate blocks side by side; all blocks share the row count.
  static Matrix hstack(const std::vector<Matrix>& blocks);

  std::vector<FieldElement> apply(const std::vector<FieldElement>& x) const;  // M x

 private:
  const Field* field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> a_;
};

// Exact rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const Matrix& m);

// Particular solution of M x = b with free variables fixed to zero, or
// nullopt when the system is inconsistent.
std::optional<std::vector<FieldElement>> solve(const Matrix& m, const std::vector<FieldElement>& b);

// Basis of {x : M x = 0}; size is cols - rank.
std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);

// Rank of the stacked (coefficients | rhs) matrix built from affine
// constraints normal . x = rhs.
std::size_t augmented_rank(
    const std::vector<std::pair<std::vector<FieldElement>, FieldElement>>& constraints);

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);

}  // namespace frobdeg
