#include "frobdeg/linalg.hpp"

namespace frobdeg {

namespace {

// In-place reduced row echelon form; returns the pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    const FieldElement inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = m.at(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const FieldElement factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::from_columns(const Field& f, const std::vector<std::vector<FieldElement>>& cols) {
  const std::size_t nr = cols.empty() ? 0 : cols[0].size();
  Matrix m(f, nr, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != nr) fail(ErrorKind::shape_error, "ragged column list");
    for (std::size_t r = 0; r < nr; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) fail(ErrorKind::shape_error, "hstack of nothing");
  const std::size_t nr = blocks[0].rows();
  std::size_t nc = 0;
  for (const auto& b : blocks) {
    if (b.rows() != nr) fail(ErrorKind::shape_error, "hstack row mismatch");
    nc += b.cols();
  }
  Matrix m(blocks[0].field(), nr, nc);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, offset + c) = b.at(r, c);
    offset += b.cols();
  }
  return m;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& x) const {
  if (x.size() != cols_) fail(ErrorKind::shape_error, "apply: size mismatch");
  std::vector<FieldElement> out(rows_, field_->zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + at(r, c) * x[c];
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return rref(work).size();
}

std::optional<std::vector<FieldElement>> solve(const Matrix& m,
                                               const std::vector<FieldElement>& b) {
  if (b.size() != m.rows()) fail(ErrorKind::shape_error, "solve: rhs size mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
  return x;
}

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
  Matrix work = m;
  const std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t augmented_rank(
    const std::vector<std::pair<std::vector<FieldElement>, FieldElement>>& constraints) {
  if (constraints.empty()) return 0;
  const std::size_t width = constraints[0].first.size();
  Matrix m(constraints[0].second.field(), constraints.size(), width + 1);
  for (std::size_t r = 0; r < constraints.size(); ++r) {
    if (constraints[r].first.size() != width)
      fail(ErrorKind::shape_error, "augmented_rank: ragged constraints");
    for (std::size_t c = 0; c < width; ++c) m.at(r, c) = constraints[r].first[c];
    m.at(r, width) = constraints[r].second;
  }
  return rank(m);
}

FieldElement dot(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) fail(ErrorKind::shape_error, "dot: size mismatch");
  if (a.empty()) fail(ErrorKind::shape_error, "dot of empty vectors");
  FieldElement acc = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

}  // namespace frobdeg
