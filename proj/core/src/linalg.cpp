#include "superfit/linalg.hpp"

namespace superfit {

DenseMatrix::DenseMatrix(int rows, int cols, long characteristic)
    : rows_(rows),
      cols_(cols),
      p_(characteristic),
      a_((size_t)rows * cols, Scalar::zero(characteristic)) {}

namespace {

// Row echelon in place; returns pivot column per reduced row.
std::vector<int> echelon(std::vector<Scalar>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  auto at = [&](int i, int j) -> Scalar& { return a[(size_t)i * cols + j]; };
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!at(i, c).isZero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < cols; ++j) std::swap(at(pr, j), at(r, j));
    Scalar inv = at(r, c).inverse();
    for (int j = c; j < cols; ++j) at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || at(i, c).isZero()) continue;
      Scalar f = at(i, c);
      for (int j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int DenseMatrix::rank() const {
  auto copy = a_;
  return (int)echelon(copy, rows_, cols_).size();
}

std::vector<std::vector<Scalar>> DenseMatrix::kernelBasis() const {
  auto copy = a_;
  std::vector<int> pivots = echelon(copy, rows_, cols_);
  std::vector<char> isPivot(cols_, 0);
  for (int c : pivots) isPivot[c] = 1;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (isPivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(p_));
    v[free] = Scalar::one(p_);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -copy[r * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace superfit
