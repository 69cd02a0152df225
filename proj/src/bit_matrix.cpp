#include "phasegraph/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace phasegraph {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

BitMatrix BitMatrix::identity(int dim) {
  BitMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

std::size_t BitMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("bit matrix index");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.set(c, r, get(r, c));
  }
  return out;
}

bool BitMatrix::is_symmetric() const { return *this == transpose(); }

bool BitMatrix::has_zero_diagonal() const {
  for (int i = 0; i < std::min(rows_, cols_); ++i) {
    if (get(i, i)) return false;
  }
  return true;
}

BitMatrix BitMatrix::without_diagonal() const {
  BitMatrix out = *this;
  for (int i = 0; i < std::min(rows_, cols_); ++i) out.set(i, i, 0);
  return out;
}

int BitMatrix::rank() const {
  BitMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < cols_; ++k) {
      const int tmp = m.get(rank, k);
      m.set(rank, k, m.get(pivot, k));
      m.set(pivot, k, tmp);
    }
    for (int r = 0; r < rows_; ++r) {
      if (r != rank && m.get(r, c)) {
        for (int k = 0; k < cols_; ++k) m.set(r, k, m.get(r, k) ^ m.get(rank, k));
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  BitMatrix a = *this;
  BitMatrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (a.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != c) {
      for (int k = 0; k < n; ++k) {
        int t = a.get(c, k);
        a.set(c, k, a.get(pivot, k));
        a.set(pivot, k, t);
        t = inv.get(c, k);
        inv.set(c, k, inv.get(pivot, k));
        inv.set(pivot, k, t);
      }
    }
    for (int r = 0; r < n; ++r) {
      if (r != c && a.get(r, c)) {
        for (int k = 0; k < n; ++k) {
          a.set(r, k, a.get(r, k) ^ a.get(c, k));
          inv.set(r, k, inv.get(r, k) ^ inv.get(c, k));
        }
      }
    }
  }
  return inv;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("bit matrix product: shape mismatch");
  BitMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      if (!a.get(i, k)) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b.get(k, j)) out.flip(i, j);
      }
    }
  }
  return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("bit matrix sum: shape mismatch");
  BitMatrix out = a;
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] ^= b.bits_[i];
  return out;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += get(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace phasegraph
