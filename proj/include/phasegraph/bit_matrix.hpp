#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phasegraph {

/// Dense matrix over GF(2). Indices are 0-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int get(int r, int c) const { return bits_[index(r, c)]; }
  void set(int r, int c, int v) { bits_[index(r, c)] = static_cast<std::uint8_t>(v & 1); }
  void flip(int r, int c) { bits_[index(r, c)] ^= 1u; }

  BitMatrix transpose() const;
  bool is_symmetric() const;
  bool has_zero_diagonal() const;
  BitMatrix without_diagonal() const;
  int rank() const;
  std::optional<BitMatrix> inverse() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

  /// Rows separated by newlines, entries by spaces.
  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace phasegraph
