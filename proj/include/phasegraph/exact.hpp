#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace phasegraph {

/// Gaussian integer a + bi.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr bool operator==(const Gaussian&) const = default;
  constexpr bool is_zero() const { return re == 0 && im == 0; }

  constexpr Gaussian conj() const { return {re, -im}; }
  /// Multiply by i^p.
  constexpr Gaussian times_i_power(int p) const {
    switch (((p % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return {-im, re};
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }
};

Gaussian operator+(Gaussian a, Gaussian b);
Gaussian operator-(Gaussian a, Gaussian b);
Gaussian operator*(Gaussian a, Gaussian b);
Gaussian operator*(std::int64_t k, Gaussian a);

/// Returns p with value == i^p, or -1 if value is not a unit.
int unit_exponent(Gaussian value);

/// A dense complex matrix whose entries are Gaussian integers sharing one
/// scale factor 2^(-scale/2). Kept in a canonical form (scale reduced while
/// every entry is even) so that equality is exact entry comparison.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, int scale = 0);

  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix column(const std::vector<Gaussian>& entries, int scale = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int scale() const { return scale_; }

  const Gaussian& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Gaussian& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::complex<double> value(std::size_t r, std::size_t c) const;

  ExactMatrix adjoint() const;
  ExactMatrix times_i_power(int p) const;
  /// Multiplies every entry by 2^(-extra/2).
  ExactMatrix rescaled(int extra) const;
  /// The trace as (sum of entries, scale).
  std::pair<Gaussian, int> trace() const;

  bool is_zero() const;
  bool is_hermitian() const;
  /// True when there is exactly one nonzero entry, equal to 1, in each row and column.
  bool is_permutation() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_string() const;

 private:
  void canonicalize();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int scale_ = 0;
  std::vector<Gaussian> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace phasegraph
