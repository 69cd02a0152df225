#include "phasegraph/exact.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace phasegraph {
namespace {

__extension__ typedef __int128 Int128;

std::int64_t narrow(Int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("exact matrix entry overflow");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t shifted(std::int64_t v, int bits) {
  return narrow(static_cast<Int128>(v) * (static_cast<Int128>(1) << bits));
}

}  // namespace

Gaussian operator+(Gaussian a, Gaussian b) {
  return {narrow(static_cast<Int128>(a.re) + b.re), narrow(static_cast<Int128>(a.im) + b.im)};
}

Gaussian operator-(Gaussian a, Gaussian b) {
  return {narrow(static_cast<Int128>(a.re) - b.re), narrow(static_cast<Int128>(a.im) - b.im)};
}

Gaussian operator*(Gaussian a, Gaussian b) {
  const Int128 re = static_cast<Int128>(a.re) * b.re - static_cast<Int128>(a.im) * b.im;
  const Int128 im = static_cast<Int128>(a.re) * b.im + static_cast<Int128>(a.im) * b.re;
  return {narrow(re), narrow(im)};
}

Gaussian operator*(std::int64_t k, Gaussian a) { return Gaussian{k, 0} * a; }

int unit_exponent(Gaussian value) {
  if (value == Gaussian{1, 0}) return 0;
  if (value == Gaussian{0, 1}) return 1;
  if (value == Gaussian{-1, 0}) return 2;
  if (value == Gaussian{0, -1}) return 3;
  return -1;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int scale)
    : rows_(rows), cols_(cols), scale_(scale), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = {1, 0};
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Gaussian>& entries, int scale) {
  ExactMatrix m(entries.size(), 1, scale);
  m.data_ = entries;
  m.canonicalize();
  return m;
}

std::complex<double> ExactMatrix::value(std::size_t r, std::size_t c) const {
  const double factor = std::pow(2.0, -0.5 * scale_);
  const Gaussian& g = at(r, c);
  return {static_cast<double>(g.re) * factor, static_cast<double>(g.im) * factor};
}

void ExactMatrix::canonicalize() {
  bool all_zero = true;
  for (const auto& g : data_) {
    if (!g.is_zero()) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    scale_ = 0;
    return;
  }
  for (;;) {
    for (const auto& g : data_) {
      if ((g.re & 1) != 0 || (g.im & 1) != 0) return;
    }
    for (auto& g : data_) {
      g.re /= 2;
      g.im /= 2;
    }
    scale_ -= 2;
  }
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_, scale_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
  }
  return out;
}

ExactMatrix ExactMatrix::times_i_power(int p) const {
  ExactMatrix out = *this;
  for (auto& g : out.data_) g = g.times_i_power(p);
  return out;
}

ExactMatrix ExactMatrix::rescaled(int extra) const {
  ExactMatrix out = *this;
  out.scale_ += extra;
  out.canonicalize();
  return out;
}

std::pair<Gaussian, int> ExactMatrix::trace() const {
  Gaussian sum;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum = sum + at(i, i);
  return {sum, scale_};
}

bool ExactMatrix::is_zero() const {
  for (const auto& g : data_) {
    if (!g.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_hermitian() const { return rows_ == cols_ && *this == adjoint(); }

bool ExactMatrix::is_permutation() const {
  if (rows_ != cols_ || scale_ != 0) return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Gaussian& g = at(r, c);
      if (g.is_zero()) continue;
      if (g != Gaussian{1, 0}) return false;
      ++row_count;
      ++col_count[c];
    }
    if (row_count != 1) return false;
  }
  for (int count : col_count) {
    if (count != 1) return false;
  }
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix out(a.rows_, b.cols_, a.scale_ + b.scale_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Gaussian& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Gaussian& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) = out.at(i, j) + aik * bkj;
      }
    }
  }
  out.canonicalize();
  return out;
}

namespace {

// Brings a and b to a common scale. Scales of different parity are only
// compatible when one operand is zero.
std::pair<ExactMatrix, ExactMatrix> aligned(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  if (a.is_zero()) return {ExactMatrix(a.rows(), a.cols(), b.scale()), b};
  if (b.is_zero()) return {a, ExactMatrix(b.rows(), b.cols(), a.scale())};
  const int diff = a.scale() - b.scale();
  if (diff % 2 != 0) {
    throw std::domain_error("matrix sum: incompatible sqrt(2) scales");
  }
  ExactMatrix lo = diff < 0 ? a : b;
  const ExactMatrix& hi = diff < 0 ? b : a;
  const int bits = std::abs(diff) / 2;
  ExactMatrix out(lo.rows(), lo.cols(), hi.scale());
  for (std::size_t r = 0; r < lo.rows(); ++r) {
    for (std::size_t c = 0; c < lo.cols(); ++c) {
      out.at(r, c) = {shifted(lo.at(r, c).re, bits), shifted(lo.at(r, c).im, bits)};
    }
  }
  if (diff < 0) return {out, hi};
  return {hi, out};
}

}  // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  auto [x, y] = aligned(a, b);
  for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] = x.data_[i] + y.data_[i];
  x.canonicalize();
  return x;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  auto [x, y] = aligned(a, b);
  for (std::size_t i = 0; i < x.data_.size(); ++i) x.data_[i] = x.data_[i] - y.data_[i];
  x.canonicalize();
  return x;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scale_ == b.scale_ && a.data_ == b.data_;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "2^(-" << scale_ << "/2) *\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Gaussian& g = at(r, c);
      os << (c ? " " : "") << g.re << (g.im < 0 ? "-" : "+") << std::abs(g.im) << "i";
    }
    os << "\n";
  }
  return os.str();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.scale() + b.scale());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Gaussian& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
      }
    }
  }
  return out.rescaled(0);
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

}  // namespace phasegraph
