#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phasegraph {

/// An element of GF(2^n): bit i is the coefficient of x^i in the polynomial
/// basis. Addition is XOR and needs no field; everything else goes through
/// a Field.
struct Element {
  std::uint32_t bits = 0;

  constexpr auto operator<=>(const Element&) const = default;
  constexpr bool is_zero() const { return bits == 0; }

  constexpr Element& operator+=(Element other) {
    bits ^= other.bits;
    return *this;
  }
  friend constexpr Element operator+(Element a, Element b) { return {a.bits ^ b.bits}; }
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(2^n) for 1 <= n <= 16, with log/antilog tables, the trace form and a
/// self-dual basis {theta_1..theta_n}. Qubit i corresponds to theta_i.
///
/// Immutable after construction; share through FieldPtr.
class Field {
 public:
  static constexpr int kMaxDegree = 16;
  static constexpr int kMaxSearchDegree = 8;

  /// Builds and verifies a field. `poly` has bit k set for the x^k term.
  /// When `basis_powers` is omitted the built-in basis is used if `poly`
  /// matches the built-in polynomial for n, otherwise a self-dual basis is
  /// searched for (n <= 8).
  static FieldPtr build(int n, std::uint32_t poly,
                        std::optional<std::vector<int>> basis_powers = std::nullopt);

  /// Built-in specs for n = 1..8.
  static FieldPtr builtin(int n);
  static std::uint32_t builtin_polynomial(int n);
  static std::optional<std::vector<int>> builtin_basis_powers(int n);

  int degree() const { return n_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t order() const { return size_ - 1; }
  std::uint32_t polynomial() const { return poly_; }
  Element primitive() const { return exp(1); }

  std::span<const Element> basis() const { return basis_; }
  Element theta(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  /// sigma-power index of each basis element.
  std::vector<int> basis_powers() const;

  Element mul(Element a, Element b) const;
  Element square(Element a) const { return mul(a, a); }
  Element inv(Element a) const;
  Element pow(Element a, std::int64_t k) const;
  /// a^(2^k), k taken mod n.
  Element frobenius(Element a, int k) const;
  /// sigma^k with k reduced mod 2^n - 1.
  Element exp(std::int64_t k) const;
  /// k with a = sigma^k, 0 <= k < 2^n - 1. Throws on zero.
  std::uint32_t log(Element a) const;

  int trace(Element a) const;
  /// Additive character chi(a) = (-1)^tr(a).
  int character(Element a) const { return trace(a) ? -1 : 1; }

  /// Self-dual coordinates packed with qubit i (0-based) at bit n-1-i, the
  /// computational-basis index convention used by every dense matrix.
  std::uint32_t coord_mask(Element a) const;
  std::vector<int> self_dual_coords(Element a) const;
  int coord(Element a, int qubit) const;
  Element from_coord_mask(std::uint32_t mask) const;
  std::uint32_t qubit_bit(int qubit) const { return 1u << (n_ - 1 - qubit); }

  /// Throws FieldError unless `a` is a valid element of this field.
  void check(Element a) const;
  bool same_as(const Field& other) const;

  /// "0", "1", or "s^k".
  std::string to_string(Element a) const;
  /// Accepts "0", "1", "s", "s^k", "0x.." and '+'-separated sums of those.
  Element parse(std::string_view text) const;

 private:
  Field() = default;

  int n_ = 0;
  std::uint32_t size_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<std::uint32_t> antilog_;  // 2*(size-1) entries
  std::vector<std::int32_t> log_;
  std::vector<std::uint8_t> trace_;
  std::vector<Element> basis_;
  std::vector<std::uint32_t> coord_of_monomial_;  // coord_mask(x^b)
};

bool is_irreducible(std::uint32_t poly, int degree);

/// Backtracking search for a self-dual basis using only the field's
/// arithmetic (its stored basis is ignored). Returns sigma-power indices,
/// lexicographically smallest first.
std::optional<std::vector<int>> find_self_dual_basis(const Field& field);

}  // namespace phasegraph
