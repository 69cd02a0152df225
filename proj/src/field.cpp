#include "phasegraph/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace phasegraph {
namespace {

int poly_degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct BuiltinSpec {
  std::uint32_t poly;
  std::vector<int> basis;
};

const BuiltinSpec& builtin_spec(int n) {
  // n = 5 uses the self-dual normal basis; {3,7,11,15,19} is not self-dual.
  static const std::vector<BuiltinSpec> specs = {
      {0b11, {}},
      {0b111, {1, 2}},
      {0b1011, {3, 5, 6}},
      {0b10011, {3, 7, 12, 13}},
      {0b100101, {5, 10, 20, 9, 18}},
      {0b1000011, {}},
      {0b10000011, {}},
      {0b100011101, {}},
  };
  if (n < 1 || n > static_cast<int>(specs.size())) {
    throw FieldError("no built-in field spec for n = " + std::to_string(n));
  }
  return specs[static_cast<std::size_t>(n - 1)];
}

bool search_basis(const Field& f, const std::vector<Element>& candidates, std::size_t start,
                  std::vector<Element>& chosen) {
  if (static_cast<int>(chosen.size()) == f.degree()) return true;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const Element c = candidates[i];
    bool orthogonal = true;
    for (Element t : chosen) {
      if (f.trace(f.mul(c, t)) != 0) {
        orthogonal = false;
        break;
      }
    }
    if (!orthogonal) continue;
    chosen.push_back(c);
    if (search_basis(f, candidates, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool is_irreducible(std::uint32_t poly, int degree) {
  if (degree < 1 || poly_degree(poly) != degree) return false;
  // Trial division by every polynomial of degree 1..degree/2.
  for (int d = 1; d <= degree / 2; ++d) {
    for (std::uint64_t low = 0; low < (1ull << d); ++low) {
      const std::uint64_t divisor = (1ull << d) | low;
      if (poly_mod(poly, divisor) == 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_self_dual_basis(const Field& field) {
  std::vector<Element> candidates;
  for (std::uint32_t k = 0; k < field.order(); ++k) {
    const Element e = field.exp(k);
    if (field.trace(field.mul(e, e)) == 1) candidates.push_back(e);
  }
  std::vector<Element> chosen;
  if (!search_basis(field, candidates, 0, chosen)) return std::nullopt;
  std::vector<int> powers;
  for (Element e : chosen) powers.push_back(static_cast<int>(field.log(e)));
  return powers;
}

FieldPtr Field::build(int n, std::uint32_t poly, std::optional<std::vector<int>> basis_powers) {
  if (n < 1 || n > kMaxDegree) {
    throw FieldError("field degree must be in 1..16, got " + std::to_string(n));
  }
  if (poly_degree(poly) != n) {
    throw FieldError("polynomial degree does not match n = " + std::to_string(n));
  }
  if (!is_irreducible(poly, n)) throw FieldError("reducible polynomial");

  auto field = std::shared_ptr<Field>(new Field());
  Field& f = *field;
  f.n_ = n;
  f.size_ = 1u << n;
  f.poly_ = poly;
  const std::uint32_t order = f.size_ - 1;
  f.antilog_.assign(2 * static_cast<std::size_t>(order), 0);
  f.log_.assign(f.size_, -1);

  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    if (f.log_[x] != -1) throw FieldError("non-primitive element: x has order < 2^n - 1");
    f.antilog_[k] = x;
    f.antilog_[k + order] = x;
    f.log_[x] = static_cast<std::int32_t>(k);
    x <<= 1;
    if (x & f.size_) x ^= poly;
  }
  if (x != 1) throw FieldError("non-primitive element: x^(2^n - 1) != 1");

  f.trace_.assign(f.size_, 0);
  for (std::uint32_t a = 0; a < f.size_; ++a) {
    Element term{a};
    Element sum{a};
    for (int i = 1; i < n; ++i) {
      term = f.mul(term, term);
      sum += term;
    }
    if (sum.bits > 1) throw std::logic_error("trace left GF(2)");
    f.trace_[a] = static_cast<std::uint8_t>(sum.bits);
  }

  if (!basis_powers) {
    if (n <= 8 && builtin_spec(n).poly == poly && !builtin_spec(n).basis.empty()) {
      basis_powers = builtin_spec(n).basis;
    } else if (n <= kMaxSearchDegree) {
      basis_powers = find_self_dual_basis(f);
      if (!basis_powers) throw FieldError("no self-dual basis found");
    } else {
      throw FieldError("self-dual basis must be supplied for n > 8");
    }
  }
  if (static_cast<int>(basis_powers->size()) != n) {
    throw FieldError("self-dual basis must have n elements");
  }
  for (int p : *basis_powers) f.basis_.push_back(f.exp(p));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.trace(f.mul(f.basis_[i], f.basis_[j])) != (i == j ? 1 : 0)) {
        throw FieldError("basis is not self-dual: tr(theta_" + std::to_string(i + 1) + " theta_" +
                         std::to_string(j + 1) + ") != delta");
      }
    }
  }

  f.coord_of_monomial_.assign(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < n; ++b) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (f.trace(f.mul(Element{1u << b}, f.basis_[i]))) mask |= f.qubit_bit(i);
    }
    f.coord_of_monomial_[b] = mask;
  }
  for (std::uint32_t a = 0; a < f.size_; ++a) {
    if (f.from_coord_mask(f.coord_mask(Element{a})) != Element{a}) {
      throw std::logic_error("self-dual expansion does not round-trip");
    }
  }
  return field;
}

FieldPtr Field::builtin(int n) {
  const BuiltinSpec& spec = builtin_spec(n);
  if (spec.basis.empty()) return build(n, spec.poly);
  return build(n, spec.poly, spec.basis);
}

std::uint32_t Field::builtin_polynomial(int n) { return builtin_spec(n).poly; }

std::optional<std::vector<int>> Field::builtin_basis_powers(int n) {
  const BuiltinSpec& spec = builtin_spec(n);
  if (spec.basis.empty()) return std::nullopt;
  return spec.basis;
}

std::vector<int> Field::basis_powers() const {
  std::vector<int> out;
  for (Element e : basis_) out.push_back(static_cast<int>(log(e)));
  return out;
}

void Field::check(Element a) const {
  if (a.bits >= size_) {
    throw FieldError("element 0x" + std::to_string(a.bits) + " is outside GF(2^" +
                     std::to_string(n_) + ")");
  }
}

bool Field::same_as(const Field& other) const {
  return n_ == other.n_ && poly_ == other.poly_ && basis_ == other.basis_;
}

Element Field::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (a.is_zero() || b.is_zero()) return kZero;
  return Element{antilog_[static_cast<std::size_t>(log_[a.bits] + log_[b.bits])]};
}

Element Field::inv(Element a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("inversion of zero");
  const std::uint32_t order = size_ - 1;
  return Element{antilog_[(order - static_cast<std::uint32_t>(log_[a.bits])) % order]};
}

Element Field::pow(Element a, std::int64_t k) const {
  check(a);
  if (a.is_zero()) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return k == 0 ? kOne : kZero;
  }
  return exp(static_cast<std::int64_t>(log_[a.bits]) * (k % static_cast<std::int64_t>(order())));
}

Element Field::frobenius(Element a, int k) const {
  check(a);
  if (a.is_zero()) return kZero;
  k = ((k % n_) + n_) % n_;
  return exp(static_cast<std::int64_t>(log_[a.bits]) << k);
}

Element Field::exp(std::int64_t k) const {
  const auto order = static_cast<std::int64_t>(size_ - 1);
  k %= order;
  if (k < 0) k += order;
  return Element{antilog_[static_cast<std::size_t>(k)]};
}

std::uint32_t Field::log(Element a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("log of zero");
  return static_cast<std::uint32_t>(log_[a.bits]);
}

int Field::trace(Element a) const {
  check(a);
  return trace_[a.bits];
}

std::uint32_t Field::coord_mask(Element a) const {
  check(a);
  std::uint32_t mask = 0;
  for (int b = 0; b < n_; ++b) {
    if (a.bits >> b & 1u) mask ^= coord_of_monomial_[b];
  }
  return mask;
}

std::vector<int> Field::self_dual_coords(Element a) const {
  const std::uint32_t mask = coord_mask(a);
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[i] = (mask & qubit_bit(i)) ? 1 : 0;
  return out;
}

int Field::coord(Element a, int qubit) const { return trace(mul(a, theta(qubit))); }

Element Field::from_coord_mask(std::uint32_t mask) const {
  Element out;
  for (int i = 0; i < n_; ++i) {
    if (mask & qubit_bit(i)) out += basis_[i];
  }
  return out;
}

std::string Field::to_string(Element a) const {
  check(a);
  if (a.is_zero()) return "0";
  if (a == kOne) return "1";
  return "s^" + std::to_string(log(a));
}

Element Field::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw FieldError("empty field element");
  Element sum;
  while (!text.empty()) {
    const auto plus = text.find('+');
    const std::string_view term = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : trim(text.substr(plus + 1));
    if (term.empty() || (plus != std::string_view::npos && text.empty())) {
      throw FieldError("malformed field element expression");
    }

    auto parse_int = [](std::string_view digits, int base) {
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw FieldError("malformed number '" + std::string(digits) + "'");
      }
      return value;
    };

    Element value;
    if (term == "0") {
      value = kZero;
    } else if (term == "1") {
      value = kOne;
    } else if (term == "s") {
      value = exp(1);
    } else if (term.starts_with("s^")) {
      value = exp(parse_int(term.substr(2), 10));
    } else if (term.starts_with("0x") || term.starts_with("0X")) {
      const std::int64_t bits = parse_int(term.substr(2), 16);
      if (bits < 0 || bits >= static_cast<std::int64_t>(size_)) {
        throw FieldError("hex element out of range: " + std::string(term));
      }
      value = Element{static_cast<std::uint32_t>(bits)};
    } else {
      throw FieldError("unrecognized field element '" + std::string(term) + "'");
    }
    sum += value;
  }
  return sum;
}

}  // namespace phasegraph
