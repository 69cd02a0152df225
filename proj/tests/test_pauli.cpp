#include <gtest/gtest.h>

#include "phasegraph/oracle.hpp"
#include "phasegraph/pauli.hpp"

using namespace phasegraph;

namespace {

ExactMatrix dense(const Field& f, const PauliMonomial& m) { return dense_pauli(f, m.alpha, m.beta).times_i_power(m.phase); }

}  // namespace

TEST(Pauli, CommutationExamples) {
  const FieldPtr f2 = Field::builtin(2);
  const FieldPtr f3 = Field::builtin(3);
  const PauliMonomial m{f2->exp(1), f2->exp(2), 1};
  EXPECT_TRUE(commutes(*f2, m, m));
  EXPECT_TRUE(commutes(*f2, {kOne, kZero, 0}, {kZero, kOne, 0}));
  EXPECT_FALSE(commutes(*f3, {kOne, kZero, 0}, {kZero, kOne, 0}));
}

TEST(Pauli, MultiplyExamples) {
  const FieldPtr f = Field::builtin(2);
  const Element s = f->exp(1);
  const PauliMonomial z{s, kZero, 0};
  const PauliMonomial x{kZero, s, 0};
  EXPECT_EQ(multiply(*f, z, x), (PauliMonomial{s, s, 0}));
  EXPECT_EQ(multiply(*f, x, z), (PauliMonomial{s, s, 2}));
  const PauliMonomial m{s, f->exp(2), 3};
  EXPECT_EQ(multiply(*f, m, PauliMonomial{}), m);
}

TEST(Pauli, SquareIsSignedIdentity) {
  const FieldPtr f = Field::builtin(3);
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      const PauliMonomial m{Element{a}, Element{b}, 1};
      const PauliMonomial sq = multiply(*f, m, m);
      EXPECT_EQ(sq.alpha, kZero);
      EXPECT_EQ(sq.beta, kZero);
      EXPECT_EQ(sq.phase, (2 * f->trace(f->mul(Element{a}, Element{b})) + 2) % 4);
    }
  }
}

TEST(Pauli, TensorFactors) {
  const FieldPtr f2 = Field::builtin(2);
  EXPECT_EQ(tensor_factors(*f2, {kZero, kZero, 0}), (std::vector<QubitPauli>{QubitPauli::I, QubitPauli::I}));
  EXPECT_EQ(tensor_factors(*f2, {kOne, kZero, 0}), (std::vector<QubitPauli>{QubitPauli::Z, QubitPauli::Z}));
  const FieldPtr f4 = Field::builtin(4);
  const Element t1 = f4->theta(0);
  EXPECT_EQ(tensor_factors(*f4, {t1, t1, 0}),
            (std::vector<QubitPauli>{QubitPauli::ZX, QubitPauli::I, QubitPauli::I, QubitPauli::I}));
  EXPECT_EQ(tensor_string(*f4, {t1, f4->theta(1), 0}), "Z⊗X⊗I⊗I");
}

TEST(PauliProperty, CommutationMatchesDenseExhaustively) {
  for (int n = 1; n <= 3; ++n) {
    const FieldPtr f = Field::builtin(n);
    for (std::uint32_t code1 = 0; code1 < f->size() * f->size(); ++code1) {
      const PauliMonomial m1{Element{code1 % f->size()}, Element{code1 / f->size()}, 0};
      for (std::uint32_t code2 = 0; code2 < f->size() * f->size(); ++code2) {
        const PauliMonomial m2{Element{code2 % f->size()}, Element{code2 / f->size()}, 0};
        const bool dense_commute = commutator(dense(*f, m1), dense(*f, m2)).is_zero();
        ASSERT_EQ(commutes(*f, m1, m2), dense_commute);
      }
    }
  }
}

TEST(PauliProperty, ProductMatchesDense) {
  const FieldPtr f = Field::builtin(2);
  for (std::uint32_t c1 = 0; c1 < 16; ++c1) {
    for (std::uint32_t c2 = 0; c2 < 16; ++c2) {
      const PauliMonomial m1{Element{c1 & 3}, Element{c1 >> 2}, static_cast<int>(c1 % 3)};
      const PauliMonomial m2{Element{c2 & 3}, Element{c2 >> 2}, static_cast<int>(c2 % 4)};
      ASSERT_EQ(dense(*f, multiply(*f, m1, m2)), dense(*f, m1) * dense(*f, m2));
    }
  }
}

TEST(PauliProperty, Associative) {
  const FieldPtr f = Field::builtin(3);
  for (std::uint32_t c = 0; c < 512; c += 7) {
    const PauliMonomial a{Element{c & 7}, Element{(c >> 3) & 7}, 0};
    const PauliMonomial b{Element{(c >> 6) & 7}, Element{c & 7}, 1};
    const PauliMonomial d{Element{(c >> 3) & 7}, Element{(c >> 6) & 7}, 2};
    ASSERT_EQ(multiply(*f, multiply(*f, a, b), d), multiply(*f, a, multiply(*f, b, d)));
  }
}
