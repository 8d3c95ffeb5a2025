#include <random>

#include <gtest/gtest.h>

#include "brauerlab/error.hpp"
#include "brauerlab/finite_field.hpp"

namespace brauerlab::gf {
namespace {

// Schoolbook multiply-then-reduce, kept separate from multiply_bits.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, unsigned n, std::uint32_t p) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < n; ++i) {
    if ((b >> i) & 1) prod ^= std::uint64_t{a} << i;
  }
  for (int d = 2 * n - 2; d >= static_cast<int>(n); --d) {
    if ((prod >> d) & 1) prod ^= std::uint64_t{p} << (d - n);
  }
  return static_cast<std::uint32_t>(prod);
}

TEST(FieldSpec, RejectsReducibleModulus) {
  EXPECT_THROW(FieldSpec(8, kModulusX8X4X3X1), std::invalid_argument);
  EXPECT_THROW(FieldSpec(2, 0x5), std::invalid_argument);  // x^2 + 1 = (x + 1)^2
  EXPECT_NO_THROW(FieldSpec(8, kAesModulus));
  EXPECT_NO_THROW(FieldSpec(2, kGf4Modulus));
}

TEST(FieldSpec, QuotientRingAcceptsReducibleModulus) {
  const auto ring = FieldSpec::quotient_ring(8, kModulusX8X4X3X1);
  EXPECT_FALSE(ring.is_field());
  EXPECT_EQ(ring.order(), 256u);
}

TEST(FieldSpec, IrreducibleCountsOfSmallDegree) {
  // Monic irreducible polynomials over Z2: 2, 1, 2, 3, 6, 9, 18, 30 for degrees 1..8.
  const unsigned expected[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (unsigned n = 1; n <= 8; ++n) {
    unsigned count = 0;
    for (std::uint32_t m = 1u << n; m < (2u << n); ++m) count += is_irreducible(n, m);
    EXPECT_EQ(count, expected[n - 1]) << "degree " << n;
  }
}

TEST(FieldElement, RejectsUnreducedMask) {
  EXPECT_THROW(FieldElement(make_field(2, kGf4Modulus), 4), std::invalid_argument);
}

TEST(FieldOps, AdditionExamples) {
  auto f4 = make_field(2, kGf4Modulus);
  FieldElement a(f4, 1), b(f4, 2);
  EXPECT_EQ((a + b).bits(), 3u);
  EXPECT_TRUE((a + a).is_zero());
  auto f8 = aes_field();
  EXPECT_EQ((FieldElement(f8, 0x57) + FieldElement(f8, 0x83)).bits(), 0xD4u);
}

TEST(FieldOps, MultiplicationExamples) {
  auto f4 = make_field(2, kGf4Modulus);
  FieldElement x(f4, 2);
  EXPECT_EQ((x * x).bits(), 3u);
  EXPECT_EQ((x * FieldElement::one(f4)).bits(), 2u);
  auto f8 = aes_field();
  EXPECT_EQ((FieldElement(f8, 0x57) * FieldElement(f8, 0x83)).bits(), 0xC1u);
  EXPECT_EQ(slow_mul(0x57, 0x83, 8, kAesModulus), 0xC1u);
}

TEST(FieldOps, MismatchedSpecsThrow) {
  FieldElement a(make_field(2, kGf4Modulus), 1);
  FieldElement b(aes_field(), 1);
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(FieldOps, ExhaustiveLawsUpToDegreeFour) {
  const std::uint32_t moduli[] = {0x3, 0x7, 0xB, 0x13};
  for (unsigned n = 1; n <= 4; ++n) {
    auto f = make_field(n, moduli[n - 1]);
    const std::uint32_t q = 1u << n;
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        FieldElement ea(f, a), eb(f, b);
        ASSERT_EQ((ea * eb).bits(), slow_mul(a, b, n, moduli[n - 1]));
        ASSERT_EQ(((ea + eb) + eb).bits(), a);
        for (std::uint32_t c = 0; c < q; ++c) {
          FieldElement ec(f, c);
          ASSERT_EQ(ea * (eb + ec), ea * eb + ea * ec);
        }
      }
    }
  }
}

TEST(FieldOps, RandomDistributivityDegreeEight) {
  std::mt19937 rng(7);
  auto f = aes_field();
  for (int i = 0; i < 5000; ++i) {
    FieldElement a(f, rng() & 0xFF), b(f, rng() & 0xFF), c(f, rng() & 0xFF);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b).bits(), slow_mul(a.bits(), b.bits(), 8, kAesModulus));
  }
}

TEST(FieldOps, InverseOfEveryUnit) {
  for (auto [n, p] : {std::pair{2u, kGf4Modulus}, std::pair{8u, kAesModulus}}) {
    auto f = make_field(n, p);
    for (std::uint32_t a = 1; a < f->order(); ++a) {
      FieldElement e(f, a);
      ASSERT_EQ(e * inverse(e), FieldElement::one(f));
    }
    EXPECT_THROW(inverse(FieldElement::zero(f)), DomainError);
  }
}

TEST(FieldOps, NonUnitOfReducibleRingHasNoInverse) {
  auto ring = make_quotient_ring(8, kModulusX8X4X3X1);
  // x + 1 divides x^8 + x^4 + x^3 + 1.
  EXPECT_THROW(inverse(FieldElement(ring, 0x03)), DomainError);
}

TEST(AffineTau, ConstantOnlyForZero) {
  auto f = aes_field();
  EXPECT_EQ(affine_tau(FieldElement::zero(f), kAffineConstant, FieldElement::zero(f)).bits(), 0x63u);
}

TEST(AffineTau, BitRecurrenceForOne) {
  // a = x^0: a_0 enters b_j for j in {0, 1, 2, 3, 4}, mask 0x1F, then xor 0x63.
  auto f = aes_field();
  EXPECT_EQ(affine_tau(FieldElement::one(f), kAffineConstant, FieldElement::zero(f)).bits(), 0x1Fu ^ 0x63u);
}

TEST(AffineTau, IdentityMixIsTransparent) {
  auto f = aes_field();
  for (std::uint32_t a = 0; a < 256; ++a) {
    EXPECT_EQ(affine_tau(FieldElement(f, a), 0, FieldElement::zero(f), AffineMix::identity).bits(), a);
  }
}

TEST(AffineTau, RequiresDegreeEight) {
  auto f4 = make_field(2, kGf4Modulus);
  EXPECT_THROW(affine_tau(FieldElement::one(f4), kAffineConstant, FieldElement::zero(f4)), std::invalid_argument);
}

TEST(FieldElement, HexIsLowercase) {
  EXPECT_EQ(to_hex(FieldElement(aes_field(), 0xAF)), "af");
  EXPECT_EQ(to_hex(FieldElement(make_field(2, kGf4Modulus), 3)), "3");
}

}  // namespace
}  // namespace brauerlab::gf
