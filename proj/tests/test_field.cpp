#include <gtest/gtest.h>

#include "cma/field.hpp"
#include "test_util.hpp"

using namespace cma;
using cma::testing::random_elem;
using cma::testing::random_nonzero;

namespace {

std::vector<FieldCtx> sample_fields() {
  return {FieldCtx::rationals(), FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::prime(101),
          FieldCtx::extension_auto(2, 3), FieldCtx::extension_auto(11, 6), FieldCtx::extension_auto(5, 2)};
}

}  // namespace

TEST(FieldMake, PrimeTwo) {
  auto f2 = FieldCtx::prime(2);
  EXPECT_EQ(f2.kind(), FieldKind::Prime);
  EXPECT_EQ(f2.order(), 2);
  EXPECT_EQ(f2.name(), "F_2");
}

TEST(FieldMake, AutoExtensionForLargePermutationExample) {
  auto f = FieldCtx::extension_auto(11, 6);
  EXPECT_EQ(f.degree(), 6u);
  EXPECT_EQ(f.modulus().size(), 7u);
  EXPECT_EQ(f.modulus().back(), 1u);
  EXPECT_TRUE(detail::raw_is_irreducible(f.modulus(), 11));
  // deterministic
  EXPECT_EQ(f, FieldCtx::extension_auto(11, 6));
  EXPECT_EQ(f.name(), "F_11^6");
}

TEST(FieldMake, CompositeRejected) {
  try {
    FieldCtx::prime(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CompositeP);
  }
  EXPECT_THROW(FieldCtx::prime(1), Error);
  EXPECT_THROW(FieldCtx::extension_auto(9, 2), Error);
}

TEST(FieldMake, ExtensionValidation) {
  // x^2 + 1 = (x+1)^2 over F_2
  try {
    FieldCtx::extension(2, 2, {1, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
  }
  try {
    FieldCtx::extension(2, 3, {1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
  auto f4 = FieldCtx::extension(2, 2, {1, 1, 1});
  EXPECT_EQ(f4.order(), 4);
}

TEST(FieldMake, StructuralEquality) {
  EXPECT_EQ(FieldCtx::prime(7), FieldCtx::prime(7));
  EXPECT_NE(FieldCtx::prime(7), FieldCtx::prime(11));
  EXPECT_NE(FieldCtx::prime(2), FieldCtx::extension(2, 2, {1, 1, 1}));
  EXPECT_NE(FieldCtx::extension(2, 3, {1, 1, 0, 1}), FieldCtx::extension(2, 3, {1, 0, 1, 1}));
}

TEST(FieldOps, SmallExamples) {
  auto f2 = FieldCtx::prime(2);
  EXPECT_TRUE((f2.one() + f2.one()).is_zero());
  auto q = FieldCtx::rationals();
  EXPECT_EQ(q.parse("2/3") + q.parse("1/6"), q.parse("5/6"));
  EXPECT_EQ((q.parse("2/3") + q.parse("1/6")).to_string(), "5/6");
  EXPECT_EQ(q.parse("4/-6").to_string(), "-2/3");
}

TEST(FieldOps, FermatInExtension) {
  auto f = FieldCtx::extension_auto(11, 6);
  const FieldElem y = f.generator();
  mpz_class e = f.order() - 2;
  EXPECT_TRUE((y * y.pow(e)).is_one());
  EXPECT_TRUE(y.pow(f.order() - 1).is_one());
}

TEST(FieldOps, Errors) {
  auto f5 = FieldCtx::prime(5);
  try {
    f5.zero().inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(f5.one() / f5.zero(), Error);
  try {
    (void)(f5.one() + FieldCtx::prime(7).one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CtxMismatch);
  }
}

TEST(FieldProperties, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  for (const auto& f : sample_fields()) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c)) << f.name();
      ASSERT_EQ((a * b) * c, a * (b * c)) << f.name();
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        ASSERT_TRUE((a * a.inv()).is_one()) << f.name() << " " << a.to_string();
        ASSERT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(FieldProperties, EncodeParseRoundTrip) {
  std::mt19937_64 rng(2);
  for (const auto& f : sample_fields()) {
    for (int i = 0; i < 200; ++i) {
      const auto a = random_elem(f, rng);
      const auto enc = a.encode();
      FieldElem back;
      if (f.kind() == FieldKind::Extension) {
        std::vector<std::uint64_t> c;
        for (const auto& s : enc) c.push_back(std::stoull(s));
        back = f.from_coeffs(c);
      } else {
        ASSERT_EQ(enc.size(), 1u);
        back = f.parse(enc[0]);
      }
      ASSERT_EQ(back, a);
      ASSERT_EQ(back.encode(), enc);
    }
  }
}

TEST(FieldProperties, Frobenius) {
  std::mt19937_64 rng(3);
  for (const auto& f : sample_fields()) {
    if (!f.is_finite()) continue;
    const std::uint64_t p = f.characteristic();
    for (int i = 0; i < 100; ++i) {
      const auto a = random_elem(f, rng), b = random_elem(f, rng);
      ASSERT_EQ((a + b).pow(p), a.pow(p) + b.pow(p)) << f.name();
    }
  }
}

TEST(FieldProperties, MillerRabinAgainstTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    ASSERT_EQ(detail::is_prime_u64(n), prime) << n;
  }
  EXPECT_TRUE(detail::is_prime_u64(18446744073709551557ULL));
  EXPECT_FALSE(detail::is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}
