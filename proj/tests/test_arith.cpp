#include <gtest/gtest.h>

#include <random>

#include "modw/arith.hpp"

using namespace modw;

TEST(PrimeField, InverseAndSymmetric) {
  PrimeField F(13);
  for (std::uint64_t a = 1; a < 13; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
  EXPECT_EQ(F.symmetric(12), -1);
  EXPECT_EQ(F.from_int(-27), 12u);
  EXPECT_EQ(F.from_big(bigint("-1000000000000000000000")), F.from_int(-1000000000000000000LL % 13 * 1000 % 13));
  EXPECT_THROW(PrimeField(12), std::invalid_argument);
}

TEST(ElemSym, MatchesSubsetEnumeration) {
  Integers Z;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<bigint> v;
    int n = 1 + static_cast<int>(rng() % 7);
    for (int k = 0; k < n; ++k) v.push_back(static_cast<long>(rng() % 21) - 10);
    for (int r = 0; r <= n + 1; ++r) {
      bigint want = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        bigint prod = 1;
        for (int k = 0; k < n; ++k)
          if (mask >> k & 1) prod *= v[k];
        want += prod;
      }
      EXPECT_EQ(elem_sym(Z, r, v), want) << "n=" << n << " r=" << r;
    }
  }
}

TEST(Wilson, ProductOverAllResidues) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField F(p);
    Polynomials<PrimeField> T(F);
    auto w = wilson_poly(p);
    ASSERT_EQ(T.degree(w), static_cast<int>(p));
    // t^p - t vanishes on every residue, and so does the product
    for (std::uint64_t x = 0; x < p; ++x) EXPECT_EQ(T.eval(w, x), 0u);
    for (std::uint64_t k = 2; k < p; ++k) EXPECT_EQ(w[k], 0u);
    EXPECT_EQ(w[p], 1u);
    EXPECT_EQ(w[1], p - 1);
  }
}

TEST(Wilson, ShiftedBySymbolicA) {
  // over F_p[x], prod_j (t - x - j) = t^p - t - (x^p - x)
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField F(p);
    Polynomials<PrimeField> X(F, "x");
    Polynomials<Polynomials<PrimeField>> T(X, "t");
    auto w = shifted_wilson_poly(X, p, X.gen());
    auto want = T.sub(T.sub(T.pow(T.gen(), p), T.gen()), T.constant(X.sub(X.pow(X.gen(), p), X.gen())));
    EXPECT_TRUE(T.equal(w, want)) << T.str(w);
  }
}

TEST(Elementary, VanishOnResidues) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField F(p);
    std::vector<std::uint64_t> v;
    for (std::uint64_t j = 0; j < p; ++j) v.push_back(j);
    for (int r = 1; r + 2 <= static_cast<int>(p); ++r) EXPECT_EQ(elem_sym(F, r, v), 0u) << p << " " << r;
    EXPECT_EQ(elem_sym(F, static_cast<int>(p) - 1, v), p - 1);
  }
}

TEST(Binomials, PascalAndMultinomial) {
  std::vector<std::vector<bigint>> pascal(30);
  for (int n = 0; n < 30; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]);
  }
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(multinomial({2, 3, 1}), binomial(6, 2) * binomial(4, 3));
  EXPECT_EQ(multinomial({}), 1);
}

TEST(Polynomials, RingAxiomsOnSamples) {
  PrimeField F(7);
  Polynomials<PrimeField> T(F);
  std::mt19937_64 rng(3);
  auto rnd = [&] {
    Polynomials<PrimeField>::value_type v;
    for (int k = 0; k < 4; ++k) v.push_back(rng() % 7);
    return T.trim(v);
  };
  for (int k = 0; k < 50; ++k) {
    auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_TRUE(T.equal(T.mul(a, T.add(b, c)), T.add(T.mul(a, b), T.mul(a, c))));
    EXPECT_TRUE(T.is_zero(T.sub(a, a)));
    for (std::uint64_t x = 0; x < 7; ++x) EXPECT_EQ(T.eval(T.mul(a, b), x), F.mul(T.eval(a, x), T.eval(b, x)));
  }
  EXPECT_EQ(T.str(T.sub(T.pow(T.gen(), 2), T.one())), "t^2 + -1");
}
