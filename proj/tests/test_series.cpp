#include <gtest/gtest.h>

#include "modw/series.hpp"

using namespace modw;

namespace {

using T = Scalar<Integers>;
const Integers Z{};

T num(long v) { return T{&Z, bigint(v)}; }

LaurentSeries<T> series(std::map<int, long> c, int low, bool exact = false) {
  LaurentSeries<T> s(num(0), num(1), low, exact);
  for (auto [e, v] : c) s.set(e, num(v));
  return s;
}

}  // namespace

TEST(Series, PolynomialShiftMatchesEvaluation) {
  // A(u) = 2u^3 - u + 5, so A(u - 2) = 2u^3 - 12u^2 + 23u - 9
  auto A = series({{3, 2}, {1, -1}, {0, 5}}, 0, true);
  auto B = shift_u(A, 2);
  EXPECT_TRUE(B.exact());
  std::map<int, long> want{{3, 2}, {2, -12}, {1, 23}, {0, -9}};
  for (int e = -2; e <= 4; ++e) EXPECT_EQ(B.coeff(e).v, bigint(want.count(e) ? want[e] : 0)) << e;
}

TEST(Series, InverseLinearFactor) {
  // (u - 3) * (u - 3)^{-1} = 1 down to the truncation
  auto inv = shift_u(series({{-1, 1}}, -8), 3);
  auto lin = series({{1, 1}, {0, -3}}, 0, true);
  auto prod = series_multiply(lin, inv);
  EXPECT_EQ(prod.low(), -7);
  EXPECT_EQ(prod.coeff(0).v, 1);
  for (int e = -7; e < 0; ++e) EXPECT_EQ(prod.coeff(e).v, 0) << e;
  EXPECT_THROW(prod.coeff(-8), std::out_of_range);
}

TEST(Series, ProductAgainstConvolution) {
  std::map<int, long> a{{0, 1}, {-1, 4}, {-2, -3}, {-3, 7}}, b{{0, 1}, {-1, -2}, {-2, 5}, {-3, 1}};
  auto P = series_multiply(series(a, -3), series(b, -3));
  for (int e = -3; e <= 0; ++e) {
    long want = 0;
    for (auto [x, cx] : a)
      for (auto [y, cy] : b)
        if (x + y == e) want += cx * cy;
    EXPECT_EQ(P.coeff(e).v, want);
  }
  EXPECT_FALSE(P.known(-4));
}

TEST(Series, Prefactor) {
  // u (u-1) times 1 = u^2 - u
  auto one = LaurentSeries<T>::constant(num(0), num(1));
  auto P = polynomial_prefactor(one, {1, 1});
  EXPECT_EQ(P.coeff(2).v, 1);
  EXPECT_EQ(P.coeff(1).v, -1);
  EXPECT_EQ(P.coeff(0).v, 0);
}
