#include <gtest/gtest.h>

#include <algorithm>

#include "modw/walg.hpp"

using namespace modw;

namespace {

using Ctx = WContext<PrimeField>;

// D_i^{(r)} by brute force over all factor sequences.
EnvElement<PrimeField> brute_D(Ctx& ctx, int i, int r) {
  const auto& P = ctx.pyr();
  int N = P.N();
  auto out = ctx.Up->zero();
  for (int s = 1; s <= r; ++s) {
    std::vector<int> pick(2 * s, 1);
    while (true) {
      bool ok = P.row(pick[0]) == i && P.row(pick[2 * s - 1]) == i;
      int total = s, below = 0;
      for (int t = 0; t < s && ok; ++t) {
        int a = pick[2 * t], b = pick[2 * t + 1];
        if (P.col(a) > P.col(b)) ok = false;
        total += P.col(b) - P.col(a);
        if (t + 1 < s) {
          int c = pick[2 * t + 2];
          if (P.row(b) != P.row(c)) ok = false;
          if (P.row(b) >= i ? P.col(b) >= P.col(c) : P.col(b) < P.col(c)) ok = false;
          if (P.row(b) <= i - 1) ++below;
        }
      }
      if (ok && total == r) {
        auto term = ctx.Up->one();
        for (int t = 0; t < s; ++t) {
          int a = pick[2 * t], b = pick[2 * t + 1];
          auto f = ctx.Up->gen(ctx.e(a, b));
          if (a == b) f += ctx.Up->scalar(ctx.eta(a));
          term = term * f;
        }
        int sign = ((r - s) + below) % 2 ? -1 : 1;
        out += sign > 0 ? term : -term;
      }
      int k = 0;
      while (k < 2 * s && pick[k] == N) pick[k++] = 1;
      if (k == 2 * s) break;
      ++pick[k];
    }
  }
  return out;
}

}  // namespace

TEST(DGenerators, HandValuesOnOneRow) {
  Ctx ctx(Pyramid::from_q({1, 1}), 3, PrimeField(3));
  EXPECT_EQ(dump(ctx.D(1, 1)), "e[1,1] + e[2,2] - 1");
  EXPECT_EQ(dump(ctx.D(1, 2)), "e[1,1]*e[2,2] - e[2,2] - e[1,2]");
  EXPECT_TRUE(ctx.D(1, 3).is_zero());
}

TEST(DGenerators, AgreeWithBruteForce) {
  for (auto q : std::vector<std::vector<int>>{{1, 2}, {2, 1}, {2, 2}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}}) {
    Ctx ctx(Pyramid::from_q(q), 3, PrimeField(3));
    for (int i = 1; i <= ctx.n(); ++i)
      for (int r = 1; r <= ctx.pyr().p(i) + 1; ++r)
        EXPECT_EQ(ctx.D(i, r), brute_D(ctx, i, r)) << "q=" << join(q) << " i=" << i << " r=" << r;
  }
}

TEST(DGenerators, TwistedInvariance) {
  for (auto q : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 2, 2}, {1, 1, 1}}) {
    Ctx ctx(Pyramid::from_q(q), 3, PrimeField(3));
    TwChecker<PrimeField> tw(ctx);
    for (int i = 1; i <= ctx.n(); ++i)
      for (int r = 1; r <= ctx.pyr().p(i); ++r) EXPECT_FALSE(tw.check(ctx.D(i, r)).has_value()) << join(q);
  }
  Ctx ctx(Pyramid::from_q({1, 1}), 3, PrimeField(3));
  TwChecker<PrimeField> tw(ctx);
  EXPECT_TRUE(tw.check(ctx.Up->gen(ctx.e(1, 1))).has_value());
}

TEST(DGenerators, PCentreAgainstChainProducts) {
  // sum over chains of prod_t xi_p(x_t), multiplied in chain order
  for (unsigned p : {2u, 3u})
    for (auto q : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}}) {
      Ctx ctx(Pyramid::from_q(q), p, PrimeField(p));
      for (int i = 1; i <= ctx.n(); ++i)
        for (int r = 1; r <= ctx.pyr().p(i); ++r) {
          auto want = ctx.Up->zero();
          for_each_chain(ctx.pyr(), i, r, false, [&](const std::vector<ChainFactor>& ch, int sign) {
            auto term = ctx.Up->one();
            for (const auto& f : ch) term = term * xi_p(ctx.Up, SparseInt{{ctx.e(f.i, f.j), 1}});
            want += sign > 0 ? term : -term;
          });
          EXPECT_EQ(ctx.p_centre_D(i, r), want) << join(q) << " p=" << p;
        }
    }
}

TEST(Capelli, TwoByTwo) {
  Ctx ctx(Pyramid::from_q({1, 1}), 5, PrimeField(5));
  auto Z = capelli(ctx);
  EXPECT_EQ(Z[0], ctx.Ug->one());
  EXPECT_EQ(Z[1], parse_element(ctx.Ug, "e[1,1] + e[2,2] + 4"));
  EXPECT_EQ(Z[2], parse_element(ctx.Ug, "e[1,1]*e[2,2] + 4*e[1,2]*e[2,1] + 4*e[2,2]"));
}

TEST(Center, HarishChandraAndPolynomiality) {
  for (unsigned p : {2u, 3u})
    for (auto q : std::vector<std::vector<int>>{{1, 1}, {2, 2}}) {
      Ctx ctx(Pyramid::from_q(q), p, PrimeField(p));
      std::string detail;
      EXPECT_TRUE(hc_match(ctx, &detail)) << detail;
      auto Z = Z_coeffs(ctx, 3);
      for (int r = ctx.N() + 1; r <= ctx.N() + 3; ++r) EXPECT_TRUE(Z[r].is_zero());
    }
}

TEST(Center, ZsIsCapelliForRegularE) {
  // e = 0: g^e = gl_3 and z_s is the Capelli coefficient
  Ctx ctx(Pyramid::from_q({3}), 3, PrimeField(3));
  auto caps = capelli(ctx);
  for (int s = 1; s <= 3; ++s) {
    auto z = z_central(ctx, s);
    EXPECT_EQ(z.out_of_range, 0);
    EXPECT_EQ(embed_centralizer(ctx, z.z), caps[s]);
  }
  Ctx bad(Pyramid::from_q({1, 2}), 3, PrimeField(3));
  EXPECT_THROW(z_central(bad, 1), std::invalid_argument);
}

TEST(DSequences, TwoSequenceCase) {
  auto set = d_sequences(2, 2, 2);
  std::sort(set.seqs.begin(), set.seqs.end());
  EXPECT_EQ(set.seqs, (std::vector<std::vector<int>>{{0, 2, 0, 0}, {1, 0, 0, 1}}));
  auto C = hat_B_matrix(2, 2);
  EXPECT_EQ(C[1][1], 1u);
  EXPECT_EQ(C[1][2], 1u);
  EXPECT_EQ(C[2][2], 1u);
  auto X = unitriangular_inverse(C, 2);
  EXPECT_EQ(X[1][2], 1u);
}

TEST(DSequences, ShortcutWhenPrimeExceedsR) {
  for (unsigned p : {3u, 5u, 7u})
    for (int pi = 1; pi <= 5; ++pi)
      for (int r = 1; r <= pi && r < static_cast<int>(p); ++r) {
        auto set = d_sequences(pi, r, p);
        ASSERT_EQ(set.seqs.size(), 1u);
        EXPECT_EQ(set.seqs[0][1], r);
      }
}

TEST(Weights, InvariantDegrees) {
  EXPECT_EQ(invariant_degrees({1, 2}), (std::vector<int>{1, 1, 2}));
}
