#include <gtest/gtest.h>

#include <random>

#include "modw/uea.hpp"

using namespace modw;

namespace {

using Mat = std::vector<std::vector<std::uint64_t>>;

// Natural representation of gl_N over F_p; words act as matrix products.
struct Natural {
  int N;
  PrimeField F;
  const LieAlgebra& L;

  Mat unit(int a) const {
    Mat m(N, std::vector<std::uint64_t>(N, 0));
    for (const auto& e : L.realization[a]) m[e.row - 1][e.col - 1] = F.from_int(e.coef);
    return m;
  }
  Mat mul(const Mat& a, const Mat& b) const {
    Mat c(N, std::vector<std::uint64_t>(N, 0));
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) c[i][j] = F.add(c[i][j], F.mul(a[i][k], b[k][j]));
    return c;
  }
  Mat eval(const EnvElement<PrimeField>& u) const {
    Mat out(N, std::vector<std::uint64_t>(N, 0));
    for (const auto& [w, c] : u.terms()) {
      Mat m(N, std::vector<std::uint64_t>(N, 0));
      for (int i = 0; i < N; ++i) m[i][i] = 1;
      for (auto x : w) m = mul(m, unit(x));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out[i][j] = F.add(out[i][j], F.mul(c, m[i][j]));
    }
    return out;
  }
};

EnvElement<PrimeField> random_element(const std::shared_ptr<Envelope<PrimeField>>& U, std::mt19937_64& rng, unsigned p) {
  auto u = U->zero();
  for (int t = 0; t < 3; ++t) {
    auto m = U->scalar(1 + rng() % (p - 1));
    int len = static_cast<int>(rng() % 4);
    for (int k = 0; k < len; ++k) m = m * U->gen(static_cast<int>(rng() % U->dim()));
    u += m;
  }
  return u;
}

}  // namespace

TEST(Envelope, ProductsAgreeWithNaturalRepresentation) {
  for (unsigned p : {3u, 5u}) {
    auto g = std::make_shared<LieAlgebra>(build_gl(3, {}, p));
    auto U = Envelope<PrimeField>::create(g, PrimeField(p));
    Natural rho{3, PrimeField(p), *g};
    std::mt19937_64 rng(p);
    for (int k = 0; k < 40; ++k) {
      auto a = random_element(U, rng, p), b = random_element(U, rng, p);
      EXPECT_EQ(rho.eval(a * b), rho.mul(rho.eval(a), rho.eval(b)));
    }
  }
}

TEST(Envelope, NormalFormAndAssociativity) {
  auto g = std::make_shared<LieAlgebra>(build_gl(3, {}, 5));
  auto U = Envelope<PrimeField>::create(g, PrimeField(5));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    auto a = random_element(U, rng, 5), b = random_element(U, rng, 5), c = random_element(U, rng, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    for (const auto& [w, coef] : (a * b).terms()) EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
  }
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) EXPECT_EQ(commutator(U->gen(x), U->gen(y)), U->linear(g->bracket(x, y)));
}

TEST(Envelope, Gl2Straightening) {
  auto g = std::make_shared<LieAlgebra>(build_gl(2, {}, 0));
  auto U = Envelope<Integers>::create(g, Integers{});
  auto e12 = U->gen(g->index("e[1,2]")), e21 = U->gen(g->index("e[2,1]"));
  // e12 e21 = e21 e12 + e11 - e22 in the order e11 < e12 < e21 < e22
  auto lhs = e21 * e12;
  EXPECT_EQ(dump(lhs), "e[1,2]*e[2,1] - e[1,1] + e[2,2]");
}

TEST(Envelope, PCentreIsCentral) {
  for (unsigned p : {2u, 3u}) {
    auto g = std::make_shared<LieAlgebra>(build_gl(2, {}, p));
    auto U = Envelope<PrimeField>::create(g, PrimeField(p));
    for (int x = 0; x < 4; ++x) {
      auto xi = xi_p(U, SparseInt{{x, 1}});
      for (int y = 0; y < 4; ++y) EXPECT_TRUE(commutator(U->gen(y), xi).is_zero()) << g->labels[x] << " " << g->labels[y];
      EXPECT_TRUE(restricted_reduce(xi).is_zero());
    }
  }
}

TEST(Envelope, DumpParseRoundtrip) {
  auto g = std::make_shared<LieAlgebra>(build_gl(2, {}, 0));
  auto U = Envelope<Integers>::create(g, Integers{});
  auto u = parse_element(U, "3*e[1,1]^2*e[2,2] - e[2,1]*e[1,2] + 4");
  EXPECT_EQ(parse_element(U, dump(u)), u);
  EXPECT_THROW(parse_element(U, "e[3,3]"), std::invalid_argument);
}

TEST(Envelope, ReductionModP) {
  auto gz = std::make_shared<LieAlgebra>(build_gl(2, {}, 0));
  auto gp = std::make_shared<LieAlgebra>(build_gl(2, {}, 3));
  auto Z = Envelope<Integers>::create(gz, Integers{});
  auto P = Envelope<PrimeField>::create(gp, PrimeField(3));
  auto u = parse_element(Z, "7*e[1,2]*e[2,1] - 3*e[1,1]");
  EXPECT_EQ(dump(reduce_mod_p(u, P)), "e[1,2]*e[2,1]");
}
