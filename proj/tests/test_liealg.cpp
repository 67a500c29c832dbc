#include <gtest/gtest.h>

#include "modw/liealg.hpp"

using namespace modw;

namespace {

using Dense = std::vector<std::vector<long long>>;

Dense dense(int N, const SparseMat& s) {
  Dense m(N + 1, std::vector<long long>(N + 1, 0));
  for (const auto& e : s) m[e.row][e.col] += e.coef;
  return m;
}

Dense product(const Dense& a, const Dense& b) {
  int N = static_cast<int>(a.size()) - 1;
  Dense c(N + 1, std::vector<long long>(N + 1, 0));
  for (int i = 1; i <= N; ++i)
    for (int k = 1; k <= N; ++k)
      if (a[i][k])
        for (int j = 1; j <= N; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense minus(Dense a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

Dense modp(Dense a, long long p) {
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  return a;
}

void expect_matches_matrices(const LieAlgebra& L, int N, unsigned p) {
  int d = static_cast<int>(L.dim());
  for (int a = 0; a < d; ++a) {
    auto A = dense(N, L.realization[a]);
    for (int b = 0; b < d; ++b) {
      auto B = dense(N, L.realization[b]);
      ASSERT_EQ(minus(product(A, B), product(B, A)), dense(N, L.to_matrix(L.bracket(a, b))))
          << L.labels[a] << " " << L.labels[b];
    }
    Dense P = A;
    for (unsigned k = 1; k < p; ++k) P = modp(product(P, A), p);
    ASSERT_EQ(P, modp(dense(N, L.to_matrix(L.pmap(a))), p)) << L.labels[a] << "^[p]";
  }
}

}  // namespace

TEST(Gl, BracketAndPMap) {
  for (unsigned p : {2u, 3u, 5u}) {
    auto g = build_gl(3, {}, p);
    EXPECT_EQ(g.dim(), 9u);
    expect_matches_matrices(g, 3, p);
  }
}

TEST(Parabolic, Layout) {
  auto D = build_parabolic(Pyramid::from_q({1, 2}), 3);
  EXPECT_EQ(D.dim_p + static_cast<int>(D.m.dim()), 9);
  for (int a = 0; a < 9; ++a) EXPECT_EQ(a < D.dim_p, D.cls[a] != UnitClass::negative);
  // chi is the trace form against f: nonzero exactly on the m-units dual to e
  int nchi = 0;
  for (int a = 0; a < 9; ++a) nchi += D.chi[a] != 0;
  EXPECT_EQ(nchi, static_cast<int>(nilpotent_e(D.pyr).size()));
}

TEST(Centralizer, MatchesMatricesForSmallPyramids) {
  for (int N = 1; N <= 5; ++N)
    for (const auto& P : all_pyramids(N))
      for (unsigned p : {2u, 3u}) {
        auto C = centralizer_algebra(P, p);
        auto e = dense(N, [&] {
          SparseMat s;
          for (auto [i, j] : nilpotent_e(P)) s.push_back({i, j, 1});
          return s;
        }());
        for (std::size_t a = 0; a < C.alg.dim(); ++a) {
          auto A = dense(N, C.alg.realization[a]);
          ASSERT_EQ(product(A, e), product(e, A)) << C.alg.labels[a];
        }
        expect_matches_matrices(C.alg, N, p);
      }
}

TEST(Centralizer, Dimension) {
  // dim g^e = sum_{i,j} min(p_i, p_j)
  auto C = centralizer_algebra(Pyramid::from_q({1, 3, 3, 2, 1}), 3);
  EXPECT_EQ(C.alg.dim(), static_cast<std::size_t>(2 * 5 + 3 * 3 + 5 * 1));
  EXPECT_GE(C.index(1, 1, 0), 0);
  EXPECT_EQ(C.index(1, 1, 2), -1);
  EXPECT_EQ(C.index(3, 1, 0), -1);  // s_{3,1} = 1
  EXPECT_GE(C.index(3, 1, 1), 0);
}

TEST(Current, ThetaOnExample) {
  auto [s, l] = shift_from_pyramid(Pyramid::from_q({1, 3, 3, 2, 1}));
  auto T = truncated_current(s, l, 3);
  auto G = centralizer_algebra(Pyramid::from_q({1, 3, 3, 2, 1}), 3);
  auto th = theta(T, G);
  ASSERT_EQ(th.size(), G.alg.dim());
  for (std::size_t a = 0; a < T.alg.dim(); ++a) {
    auto [i, j, r] = T.basis[a];
    auto [gi, gj, gr] = G.basis[th[a]];
    EXPECT_EQ(i, gi);
    EXPECT_EQ(j, gj);
    EXPECT_EQ(r, gr);
  }
}

TEST(Current, IdealSpan) {
  ShiftMatrix s({{0, 1}, {0, 0}});
  auto C = current_algebra(s, 6, 3);
  auto I = truncation_ideal_basis(C, 3);
  // p = (2, 3): the ideal holds et[i,j;r] with r >= s_{i,j} + p_{min(i,j)}
  for (int a : I) {
    auto [i, j, r] = C.basis[a];
    EXPECT_GE(r, s(i, j) + (std::min(i, j) == 1 ? 2 : 3));
  }
}
