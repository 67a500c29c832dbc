#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "combin.hpp"
#include "liealg.hpp"
#include "series.hpp"
#include "uea.hpp"

namespace modw {

struct ChainFactor {
  int i, j;  // boxes
};

// Index chains of the D_i^{(r)} sum: calls emit(factors, sign) for each admissible chain.
// With h_only, factors are restricted to col(i_t) = col(j_t) (all others kill highest weight vectors).
template <class F>
void for_each_chain(const Pyramid& P, int i, int r, bool h_only, F&& emit) {
  std::vector<ChainFactor> chain;
  auto dfs = [&](auto&& self, int budget, int flips) -> void {
    int t = static_cast<int>(chain.size());
    int cur_row = t == 0 ? i : P.row(chain.back().j);
    for (int it : P.row_boxes(cur_row)) {
      if (t > 0) {
        int cj = P.col(chain.back().j);
        bool ok = P.row(chain.back().j) >= i ? cj < P.col(it) : cj >= P.col(it);
        if (!ok) continue;
      }
      for (int jt = 1; jt <= P.N(); ++jt) {
        int cost = P.col(jt) - P.col(it) + 1;
        if (cost < 1 || cost > budget) continue;
        if (h_only && cost != 1) continue;
        chain.push_back({it, jt});
        if (cost == budget) {
          if (P.row(jt) == i) {
            int s = t + 1;
            int sign = ((r - s) + flips) % 2 ? -1 : 1;
            emit(static_cast<const std::vector<ChainFactor>&>(chain), sign);
          }
        } else {
          self(self, budget - cost, flips + (P.row(jt) <= i - 1 ? 1 : 0));
        }
        chain.pop_back();
      }
    }
  };
  dfs(dfs, r, 0);
}

// Everything attached to a pyramid and a prime; U(g), U(p), U(g^e) over the ring R.
template <Ring R>
class WContext {
 public:
  using V = typename R::value_type;

  WContext(Pyramid P, unsigned prime, R ring)
      : pyr_(std::move(P)),
        prime_(prime),
        ring_(std::move(ring)),
        par_(std::make_shared<ParabolicData>(build_parabolic(pyr_, prime))) {
    if (!is_prime(prime)) throw std::invalid_argument("not a prime: " + std::to_string(prime));
    Ug = Envelope<R>::create(std::shared_ptr<const LieAlgebra>(par_, &par_->g), ring_);
    Up = Envelope<R>::create(std::shared_ptr<const LieAlgebra>(par_, &par_->p), ring_);
  }

  const Pyramid& pyr() const { return pyr_; }
  unsigned prime() const { return prime_; }
  const R& ring() const { return ring_; }
  const ParabolicData& par() const { return *par_; }
  int N() const { return pyr_.N(); }
  int n() const { return pyr_.n(); }

  std::shared_ptr<Envelope<R>> Ug, Up;

  const Centralizer& centralizer() {
    if (!ge_) {
      ge_ = std::make_shared<Centralizer>(centralizer_algebra(pyr_, prime_));
      Uge_ = Envelope<R>::create(std::shared_ptr<const LieAlgebra>(ge_, &ge_->alg), ring_);
    }
    return *ge_;
  }
  std::shared_ptr<Envelope<R>> Uge() {
    centralizer();
    return Uge_;
  }

  V eta(int box) const { return ring_.from_int(par_->eta[box]); }
  int e(int i, int j) const { return par_->idx(i, j); }

  // D_i^{(r)}; r = 0 gives 1.
  const EnvElement<R>& D(int i, int r) {
    if (i < 1 || i > n()) throw std::out_of_range("D: row index " + std::to_string(i) + " out of range");
    auto key = std::make_pair(i, r);
    auto it = D_cache_.find(key);
    if (it != D_cache_.end()) return it->second;
    return D_cache_.emplace(key, r == 0 ? Up->one() : build_D(i, r)).first->second;
  }

  const EnvElement<R>& p_centre_D(int i, int r) {
    auto key = std::make_pair(i, r);
    auto it = xi_cache_.find(key);
    if (it != xi_cache_.end()) return it->second;
    return xi_cache_.emplace(key, build_xi_D(i, r)).first->second;
  }

  // (-1)^r (c_{i,i}^{(r)} + eta(c_{i,i}^{(r)})) written in U(p).
  EnvElement<R> loop_symbol(int i, int r) {
    auto out = Up->zero();
    for (int h : pyr_.row_boxes(i)) {
      int k = pyr_.box(i, pyr_.col(h) + r);
      if (!k) continue;
      out += Up->gen(e(h, k));
      if (r == 0) out += Up->scalar(eta(h));
    }
    return r % 2 ? -out : out;
  }

  // Image of c_{i,j}^{(r)} in U(p) (zero when out of range).
  EnvElement<R> c_in_p(int i, int j, int r) {
    auto out = Up->zero();
    if (centralizer().index(i, j, r) < 0) return out;
    for (const auto& m : centralizer().expansion(i, j, r)) out += Up->gen(e(m.row, m.col));
    return out;
  }

 private:
  EnvElement<R> build_D(int i, int r) {
    std::map<std::vector<int>, V> words;
    for_each_chain(pyr_, i, r, false, [&](const std::vector<ChainFactor>& ch, int sign) {
      // expand each e~ = e + eta(e) on diagonal factors
      std::vector<int> word;
      std::function<void(std::size_t, V)> expand = [&](std::size_t t, V c) {
        if (t == ch.size()) {
          auto [it, fresh] = words.try_emplace(word, c);
          if (!fresh) it->second = ring_.add(it->second, c);
          return;
        }
        word.push_back(e(ch[t].i, ch[t].j));
        expand(t + 1, c);
        word.pop_back();
        if (ch[t].i == ch[t].j && par_->eta[ch[t].i] != 0) expand(t + 1, ring_.mul(c, eta(ch[t].i)));
      };
      expand(0, ring_.from_int(sign));
    });
    Terms<R> acc;
    for (const auto& [w, c] : words) {
      if (ring_.is_zero(c)) continue;
      for (const auto& [ww, cc] : Up->normal_form(w, c)) add_term(ring_, acc, ww, cc);
    }
    return Up->from_terms(std::move(acc));
  }

  // Factors x^p - x^[p] are central, so they are multiplied in basis order; the expanded
  // words are then already PBW-ordered.
  EnvElement<R> build_xi_D(int i, int r) {
    if (r < 1) throw std::out_of_range("p_centre_D: r >= 1 required");
    Terms<R> acc;
    for_each_chain(pyr_, i, r, false, [&](const std::vector<ChainFactor>& ch, int sign) {
      std::vector<int> xs;
      for (const auto& f : ch) xs.push_back(e(f.i, f.j));
      std::sort(xs.begin(), xs.end());
      Word w;
      std::function<void(std::size_t, V)> expand = [&](std::size_t t, V c) {
        if (t == xs.size()) {
          add_term(ring_, acc, w, c);
          return;
        }
        w.insert(w.end(), prime_, static_cast<std::uint16_t>(xs[t]));
        expand(t + 1, c);
        w.resize(w.size() - prime_);
        for (auto [y, cy] : par_->p.pmap(xs[t])) {
          if (y != xs[t]) throw std::logic_error("p_centre_D: unexpected [p]-map");
          w.push_back(static_cast<std::uint16_t>(y));
          expand(t + 1, ring_.mul(c, ring_.from_int(-cy)));
          w.pop_back();
        }
      };
      expand(0, ring_.from_int(sign));
    });
    return Up->from_terms(std::move(acc));
  }

  Pyramid pyr_;
  unsigned prime_;
  R ring_;
  std::shared_ptr<ParabolicData> par_;
  std::shared_ptr<Centralizer> ge_;
  std::shared_ptr<Envelope<R>> Uge_;
  std::map<std::pair<int, int>, EnvElement<R>> D_cache_, xi_cache_;
};

// Twisted M-invariance: pr(Ad(1 + t e_{a,b}) u) = u over R[t] for all col(b) < col(a).
template <Ring R>
class TwChecker {
 public:
  using PR = Polynomials<R>;

  explicit TwChecker(WContext<R>& ctx)
      : ctx_(ctx),
        Upt_(Envelope<PR>::create(ctx.Up->algebra_ptr(), PR(ctx.ring()))),
        Q_(ctx.par(), Upt_) {}

  struct Failure {
    int a, b;
    std::string residue;
  };

  std::optional<Failure> check(const EnvElement<R>& u) {
    const auto& P = ctx_.par().pyr;
    const PR& ring = Upt_->ring();
    Terms<PR> lifted;
    for (const auto& [w, c] : u.terms()) add_term(ring, lifted, w, ring.constant(c));
    for (int a = 1; a <= P.N(); ++a)
      for (int b = 1; b <= P.N(); ++b) {
        if (P.col(b) >= P.col(a)) continue;
        auto& memo = memo_for(a, b);
        Terms<PR> out;
        for (const auto& [w, c] : u.terms()) {
          const auto& img = image(memo, a, b, w);
          for (const auto& [ww, cc] : img) add_term(ring, out, ww, ring.mul(ring.constant(c), cc));
        }
        if (!(out == lifted)) {
          auto diff = Upt_->from_terms(out) - Upt_->from_terms(lifted);
          return Failure{a, b, dump(diff)};
        }
      }
    return std::nullopt;
  }

 private:
  using Memo = std::unordered_map<Word, Terms<PR>, WordHash>;

  Memo& memo_for(int a, int b) { return memos_[{a, b}]; }

  // pr(Ad(g) x_{w_0} ... x_{w_k}) = Ad(g)x_{w_0} . pr(Ad(g) x_{w_1} ...), as a U(g)-action on U(p).
  const Terms<PR>& image(Memo& memo, int a, int b, const Word& w) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    const PR& ring = Upt_->ring();
    Terms<PR> out;
    if (w.empty()) {
      add_term(ring, out, Word{}, ring.one());
    } else {
      Word rest(w.begin() + 1, w.end());
      Terms<PR> tail = image(memo, a, b, rest);
      const auto& D = ctx_.par();
      auto [k, l] = D.unit[w[0]];
      auto apply = [&](int x, const typename PR::value_type& c) {
        for (const auto& [ww, cc] : tail) Q_.act_into(x, ww, ring.mul(c, cc), out);
      };
      auto t = ring.gen();
      apply(w[0], ring.one());
      if (b == k) apply(D.idx(a, l), t);
      if (l == a) apply(D.idx(k, b), ring.neg(t));
      if (b == k && l == a) apply(D.idx(a, b), ring.neg(ring.mul(t, t)));
    }
    return memo.emplace(w, std::move(out)).first->second;
  }

  WContext<R>& ctx_;
  std::shared_ptr<Envelope<PR>> Upt_;
  ChiQuotient<PR> Q_;
  std::map<std::pair<int, int>, Memo> memos_;
};

template <Ring R>
bool tw_invariance_check(WContext<R>& ctx, const EnvElement<R>& u) {
  TwChecker<R> tw(ctx);
  return !tw.check(u).has_value();
}

// ---- series ----

template <Ring R>
LaurentSeries<EnvElement<R>> D_series(WContext<R>& ctx, int i, int K) {
  LaurentSeries<EnvElement<R>> s(ctx.Up->zero(), ctx.Up->one(), -K);
  for (int r = 0; r <= K; ++r) s.set(-r, ctx.D(i, r));
  return s;
}

template <Ring R>
LaurentSeries<EnvElement<R>> C_series(WContext<R>& ctx, int K) {
  auto acc = D_series(ctx, 1, K);
  for (int k = 2; k <= ctx.n(); ++k) acc = series_multiply(acc, shift_u(D_series(ctx, k, K), k - 1));
  return acc;
}

template <Ring R>
LaurentSeries<EnvElement<R>> B_series(WContext<R>& ctx, int i, int K) {
  auto acc = D_series(ctx, i, K);
  for (unsigned j = 1; j < ctx.prime(); ++j) acc = series_multiply(acc, shift_u(D_series(ctx, i, K), j));
  return acc;
}

template <Ring R>
EnvElement<R> B_coeff(WContext<R>& ctx, int i, int m) {
  return B_series(ctx, i, m).coeff(-m);
}

// Z_0 .. Z_{N+Kp}: coefficients of u^{N-r} in u^{p_1}(u-1)^{p_2}...C(u).
template <Ring R>
std::vector<EnvElement<R>> Z_coeffs(WContext<R>& ctx, int Kp) {
  int N = ctx.N(), K = N + Kp;
  auto Z = polynomial_prefactor(C_series(ctx, K), ctx.pyr().partition());
  std::vector<EnvElement<R>> out;
  for (int r = 0; r <= N + Kp; ++r) out.push_back(Z.coeff(N - r));
  return out;
}

// ---- determinants ----

// Column determinant sum_w sgn(w) M[w1][1] ... M[wd][d], by Laplace recursion over the set
// of used rows (entries act by left multiplication on the tail product).
template <Ring R>
EnvElement<R> column_determinant(const std::vector<std::vector<EnvElement<R>>>& M, const std::shared_ptr<Envelope<R>>& U) {
  int d = static_cast<int>(M.size());
  if (d == 0) return U->one();
  std::vector<EnvElement<R>> F(1u << d, U->zero());
  unsigned full = (1u << d) - 1;
  F[full] = U->one();
  for (unsigned mask = full; mask-- > 0;) {
    int c = __builtin_popcount(mask);  // next column (0-based)
    auto acc = U->zero();
    for (int r = 0; r < d; ++r) {
      if (mask >> r & 1) continue;
      int below = 0;
      for (int r2 = 0; r2 < r; ++r2)
        if (!(mask >> r2 & 1)) ++below;
      auto term = M[r][c] * F[mask | (1u << r)];
      acc = below % 2 ? acc - term : acc + term;
    }
    F[mask] = std::move(acc);
  }
  return F[0];
}

// Coefficients Z^{(0..N)} of cdet(e_{i,j} + delta_{ij}(u - i + 1)); idx maps (i,j) to a generator.
template <Ring R>
std::vector<EnvElement<R>> capelli(const std::shared_ptr<Envelope<R>>& U, int N, const std::function<int(int, int)>& idx) {
  const auto& ring = U->ring();
  // F[mask] = polynomial in u, coefficient list by power
  std::vector<std::vector<Terms<R>>> F(1u << N);
  unsigned full = (1u << N) - 1;
  F[full] = {U->one().terms()};
  for (unsigned mask = full; mask-- > 0;) {
    int c = __builtin_popcount(mask) + 1;
    std::vector<Terms<R>> acc(N + 1);
    for (int r = 1; r <= N; ++r) {
      if (mask >> (r - 1) & 1) continue;
      int below = 0;
      for (int r2 = 1; r2 < r; ++r2)
        if (!(mask >> (r2 - 1) & 1)) ++below;
      auto sgn = ring.from_int(below % 2 ? -1 : 1);
      const auto& tail = F[mask | (1u << (r - 1))];
      int x = idx(r, c);
      for (std::size_t k = 0; k < tail.size(); ++k)
        for (const auto& [w, cc] : tail[k]) {
          U->lmul_into(x, w, ring.mul(sgn, cc), acc[k]);
          if (r == c) {
            add_term(ring, acc[k + 1], w, ring.mul(sgn, cc));
            add_term(ring, acc[k], w, ring.mul(sgn, ring.mul(ring.from_int(1 - r), cc)));
          }
        }
    }
    F[mask] = std::move(acc);
  }
  std::vector<EnvElement<R>> out;
  for (int r = 0; r <= N; ++r) out.push_back(U->from_terms(F[0][N - r]));
  return out;
}

template <Ring R>
std::vector<EnvElement<R>> capelli(WContext<R>& ctx) {
  const auto& D = ctx.par();
  return capelli(ctx.Ug, ctx.N(), [&](int i, int j) { return D.idx(i, j); });
}

// pr(Z^{(r)}) = Z_r for r = 1..N.
template <Ring R>
bool hc_match(WContext<R>& ctx, std::string* detail = nullptr) {
  auto caps = capelli(ctx);
  auto Z = Z_coeffs(ctx, 0);
  for (int r = 1; r <= ctx.N(); ++r) {
    auto lhs = pr_projection(ctx.par(), caps[r], ctx.Up);
    if (!(lhs == Z[r])) {
      if (detail) *detail = "r=" + std::to_string(r) + ": pr(Z^(r)) - Z_r = " + dump(lhs - Z[r]);
      return false;
    }
  }
  return true;
}

// (d_1..d_N) = (1 x p_n, 2 x p_{n-1}, ..., n x p_1).
inline std::vector<int> invariant_degrees(const std::vector<int>& p) {
  std::vector<int> d;
  int n = static_cast<int>(p.size());
  for (int k = 1; k <= n; ++k) d.insert(d.end(), p[n - k], k);
  return d;
}

template <Ring R>
struct ZCentral {
  EnvElement<R> z;
  int out_of_range = 0;  // c~ entries outside the basis range that were met
};

template <Ring R>
ZCentral<R> z_central(WContext<R>& ctx, int s) {
  const auto& P = ctx.pyr();
  if (!P.left_justified())
    throw std::invalid_argument("z_central: pyramid is not left-justified; re-justify (same partition) first");
  const auto& C = ctx.centralizer();
  auto U = ctx.Uge();
  const auto& ring = ctx.ring();
  auto p = P.partition();
  int n = P.n(), N = P.N();
  if (s < 1 || s > N) throw std::out_of_range("z_central: s out of range");
  int ds = invariant_degrees(p)[s - 1];
  ZCentral<R> res{U->zero(), 0};
  auto ctilde = [&](int i, int j, int r) {
    int k = C.index(i, j, r);
    auto x = k < 0 ? U->zero() : U->gen(k);
    if (k < 0) ++res.out_of_range;
    if (r == 0 && i == j) x = x - U->scalar(ring.from_int(static_cast<long long>(i - 1) * p[i - 1]));
    return x;
  };
  std::vector<int> m(n, 0);
  auto rec = [&](auto&& self, int i, int left, int len) -> void {
    if (i == n) {
      if (left != 0 || len != ds) return;
      std::vector<int> rows;
      for (int k = 0; k < n; ++k)
        if (m[k]) rows.push_back(k + 1);
      std::vector<std::vector<EnvElement<R>>> M(rows.size());
      for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t y = 0; y < rows.size(); ++y) M[x].push_back(ctilde(rows[x], rows[y], m[rows[y] - 1] - 1));
      res.z += column_determinant(M, U);
      return;
    }
    for (int v = 0; v <= std::min(p[i], left); ++v) {
      m[i] = v;
      self(self, i + 1, left - v, len + (v ? 1 : 0));
    }
    m[i] = 0;
  };
  rec(rec, 0, s, 0);
  return res;
}

// Image of U(g^e) in U(gl_N) (U(g) of the context) via the matrix-unit expansions.
template <Ring R>
EnvElement<R> embed_centralizer(WContext<R>& ctx, const EnvElement<R>& u) {
  const auto& C = ctx.centralizer();
  std::vector<EnvElement<R>> images;
  for (const auto& b : C.basis) {
    auto x = ctx.Ug->zero();
    for (const auto& m : C.expansion(b.i, b.j, b.r)) x += ctx.Ug->gen(ctx.e(m.row, m.col));
    images.push_back(x);
  }
  return substitute(u, images, [](const auto& c) { return c; });
}

// ---- hat B ----

struct DSequenceSet {
  int i, r;
  std::vector<std::vector<int>> seqs;  // (d_0, ..., d_s)
};

inline int s_of_r(int r, unsigned p) { return r + (r - 1) / static_cast<int>(p - 1); }

inline DSequenceSet d_sequences(int pi, int r, unsigned p, int i = 0) {
  if (r < 1 || r > pi) throw std::out_of_range("d_sequences: need 1 <= r <= p_i");
  int s = s_of_r(r, p);
  int target = r * static_cast<int>(p);
  DSequenceSet out{i, r, {}};
  std::vector<int> d(s + 1, 0);
  auto rec = [&](auto&& self, int j, int left, int used) -> void {
    if (j > s) {
      if (left == 0) {
        d[0] = pi - used;
        out.seqs.push_back(d);
      }
      return;
    }
    int w = j * static_cast<int>(p) - j + 1;
    for (int k = 0; k * w <= left && used + k <= pi; ++k) {
      d[j] = k;
      self(self, j + 1, left - k * w, used + k);
    }
    d[j] = 0;
  };
  rec(rec, 1, target, 0);
  return out;
}

// c_{s',r} for 1 <= s', r <= p_i, as residues mod p (row s', column r).
inline std::vector<std::vector<std::uint64_t>> hat_B_matrix(int pi, unsigned p) {
  PrimeField F(p);
  std::vector<std::vector<std::uint64_t>> C(pi + 1, std::vector<std::uint64_t>(pi + 1, 0));
  for (int r = 1; r <= pi; ++r)
    for (const auto& d : d_sequences(pi, r, p).seqs) {
      std::vector<int> tail(d.begin() + 1, d.end());
      int sp = 0;
      for (int x : tail) sp += x;
      C[sp][r] = F.add(C[sp][r], F.from_big(multinomial(tail)));
    }
  return C;
}

// Inverse of an upper unitriangular matrix over F_p (1-based square blocks).
inline std::vector<std::vector<std::uint64_t>> unitriangular_inverse(const std::vector<std::vector<std::uint64_t>>& C,
                                                                     unsigned p) {
  PrimeField F(p);
  int n = static_cast<int>(C.size()) - 1;
  std::vector<std::vector<std::uint64_t>> X(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int r = 1; r <= n; ++r)
    if (C[r][r] != 1) throw std::logic_error("hat_B_matrix: not unitriangular");
  // C X = I, each column solved from the diagonal upwards.
  for (int r = 1; r <= n; ++r) {
    X[r][r] = 1;
    for (int s = r - 1; s >= 1; --s) {
      std::uint64_t acc = 0;
      for (int k = s + 1; k <= r; ++k) acc = F.add(acc, F.mul(C[s][k], X[k][r]));
      X[s][r] = F.neg(acc);
    }
  }
  return X;
}

// Torus weight of e_{a,b}: eps_row(a) - eps_row(b).  nullopt for mixed weights.
template <Ring R>
std::optional<std::vector<int>> tn_weight(const ParabolicData& D, const EnvElement<R>& u) {
  std::optional<std::vector<int>> common;
  for (const auto& [w, c] : u.terms()) {
    std::vector<int> wt(D.pyr.n(), 0);
    for (auto x : w) {
      auto [a, b] = D.unit[x];
      ++wt[D.pyr.row(a) - 1];
      --wt[D.pyr.row(b) - 1];
    }
    if (!common)
      common = wt;
    else if (*common != wt)
      return std::nullopt;
  }
  if (!common) common = std::vector<int>(D.pyr.n(), 0);
  return common;
}

}  // namespace modw
