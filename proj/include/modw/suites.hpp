#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arith.hpp"
#include "combin.hpp"
#include "liealg.hpp"
#include "series.hpp"
#include "uea.hpp"
#include "verma.hpp"
#include "walg.hpp"

namespace modw {

using json = nlohmann::ordered_json;
using Rng = std::mt19937_64;

// Uniform-ish draw in [0, m): plain modulo of the 64-bit output (documented, reproducible).
inline std::uint64_t draw(Rng& rng, std::uint64_t m) { return rng() % m; }

struct Record {
  std::string suite, id, status, anchor, details;
  double seconds = 0;
};

class Report {
 public:
  void add(Record r) { recs_.push_back(std::move(r)); }
  const std::vector<Record>& records() const { return recs_; }
  int count(const std::string& status) const {
    int k = 0;
    for (const auto& r : recs_) k += r.status == status;
    return k;
  }
  bool ok() const { return count("fail") == 0; }

  json to_json(bool timing) const {
    json recs = json::array();
    for (const auto& r : recs_) {
      json j;
      j["suite"] = r.suite;
      j["case"] = r.id;
      j["status"] = r.status;
      j["anchor"] = r.anchor;
      j["details"] = r.details;
      if (timing) j["seconds"] = r.seconds;
      recs.push_back(std::move(j));
    }
    json out;
    out["records"] = std::move(recs);
    out["summary"] = {{"pass", count("pass")}, {"fail", count("fail")}, {"skip", count("skip")}};
    return out;
  }

 private:
  std::vector<Record> recs_;
};

struct Outcome {
  bool ok = true;
  std::string details;
};

// Runs checks for one suite; exceptions inside a check become failures.
class SuiteRun {
 public:
  SuiteRun(Report& rep, std::string suite) : rep_(rep), suite_(std::move(suite)) {}

  bool check(const std::string& id, const std::string& anchor, const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Record r{suite_, id, "pass", anchor, "", 0};
    try {
      Outcome o = f();
      r.status = o.ok ? "pass" : "fail";
      r.details = o.details;
    } catch (const std::exception& e) {
      r.status = "fail";
      r.details = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.status == "pass";
    rep_.add(std::move(r));
    return ok;
  }
  void skip(const std::string& id, const std::string& anchor, const std::string& why) {
    rep_.add({suite_, id, "skip", anchor, why, 0});
  }

 private:
  Report& rep_;
  std::string suite_;
};

struct SuiteConfig {
  Pyramid pyr = Pyramid::from_q({1});
  unsigned prime = 3;
  int trunc = -1;  // working truncation K; -1 means N + 3
  std::uint64_t seed = 1;
  int samples = 50;
  std::vector<std::string> suites;

  int K() const { return trunc < 0 ? pyr.N() + 3 : trunc; }
};

inline std::string pyr_id(const Pyramid& P) { return "q=" + join(P.q()); }

namespace detail {

using SpMap = std::map<std::pair<int, int>, long long>;

inline SpMap sp_of(const SparseMat& m) {
  SpMap out;
  for (const auto& e : m)
    if (e.coef) out[{e.row, e.col}] += e.coef;
  return out;
}

inline SpMap sp_mul(const SparseMat& a, const SparseMat& b) {
  SpMap out;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.col == y.row) out[{x.row, y.col}] += x.coef * y.coef;
  return out;
}

inline SpMap sp_sub(SpMap a, const SpMap& b) {
  for (const auto& [k, v] : b) a[k] -= v;
  SpMap out;
  for (const auto& [k, v] : a)
    if (v) out.emplace(k, v);
  return out;
}

inline SpMap sp_reduce(const SpMap& a, long long p) {
  SpMap out;
  for (const auto& [k, v] : a) {
    long long r = ((v % p) + p) % p;
    if (r) out.emplace(k, r);
  }
  return out;
}

inline SpMap sp_of_dense(const DenseMat& m) {
  SpMap out;
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (m(i, j)) out[{i, j}] = m(i, j);
  return out;
}

// Rank of a list of sparse vectors over F_p.
inline std::size_t rank_mod_p(std::vector<std::map<Word, std::uint64_t>> rows, unsigned p) {
  PrimeField F(p);
  std::size_t rank = 0;
  std::vector<std::map<Word, std::uint64_t>> basis;  // pivot = first key
  for (auto& row : rows) {
    for (const auto& b : basis) {
      auto it = row.find(b.begin()->first);
      if (it == row.end()) continue;
      auto f = it->second;  // basis rows are monic in their pivot
      for (const auto& [w, c] : b) {
        auto& x = row[w];
        x = F.sub(x, F.mul(f, c));
        if (x == 0) row.erase(w);
      }
    }
    if (row.empty()) continue;
    // normalize on the smallest remaining key; keep basis pivots distinct by eliminating from older rows
    auto inv = F.inv(row.begin()->second);
    for (auto& [w, c] : row) c = F.mul(c, inv);
    for (auto& b : basis) {
      auto it = b.find(row.begin()->first);
      if (it == b.end()) continue;
      auto f = it->second;
      for (const auto& [w, c] : row) {
        auto& x = b[w];
        x = F.sub(x, F.mul(f, c));
        if (x == 0) b.erase(w);
      }
    }
    basis.push_back(std::move(row));
    ++rank;
  }
  return rank;
}

template <Ring R>
std::map<Word, std::uint64_t> as_row(const EnvElement<R>& u) {
  std::map<Word, std::uint64_t> out;
  for (const auto& [w, c] : u.terms()) out.emplace(w, c);
  return out;
}

inline Pyramid random_pyramid(Rng& rng, int max_n, int max_l, int max_N = 1 << 30) {
  for (;;) {
    int l = 1 + static_cast<int>(draw(rng, max_l));
    int peak = static_cast<int>(draw(rng, l));
    std::vector<int> q(l);
    q[peak] = 1 + static_cast<int>(draw(rng, max_n));
    for (int c = peak - 1; c >= 0; --c) q[c] = 1 + static_cast<int>(draw(rng, q[c + 1]));
    for (int c = peak + 1; c < l; ++c) q[c] = 1 + static_cast<int>(draw(rng, q[c - 1]));
    int N = 0;
    for (int h : q) N += h;
    if (N <= max_N) return Pyramid::from_q(q);
  }
}

}  // namespace detail

// ---------------------------------------------------------------- arith

inline void suite_arith(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "arith");
  Rng rng(cfg.seed);
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    PrimeField F(p);
    Polynomials<PrimeField> T(F, "t");
    auto tp_minus_t = T.sub(T.pow(T.gen(), p), T.gen());
    run.check("wilson p=" + std::to_string(p), "product of (t-j) over F_p", [&] {
      auto w = wilson_poly(p);
      return Outcome{T.equal(w, tp_minus_t), "prod = " + T.str(w)};
    });
    run.check("shifted-wilson p=" + std::to_string(p), "product of (t-a-j) over F_p", [&] {
      // 20 random residues, and 20 random a in F_p[x] of degree <= 2 (a^p - a is then nonzero)
      for (int k = 0; k < 20; ++k) {
        auto a = draw(rng, p);
        auto w = shifted_wilson_poly(F, p, a);
        auto want = T.sub(tp_minus_t, T.constant(F.sub(F.pow(a, p), a)));
        if (!T.equal(w, want)) return Outcome{false, "a=" + std::to_string(a) + " gives " + T.str(w)};
      }
      Polynomials<PrimeField> X(F, "x");
      Polynomials<Polynomials<PrimeField>> TX(X, "t");
      auto tx = TX.sub(TX.pow(TX.gen(), p), TX.gen());
      for (int k = 0; k < 20; ++k) {
        auto a = X.trim({draw(rng, p), draw(rng, p), draw(rng, p)});
        auto w = shifted_wilson_poly(X, p, a);
        auto want = TX.sub(tx, TX.constant(X.sub(ring_pow(X, a, p), a)));
        if (!TX.equal(w, want)) return Outcome{false, "a=" + X.str(a) + " gives " + TX.str(w)};
      }
      return Outcome{true, "40 values of a"};
    });
    run.check("elem-sym p=" + std::to_string(p), "e_r(0,...,p-1)", [&] {
      std::vector<std::uint64_t> vals;
      for (unsigned j = 0; j < p; ++j) vals.push_back(j);
      if (elem_sym(F, 0, vals) != 1) return Outcome{false, "e_0 != 1"};
      for (unsigned r = 1; r + 2 <= p; ++r)
        if (elem_sym(F, static_cast<int>(r), vals) != 0) return Outcome{false, "e_" + std::to_string(r) + " != 0"};
      if (F.symmetric(elem_sym(F, static_cast<int>(p - 1), vals)) != -1 && p != 2) return Outcome{false, "e_{p-1} != -1"};
      if (p == 2 && elem_sym(F, 1, vals) != 1) return Outcome{false, "e_1 != -1"};
      if (elem_sym(F, static_cast<int>(p) + 1, vals) != 0) return Outcome{false, "e_{p+1} != 0"};
      return Outcome{true, "e_1..e_{p-2} vanish, e_{p-1} = -1"};
    });
  }
}

// ---------------------------------------------------------------- combinatorics

inline Outcome roundtrip_pyramid(const Pyramid& P) {
  auto [s, l] = shift_from_pyramid(P);
  s.validate();
  auto back = pyramid_from_sigma_level(s, l);
  if (!(back == P)) return {false, pyr_id(P) + " -> " + pyr_id(back)};
  if (partition_from_sigma_level(s, l) != P.partition()) return {false, pyr_id(P) + ": partition mismatch"};
  auto p = P.partition();
  if (!std::is_sorted(p.begin(), p.end())) return {false, pyr_id(P) + ": partition not nondecreasing"};
  // numbering: bijection along rows, consistent with q
  std::vector<int> height(P.l() + 1, 0);
  int b = 0;
  for (int i = 1; i <= P.n(); ++i)
    for (int box : P.row_boxes(i)) {
      if (box != ++b || P.row(box) != i) return {false, pyr_id(P) + ": numbering broken at box " + std::to_string(box)};
      ++height[P.col(box)];
    }
  if (b != P.N()) return {false, pyr_id(P) + ": box count"};
  for (int c = 1; c <= P.l(); ++c)
    if (height[c] != P.q()[c - 1]) return {false, pyr_id(P) + ": column " + std::to_string(c) + " height"};
  return {true, ""};
}

inline void suite_combinatorics(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "combinatorics");
  run.check("worked-example", "q=(1,3,3,2,1) gives p=(2,3,5)", [] {
    auto P = Pyramid::from_q({1, 3, 3, 2, 1});
    auto [s, l] = shift_from_pyramid(P);
    ShiftMatrix want({{0, 1, 2}, {0, 0, 1}, {1, 1, 0}});
    bool ok = P.partition() == std::vector<int>{2, 3, 5} && s == want && l == 5 &&
              pyramid_from_sigma_level(want, 5) == P;
    return Outcome{ok, "p=(" + join(P.partition()) + ") sigma=" + s.str() + " l=" + std::to_string(l)};
  });
  run.check("random-roundtrips", "q <-> (sigma, l)", [&] {
    Rng rng(cfg.seed);
    for (int k = 0; k < 200; ++k) {
      auto P = detail::random_pyramid(rng, 5, 8);
      auto o = roundtrip_pyramid(P);
      if (!o.ok) return o;
    }
    return Outcome{true, "200 random pyramids, n <= 5, l <= 8"};
  });
  run.check("config-pyramid " + pyr_id(cfg.pyr), "numbering and shift additivity", [&] { return roundtrip_pyramid(cfg.pyr); });
  run.check("row-equivalence", "rows permuted vs entries moved between rows", [&] {
    const auto& P = cfg.pyr;
    std::vector<int> e(P.N());
    for (int b = 0; b < P.N(); ++b) e[b] = b;
    Tableau<int> A(P, e);
    auto B = A;
    for (int i = 1; i <= P.n(); ++i) {
      auto boxes = P.row_boxes(i);
      for (std::size_t k = 0; k < boxes.size() / 2; ++k) std::swap(B.entries[boxes[k] - 1], B.entries[boxes[boxes.size() - 1 - k] - 1]);
    }
    if (!row_equivalent(A, B)) return Outcome{false, "reversed rows not equivalent"};
    if (P.n() >= 2) {
      auto C = A;
      std::swap(C.entries[P.row_boxes(1)[0] - 1], C.entries[P.row_boxes(2)[0] - 1]);
      if (row_equivalent(A, C)) return Outcome{false, "swap across rows judged equivalent"};
    }
    return Outcome{true, ""};
  });
}

// ---------------------------------------------------------------- centralizer

// Abstract bracket and [p]-map of g^e against matrix computations; Jacobi when small.
inline Outcome centralizer_oracle(const Pyramid& P, const std::vector<unsigned>& primes, bool jacobi) {
  auto C = centralizer_algebra(P, primes.front());
  const auto& L = C.alg;
  int d = static_cast<int>(L.dim());
  int want_dim = 0;
  auto p = P.partition();
  for (int i = 1; i <= P.n(); ++i)
    for (int j = 1; j <= P.n(); ++j) want_dim += p[std::min(i, j) - 1];
  if (d != want_dim) return {false, "dim g^e = " + std::to_string(d) + ", expected " + std::to_string(want_dim)};
  SparseMat e;
  for (auto [i, j] : nilpotent_e(P)) e.push_back({i, j, 1});
  for (int a = 0; a < d; ++a) {
    const auto& A = L.realization[a];
    if (A.empty()) return {false, L.labels[a] + " has empty expansion"};
    if (!detail::sp_sub(detail::sp_mul(A, e), detail::sp_mul(e, A)).empty()) return {false, L.labels[a] + " does not commute with e"};
    for (int b = 0; b < d; ++b) {
      auto lhs = detail::sp_sub(detail::sp_mul(A, L.realization[b]), detail::sp_mul(L.realization[b], A));
      auto rhs = detail::sp_of(L.to_matrix(L.bracket(a, b)));
      if (lhs != rhs) return {false, "[" + L.labels[a] + "," + L.labels[b] + "] disagrees with the matrix commutator"};
    }
  }
  for (unsigned pr : primes) {
    auto Cp = centralizer_algebra(P, pr);
    for (int a = 0; a < d; ++a) {
      auto M = DenseMat::from_sparse(P.N(), Cp.alg.realization[a]).power(pr, pr);
      auto lhs = detail::sp_of_dense(M.reduce(pr));
      auto rhs = detail::sp_reduce(detail::sp_of(Cp.alg.to_matrix(Cp.alg.pmap(a))), pr);
      if (lhs != rhs) return {false, "p=" + std::to_string(pr) + ": " + L.labels[a] + "^[p] disagrees with the matrix power"};
    }
  }
  if (jacobi && d <= 40) {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) {
          auto br = [&](const SparseInt& x, int y) {
            SparseInt out;
            for (auto [k, ck] : x) out = sparse_add(out, L.bracket(k, y), ck);
            return out;
          };
          auto s = sparse_add(sparse_add(br(L.bracket(a, b), c), br(L.bracket(b, c), a)), br(L.bracket(c, a), b));
          if (!s.empty()) return {false, "Jacobi fails on " + L.labels[a] + "," + L.labels[b] + "," + L.labels[c]};
        }
  }
  return {true, "dim " + std::to_string(d) + ", " + std::to_string(d * d) + " pairs"};
}

// Parabolic data: chi, grading, eta and the m-last ordering.
inline Outcome parabolic_oracle(const Pyramid& P, unsigned prime) {
  auto D = build_parabolic(P, prime);
  int N = P.N();
  if (static_cast<int>(D.p.dim() + D.m.dim()) != N * N) return {false, "dim p + dim m != N^2"};
  for (int a = 0; a < N * N; ++a) {
    if (D.chi[a] && D.g.grading[a] != -1) return {false, "chi nonzero outside degree -1"};
    if ((a < D.dim_p) != (D.g.grading[a] >= 0)) return {false, "p/m ordering broken"};
    for (int b = 0; b < N * N; ++b)
      for (auto [c, cc] : D.g.bracket(a, b))
        if (D.g.grading[c] != D.g.grading[a] + D.g.grading[b]) return {false, "grading not additive"};
  }
  // Jordan type of e from ranks of its powers
  auto e = nilpotent_e_matrix(P);
  auto rank = [&](const DenseMat& m) {
    std::vector<std::map<Word, std::uint64_t>> rows;
    PrimeField F(prime);
    for (int i = 1; i <= N; ++i) {
      std::map<Word, std::uint64_t> r;
      for (int j = 1; j <= N; ++j)
        if (m(i, j)) r[Word{static_cast<std::uint16_t>(j)}] = F.from_int(m(i, j));
      rows.push_back(r);
    }
    return detail::rank_mod_p(rows, prime);
  };
  auto p = P.partition();
  DenseMat pw = e;
  for (int k = 1; k <= P.l(); ++k) {
    std::size_t want = 0;
    for (int x : p) want += static_cast<std::size_t>(std::max(0, x - k));
    if (rank(pw) != want) return {false, "rank e^" + std::to_string(k) + " disagrees with the partition"};
    pw = pw.mul(e);
  }
  return {true, ""};
}

inline void suite_centralizer(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "centralizer");
  run.check("oracle " + pyr_id(cfg.pyr), "centralizer bracket and p-power vs matrices",
            [&] { return centralizer_oracle(cfg.pyr, {cfg.prime}, true); });
  run.check("parabolic " + pyr_id(cfg.pyr), "grading, chi, Jordan type of e", [&] { return parabolic_oracle(cfg.pyr, cfg.prime); });
  run.check("eta " + pyr_id(cfg.pyr), "eta constant on columns", [&] {
    auto eta = eta_of(cfg.pyr);
    for (int a = 1; a <= cfg.pyr.N(); ++a)
      for (int b = 1; b <= cfg.pyr.N(); ++b)
        if (cfg.pyr.col(a) == cfg.pyr.col(b) && eta[a] != eta[b]) return Outcome{false, "eta differs in a column"};
    std::string vals;
    for (int a = 1; a <= cfg.pyr.N(); ++a) vals += (a > 1 ? "," : "") + std::to_string(eta[a]);
    return Outcome{true, "eta=(" + vals + ")"};
  });
}

// ---------------------------------------------------------------- current

inline Outcome theta_oracle(const ShiftMatrix& s, int l, unsigned prime) {
  auto T = truncated_current(s, l, prime);
  auto P = pyramid_from_sigma_level(s, l);
  auto G = centralizer_algebra(P, prime);
  auto th = theta(T, G);
  std::set<int> seen(th.begin(), th.end());
  if (seen.count(-1) || seen.size() != G.alg.dim() || th.size() != G.alg.dim())
    return {false, "theta is not a bijection on bases"};
  auto map = [&](const SparseInt& x) {
    SparseInt out;
    for (auto [k, c] : x) out.emplace_back(th[k], c);
    std::sort(out.begin(), out.end());
    return out;
  };
  int d = static_cast<int>(T.alg.dim());
  for (int a = 0; a < d; ++a) {
    if (map(T.alg.pmap(a)) != G.alg.pmap(th[a])) return {false, "theta breaks the p-map at " + T.alg.labels[a]};
    for (int b = 0; b < d; ++b)
      if (map(T.alg.bracket(a, b)) != G.alg.bracket(th[a], th[b]))
        return {false, "theta breaks [" + T.alg.labels[a] + "," + T.alg.labels[b] + "]"};
  }
  // the truncation ideal inside a capped current algebra
  int tcap = 0;
  auto p = P.partition();
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j) tcap = std::max(tcap, s(i, j) + p[std::min(i, j) - 1]);
  auto C = current_algebra(s, tcap, prime);
  auto ideal = truncation_ideal_basis(C, l);
  std::set<int> in_ideal(ideal.begin(), ideal.end());
  for (int a : ideal)
    for (int b = 0; b < static_cast<int>(C.alg.dim()); ++b) {
      if (C.alg.bracket_capped(a, b)) continue;
      for (auto [k, c] : C.alg.bracket(a, b))
        if (!in_ideal.count(k)) return {false, "truncation span is not an ideal"};
    }
  for (int a = 0; a < static_cast<int>(C.alg.dim()); ++a) {
    auto [i, j, r] = C.basis[a];
    if (C.alg.pmap_capped(a)) continue;
    SparseInt want;
    if (i == j) {
      int k = C.index(i, i, r * static_cast<int>(prime));
      if (k >= 0) want = {{k, 1}};
    }
    if (C.alg.pmap(a) != want) return {false, "p-map of " + C.alg.labels[a]};
  }
  return {true, "dim " + std::to_string(d) + ", ideal dim " + std::to_string(ideal.size()) + " at tcap " + std::to_string(tcap)};
}

inline void suite_current(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "current");
  auto [s, l] = shift_from_pyramid(cfg.pyr);
  run.check("theta " + pyr_id(cfg.pyr), "truncated current algebra onto the centralizer",
            [&] { return theta_oracle(s, l, cfg.prime); });
  run.check("theta-random", "10 random (sigma, l), N <= 8", [&] {
    Rng rng(cfg.seed + 17);
    for (int k = 0; k < 10; ++k) {
      auto P = detail::random_pyramid(rng, 4, 6, 8);
      auto [s2, l2] = shift_from_pyramid(P);
      auto o = theta_oracle(s2, l2, cfg.prime);
      if (!o.ok) return Outcome{false, pyr_id(P) + ": " + o.details};
    }
    return Outcome{true, "10 cases"};
  });
}

// ---------------------------------------------------------------- capelli

inline Outcome capelli_centrality(int N, unsigned prime) {
  auto g = std::make_shared<LieAlgebra>(build_gl(N, {}, prime));
  auto U = Envelope<PrimeField>::create(g, PrimeField(prime));
  auto Z = capelli(U, N, [&](int i, int j) { return (i - 1) * N + (j - 1); });
  for (int r = 1; r <= N; ++r)
    for (int x = 0; x < N * N; ++x)
      if (!commutator(U->gen(x), Z[r]).is_zero())
        return {false, "[Z^(" + std::to_string(r) + ")," + g->labels[x] + "] != 0"};
  return {true, "N=" + std::to_string(N) + ", |Z^(N)| = " + std::to_string(Z[N].size()) + " terms"};
}

inline void suite_capelli(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "capelli");
  int N = cfg.pyr.N();
  if (N > 5) {
    run.skip("centrality N=" + std::to_string(N), "Capelli coefficients central", "N > 5");
    return;
  }
  run.check("centrality N=" + std::to_string(N) + " p=" + std::to_string(cfg.prime), "Capelli coefficients central",
            [&] { return capelli_centrality(N, cfg.prime); });
}

// ---------------------------------------------------------------- dgen

template <Ring R>
Outcome d_vanishing(WContext<R>& ctx) {
  int p1 = ctx.pyr().p(1);
  for (int r = p1 + 1; r <= p1 + 3; ++r)
    if (!ctx.D(1, r).is_zero()) return {false, "D_1^(" + std::to_string(r) + ") = " + dump(ctx.D(1, r))};
  return {true, "r = " + std::to_string(p1 + 1) + ".." + std::to_string(p1 + 3)};
}

inline Outcome d_twisted(WContext<PrimeField>& ctx) {
  TwChecker<PrimeField> tw(ctx);
  int count = 0;
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r) {
      if (auto f = tw.check(ctx.D(i, r)))
        return {false, "D_" + std::to_string(i) + "^(" + std::to_string(r) + ") moved by root (" + std::to_string(f->a) + "," +
                           std::to_string(f->b) + "): " + f->residue};
      ++count;
    }
  return {true, std::to_string(count) + " generators"};
}

inline Outcome d_loop_top(WContext<PrimeField>& ctx) {
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r) {
      const auto& D = ctx.D(i, r);
      auto sym = ctx.loop_symbol(i, r - 1);
      if (degree(D, DegreeKind::loop) != r - 1 || !(gr_top(D, DegreeKind::loop) == sym))
        return {false, "D_" + std::to_string(i) + "^(" + std::to_string(r) + "): top " + dump(gr_top(D, DegreeKind::loop)) +
                           " vs " + dump(sym)};
      if (degree(D, DegreeKind::kazhdan) != r) return {false, "Kazhdan degree of D_" + std::to_string(i) + "^(" + std::to_string(r)};
    }
  return {true, ""};
}

inline Outcome d_integral(WContext<PrimeField>& ctx) {
  WContext<Integers> zc(ctx.pyr(), ctx.prime(), Integers{});
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i) + (i == 1 ? 1 : 0); ++r) {
      auto red = reduce_mod_p(zc.D(i, r), ctx.Up);
      if (!(red == ctx.D(i, r))) return {false, "D_" + std::to_string(i) + "^(" + std::to_string(r) + ") over Z reduces to " + dump(red)};
    }
  return {true, ""};
}

inline Outcome d_commute_weight(WContext<PrimeField>& ctx) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r) gens.emplace_back(i, r);
  for (auto [i, r] : gens) {
    auto w = tn_weight(ctx.par(), ctx.D(i, r));
    if (!w || std::any_of(w->begin(), w->end(), [](int x) { return x != 0; }))
      return {false, "D_" + std::to_string(i) + "^(" + std::to_string(r) + ") is not of weight 0"};
  }
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      auto c = commutator(ctx.D(gens[a].first, gens[a].second), ctx.D(gens[b].first, gens[b].second));
      if (!c.is_zero()) return {false, "D's do not commute: " + dump(c)};
    }
  return {true, std::to_string(gens.size()) + " generators"};
}

// Ordered monomials in the D_i^{(r)}, r <= p_i, of Kazhdan degree <= cap are linearly independent.
inline Outcome d_pbw_independence(WContext<PrimeField>& ctx, int cap, std::size_t max_monomials = 150) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r) gens.emplace_back(i, r);
  std::vector<EnvElement<PrimeField>> monos;
  std::function<void(std::size_t, int, EnvElement<PrimeField>)> rec = [&](std::size_t from, int left, EnvElement<PrimeField> cur) {
    if (monos.size() > max_monomials) return;
    monos.push_back(cur);
    for (std::size_t g = from; g < gens.size(); ++g)
      if (gens[g].second <= left) rec(g, left - gens[g].second, cur * ctx.D(gens[g].first, gens[g].second));
  };
  rec(0, cap, ctx.Up->one());
  if (monos.size() > max_monomials) return {true, "skipped: more than " + std::to_string(max_monomials) + " monomials"};
  std::vector<std::map<Word, std::uint64_t>> rows;
  for (const auto& m : monos) rows.push_back(detail::as_row(m));
  auto rk = detail::rank_mod_p(rows, ctx.prime());
  return {rk == monos.size(), std::to_string(monos.size()) + " monomials, rank " + std::to_string(rk)};
}

inline Outcome p_centre_checks(WContext<PrimeField>& ctx) {
  TwChecker<PrimeField> tw(ctx);
  unsigned p = ctx.prime();
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r) {
      std::string id = "xiD_" + std::to_string(i) + "^(" + std::to_string(r) + ")";
      const auto& X = ctx.p_centre_D(i, r);
      if (auto f = tw.check(X)) return {false, id + " not twisted-invariant: " + f->residue};
      if (!restricted_reduce(X).is_zero()) return {false, id + " survives the restricted reduction"};
      for (int x = 0; x < ctx.par().dim_p; ++x)
        if (!commutator(ctx.Up->gen(x), X).is_zero()) return {false, id + " is not central"};
      // top loop part: (-1)^{r-1} (c^p - c^{[p]}) with c = c_{i,i}^{(r-1)}
      auto c = ctx.c_in_p(i, i, r - 1);
      auto sym = c.pow(p) - ctx.c_in_p(i, i, (r - 1) * static_cast<int>(p));
      if ((r - 1) % 2) sym = -sym;
      auto top = gr_top(X, DegreeKind::loop);
      if (!(top == sym)) return {false, id + ": loop top " + dump(top) + " vs " + dump(sym)};
    }
  return {true, ""};
}

inline void suite_dgen(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "dgen");
  WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
  std::string tag = pyr_id(cfg.pyr) + " p=" + std::to_string(cfg.prime);
  run.check("r=1 " + tag, "D_i^(1) is the row sum of e~_{k,k}", [&] {
    for (int i = 1; i <= ctx.n(); ++i) {
      auto want = ctx.Up->zero();
      for (int k : ctx.pyr().row_boxes(i)) want += ctx.Up->gen(ctx.e(k, k)) + ctx.Up->scalar(ctx.eta(k));
      if (!(ctx.D(i, 1) == want)) return Outcome{false, "D_" + std::to_string(i) + "^(1) = " + dump(ctx.D(i, 1))};
    }
    return Outcome{true, ""};
  });
  run.check("vanishing " + tag, "D_1^(r) = 0 for r > p_1", [&] { return d_vanishing(ctx); });
  run.check("twisted " + tag, "D_i^(r) are twisted M-invariants", [&] { return d_twisted(ctx); });
  run.check("twisted-negative " + tag, "some e_{k,k} is not invariant", [&] {
    if (ctx.par().m.dim() == 0) return Outcome{true, "m = 0: nothing to check"};
    TwChecker<PrimeField> tw(ctx);
    for (int k = 1; k <= ctx.N(); ++k)
      if (auto f = tw.check(ctx.Up->gen(ctx.e(k, k))))
        return Outcome{true, "e_{" + std::to_string(k) + "," + std::to_string(k) + "} moved by root (" + std::to_string(f->a) + "," +
                                 std::to_string(f->b) + ")"};
    return Outcome{false, "every e_{k,k} passed the invariance check"};
  });
  run.check("loop-top " + tag, "top loop part of D_i^(r+1)", [&] { return d_loop_top(ctx); });
  run.check("integral " + tag, "integral form reduces mod p", [&] { return d_integral(ctx); });
  run.check("commuting " + tag, "D's commute and have weight 0", [&] { return d_commute_weight(ctx); });
  run.check("pbw " + tag, "ordered D-monomials independent", [&] { return d_pbw_independence(ctx, 2 * static_cast<int>(cfg.prime)); });
  run.check("p-centre " + tag, "explicit p-centre generators", [&] { return p_centre_checks(ctx); });
}

// ---------------------------------------------------------------- center

inline Outcome z_polynomial(WContext<PrimeField>& ctx, int extra) {
  auto Z = Z_coeffs(ctx, extra);
  int N = ctx.N();
  if (!(Z[0] == ctx.Up->one())) return {false, "Z_0 = " + dump(Z[0])};
  for (int r = N + 1; r <= N + extra; ++r)
    if (!Z[r].is_zero()) return {false, "Z_" + std::to_string(r) + " = " + dump(Z[r])};
  return {true, "Z_r = 0 for " + std::to_string(N + 1) + " <= r <= " + std::to_string(N + extra)};
}

inline Outcome z_central_D(WContext<PrimeField>& ctx) {
  auto Z = Z_coeffs(ctx, 0);
  TwChecker<PrimeField> tw(ctx);
  for (int r = 1; r <= ctx.N(); ++r) {
    auto w = tn_weight(ctx.par(), Z[r]);
    if (!w || std::any_of(w->begin(), w->end(), [](int x) { return x != 0; })) return {false, "Z_" + std::to_string(r) + " has nonzero weight"};
    if (auto f = tw.check(Z[r])) return {false, "Z_" + std::to_string(r) + " not twisted-invariant: " + f->residue};
    for (int j = 1; j <= ctx.n(); ++j)
      for (int s = 1; s <= ctx.pyr().p(j); ++s) {
        auto c = commutator(Z[r], ctx.D(j, s));
        if (!c.is_zero()) return {false, "[Z_" + std::to_string(r) + ", D_" + std::to_string(j) + "^(" + std::to_string(s) + ")] = " + dump(c)};
      }
  }
  return {true, ""};
}

// z_s on the left-justified pyramid with the same partition.
inline Outcome z_commutation(const std::vector<int>& partition, unsigned prime) {
  auto P = left_justified_pyramid(partition);
  WContext<PrimeField> ctx(P, prime, PrimeField(prime));
  auto U = ctx.Uge();
  int d = static_cast<int>(U->dim());
  for (int s = 1; s <= P.N(); ++s) {
    auto z = z_central(ctx, s);
    if (z.out_of_range) return {false, "z_" + std::to_string(s) + " met " + std::to_string(z.out_of_range) + " undefined entries"};
    if (z.z.is_zero()) return {false, "z_" + std::to_string(s) + " = 0"};
    for (int x = 0; x < d; ++x)
      if (!commutator(U->gen(x), z.z).is_zero())
        return {false, "[z_" + std::to_string(s) + ", " + U->algebra().labels[x] + "] != 0"};
    if (std::all_of(partition.begin(), partition.end(), [](int v) { return v == 1; })) {
      auto img = embed_centralizer(ctx, z.z);
      auto cap = capelli(ctx)[s];
      if (!(img == cap)) return {false, "z_" + std::to_string(s) + " differs from Z^(" + std::to_string(s) + ")"};
    }
  }
  return {true, pyr_id(P) + ", dim g^e " + std::to_string(d)};
}

inline void suite_center(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "center");
  WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
  std::string tag = pyr_id(cfg.pyr) + " p=" + std::to_string(cfg.prime);
  int extra = std::max(0, cfg.K() - cfg.pyr.N());
  run.check("polynomial " + tag, "Z(u) is a polynomial of degree N", [&] { return z_polynomial(ctx, extra); });
  run.check("central " + tag, "Z_r commute with the D's, weight 0, invariant", [&] { return z_central_D(ctx); });
  run.check("z_s " + tag, "z_s central in U(g^e)", [&] { return z_commutation(cfg.pyr.partition(), cfg.prime); });
}

// ---------------------------------------------------------------- hc-match

inline void suite_hc_match(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "hc-match");
  std::string tag = pyr_id(cfg.pyr) + " p=" + std::to_string(cfg.prime);
  if (cfg.pyr.N() > 6) {
    run.skip(tag, "pr of the Capelli coefficients", "N > 6");
    return;
  }
  run.check(tag, "pr of the Capelli coefficients", [&] {
    WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
    std::string det;
    bool ok = hc_match(ctx, &det);
    return Outcome{ok, ok ? "r = 1.." + std::to_string(ctx.N()) : det};
  });
}

// ---------------------------------------------------------------- verma

using PolyF = Polynomials<PrimeField>;

inline Tableau<PolyF::value_type> random_tableau(const Pyramid& P, const PolyF& S, Rng& rng) {
  unsigned p = static_cast<unsigned>(S.base().p());
  std::vector<PolyF::value_type> e;
  for (int b = 0; b < P.N(); ++b) e.push_back(S.trim({draw(rng, p), draw(rng, p), draw(rng, p)}));
  return Tableau<PolyF::value_type>(P, std::move(e));
}

inline Outcome verma_sample(WContext<PrimeField>& ctx, HChainCache& chains, const Tableau<PolyF::value_type>& A) {
  PolyF S(PrimeField(ctx.prime()), "x");
  HighestWeight<PolyF> hw(ctx, S, A, &chains);
  const auto& D = ctx.par();
  // generators of p on m_A
  for (int x = 0; x < D.dim_p; ++x) {
    auto v = hw.act_gen(x, hw.base());
    auto [a, b] = D.unit[x];
    if (D.cls[x] == UnitClass::raising || D.cls[x] == UnitClass::nilradical) {
      if (!v.empty()) return {false, D.g.labels[x] + " does not kill m_A"};
    } else if (D.cls[x] == UnitClass::cartan) {
      auto want = S.add(A.at(a), S.from_int(ctx.pyr().row(a) - 1 - D.eta[a]));
      if (!S.equal(hw.scalar_of(v, D.g.labels[x]), want)) return {false, D.g.labels[x] + " has the wrong eigenvalue"};
    }
  }
  Polynomials<PolyF> PU(S, "u");
  for (int i = 1; i <= ctx.n(); ++i) {
    int pi = ctx.pyr().p(i);
    auto rhs = PU.one();
    for (const auto& a : A.row(i)) rhs = PU.mul(rhs, PU.add(PU.gen(), PU.constant(S.add(a, S.from_int(i - 1)))));
    for (int r = 0; r <= pi + 3; ++r) {
      auto got = hw.hw_D(i, r);
      auto want = hw.expected_D(i, r);
      if (!S.equal(got, want))
        return {false, "D_" + std::to_string(i) + "^(" + std::to_string(r) + "): " + S.str(got) + " vs " + S.str(want)};
      // factorization: coefficient of u^{p_i - r}
      auto coef = r <= pi && pi - r < static_cast<int>(rhs.size()) ? rhs[pi - r] : S.zero();
      if (!S.equal(got, coef)) return {false, "factorization fails at u^" + std::to_string(pi - r)};
      if (r >= 1 && r <= pi) {
        auto full = hw.hw_scalar(ctx.D(i, r));
        if (!S.equal(full, got)) return {false, "full D_" + std::to_string(i) + "^(" + std::to_string(r) + ") disagrees with the h-chains"};
      }
    }
  }
  // row-equivalent tableau: same scalars
  auto B = A;
  for (int i = 1; i <= ctx.n(); ++i) {
    auto boxes = ctx.pyr().row_boxes(i);
    std::rotate(boxes.begin(), boxes.begin() + 1, boxes.end());
    auto row = A.row(i);
    for (std::size_t k = 0; k < boxes.size(); ++k) B.entries[boxes[k] - 1] = row[k];
  }
  HighestWeight<PolyF> hb(ctx, S, B, &chains);
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r)
      if (!S.equal(hb.hw_D(i, r), hw.hw_D(i, r))) return {false, "row-equivalent tableau acts differently"};
  return {true, ""};
}

inline void suite_verma(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "verma");
  WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
  HChainCache chains(ctx.par());
  PolyF S(PrimeField(cfg.prime), "x");
  Rng rng(cfg.seed);
  std::string tag = pyr_id(cfg.pyr) + " p=" + std::to_string(cfg.prime);
  run.check("tableaux " + tag, "D_i^(r) on m_A, vanishing, factorization", [&] {
    for (int k = 0; k < cfg.samples; ++k) {
      auto A = random_tableau(cfg.pyr, S, rng);
      auto o = verma_sample(ctx, chains, A);
      if (!o.ok) return Outcome{false, "sample " + std::to_string(k) + ": " + o.details};
    }
    return Outcome{true, std::to_string(cfg.samples) + " tableaux over F_p[x]"};
  });
  run.check("Z-action " + tag, "Z_r acts by e_r of all entries", [&] {
    auto Z = Z_coeffs(ctx, 0);
    Rng r2(cfg.seed + 1);
    for (int k = 0; k < std::min(cfg.samples, 10); ++k) {
      auto A = random_tableau(cfg.pyr, S, r2);
      HighestWeight<PolyF> hw(ctx, S, A, &chains);
      for (int r = 1; r <= ctx.N(); ++r) {
        auto got = hw.hw_scalar(Z[r]);
        auto want = elem_sym(S, r, A.entries);
        if (!S.equal(got, want)) return Outcome{false, "Z_" + std::to_string(r) + ": " + S.str(got) + " vs " + S.str(want)};
      }
    }
    return Outcome{true, ""};
  });
}

// ---------------------------------------------------------------- main-theorem

inline Outcome d_sequence_facts(const Pyramid& P, unsigned p) {
  for (int i = 1; i <= P.n(); ++i) {
    int pi = P.p(i);
    auto C = hat_B_matrix(pi, p);
    for (int r = 1; r <= pi; ++r) {
      auto set = d_sequences(pi, r, p, i);
      int s = s_of_r(r, p);
      bool has_dist = false;
      int best = -1, best_count = 0;
      for (const auto& d : set.seqs) {
        int sum = 0, w = 0;
        for (int j = 0; j <= s; ++j) sum += d[j];
        for (int j = 1; j <= s; ++j) w += d[j] * (j * static_cast<int>(p) - j + 1);
        if (sum != pi || w != r * static_cast<int>(p)) return {false, "bad sequence"};
        std::vector<int> dist(s + 1, 0);
        dist[0] = pi - r;
        dist[1] = r;
        if (d == dist) has_dist = true;
        int tail = sum - d[0];
        if (tail > best) best = tail, best_count = 1;
        else if (tail == best) ++best_count;
      }
      if (!has_dist || best != r || best_count != 1) return {false, "distinguished sequence missing or not the unique maximum"};
      if (static_cast<int>(p) > r && set.seqs.size() != 1) return {false, "p > r but several sequences"};
      for (int t = 1; t <= pi; ++t)
        if ((t > r && C[t][r]) || (t == r && C[t][r] != 1)) return {false, "change of basis not unitriangular"};
    }
  }
  return {true, ""};
}

inline void suite_main_theorem(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "main-theorem");
  WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
  HChainCache chains(ctx.par());
  PolyF S(PrimeField(cfg.prime), "x");
  std::string tag = pyr_id(cfg.pyr) + " p=" + std::to_string(cfg.prime);
  run.check("d-sequences " + tag, "sequence sets and unitriangular change of basis",
            [&] { return d_sequence_facts(cfg.pyr, cfg.prime); });
  run.check("probe " + tag, "hat B, p-centre generator and e_r(a^p - a) agree", [&] {
    Rng rng(cfg.seed + 2);
    int shortcut = 0, multi = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      auto A = random_tableau(cfg.pyr, S, rng);
      HighestWeight<PolyF> hw(ctx, S, A, &chains);
      for (int i = 1; i <= ctx.n(); ++i)
        for (int r = 1; r <= ctx.pyr().p(i); ++r) {
          auto pr = hw.main_theorem_probe(i, r);
          if (!pr.ok) return Outcome{false, "sample " + std::to_string(k) + ": " + pr.detail};
          if (k == 0) {
            if (static_cast<int>(cfg.prime) > r) ++shortcut;
            if (d_sequences(ctx.pyr().p(i), r, cfg.prime).seqs.size() > 1) ++multi;
          }
        }
    }
    return Outcome{true, std::to_string(cfg.samples) + " tableaux; (i,r) with p > r: " + std::to_string(shortcut) +
                             ", with several sequences: " + std::to_string(multi)};
  });
  run.check("B-witness " + tag, "full B_i^(m) action vs the scalar-series shortcut", [&] {
    Rng rng(cfg.seed + 3);
    auto A = random_tableau(cfg.pyr, S, rng);
    HighestWeight<PolyF> hw(ctx, S, A, &chains);
    int mmax = ctx.N() <= 2 ? ctx.pyr().p(1) * static_cast<int>(cfg.prime) : static_cast<int>(cfg.prime);
    for (int m = 1; m <= mmax; ++m) {
      auto full = hw.hw_scalar(B_coeff(ctx, 1, m));
      auto quick = hw.B_scalar(1, m);
      if (!S.equal(full, quick)) return Outcome{false, "B_1^(" + std::to_string(m) + "): " + S.str(full) + " vs " + S.str(quick)};
    }
    return Outcome{true, "m = 1.." + std::to_string(mmax)};
  });
}

// ---------------------------------------------------------------- restricted

// The left-regular action on p-restricted monomials respects brackets and the p-map, so the
// restricted quotient of U(p) has dimension p^{dim p}.
inline Outcome restricted_dimension(const Pyramid& P, unsigned prime) {
  auto D = std::make_shared<ParabolicData>(build_parabolic(P, prime));
  auto U = Envelope<PrimeField>::create(std::shared_ptr<const LieAlgebra>(D, &D->p), PrimeField(prime));
  int d = D->dim_p;
  std::vector<Word> monos{Word{}};
  for (int x = d - 1; x >= 0; --x) {
    std::vector<Word> next;
    for (const auto& m : monos)
      for (unsigned k = 0; k < prime; ++k) {
        Word w(k, static_cast<std::uint16_t>(x));
        w.insert(w.end(), m.begin(), m.end());
        next.push_back(std::move(w));
      }
    monos = std::move(next);
  }
  std::size_t want = 1;
  for (int k = 0; k < d; ++k) want *= prime;
  if (monos.size() != want) return {false, "monomial count"};
  auto act = [&](int x, const Terms<PrimeField>& v) { return restricted_reduce(U->from_terms(U->lmul(x, v))).terms(); };
  auto act_lin = [&](const SparseInt& y, const Terms<PrimeField>& v) {
    auto out = U->zero();
    for (auto [z, c] : y) out.add_scaled(U->from_terms(act(z, v)), U->ring().from_int(c));
    return out;
  };
  for (const auto& m : monos) {
    Terms<PrimeField> v;
    v.emplace(m, 1);
    if (!(restricted_reduce(U->from_terms(v)) == U->from_terms(v))) return {false, "restricted monomial not reduced"};
    for (int x = 0; x < d; ++x) {
      auto xv = act(x, v);
      for (const auto& [w, c] : xv)
        for (std::size_t k = 0; k + prime <= w.size(); ++k)
          if (w[k] == w[k + prime - 1]) return {false, "reduction left a p-th power"};
      for (int y = x + 1; y < d; ++y) {
        auto lhs = U->from_terms(act(x, act(y, v))) - U->from_terms(act(y, xv));
        if (!(lhs == act_lin(D->p.bracket(x, y), v))) return {false, "bracket relation fails on a monomial"};
      }
      Terms<PrimeField> pw = v;
      for (unsigned k = 0; k < prime; ++k) pw = act(x, pw);
      if (!(U->from_terms(pw) == act_lin(D->p.pmap(x), v))) return {false, "p-map relation fails on a monomial"};
    }
  }
  return {true, "dim p = " + std::to_string(d) + ", " + std::to_string(want) + " restricted monomials"};
}

inline Outcome restricted_kills(WContext<PrimeField>& ctx) {
  for (int x = 0; x < ctx.par().dim_p; ++x) {
    auto X = xi_p(ctx.Up, SparseInt{{x, 1}});
    if (!restricted_reduce(X).is_zero()) return {false, "xi_p(" + ctx.par().p.labels[x] + ") survives"};
  }
  for (int i = 1; i <= ctx.n(); ++i)
    for (int r = 1; r <= ctx.pyr().p(i); ++r)
      if (!restricted_reduce(ctx.p_centre_D(i, r)).is_zero()) return {false, "p-centre D survives"};
  return {true, ""};
}

inline void suite_restricted(const SuiteConfig& cfg, Report& rep) {
  SuiteRun run(rep, "restricted");
  std::string tag = pyr_id(cfg.pyr) + " p=" + std::to_string(cfg.prime);
  auto D = build_parabolic(cfg.pyr, cfg.prime);
  if (D.dim_p <= 6)
    run.check("dimension " + tag, "restricted quotient of U(p) has dimension p^dim p",
              [&] { return restricted_dimension(cfg.pyr, cfg.prime); });
  else
    run.skip("dimension " + tag, "restricted quotient of U(p) has dimension p^dim p", "dim p > 6");
  run.check("kernel " + tag, "xi_p(x) and p-centre D's reduce to zero", [&] {
    WContext<PrimeField> ctx(cfg.pyr, cfg.prime, PrimeField(cfg.prime));
    return restricted_kills(ctx);
  });
}

// ---------------------------------------------------------------- registry

using SuiteFn = void (*)(const SuiteConfig&, Report&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg{
      {"arith", suite_arith},     {"combinatorics", suite_combinatorics}, {"centralizer", suite_centralizer},
      {"current", suite_current}, {"capelli", suite_capelli},             {"dgen", suite_dgen},
      {"center", suite_center},   {"hc-match", suite_hc_match},           {"verma", suite_verma},
      {"main-theorem", suite_main_theorem}, {"restricted", suite_restricted}};
  return reg;
}

inline Report verify(const SuiteConfig& cfg) {
  Report rep;
  for (const auto& [name, fn] : suite_registry())
    if (cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end()) fn(cfg, rep);
  return rep;
}

inline std::string describe(const Pyramid& P) {
  std::ostringstream os;
  auto [s, l] = shift_from_pyramid(P);
  os << "pyramid q=(" << join(P.q()) << ")\n" << P.diagram();
  os << "n=" << P.n() << " l=" << l << " N=" << P.N() << "\n";
  os << "p=(" << join(P.partition()) << ")\n";
  os << "sigma=" << s.str() << "\n";
  int dim = 0;
  auto p = P.partition();
  for (int i = 1; i <= P.n(); ++i)
    for (int j = 1; j <= P.n(); ++j) dim += p[std::min(i, j) - 1];
  os << "dim g^e=" << dim << "\n";
  if (P.l() == 1) os << "single column: e = 0\n";
  auto eta = eta_of(P);
  std::vector<int> ev(eta.begin() + 1, eta.end());
  os << "eta=(" << join(ev) << ")\n";
  return os.str();
}

}  // namespace modw
