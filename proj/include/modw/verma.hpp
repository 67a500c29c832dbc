#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "combin.hpp"
#include "series.hpp"
#include "uea.hpp"
#include "walg.hpp"

namespace modw {

// Chains of D_i^{(k)} restricted to h, as lists of (p-index, eta shift) with a sign.
class HChainCache {
 public:
  struct Factor {
    int x;
    long long eta;
  };
  struct Chain {
    std::vector<Factor> f;
    int sign;
  };

  explicit HChainCache(const ParabolicData& D) : D_(D) {}

  const std::vector<Chain>& get(int i, int k) {
    auto key = std::make_pair(i, k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<Chain> out;
    for_each_chain(D_.pyr, i, k, true, [&](const std::vector<ChainFactor>& ch, int sign) {
      Chain c{{}, sign};
      for (const auto& f : ch) c.f.push_back({D_.idx(f.i, f.j), f.i == f.j ? D_.eta[f.i] : 0});
      out.push_back(std::move(c));
    });
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  const ParabolicData& D_;
  std::map<std::pair<int, int>, std::vector<Chain>> cache_;
};

// M_h(A) as a U(p)-module: vectors are combinations of lowering words applied to m_A.
// Scalars live in S (F_p or F_p[x]); U(p) has F_p coefficients.
template <Ring S>
class HighestWeight {
 public:
  using SV = typename S::value_type;
  using Vec = std::unordered_map<Word, SV, WordHash>;

  HighestWeight(WContext<PrimeField>& ctx, S ring, Tableau<SV> A, HChainCache* chains = nullptr)
      : ctx_(ctx), ring_(std::move(ring)), A_(std::move(A)), chains_(chains) {
    if (!(A_.pyramid == ctx.pyr())) throw std::invalid_argument("HighestWeight: tableau on a different pyramid");
    const auto& P = ctx.pyr();
    lam_.assign(P.N() + 1, ring_.zero());
    for (int b = 1; b <= P.N(); ++b)
      lam_[b] = ring_.add(A_.at(b), ring_.from_int(P.row(b) - 1 - ctx.par().eta[b]));
  }

  const S& ring() const { return ring_; }
  const Tableau<SV>& tableau() const { return A_; }
  // (lambda_A - rho~)(e_{k,k})
  const SV& cartan_value(int box) const { return lam_.at(box); }

  Vec base() const { return Vec{{Word{}, ring_.one()}}; }

  Vec act_gen(int x, const Vec& v) {
    Vec out;
    for (const auto& [L, s] : v) {
      Terms<PrimeField> t;
      ctx_.Up->lmul_into(x, L, 1, t);
      for (const auto& [W, c] : t) evaluate(W, ring_.mul(s, lift(c)), out);
    }
    return out;
  }

  Vec act(const EnvElement<PrimeField>& u, const Vec& v) {
    Vec out;
    for (const auto& [L, s] : v) {
      if (L.empty()) {
        for (const auto& [W, c] : u.terms()) evaluate(W, ring_.mul(s, lift(c)), out);
        continue;
      }
      Terms<PrimeField> one;
      one.emplace(L, 1);
      for (const auto& [w, c] : u.terms())
        for (const auto& [W, cc] : ctx_.Up->word_times(w, one))
          evaluate(W, ring_.mul(s, lift(ctx_.ring().mul(c, cc))), out);
    }
    return out;
  }

  SV scalar_of(const Vec& v, const std::string& what) const {
    for (const auto& [L, s] : v)
      if (!L.empty()) throw std::runtime_error(what + " does not act by a scalar on m_A: " + dump_vec(v));
    auto it = v.find(Word{});
    return it == v.end() ? ring_.zero() : it->second;
  }

  SV hw_scalar(const EnvElement<PrimeField>& u) { return scalar_of(act(u, base()), "element"); }

  // Scalar of D_i^{(k)} on m_A from the h-part of its defining sum (other chains kill m_A).
  const SV& hw_D(int i, int k) {
    auto key = std::make_pair(i, k);
    auto it = d_.find(key);
    if (it != d_.end()) return it->second;
    SV val = ring_.zero();
    if (k == 0) {
      val = ring_.one();
    } else {
      HChainCache local(ctx_.par());
      auto& cc = chains_ ? *chains_ : local;
      Vec acc;
      for (const auto& ch : cc.get(i, k)) {
        Vec v = base();
        for (std::size_t t = ch.f.size(); t-- > 0;) {
          Vec nv = act_gen(ch.f[t].x, v);
          if (ch.f[t].eta)
            for (const auto& [L, s] : v) add(nv, L, ring_.mul(ring_.from_int(ch.f[t].eta), s));
          v = std::move(nv);
          if (v.empty()) break;
        }
        for (const auto& [L, s] : v) add(acc, L, ch.sign > 0 ? s : ring_.neg(s));
      }
      val = scalar_of(acc, "D[" + std::to_string(i) + ";" + std::to_string(k) + "]");
    }
    return d_.emplace(key, val).first->second;
  }

  std::vector<SV> row_entries(int i) const { return A_.row(i); }

  // e_r(a_{i,1}+(i-1), ...)
  SV expected_D(int i, int r) const {
    std::vector<SV> vals;
    for (const auto& a : row_entries(i)) vals.push_back(ring_.add(a, ring_.from_int(i - 1)));
    return elem_sym(ring_, r, vals);
  }

  std::vector<SV> apma(int i) const {
    std::vector<SV> vals;
    for (const auto& a : row_entries(i)) vals.push_back(ring_.sub(ring_pow(ring_, a, ctx_.prime()), a));
    return vals;
  }

  SV expected_hatB_scalar(int i, int r) const { return elem_sym(ring_, r, apma(i)); }

  SV expected_B_scalar(int i, int r) const {
    auto vals = apma(i);
    SV out = ring_.zero();
    for (const auto& d : d_sequences(ctx_.pyr().p(i), r, ctx_.prime(), i).seqs) {
      std::vector<int> tail(d.begin() + 1, d.end());
      int k = 0;
      for (int x : tail) k += x;
      out = ring_.add(out, ring_.mul(ring_.from_big(multinomial(tail)), elem_sym(ring_, k, vals)));
    }
    return out;
  }

  // u^{-m} coefficient of prod_j d_i(u - j), d_i the scalar series of D_i(u) on m_A.
  SV B_scalar(int i, int m) {
    using T = Scalar<S>;
    auto series = [&] {
      LaurentSeries<T> s(T{&ring_, ring_.zero()}, T{&ring_, ring_.one()}, -m);
      for (int k = 0; k <= m; ++k) s.set(-k, T{&ring_, hw_D(i, k)});
      return s;
    };
    auto acc = series();
    for (unsigned j = 1; j < ctx_.prime(); ++j) acc = series_multiply(acc, shift_u(series(), j));
    return acc.coeff(-m).v;
  }

  SV hatB_scalar(int i, int r) {
    unsigned p = ctx_.prime();
    auto X = unitriangular_inverse(hat_B_matrix(ctx_.pyr().p(i), p), p);
    SV out = ring_.zero();
    for (int s = 1; s <= r; ++s)
      if (X[s][r]) out = ring_.add(out, ring_.mul(ring_.from_int(static_cast<long long>(X[s][r])), B_scalar(i, s * static_cast<int>(p))));
    return out;
  }

  struct Probe {
    bool ok = false;
    SV hatB, xi, expected, B, expected_B;
    std::string detail;
  };

  Probe main_theorem_probe(int i, int r) {
    Probe pr;
    pr.expected = expected_hatB_scalar(i, r);
    pr.hatB = hatB_scalar(i, r);
    pr.xi = hw_scalar(ctx_.p_centre_D(i, r));
    pr.B = B_scalar(i, r * static_cast<int>(ctx_.prime()));
    pr.expected_B = expected_B_scalar(i, r);
    bool a = ring_.equal(pr.hatB, pr.expected), b = ring_.equal(pr.xi, pr.expected),
         c = ring_.equal(pr.B, pr.expected_B);
    pr.ok = a && b && c;
    if (!pr.ok)
      pr.detail = "i=" + std::to_string(i) + " r=" + std::to_string(r) + " hatB=" + ring_.str(pr.hatB) +
                  " xi=" + ring_.str(pr.xi) + " e_r(a^p-a)=" + ring_.str(pr.expected) + " B=" + ring_.str(pr.B) +
                  " expectedB=" + ring_.str(pr.expected_B);
    return pr;
  }

  std::string dump_vec(const Vec& v) const {
    std::vector<std::pair<Word, SV>> ts(v.begin(), v.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [L, s] : ts) {
      if (!out.empty()) out += " + ";
      out += "(" + ring_.str(s) + ")";
      if (!L.empty()) out += "*" + dump_word<PrimeField>(ctx_.par().p, L);
      out += "*m_A";
    }
    return out.empty() ? "0" : out;
  }

 private:
  SV lift(std::uint64_t c) const { return ring_.from_int(static_cast<long long>(c)); }

  void add(Vec& v, const Word& L, const SV& s) const {
    if (ring_.is_zero(s)) return;
    auto [it, fresh] = v.try_emplace(L, s);
    if (fresh) return;
    it->second = ring_.add(it->second, s);
    if (ring_.is_zero(it->second)) v.erase(it);
  }

  // PBW word L.H.R.N applied to m_A: raising and nilradical factors kill it, Cartan ones scale.
  void evaluate(const Word& W, SV c, Vec& out) const {
    const auto& D = ctx_.par();
    std::size_t k = 0;
    while (k < W.size() && D.cls[W[k]] == UnitClass::lowering) ++k;
    for (std::size_t t = k; t < W.size(); ++t) {
      if (D.cls[W[t]] != UnitClass::cartan) return;
      c = ring_.mul(c, lam_[D.unit[W[t]].first]);
    }
    add(out, Word(W.begin(), W.begin() + static_cast<long>(k)), c);
  }

  WContext<PrimeField>& ctx_;
  S ring_;
  Tableau<SV> A_;
  HChainCache* chains_;
  std::vector<SV> lam_;
  std::map<std::pair<int, int>, SV> d_;
};

}  // namespace modw
