#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "liealg.hpp"

namespace modw {

// PBW monomial: nondecreasing list of basis indices (a basis index repeated k times is x^k).
using Word = std::vector<std::uint16_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ w.size());
  }
};

template <Ring R>
using Terms = std::unordered_map<Word, typename R::value_type, WordHash>;

template <Ring R>
void add_term(const R& ring, Terms<R>& out, const Word& w, const typename R::value_type& c) {
  if (ring.is_zero(c)) return;
  auto [it, fresh] = out.try_emplace(w, c);
  if (fresh) return;
  it->second = ring.add(it->second, c);
  if (ring.is_zero(it->second)) out.erase(it);
}

template <Ring R>
class EnvElement;

// U(L) for a structure-constant algebra L; the basis order of L is the PBW order.
template <Ring R>
class Envelope : public std::enable_shared_from_this<Envelope<R>> {
 public:
  using V = typename R::value_type;

  static std::shared_ptr<Envelope> create(std::shared_ptr<const LieAlgebra> L, R ring) {
    return std::shared_ptr<Envelope>(new Envelope(std::move(L), std::move(ring)));
  }

  const LieAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return alg_; }
  const R& ring() const { return ring_; }
  std::size_t dim() const { return alg_->dim(); }

  EnvElement<R> zero() { return EnvElement<R>(this->shared_from_this()); }
  EnvElement<R> scalar(const V& c) {
    Terms<R> t;
    add_term(ring_, t, Word{}, c);
    return EnvElement<R>(this->shared_from_this(), std::move(t));
  }
  EnvElement<R> one() { return scalar(ring_.one()); }
  EnvElement<R> gen(int a) {
    if (a < 0 || static_cast<std::size_t>(a) >= dim()) throw std::out_of_range("generator index");
    Terms<R> t;
    t.emplace(Word{static_cast<std::uint16_t>(a)}, ring_.one());
    return EnvElement<R>(this->shared_from_this(), std::move(t));
  }
  EnvElement<R> linear(const SparseInt& x) {
    Terms<R> t;
    for (auto [a, c] : x) add_term(ring_, t, Word{static_cast<std::uint16_t>(a)}, ring_.from_int(c));
    return EnvElement<R>(this->shared_from_this(), std::move(t));
  }
  EnvElement<R> from_terms(Terms<R> t) { return EnvElement<R>(this->shared_from_this(), std::move(t)); }

  // out += c * (x * w), w in normal form.
  void lmul_into(int x, const Word& w, const V& c, Terms<R>& out) {
    if (ring_.is_zero(c)) return;
    if (w.empty() || x <= w[0]) {
      Word nw;
      nw.reserve(w.size() + 1);
      nw.push_back(static_cast<std::uint16_t>(x));
      nw.insert(nw.end(), w.begin(), w.end());
      add_term(ring_, out, nw, c);
      return;
    }
    const Terms<R>& r = straighten(x, w);
    for (const auto& [ww, cc] : r) add_term(ring_, out, ww, ring_.mul(c, cc));
  }

  Terms<R> lmul(int x, const Terms<R>& t) {
    Terms<R> out;
    for (const auto& [w, c] : t) lmul_into(x, w, c, out);
    return out;
  }

  // Left multiplication by a normal-form word.
  Terms<R> word_times(const Word& w, Terms<R> t) {
    for (std::size_t i = w.size(); i-- > 0;) t = lmul(w[i], t);
    return t;
  }

  Terms<R> multiply(const Terms<R>& a, const Terms<R>& b) {
    trim_cache();
    Terms<R> out;
    for (const auto& [w, c] : a) {
      Terms<R> cur = word_times(w, b);
      for (const auto& [ww, cc] : cur) add_term(ring_, out, ww, ring_.mul(c, cc));
    }
    return out;
  }

  // Normal form of an arbitrary (unsorted) word.
  Terms<R> normal_form(const std::vector<int>& word, const V& c) {
    Terms<R> t;
    add_term(ring_, t, Word{}, c);
    for (std::size_t i = word.size(); i-- > 0;) t = lmul(word[i], t);
    return t;
  }

  const std::vector<std::pair<int, V>>& bracket(int a, int b) {
    auto k = static_cast<std::size_t>(a) * dim() + static_cast<std::size_t>(b);
    if (!br_ready_[k]) {
      for (auto [i, c] : alg_->bracket(a, b)) br_[k].emplace_back(i, ring_.from_int(c));
      br_ready_[k] = 1;
    }
    return br_[k];
  }

  std::size_t cache_size() const { return cache_.size(); }
  void clear_cache() { cache_.clear(); }
  void set_cache_limit(std::size_t n) { cache_limit_ = n; }

 private:
  struct Key {
    int x;
    Word w;
    bool operator==(const Key& o) const { return x == o.x && w == o.w; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return WordHash{}(k.w) * 31 + static_cast<std::size_t>(k.x); }
  };

  Envelope(std::shared_ptr<const LieAlgebra> L, R ring) : alg_(std::move(L)), ring_(std::move(ring)) {
    br_.resize(dim() * dim());
    br_ready_.assign(dim() * dim(), 0);
  }

  void trim_cache() {
    if (cache_.size() > cache_limit_) cache_.clear();
  }

  // x * w for x > w[0]:  x a rest = a (x rest) + [x,a] rest.
  const Terms<R>& straighten(int x, const Word& w) {
    Key key{x, w};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    int a = w[0];
    Word rest(w.begin() + 1, w.end());
    Terms<R> xr, res;
    lmul_into(x, rest, ring_.one(), xr);
    for (const auto& [ww, cc] : xr) lmul_into(a, ww, cc, res);
    for (const auto& [y, cy] : bracket(x, a)) lmul_into(y, rest, cy, res);
    return cache_.emplace(std::move(key), std::move(res)).first->second;
  }

  std::shared_ptr<const LieAlgebra> alg_;
  R ring_;
  std::vector<std::vector<std::pair<int, V>>> br_;
  std::vector<unsigned char> br_ready_;
  std::unordered_map<Key, Terms<R>, KeyHash> cache_;
  std::size_t cache_limit_ = 4'000'000;
};

template <Ring R>
class EnvElement {
 public:
  using V = typename R::value_type;

  EnvElement() = default;
  explicit EnvElement(std::shared_ptr<Envelope<R>> env, Terms<R> t = {}) : env_(std::move(env)), t_(std::move(t)) {}

  const Terms<R>& terms() const { return t_; }
  Envelope<R>& env() const { return *env_; }
  const std::shared_ptr<Envelope<R>>& env_ptr() const { return env_; }
  const R& ring() const { return env_->ring(); }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  V coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? ring().zero() : it->second;
  }

  EnvElement operator+(const EnvElement& o) const {
    check(o);
    Terms<R> t = t_;
    for (const auto& [w, c] : o.t_) add_term(ring(), t, w, c);
    return EnvElement(env_, std::move(t));
  }
  EnvElement operator-() const {
    Terms<R> t;
    for (const auto& [w, c] : t_) t.emplace(w, ring().neg(c));
    return EnvElement(env_, std::move(t));
  }
  EnvElement operator-(const EnvElement& o) const { return *this + (-o); }
  EnvElement operator*(const EnvElement& o) const {
    check(o);
    return EnvElement(env_, env_->multiply(t_, o.t_));
  }
  EnvElement scaled(const V& c) const {
    Terms<R> t;
    for (const auto& [w, x] : t_) add_term(ring(), t, w, ring().mul(c, x));
    return EnvElement(env_, std::move(t));
  }
  EnvElement& operator+=(const EnvElement& o) {
    check(o);
    for (const auto& [w, c] : o.t_) add_term(ring(), t_, w, c);
    return *this;
  }
  void add_scaled(const EnvElement& o, const V& c) {
    check(o);
    for (const auto& [w, x] : o.t_) add_term(ring(), t_, w, ring().mul(c, x));
  }
  EnvElement pow(unsigned k) const {
    EnvElement r = env_->one();
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const EnvElement& o) const { return env_ == o.env_ && t_ == o.t_; }

 private:
  void check(const EnvElement& o) const {
    if (env_ != o.env_) throw std::invalid_argument("EnvElement: operands live in different algebras");
  }

  std::shared_ptr<Envelope<R>> env_;
  Terms<R> t_;
};

template <Ring R>
EnvElement<R> commutator(const EnvElement<R>& a, const EnvElement<R>& b) {
  return a * b - b * a;
}

template <Ring R>
EnvElement<R> ad_action(int x, const EnvElement<R>& u) {
  return commutator(u.env().gen(x), u);
}

// Coefficientwise ring change (e.g. reduction mod p); f maps source to target values.
template <Ring R, Ring S, class F>
EnvElement<S> change_ring(const EnvElement<R>& u, const std::shared_ptr<Envelope<S>>& target, F f) {
  Terms<S> t;
  for (const auto& [w, c] : u.terms()) add_term(target->ring(), t, w, f(c));
  return target->from_terms(std::move(t));
}

template <Ring S>
EnvElement<S> reduce_mod_p(const EnvElement<Integers>& u, const std::shared_ptr<Envelope<S>>& target) {
  return change_ring(u, target, [&](const bigint& c) { return target->ring().from_big(c); });
}

// Algebra homomorphism determined by generator images (in the target algebra); lift maps
// coefficients.  Suffix products are shared across terms.
template <Ring R, Ring S, class F>
EnvElement<S> substitute(const EnvElement<R>& u, const std::vector<EnvElement<S>>& images, F lift) {
  if (images.size() != u.env().dim()) throw std::invalid_argument("substitute: one image per generator required");
  auto target = images.at(0).env_ptr();
  std::unordered_map<Word, Terms<S>, WordHash> memo;
  memo.emplace(Word{}, target->one().terms());
  std::function<const Terms<S>&(const Word&)> image_of = [&](const Word& w) -> const Terms<S>& {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Word rest(w.begin() + 1, w.end());
    Terms<S> tail = image_of(rest);
    Terms<S> r = target->multiply(images[w[0]].terms(), tail);
    return memo.emplace(w, std::move(r)).first->second;
  };
  Terms<S> out;
  for (const auto& [w, c] : u.terms()) {
    auto lc = lift(c);
    for (const auto& [ww, cc] : image_of(w)) add_term(target->ring(), out, ww, target->ring().mul(lc, cc));
  }
  return target->from_terms(std::move(out));
}

enum class DegreeKind { loop, kazhdan };

template <Ring R>
int word_degree(const EnvElement<R>& u, const Word& w, DegreeKind kind) {
  const auto& g = u.env().algebra().grading;
  if (g.empty()) throw std::logic_error("degree: algebra is ungraded");
  int d = 0;
  for (auto x : w) d += g[x] + (kind == DegreeKind::kazhdan ? 1 : 0);
  return d;
}

template <Ring R>
int degree(const EnvElement<R>& u, DegreeKind kind) {
  if (u.is_zero()) throw std::domain_error("degree of zero is undefined");
  int best = INT32_MIN;
  for (const auto& [w, c] : u.terms()) best = std::max(best, word_degree(u, w, kind));
  return best;
}

template <Ring R>
EnvElement<R> gr_top(const EnvElement<R>& u, DegreeKind kind) {
  if (u.is_zero()) return u;
  int d = degree(u, kind);
  Terms<R> t;
  for (const auto& [w, c] : u.terms())
    if (word_degree(u, w, kind) == d) t.emplace(w, c);
  return u.env().from_terms(std::move(t));
}

// x -> x - sign * eta(x) on generators; eta given per basis index.
template <Ring R>
EnvElement<R> shift_automorphism(const EnvElement<R>& u, const std::vector<long long>& eta_per_basis, long long sign) {
  auto& U = u.env();
  std::vector<EnvElement<R>> images;
  for (std::size_t a = 0; a < U.dim(); ++a)
    images.push_back(U.gen(static_cast<int>(a)) - U.scalar(U.ring().from_int(sign * eta_per_basis[a])));
  return substitute(u, images, [](const auto& c) { return c; });
}

// U(g) -> U(p): trailing m-factors evaluate at chi.
template <Ring R>
EnvElement<R> pr_projection(const ParabolicData& D, const EnvElement<R>& u, const std::shared_ptr<Envelope<R>>& Up) {
  if (u.env().dim() != D.g.dim()) throw std::invalid_argument("pr: argument is not in U(g)");
  Terms<R> out;
  for (const auto& [w, c] : u.terms()) {
    Word head;
    bool in_tail = false, dead = false;
    for (auto x : w) {
      if (x < D.dim_p) {
        if (in_tail) throw std::logic_error("pr: ordering does not put m last");
        head.push_back(x);
      } else {
        in_tail = true;
        if (D.chi[x] == 0) dead = true;
      }
    }
    // chi takes values 0/1 on the basis, so surviving tails contribute 1.
    if (!dead) add_term(Up->ring(), out, head, c);
  }
  return Up->from_terms(std::move(out));
}

// x^p - x^[p].  Basis elements use the pmap; sums take the p-th matrix power.
template <Ring R>
EnvElement<R> xi_p(const std::shared_ptr<Envelope<R>>& U, const SparseInt& x) {
  const auto& L = U->algebra();
  if (L.prime == 0) throw std::logic_error("xi_p: no prime attached to the algebra");
  EnvElement<R> X = U->linear(x);
  EnvElement<R> Xp = X.pow(L.prime);
  SparseInt xp;
  if (x.size() == 1 && x[0].second == 1) {
    xp = L.pmap(x[0].first);
  } else {
    auto m = DenseMat::from_sparse(L.mat_dim, L.to_matrix(x)).reduce(L.prime);
    xp = L.from_matrix(m.power(L.prime, L.prime), L.prime);
  }
  return Xp - U->linear(xp);
}

// Conjugation by 1 + t e_{a,b} (a != b) on U(g), into U(g) over R[t].
template <Ring R>
EnvElement<Polynomials<R>> conjugate_by_root_element(const ParabolicData& D, int a, int b, const EnvElement<R>& u,
                                                     const std::shared_ptr<Envelope<Polynomials<R>>>& Ugt) {
  if (a == b) throw std::invalid_argument("conjugate_by_root_element: a == b");
  const auto& P = Ugt->ring();
  std::vector<EnvElement<Polynomials<R>>> images;
  for (std::size_t x = 0; x < D.g.dim(); ++x) {
    auto [k, l] = D.unit[x];
    Terms<Polynomials<R>> t;
    add_term(P, t, Word{static_cast<std::uint16_t>(x)}, P.one());
    if (b == k) add_term(P, t, Word{static_cast<std::uint16_t>(D.idx(a, l))}, P.gen());
    if (l == a) add_term(P, t, Word{static_cast<std::uint16_t>(D.idx(k, b))}, P.neg(P.gen()));
    if (b == k && l == a) add_term(P, t, Word{static_cast<std::uint16_t>(D.idx(a, b))}, P.neg(P.mul(P.gen(), P.gen())));
    images.push_back(Ugt->from_terms(std::move(t)));
  }
  return substitute(u, images, [&](const auto& c) { return P.constant(c); });
}

// U(p) viewed as U(g)/U(g)m_chi; g acts on the left.
template <Ring R>
class ChiQuotient {
 public:
  using V = typename R::value_type;

  ChiQuotient(const ParabolicData& D, std::shared_ptr<Envelope<R>> Up) : D_(D), Up_(std::move(Up)) {}

  void act_into(int x, const Word& v, const V& c, Terms<R>& out) {
    const auto& ring = Up_->ring();
    if (x < D_.dim_p) {
      Up_->lmul_into(x, v, c, out);
      return;
    }
    Key key{x, v};
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, compute(x, v)).first;
    for (const auto& [w, cc] : it->second) add_term(ring, out, w, ring.mul(c, cc));
  }

  Terms<R> act(int x, const Terms<R>& v) {
    Terms<R> out;
    for (const auto& [w, c] : v) act_into(x, w, c, out);
    return out;
  }

 private:
  struct Key {
    int x;
    Word w;
    bool operator==(const Key& o) const { return x == o.x && w == o.w; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return WordHash{}(k.w) * 131 + static_cast<std::size_t>(k.x); }
  };

  // y in m: y v = v y + [y, v];  v y = chi(y) v modulo U(g) m_chi.
  Terms<R> compute(int y, const Word& v) {
    const auto& ring = Up_->ring();
    Terms<R> res;
    if (D_.chi[y]) add_term(ring, res, v, ring.from_int(D_.chi[y]));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Word suffix(v.begin() + static_cast<long>(i) + 1, v.end());
      Terms<R> inner;
      for (auto [z, cz] : D_.g.bracket(y, v[i])) act_into(z, suffix, ring.from_int(cz), inner);
      if (inner.empty()) continue;
      Word prefix(v.begin(), v.begin() + static_cast<long>(i));
      for (const auto& [w, c] : Up_->word_times(prefix, std::move(inner))) add_term(ring, res, w, c);
    }
    return res;
  }

  const ParabolicData& D_;
  std::shared_ptr<Envelope<R>> Up_;
  std::unordered_map<Key, Terms<R>, KeyHash> memo_;
};

// Reduction x^p -> x^[p] on basis elements (prime field coefficients).
template <Ring R>
EnvElement<R> restricted_reduce(const EnvElement<R>& u) {
  auto& U = u.env();
  const auto& L = U.algebra();
  const auto& ring = U.ring();
  unsigned p = L.prime;
  if (p == 0) throw std::logic_error("restricted_reduce: no prime attached");
  Terms<R> pending = u.terms(), out;
  while (!pending.empty()) {
    Terms<R> next;
    for (const auto& [w, c] : pending) {
      std::size_t run = 0, start = 0;
      bool found = false;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == 0 || w[i] != w[i - 1]) {
          start = i;
          run = 0;
        }
        if (++run == p) {
          found = true;
          break;
        }
      }
      if (!found) {
        add_term(ring, out, w, c);
        continue;
      }
      int x = w[start];
      // w = prefix x^p suffix with prefix ending in x^(run-p) = nothing extra; x^p -> x^[p]
      Word prefix(w.begin(), w.begin() + static_cast<long>(start));
      Word suffix(w.begin() + static_cast<long>(start + p), w.end());
      Terms<R> mid;
      for (auto [y, cy] : L.pmap(x)) U.lmul_into(y, suffix, ring.mul(c, ring.from_int(cy)), mid);
      for (const auto& [ww, cc] : U.word_times(prefix, std::move(mid))) add_term(ring, next, ww, cc);
    }
    pending = std::move(next);
  }
  return U.from_terms(std::move(out));
}

// ---- dumps ----

template <Ring R>
std::string dump_word(const LieAlgebra& L, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += L.labels[w[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Terms by descending degree, then by word; coefficients in the ring's canonical form.
template <Ring R>
std::string dump(const EnvElement<R>& u) {
  if (u.is_zero()) return "0";
  std::vector<std::pair<Word, typename R::value_type>> ts(u.terms().begin(), u.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  const auto& L = u.env().algebra();
  std::string out;
  for (const auto& [w, c] : ts) {
    std::string cs = u.ring().str(c);
    bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos;
    if (neg) cs = cs.substr(1);
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (w.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += dump_word<R>(L, w);
    }
  }
  return out;
}

// Inverse of dump for integer coefficients: sums of signed products of integers and labels,
// with optional ^k exponents.
template <Ring R>
EnvElement<R> parse_element(const std::shared_ptr<Envelope<R>>& U, const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_element: " + why + " at offset " + std::to_string(pos));
  };
  auto factor = [&]() -> EnvElement<R> {
    skip();
    EnvElement<R> f;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t b = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      f = U->scalar(U->ring().from_big(bigint(text.substr(b, pos - b))));
    } else {
      std::size_t b = pos;
      while (pos < text.size() && text[pos] != ']') ++pos;
      if (pos == text.size()) fail("unterminated label");
      ++pos;
      std::string label = text.substr(b, pos - b);
      int idx = U->algebra().index(label);
      if (idx < 0) fail("unknown label '" + label + "'");
      f = U->gen(idx);
    }
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      std::size_t b = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (b == pos) fail("missing exponent");
      f = f.pow(static_cast<unsigned>(std::stoul(text.substr(b, pos - b))));
    }
    return f;
  };
  auto term = [&]() {
    EnvElement<R> t = factor();
    skip();
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      t = t * factor();
      skip();
    }
    return t;
  };
  EnvElement<R> acc = U->zero();
  skip();
  bool negate = false;
  if (pos < text.size() && text[pos] == '-') {
    negate = true;
    ++pos;
  }
  while (true) {
    EnvElement<R> t = term();
    acc = negate ? acc - t : acc + t;
    skip();
    if (pos == text.size()) break;
    if (text[pos] == '+')
      negate = false;
    else if (text[pos] == '-')
      negate = true;
    else
      fail("expected + or -");
    ++pos;
  }
  return acc;
}

}  // namespace modw
