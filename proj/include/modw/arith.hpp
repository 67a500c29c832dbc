#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modw {

using bigint = mpz_class;

// Minimal commutative ring interface. Every higher layer is templated on it.
template <class R>
concept Ring = requires(const R& r, const typename R::value_type& a, long long n, const bigint& b) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.equal(a, a) } -> std::convertible_to<bool>;
  { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
  { r.from_big(b) } -> std::convertible_to<typename R::value_type>;
  { r.str(a) } -> std::convertible_to<std::string>;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
    if (p >= (1ull << 31)) throw std::invalid_argument("prime too large: " + std::to_string(p));
  }

  std::uint64_t p() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type mul(value_type a, value_type b) const { return a * b % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type from_int(long long n) const {
    long long m = n % static_cast<long long>(p_);
    return static_cast<value_type>(m < 0 ? m + static_cast<long long>(p_) : m);
  }
  value_type from_big(const bigint& b) const {
    bigint m = b % static_cast<unsigned long>(p_);
    if (m < 0) m += static_cast<unsigned long>(p_);
    return m.get_ui();
  }

  value_type pow(value_type a, std::uint64_t k) const {
    value_type r = 1;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  // Representative in (-p/2, p/2].
  long long symmetric(value_type a) const {
    auto v = static_cast<long long>(a);
    return 2 * v > static_cast<long long>(p_) ? v - static_cast<long long>(p_) : v;
  }
  std::string str(value_type a) const { return std::to_string(symmetric(a)); }

 private:
  std::uint64_t p_;
};

class Integers {
 public:
  using value_type = bigint;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type from_int(long long n) const { return bigint(std::to_string(n)); }
  value_type from_big(const bigint& b) const { return b; }
  std::string str(const value_type& a) const { return a.get_str(); }
};

// R[var]; coefficients indexed by degree, trailing zeros never stored.
template <Ring R>
class Polynomials {
 public:
  using base_value = typename R::value_type;
  using value_type = std::vector<base_value>;

  explicit Polynomials(R base, std::string var = "t") : base_(std::move(base)), var_(std::move(var)) {}

  const R& base() const { return base_; }
  const std::string& var() const { return var_; }

  value_type zero() const { return {}; }
  value_type one() const { return {base_.one()}; }
  value_type gen() const { return {base_.zero(), base_.one()}; }
  value_type constant(const base_value& c) const { return trim({c}); }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r(std::max(a.size(), b.size()), base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = base_.add(r[i], b[i]);
    return trim(std::move(r));
  }
  value_type neg(const value_type& a) const {
    value_type r(a.size(), base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const { return add(a, neg(b)); }
  value_type mul(const value_type& a, const value_type& b) const {
    if (a.empty() || b.empty()) return {};
    value_type r(a.size() + b.size() - 1, base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (base_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
    }
    return trim(std::move(r));
  }
  value_type scale(const base_value& c, const value_type& a) const {
    value_type r(a.size(), base_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.mul(c, a[i]);
    return trim(std::move(r));
  }
  value_type pow(value_type a, unsigned k) const {
    value_type r = one();
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  bool is_zero(const value_type& a) const { return a.empty(); }
  bool equal(const value_type& a, const value_type& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }
  value_type from_int(long long n) const { return constant(base_.from_int(n)); }
  value_type from_big(const bigint& b) const { return constant(base_.from_big(b)); }
  int degree(const value_type& a) const { return static_cast<int>(a.size()) - 1; }

  base_value eval(const value_type& a, const base_value& x) const {
    base_value r = base_.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = base_.add(base_.mul(r, x), a[i]);
    return r;
  }

  std::string str(const value_type& a) const {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (base_.is_zero(a[i])) continue;
      std::string c = base_.str(a[i]);
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += c;
        continue;
      }
      if (c != "1") out += (c.find(' ') != std::string::npos ? "(" + c + ")" : c) + "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  value_type trim(value_type v) const {
    while (!v.empty() && base_.is_zero(v.back())) v.pop_back();
    return v;
  }

 private:
  R base_;
  std::string var_;
};

template <Ring R>
typename R::value_type ring_pow(const R& ring, typename R::value_type a, unsigned k) {
  auto r = ring.one();
  while (k) {
    if (k & 1) r = ring.mul(r, a);
    a = ring.mul(a, a);
    k >>= 1;
  }
  return r;
}

// e_r(values), e_0 = 1, e_r = 0 for r > #values.
template <Ring R>
typename R::value_type elem_sym(const R& ring, int r, const std::vector<typename R::value_type>& values) {
  if (r < 0) throw std::invalid_argument("elem_sym: negative index");
  if (static_cast<std::size_t>(r) > values.size()) return ring.zero();
  std::vector<typename R::value_type> e(r + 1, ring.zero());
  e[0] = ring.one();
  for (const auto& v : values)
    for (int k = r; k >= 1; --k) e[k] = ring.add(e[k], ring.mul(v, e[k - 1]));
  return e[r];
}

// prod_{j<p} (t - a - j) over R[t], by naive expansion.
template <Ring R>
typename Polynomials<R>::value_type shifted_wilson_poly(const R& ring, std::uint64_t p,
                                                        const typename R::value_type& a) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  Polynomials<R> P(ring);
  auto acc = P.one();
  for (std::uint64_t j = 0; j < p; ++j) {
    auto c = ring.neg(ring.add(a, ring.from_int(static_cast<long long>(j))));
    acc = P.mul(acc, {c, ring.one()});
  }
  return acc;
}

inline Polynomials<PrimeField>::value_type wilson_poly(std::uint64_t p) {
  PrimeField F(p);
  return shifted_wilson_poly(F, p, F.zero());
}

inline bigint binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  bigint r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline bigint factorial(long n) {
  bigint r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// (sum parts)! / prod parts!
inline bigint multinomial(const std::vector<int>& parts) {
  long total = 0;
  bigint den = 1;
  for (int d : parts) {
    total += d;
    den *= factorial(d);
  }
  return factorial(total) / den;
}

}  // namespace modw
