#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace modw {

// Ring value wrapped so scalar series share the code path of EnvElement series.
template <Ring S>
struct Scalar {
  const S* ring = nullptr;
  typename S::value_type v;

  const S& ring_ref() const { return *ring; }
  Scalar operator+(const Scalar& o) const { return {ring, ring->add(v, o.v)}; }
  Scalar operator*(const Scalar& o) const { return {ring, ring->mul(v, o.v)}; }
  Scalar scaled(const typename S::value_type& c) const { return {ring, ring->mul(c, v)}; }
  bool is_zero() const { return ring->is_zero(v); }
  bool operator==(const Scalar& o) const { return ring->equal(v, o.v); }
};

namespace detail {
template <class T>
T scale_big(const T& x, const bigint& b) {
  if constexpr (requires { x.ring_ref(); })
    return x.scaled(x.ring_ref().from_big(b));
  else
    return x.scaled(x.ring().from_big(b));
}
}  // namespace detail

// Series sum_e a_e u^e with finitely many positive powers.  Coefficients at exponents below
// low() are unknown; exact series know every coefficient.
template <class T>
class LaurentSeries {
 public:
  LaurentSeries(T zero, T one, int low, bool exact = false)
      : zero_(std::move(zero)), one_(std::move(one)), low_(low), exact_(exact) {}

  static LaurentSeries constant(T zero, T one) {
    LaurentSeries s(zero, one, 0, true);
    s.set(0, one);
    return s;
  }

  bool exact() const { return exact_; }
  int low() const { return exact_ ? INT_MIN : low_; }
  int top() const { return c_.empty() ? INT_MIN : c_.rbegin()->first; }
  bool known(int e) const { return exact_ || e >= low_; }
  const std::map<int, T>& stored() const { return c_; }
  const T& zero() const { return zero_; }
  const T& one() const { return one_; }

  T coeff(int e) const {
    if (!known(e))
      throw std::out_of_range("series coefficient u^" + std::to_string(e) + " is beyond the truncation (known down to u^" +
                              std::to_string(low_) + ")");
    auto it = c_.find(e);
    return it == c_.end() ? zero_ : it->second;
  }

  void set(int e, T x) {
    if (!known(e)) throw std::out_of_range("set: exponent below truncation");
    if (x.is_zero())
      c_.erase(e);
    else
      c_.insert_or_assign(e, std::move(x));
  }
  void add(int e, const T& x) {
    if (!known(e)) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (!x.is_zero()) c_.emplace(e, x);
      return;
    }
    it->second = it->second + x;
    if (it->second.is_zero()) c_.erase(it);
  }

 private:
  T zero_, one_;
  int low_;
  bool exact_;
  std::map<int, T> c_;
};

// Exponent e is kept iff every product contributing to it used known coefficients.
template <class T>
LaurentSeries<T> series_multiply(const LaurentSeries<T>& A, const LaurentSeries<T>& B) {
  bool exact = A.exact() && B.exact();
  int low = INT_MIN;
  if (!exact) {
    long long la = A.exact() ? LLONG_MIN : static_cast<long long>(A.low()) + (B.stored().empty() ? 0 : B.top());
    long long lb = B.exact() ? LLONG_MIN : static_cast<long long>(B.low()) + (A.stored().empty() ? 0 : A.top());
    low = static_cast<int>(std::max(la, lb));
  }
  LaurentSeries<T> out(A.zero(), A.one(), low, exact);
  for (const auto& [ea, xa] : A.stored())
    for (const auto& [eb, xb] : B.stored())
      if (out.known(ea + eb)) out.add(ea + eb, xa * xb);
  return out;
}

// A(u - c), using (u-c)^{-r} = sum_k binom(r+k-1,k) c^k u^{-r-k}.
template <class T>
LaurentSeries<T> shift_u(const LaurentSeries<T>& A, long long c) {
  if (!A.exact() && A.low() > 0) throw std::invalid_argument("shift_u: truncation above u^0");
  if (A.exact() && !A.stored().empty() && A.stored().begin()->first < 0)
    throw std::invalid_argument("shift_u: exact series with an infinite tail");
  LaurentSeries<T> out(A.zero(), A.one(), A.exact() ? 0 : A.low(), A.exact());
  bigint cb(std::to_string(c));
  for (const auto& [e, x] : A.stored()) {
    if (e >= 0) {
      bigint pw = 1;
      for (int k = 0; k <= e; ++k) {
        out.add(e - k, detail::scale_big(x, binomial(e, k) * pw));
        pw *= -cb;
      }
    } else {
      int r = -e;
      bigint pw = 1;
      for (int k = 0; out.known(e - k); ++k) {
        if (k > 0 && c == 0) break;
        out.add(e - k, detail::scale_big(x, binomial(r + k - 1, k) * pw));
        pw *= cb;
      }
    }
  }
  return out;
}

// Multiplies by u^{p_1} (u-1)^{p_2} ... (u-(n-1))^{p_n}.
template <class T>
LaurentSeries<T> polynomial_prefactor(const LaurentSeries<T>& A, const std::vector<int>& exps) {
  LaurentSeries<T> poly = LaurentSeries<T>::constant(A.zero(), A.one());
  for (std::size_t k = 0; k < exps.size(); ++k) {
    LaurentSeries<T> lin(A.zero(), A.one(), 0, true);
    lin.set(1, A.one());
    lin.set(0, detail::scale_big(A.one(), bigint(-static_cast<long>(k))));
    for (int t = 0; t < exps[k]; ++t) poly = series_multiply(poly, lin);
  }
  return series_multiply(poly, A);
}

}  // namespace modw
