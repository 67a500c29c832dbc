#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace modw {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<long long> parse_ints(const std::string& s) {
  std::vector<long long> out;
  if (trim(s).empty()) return out;
  for (const auto& tok : split(s, ',')) {
    std::size_t pos = 0;
    auto t = trim(tok);
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("bad integer: '" + t + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

// n x n, 1-based access.
class ShiftMatrix {
 public:
  ShiftMatrix() = default;
  explicit ShiftMatrix(int n) : n_(n), s_(static_cast<std::size_t>(n) * n, 0) {}
  explicit ShiftMatrix(const std::vector<std::vector<int>>& rows) : ShiftMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
      if (static_cast<int>(rows[i].size()) != n_) throw std::invalid_argument("shift matrix must be square");
      for (int j = 0; j < n_; ++j) at(i + 1, j + 1) = rows[i][j];
    }
    validate();
  }

  // From superdiagonal s_{i,i+1} and subdiagonal s_{i+1,i}.
  static ShiftMatrix from_diagonals(const std::vector<int>& upper, const std::vector<int>& lower) {
    if (upper.size() != lower.size()) throw std::invalid_argument("sigma: upper/lower lengths differ");
    ShiftMatrix m(static_cast<int>(upper.size()) + 1);
    for (int i = 1; i <= m.n_; ++i)
      for (int j = i + 1; j <= m.n_; ++j) {
        m.at(i, j) = m.at(i, j - 1) + upper[j - 2];
        m.at(j, i) = m.at(j - 1, i) + lower[j - 2];
      }
    m.validate();
    return m;
  }

  int n() const { return n_; }
  int operator()(int i, int j) const { return s_[idx(i, j)]; }
  int& at(int i, int j) { return s_[idx(i, j)]; }

  void validate() const {
    for (int i = 1; i <= n_; ++i) {
      if ((*this)(i, i) != 0) throw std::invalid_argument("sigma: nonzero diagonal");
      for (int j = 1; j <= n_; ++j)
        if ((*this)(i, j) < 0) throw std::invalid_argument("sigma: negative entry");
    }
    for (int i = 1; i <= n_; ++i)
      for (int k = 1; k <= n_; ++k)
        for (int j = 1; j <= n_; ++j) {
          bool monotone = (i <= k && k <= j) || (i >= k && k >= j);
          if (monotone && (*this)(i, j) != (*this)(i, k) + (*this)(k, j))
            throw std::invalid_argument("sigma: additivity fails at (" + std::to_string(i) + "," +
                                        std::to_string(k) + "," + std::to_string(j) + ")");
        }
  }

  bool operator==(const ShiftMatrix& o) const { return n_ == o.n_ && s_ == o.s_; }

  std::string str() const {
    std::string out = "[";
    for (int i = 1; i <= n_; ++i) {
      out += i > 1 ? ",[" : "[";
      for (int j = 1; j <= n_; ++j) out += (j > 1 ? "," : "") + std::to_string((*this)(i, j));
      out += "]";
    }
    return out + "]";
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("sigma index");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_ = 0;
  std::vector<int> s_;
};

// "upper=1,1 lower=0,1" lists the super/subdiagonals.  A ';' inside a list switches to
// full triangles: upper rows s_{i,i+1..n}, lower columns s_{i+1..n,i}.
inline ShiftMatrix parse_shift_matrix(const std::string& text) {
  std::string up, lo;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("upper=", 0) == 0)
      up = tok.substr(6);
    else if (tok.rfind("lower=", 0) == 0)
      lo = tok.substr(6);
    else
      throw std::invalid_argument("sigma: unexpected token '" + tok + "'");
  }
  bool triangle = up.find(';') != std::string::npos || lo.find(';') != std::string::npos;
  if (!triangle) {
    std::vector<int> u, l;
    for (auto v : detail::parse_ints(up)) u.push_back(static_cast<int>(v));
    for (auto v : detail::parse_ints(lo)) l.push_back(static_cast<int>(v));
    return ShiftMatrix::from_diagonals(u, l);
  }
  auto urows = detail::split(up, ';');
  auto lcols = detail::split(lo, ';');
  if (urows.size() != lcols.size()) throw std::invalid_argument("sigma: triangle shapes differ");
  int n = static_cast<int>(urows.size()) + 1;
  ShiftMatrix m(n);
  for (int i = 1; i < n; ++i) {
    auto u = detail::parse_ints(urows[i - 1]);
    auto l = detail::parse_ints(lcols[i - 1]);
    if (static_cast<int>(u.size()) != n - i || static_cast<int>(l.size()) != n - i)
      throw std::invalid_argument("sigma: triangle row " + std::to_string(i) + " has wrong length");
    for (int j = i + 1; j <= n; ++j) {
      m.at(i, j) = static_cast<int>(u[j - i - 1]);
      m.at(j, i) = static_cast<int>(l[j - i - 1]);
    }
  }
  m.validate();
  return m;
}

// Boxes numbered along rows, left to right, top row first.  Rows and columns are 1-based,
// row 1 is the top row, row n the bottom one.
class Pyramid {
 public:
  static Pyramid from_q(std::vector<int> q) {
    if (q.empty()) throw std::invalid_argument("pyramid: empty column list");
    for (int h : q)
      if (h <= 0) throw std::invalid_argument("pyramid: column heights must be positive");
    std::size_t peak = std::max_element(q.begin(), q.end()) - q.begin();
    for (std::size_t c = 1; c <= peak; ++c)
      if (q[c] < q[c - 1]) throw std::invalid_argument("pyramid: column heights not unimodal");
    for (std::size_t c = peak + 1; c < q.size(); ++c)
      if (q[c] > q[c - 1]) throw std::invalid_argument("pyramid: column heights not unimodal");

    Pyramid P;
    P.q_ = std::move(q);
    P.n_ = P.q_[peak];
    int l = static_cast<int>(P.q_.size());
    P.left_.assign(P.n_ + 1, 0);
    P.right_.assign(P.n_ + 1, 0);
    P.box_at_.assign(static_cast<std::size_t>(P.n_ + 1) * (l + 1), 0);
    P.row_.push_back(0);
    P.col_.push_back(0);
    int b = 0;
    for (int i = 1; i <= P.n_; ++i) {
      for (int c = 1; c <= l; ++c) {
        if (P.q_[c - 1] < P.n_ - i + 1) continue;
        if (P.left_[i] == 0) P.left_[i] = c;
        P.right_[i] = c;
        ++b;
        P.row_.push_back(i);
        P.col_.push_back(c);
        P.box_at_[static_cast<std::size_t>(i) * (l + 1) + c] = b;
      }
    }
    P.N_ = b;
    return P;
  }

  static Pyramid from_sigma_level(const ShiftMatrix& s, int l) {
    int n = s.n();
    if (l <= s(1, n) + s(n, 1))
      throw std::invalid_argument("level too small: need l > s_{1,n} + s_{n,1} = " +
                                  std::to_string(s(1, n) + s(n, 1)));
    std::vector<int> q(l, 0);
    for (int i = 1; i <= n; ++i) {
      int left = 1 + s(n, i), right = l - s(i, n);
      for (int c = left; c <= right; ++c) ++q[c - 1];
    }
    return from_q(q);
  }

  const std::vector<int>& q() const { return q_; }
  int n() const { return n_; }
  int l() const { return static_cast<int>(q_.size()); }
  int N() const { return N_; }
  int row(int box) const { return row_.at(box); }
  int col(int box) const { return col_.at(box); }
  int left(int i) const { return left_.at(i); }
  int right(int i) const { return right_.at(i); }
  int p(int i) const { return right_.at(i) - left_.at(i) + 1; }
  std::vector<int> partition() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i) out.push_back(p(i));
    return out;
  }
  // 0 if there is no box there.
  int box(int i, int c) const {
    if (i < 1 || i > n_ || c < 1 || c > l()) return 0;
    return box_at_[static_cast<std::size_t>(i) * (l() + 1) + c];
  }
  std::vector<int> row_boxes(int i) const {
    std::vector<int> out;
    for (int c = left(i); c <= right(i); ++c) out.push_back(box(i, c));
    return out;
  }

  ShiftMatrix sigma() const {
    ShiftMatrix s(n_);
    for (int i = 1; i <= n_; ++i)
      for (int j = i; j <= n_; ++j) {
        s.at(j, i) = left_[i] - left_[j];
        s.at(i, j) = right_[j] - right_[i];
      }
    return s;
  }

  bool left_justified() const {
    for (int i = 1; i <= n_; ++i)
      if (left_[i] != 1) return false;
    return true;
  }

  std::string diagram() const {
    std::string out;
    int w = static_cast<int>(std::to_string(N_).size());
    for (int i = 1; i <= n_; ++i) {
      for (int c = 1; c <= l(); ++c) {
        int b = box(i, c);
        std::string cell = b ? std::to_string(b) : "";
        out += "|" + std::string(w - cell.size(), ' ') + cell;
      }
      out += "|\n";
    }
    return out;
  }

  bool operator==(const Pyramid& o) const { return q_ == o.q_; }

 private:
  std::vector<int> q_;
  int n_ = 0, N_ = 0;
  std::vector<int> left_, right_, row_, col_, box_at_;
};

inline std::pair<ShiftMatrix, int> shift_from_pyramid(const Pyramid& P) { return {P.sigma(), P.p(P.n())}; }

inline std::vector<int> partition_from_sigma_level(const ShiftMatrix& s, int l) {
  int n = s.n();
  if (l <= s(1, n) + s(n, 1))
    throw std::invalid_argument("level too small: need l > s_{1,n} + s_{n,1} = " +
                                std::to_string(s(1, n) + s(n, 1)));
  std::vector<int> p;
  for (int i = 1; i <= n; ++i) p.push_back(l - s(i, n) - s(n, i));
  return p;
}

inline Pyramid pyramid_from_sigma_level(const ShiftMatrix& s, int l) { return Pyramid::from_sigma_level(s, l); }

// Rows flush left; p must be nondecreasing (top row shortest).
inline Pyramid left_justified_pyramid(const std::vector<int>& p) {
  if (p.empty() || !std::is_sorted(p.begin(), p.end()) || p.front() <= 0)
    throw std::invalid_argument("left_justified_pyramid: need a nondecreasing positive partition");
  std::vector<int> q;
  for (int c = 1; c <= p.back(); ++c)
    q.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [&](int x) { return x >= c; })));
  return Pyramid::from_q(q);
}

inline Pyramid parse_pyramid(const std::string& text) {
  std::vector<int> q;
  for (auto v : detail::parse_ints(text)) q.push_back(static_cast<int>(v));
  return Pyramid::from_q(q);
}

inline std::string join(const std::vector<int>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

// All unimodal compositions of N, lexicographic.
inline std::vector<Pyramid> all_pyramids(int N) {
  std::vector<Pyramid> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      try {
        out.push_back(Pyramid::from_q(cur));
      } catch (const std::invalid_argument&) {
      }
      return;
    }
    for (int h = 1; h <= left; ++h) {
      cur.push_back(h);
      self(self, left - h);
      cur.pop_back();
    }
  };
  rec(rec, N);
  return out;
}

// Entries indexed by box (entries[b-1] for box b).  V needs operator<.
template <class V>
struct Tableau {
  Pyramid pyramid;
  std::vector<V> entries;

  Tableau(Pyramid P, std::vector<V> e) : pyramid(std::move(P)), entries(std::move(e)) {
    if (static_cast<int>(entries.size()) != pyramid.N()) throw std::invalid_argument("tableau: entry count != N");
  }

  const V& at(int box) const { return entries.at(box - 1); }

  std::vector<V> row(int i) const {
    std::vector<V> out;
    for (int b : pyramid.row_boxes(i)) out.push_back(at(b));
    return out;
  }

  std::vector<std::vector<V>> canonical_rows() const {
    std::vector<std::vector<V>> out;
    for (int i = 1; i <= pyramid.n(); ++i) {
      auto r = row(i);
      std::sort(r.begin(), r.end());
      out.push_back(std::move(r));
    }
    return out;
  }
};

template <class V>
bool row_equivalent(const Tableau<V>& a, const Tableau<V>& b) {
  if (!(a.pyramid == b.pyramid)) throw std::invalid_argument("row_equivalent: pyramid mismatch");
  return a.canonical_rows() == b.canonical_rows();
}

// "r1=a,b;r2=c,d,e", integers reduced mod p.
inline Tableau<std::uint64_t> parse_tableau(const Pyramid& P, const std::string& text, std::uint64_t p) {
  std::vector<std::uint64_t> e(P.N(), 0);
  std::vector<bool> seen(P.n() + 1, false);
  for (const auto& part : detail::split(text, ';')) {
    auto t = detail::trim(part);
    auto eq = t.find('=');
    if (t.size() < 2 || t[0] != 'r' || eq == std::string::npos)
      throw std::invalid_argument("tableau: expected r<i>=..., got '" + t + "'");
    int i = std::stoi(t.substr(1, eq - 1));
    if (i < 1 || i > P.n() || seen[i]) throw std::invalid_argument("tableau: bad or repeated row " + t);
    seen[i] = true;
    auto vals = detail::parse_ints(t.substr(eq + 1));
    auto boxes = P.row_boxes(i);
    if (vals.size() != boxes.size())
      throw std::invalid_argument("tableau: row " + std::to_string(i) + " needs " + std::to_string(boxes.size()) +
                                  " entries");
    for (std::size_t k = 0; k < vals.size(); ++k) {
      long long m = vals[k] % static_cast<long long>(p);
      e[boxes[k] - 1] = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p) : m);
    }
  }
  for (int i = 1; i <= P.n(); ++i)
    if (!seen[i]) throw std::invalid_argument("tableau: row " + std::to_string(i) + " missing");
  return Tableau<std::uint64_t>(P, std::move(e));
}

}  // namespace modw
