#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "combin.hpp"

namespace modw {

// Sorted by index, no zero entries.
using SparseInt = std::vector<std::pair<int, long long>>;

inline SparseInt sparse_add(const SparseInt& a, const SparseInt& b, long long cb = 1) {
  std::map<int, long long> acc;
  for (auto [i, c] : a) acc[i] += c;
  for (auto [i, c] : b) acc[i] += cb * c;
  SparseInt out;
  for (auto [i, c] : acc)
    if (c != 0) out.emplace_back(i, c);
  return out;
}

// Matrix unit positions are 1-based.
struct MatEntry {
  int row, col;
  long long coef;
};
using SparseMat = std::vector<MatEntry>;

// Dense square matrix over Z (or reduced mod m when requested).
struct DenseMat {
  int n = 0;
  std::vector<long long> a;

  explicit DenseMat(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}
  static DenseMat from_sparse(int n, const SparseMat& s) {
    DenseMat m(n);
    for (const auto& e : s) m(e.row, e.col) += e.coef;
    return m;
  }
  long long& operator()(int i, int j) { return a[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }
  long long operator()(int i, int j) const { return a[static_cast<std::size_t>(i - 1) * n + (j - 1)]; }

  DenseMat mul(const DenseMat& o, long long mod = 0) const {
    DenseMat r(n);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        long long x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 1; j <= n; ++j) {
          r(i, j) += x * o(k, j);
          if (mod) r(i, j) %= mod;
        }
      }
    return r;
  }
  DenseMat sub(const DenseMat& o) const {
    DenseMat r(n);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
    return r;
  }
  DenseMat reduce(long long mod) const {
    DenseMat r(n);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = ((a[k] % mod) + mod) % mod;
    return r;
  }
  DenseMat power(unsigned k, long long mod) const {
    DenseMat r(n);
    for (int i = 1; i <= n; ++i) r(i, i) = 1;
    for (unsigned t = 0; t < k; ++t) r = r.mul(*this, mod);
    return r;
  }
  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
  }
  bool operator==(const DenseMat& o) const { return n == o.n && a == o.a; }
};

class LieAlgebra {
 public:
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> grading;  // empty when ungraded
  unsigned prime = 0;        // pmap tables refer to this prime; 0 = no pmap
  int mat_dim = 0;           // 0 = no matrix realization
  std::vector<SparseMat> realization;

  LieAlgebra() = default;
  LieAlgebra(std::string nm, std::vector<std::string> labs) : name(std::move(nm)), labels(std::move(labs)) {
    auto d = labels.size();
    br_.assign(d * d, {});
    br_cap_.assign(d * d, 0);
    pm_.assign(d, {});
    pm_cap_.assign(d, 0);
    for (std::size_t a = 0; a < d; ++a) lookup_[labels[a]] = static_cast<int>(a);
  }

  std::size_t dim() const { return labels.size(); }

  const SparseInt& bracket(int a, int b) const {
    auto k = key(a, b);
    if (br_cap_[k]) throw std::out_of_range("bracket [" + labels[a] + "," + labels[b] + "] exceeds the degree cap");
    return br_[k];
  }
  bool bracket_capped(int a, int b) const { return br_cap_[key(a, b)] != 0; }
  void set_bracket(int a, int b, SparseInt v) {
    SparseInt neg = v;
    for (auto& t : neg) t.second = -t.second;
    br_[key(a, b)] = std::move(v);
    br_[key(b, a)] = std::move(neg);
  }
  void cap_bracket(int a, int b) {
    br_cap_[key(a, b)] = 1;
    br_cap_[key(b, a)] = 1;
  }

  const SparseInt& pmap(int a) const {
    if (prime == 0) throw std::logic_error(name + ": no [p]-map attached");
    if (pm_cap_[a]) throw std::out_of_range(labels[a] + "^[p] exceeds the degree cap");
    return pm_[a];
  }
  bool pmap_capped(int a) const { return pm_cap_[a] != 0; }
  void set_pmap(int a, SparseInt v) { pm_[a] = std::move(v); }
  void cap_pmap(int a) { pm_cap_[a] = 1; }

  int index(const std::string& label) const {
    auto it = lookup_.find(label);
    return it == lookup_.end() ? -1 : it->second;
  }

  // Linear combination of basis elements -> matrix in the realization.
  SparseMat to_matrix(const SparseInt& x) const {
    std::map<std::pair<int, int>, long long> acc;
    for (auto [a, c] : x)
      for (const auto& e : realization.at(a)) acc[{e.row, e.col}] += c * e.coef;
    SparseMat out;
    for (auto& [rc, c] : acc)
      if (c) out.push_back({rc.first, rc.second, c});
    return out;
  }

  // Inverse of to_matrix; basis realizations must have disjoint supports.  Entries are
  // compared after reduction by `mod` when nonzero.
  SparseInt from_matrix(const DenseMat& m, long long mod = 0) const {
    if (mat_dim == 0) throw std::logic_error(name + ": no matrix realization");
    auto norm = [&](long long x) { return mod ? ((x % mod) + mod) % mod : x; };
    SparseInt out;
    DenseMat rest = m;
    for (std::size_t a = 0; a < dim(); ++a) {
      const auto& r = realization[a];
      if (r.empty()) continue;
      long long c = norm(m(r[0].row, r[0].col)) ;
      if (r[0].coef != 1) throw std::logic_error("from_matrix: leading coefficient must be 1");
      if (c == 0) continue;
      out.emplace_back(static_cast<int>(a), c);
      for (const auto& e : r) rest(e.row, e.col) -= c * e.coef;
    }
    for (auto& x : rest.a)
      if (norm(x) != 0) throw std::invalid_argument(name + ": matrix is not in the span of the basis");
    return out;
  }

 private:
  std::size_t key(int a, int b) const { return static_cast<std::size_t>(a) * dim() + static_cast<std::size_t>(b); }

  std::vector<SparseInt> br_;
  std::vector<unsigned char> br_cap_;
  std::vector<SparseInt> pm_;
  std::vector<unsigned char> pm_cap_;
  std::unordered_map<std::string, int> lookup_;
};

inline std::string unit_label(int i, int j) { return "e[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

// gl_N with basis e_{i,j} in the given order (default: row-major).
inline LieAlgebra build_gl(int N, std::vector<std::pair<int, int>> order = {}, unsigned prime = 0) {
  if (N < 1) throw std::invalid_argument("build_gl: N >= 1 required");
  if (order.empty())
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) order.emplace_back(i, j);
  if (static_cast<int>(order.size()) != N * N) throw std::invalid_argument("build_gl: order must list N^2 units");
  std::vector<std::string> labels;
  std::vector<int> pos(N * N, -1);
  for (std::size_t a = 0; a < order.size(); ++a) {
    auto [i, j] = order[a];
    labels.push_back(unit_label(i, j));
    pos[(i - 1) * N + (j - 1)] = static_cast<int>(a);
  }
  LieAlgebra g("gl_" + std::to_string(N), labels);
  g.prime = prime;
  g.mat_dim = N;
  auto at = [&](int i, int j) { return pos[(i - 1) * N + (j - 1)]; };
  for (std::size_t a = 0; a < order.size(); ++a) {
    auto [i, j] = order[a];
    g.realization.push_back({{i, j, 1}});
    if (i == j) g.set_pmap(static_cast<int>(a), {{static_cast<int>(a), 1}});
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      auto [k, l] = order[b];
      // [e_ij, e_kl] = d_jk e_il - d_li e_kj
      SparseInt v;
      if (j == k) v = sparse_add(v, {{at(i, l), 1}});
      if (l == i) v = sparse_add(v, {{at(k, j), -1}});
      g.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
    }
  }
  return g;
}

// Subalgebra on the listed basis indices (must be closed under bracket and pmap).
inline LieAlgebra subalgebra(const LieAlgebra& L, const std::vector<int>& idx, const std::string& name) {
  std::vector<std::string> labels;
  std::unordered_map<int, int> remap;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    labels.push_back(L.labels[idx[a]]);
    remap[idx[a]] = static_cast<int>(a);
  }
  auto conv = [&](const SparseInt& v) {
    SparseInt out;
    for (auto [i, c] : v) {
      auto it = remap.find(i);
      if (it == remap.end()) throw std::logic_error(name + ": not closed");
      out.emplace_back(it->second, c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  LieAlgebra S(name, labels);
  S.prime = L.prime;
  S.mat_dim = L.mat_dim;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (!L.grading.empty()) S.grading.push_back(L.grading[idx[a]]);
    if (L.mat_dim) S.realization.push_back(L.realization[idx[a]]);
    if (L.prime) S.set_pmap(static_cast<int>(a), conv(L.pmap(idx[a])));
    for (std::size_t b = a + 1; b < idx.size(); ++b) S.set_bracket(static_cast<int>(a), static_cast<int>(b), conv(L.bracket(idx[a], idx[b])));
  }
  return S;
}

// Nilpotent e: pairs (i,j) of horizontally adjacent boxes, j to the right of i.
inline std::vector<std::pair<int, int>> nilpotent_e(const Pyramid& P) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= P.N(); ++i) {
    int j = P.box(P.row(i), P.col(i) + 1);
    if (j) out.emplace_back(i, j);
  }
  return out;
}

inline DenseMat nilpotent_e_matrix(const Pyramid& P) {
  DenseMat m(P.N());
  for (auto [i, j] : nilpotent_e(P)) m(i, j) = 1;
  return m;
}

// eta(e_{i,i}) per box (index 1..N; entry 0 unused).
inline std::vector<long long> eta_of(const Pyramid& P) {
  std::vector<long long> out(P.N() + 1, 0);
  for (int b = 1; b <= P.N(); ++b) {
    long long tail = 0;
    for (int c = P.col(b); c <= P.l(); ++c) tail += P.q()[c - 1];
    out[b] = P.n() - tail;
  }
  return out;
}

// Role of e_{i,j} in the pyramid grading.
enum class UnitClass { lowering = 0, cartan = 1, raising = 2, nilradical = 3, negative = 4 };

inline UnitClass unit_class(const Pyramid& P, int i, int j) {
  int d = P.col(j) - P.col(i);
  if (d > 0) return UnitClass::nilradical;
  if (d < 0) return UnitClass::negative;
  if (i == j) return UnitClass::cartan;
  return P.row(i) > P.row(j) ? UnitClass::lowering : UnitClass::raising;
}

// gl_N ordered with p first (lowering, cartan, raising, then nilradical by degree) and m last;
// p, h, m as subalgebras.  Indices 0..dim_p-1 of g and of p coincide.
struct ParabolicData {
  Pyramid pyr;
  LieAlgebra g, p, h, m;
  int dim_p = 0;
  std::vector<std::pair<int, int>> unit;  // g index -> (i,j)
  std::vector<int> unit_pos;              // (i-1)*N+(j-1) -> g index
  std::vector<UnitClass> cls;             // per g index
  std::vector<int> chi;                   // chi(e_{i,j}) per g index
  std::vector<long long> eta;             // per box

  int idx(int i, int j) const { return unit_pos[static_cast<std::size_t>(i - 1) * pyr.N() + (j - 1)]; }
  int N() const { return pyr.N(); }
};

inline ParabolicData build_parabolic(const Pyramid& P, unsigned prime = 0) {
  int N = P.N();
  std::vector<std::tuple<int, int, int, int, int>> keys;  // class, degree, i, j
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      auto c = unit_class(P, i, j);
      int d = P.col(j) - P.col(i);
      keys.emplace_back(static_cast<int>(c), c == UnitClass::nilradical ? d : 0, i, j, 0);
    }
  std::sort(keys.begin(), keys.end());
  ParabolicData D{P, {}, {}, {}, {}, 0, {}, {}, {}, {}, eta_of(P)};
  for (auto& [c, d, i, j, z] : keys) {
    D.unit.emplace_back(i, j);
    D.cls.push_back(static_cast<UnitClass>(c));
    if (c != static_cast<int>(UnitClass::negative)) ++D.dim_p;
  }
  D.g = build_gl(N, D.unit, prime);
  D.g.name = "gl_" + std::to_string(N);
  D.unit_pos.assign(static_cast<std::size_t>(N) * N, -1);
  for (std::size_t a = 0; a < D.unit.size(); ++a) {
    auto [i, j] = D.unit[a];
    D.unit_pos[static_cast<std::size_t>(i - 1) * N + (j - 1)] = static_cast<int>(a);
    D.g.grading.push_back(P.col(j) - P.col(i));
  }
  auto epairs = nilpotent_e(P);
  for (auto [i, j] : D.unit) {
    // trace(e * e_ij) = 1 iff (j,i) is an adjacent pair of e
    D.chi.push_back(std::find(epairs.begin(), epairs.end(), std::make_pair(j, i)) != epairs.end() ? 1 : 0);
  }
  std::vector<int> pidx, hidx, midx;
  for (int a = 0; a < N * N; ++a) {
    if (a < D.dim_p) pidx.push_back(a);
    else midx.push_back(a);
    if (D.g.grading[a] == 0) hidx.push_back(a);
  }
  D.p = subalgebra(D.g, pidx, "p");
  D.h = subalgebra(D.g, hidx, "h");
  D.m = subalgebra(D.g, midx, "m");
  return D;
}

struct CLabel {
  int i, j, r;
  bool operator==(const CLabel&) const = default;
};

inline std::string centralizer_label(int i, int j, int r) {
  return "c[" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(r) + "]";
}
inline std::string current_label(int i, int j, int r) {
  return "et[" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(r) + "]";
}

// Basis of g^e: c_{i,j}^{(r)}, s_{i,j} <= r < s_{i,j} + p_{min(i,j)}.
struct Centralizer {
  Pyramid pyr;
  ShiftMatrix sigma;
  LieAlgebra alg;
  std::vector<CLabel> basis;
  std::map<std::tuple<int, int, int>, int> pos;

  int index(int i, int j, int r) const {
    auto it = pos.find({i, j, r});
    return it == pos.end() ? -1 : it->second;
  }
  // Sum of e_{h,k} with row(h)=i, row(k)=j, col(k)-col(h)=r (empty when out of range).
  SparseMat expansion(int i, int j, int r) const {
    SparseMat out;
    if (index(i, j, r) < 0) return out;
    for (int h : pyr.row_boxes(i)) {
      int k = pyr.box(j, pyr.col(h) + r);
      if (k) out.push_back({h, k, 1});
    }
    return out;
  }
};

inline Centralizer centralizer_algebra(const Pyramid& P, unsigned prime = 0) {
  Centralizer C{P, P.sigma(), {}, {}, {}};
  int n = P.n();
  auto range_of = [&](int i, int j) {
    int lo = C.sigma(i, j);
    return std::make_pair(lo, lo + P.p(std::min(i, j)));
  };
  auto push_block = [&](auto pred) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (!pred(i, j)) continue;
        auto [lo, hi] = range_of(i, j);
        for (int r = lo; r < hi; ++r) C.basis.push_back({i, j, r});
      }
  };
  push_block([](int i, int j) { return i > j; });
  push_block([](int i, int j) { return i == j; });
  push_block([](int i, int j) { return i < j; });

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < C.basis.size(); ++a) {
    auto [i, j, r] = C.basis[a];
    labels.push_back(centralizer_label(i, j, r));
    C.pos[{i, j, r}] = static_cast<int>(a);
  }
  C.alg = LieAlgebra("g^e", labels);
  C.alg.prime = prime;
  C.alg.mat_dim = P.N();
  auto at = [&](int i, int j, int r) -> SparseInt {
    int k = C.index(i, j, r);
    if (k < 0) return {};
    return {{k, 1}};
  };
  for (std::size_t a = 0; a < C.basis.size(); ++a) {
    auto [i, j, r] = C.basis[a];
    C.alg.grading.push_back(r);
    C.alg.realization.push_back(C.expansion(i, j, r));
    if (prime) C.alg.set_pmap(static_cast<int>(a), i == j ? at(i, i, r * static_cast<int>(prime)) : SparseInt{});
    for (std::size_t b = a + 1; b < C.basis.size(); ++b) {
      auto [k, l, s] = C.basis[b];
      SparseInt v;
      if (j == k) v = sparse_add(v, at(i, l, r + s));
      if (i == l) v = sparse_add(v, at(k, j, r + s), -1);
      C.alg.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
    }
  }
  return C;
}

// Shifted current algebra spanned by e_{i,j} t^r, s_{i,j} <= r, with r <= tcap (full) or
// r < s_{i,j} + p_{min(i,j)} (truncated quotient by the ideal).
struct CurrentAlgebra {
  ShiftMatrix sigma;
  int level = 0;  // 0 for the untruncated algebra
  int tcap = 0;
  LieAlgebra alg;
  std::vector<CLabel> basis;
  std::map<std::tuple<int, int, int>, int> pos;

  int index(int i, int j, int r) const {
    auto it = pos.find({i, j, r});
    return it == pos.end() ? -1 : it->second;
  }
};

namespace detail {

inline CurrentAlgebra build_current(const ShiftMatrix& s, int tcap, int level, unsigned prime) {
  int n = s.n();
  std::vector<int> p;
  if (level) p = partition_from_sigma_level(s, level);
  auto hi_of = [&](int i, int j) { return level ? s(i, j) + p[std::min(i, j) - 1] - 1 : tcap; };
  CurrentAlgebra C{s, level, tcap, {}, {}, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = s(i, j); r <= hi_of(i, j); ++r) C.basis.push_back({i, j, r});
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < C.basis.size(); ++a) {
    auto [i, j, r] = C.basis[a];
    labels.push_back(current_label(i, j, r));
    C.pos[{i, j, r}] = static_cast<int>(a);
  }
  C.alg = LieAlgebra(level ? "c_{n,l}" : "c_n", labels);
  C.alg.prime = prime;
  // Out-of-range results vanish in the truncated quotient; in the capped algebra they are errors.
  auto term = [&](int i, int j, int r, long long c, SparseInt& v) -> bool {
    if (r > hi_of(i, j)) return level != 0;
    int k = C.index(i, j, r);
    if (k < 0) throw std::logic_error("current algebra: degree below the shift");
    v = sparse_add(v, {{k, c}});
    return true;
  };
  for (std::size_t a = 0; a < C.basis.size(); ++a) {
    auto [i, j, r] = C.basis[a];
    C.alg.grading.push_back(r);
    if (prime) {
      SparseInt v;
      if (i == j && !term(i, i, r * static_cast<int>(prime), 1, v))
        C.alg.cap_pmap(static_cast<int>(a));
      else
        C.alg.set_pmap(static_cast<int>(a), v);
    }
    for (std::size_t b = a + 1; b < C.basis.size(); ++b) {
      auto [k, l, t] = C.basis[b];
      SparseInt v;
      bool ok = true;
      if (j == k) ok = term(i, l, r + t, 1, v) && ok;
      if (l == i) ok = term(k, j, r + t, -1, v) && ok;
      if (ok)
        C.alg.set_bracket(static_cast<int>(a), static_cast<int>(b), v);
      else
        C.alg.cap_bracket(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return C;
}

}  // namespace detail

inline CurrentAlgebra current_algebra(const ShiftMatrix& s, int tcap, unsigned prime = 0) {
  for (int i = 1; i <= s.n(); ++i)
    for (int j = 1; j <= s.n(); ++j)
      if (tcap < s(i, j)) throw std::invalid_argument("current_algebra: tcap below a shift entry");
  return detail::build_current(s, tcap, 0, prime);
}

inline CurrentAlgebra truncated_current(const ShiftMatrix& s, int l, unsigned prime = 0) {
  return detail::build_current(s, 0, l, prime);
}

// Basis indices of the truncation ideal inside a capped current algebra.
inline std::vector<int> truncation_ideal_basis(const CurrentAlgebra& C, int l) {
  auto p = partition_from_sigma_level(C.sigma, l);
  std::vector<int> out;
  for (std::size_t a = 0; a < C.basis.size(); ++a) {
    auto [i, j, r] = C.basis[a];
    if (r >= C.sigma(i, j) + p[std::min(i, j) - 1]) out.push_back(static_cast<int>(a));
  }
  return out;
}

// theta(e_{i,j} t^r) = c_{i,j}^{(r)} in range, -1 (zero) otherwise.
inline std::vector<int> theta(const CurrentAlgebra& C, const Centralizer& G) {
  if (!(C.sigma == G.sigma)) throw std::invalid_argument("theta: shift matrices differ");
  if (C.level == 0) {
    auto p = G.pyr.partition();
    for (int i = 1; i <= C.sigma.n(); ++i)
      for (int j = 1; j <= C.sigma.n(); ++j)
        if (C.tcap < C.sigma(i, j) + p[std::min(i, j) - 1])
          throw std::invalid_argument("theta: tcap " + std::to_string(C.tcap) + " does not reach the ideal");
  }
  std::vector<int> out;
  for (const auto& b : C.basis) out.push_back(G.index(b.i, b.j, b.r));
  return out;
}

}  // namespace modw
