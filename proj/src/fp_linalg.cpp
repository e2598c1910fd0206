#include "inertia/fp_linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace inertia {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 mulmod(u64 x, u64 y, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 x, u64 m) { return powmod(x % m, m - 2, m); }

u64 smallest_primitive_root(u64 p) {
  if (p == 2) return 1;
  u64 phi = p - 1;
  std::vector<u64> prime_factors;
  u64 m = phi;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    prime_factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors)
      if (powmod(g, phi / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y) {
  if (x.cols != y.rows || x.mod != y.mod)
    throw std::invalid_argument("fp_mul: shape or modulus mismatch");
  FpMatrix r(x.mod, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      u64 v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (!y.at(k, j)) continue;
        r.at(i, j) = (r.at(i, j) + mulmod(v, y.at(k, j), x.mod)) % x.mod;
      }
    }
  return r;
}

FpMatrix fp_add(const FpMatrix& x, const FpMatrix& y) {
  if (x.cols != y.cols || x.rows != y.rows || x.mod != y.mod)
    throw std::invalid_argument("fp_add: shape or modulus mismatch");
  FpMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % r.mod;
  return r;
}

namespace {

// Row echelon over F_mod; returns rank, records pivot columns.
int fp_rref(FpMatrix& w, std::vector<int>& pivot_col) {
  int rank = 0;
  for (int c = 0; c < w.cols && rank < w.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < w.rows; ++r)
      if (w.at(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(pivot, j));
    u64 inv = invmod(w.at(rank, c), w.mod);
    for (int j = c; j < w.cols; ++j) w.at(rank, j) = mulmod(w.at(rank, j), inv, w.mod);
    for (int r = 0; r < w.rows; ++r) {
      if (r == rank || !w.at(r, c)) continue;
      u64 f = w.at(r, c);
      for (int j = c; j < w.cols; ++j) {
        u64 sub = mulmod(f, w.at(rank, j), w.mod);
        w.at(r, j) = (w.at(r, j) + w.mod - sub) % w.mod;
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<u64>> fp_kernel(const FpMatrix& m) {
  FpMatrix w = m;
  std::vector<int> pivot_col;
  int rank = fp_rref(w, pivot_col);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<u64>> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<u64> v(m.cols, 0);
    v[fc] = 1;
    for (int i = 0; i < rank; ++i)
      v[pivot_col[i]] = (m.mod - w.at(i, fc)) % m.mod;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<u64> fp_charpoly(const FpMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("fp_charpoly: not square");
  int n = m.rows;
  u64 p = m.mod;
  FpMatrix h = m;
  // similarity reduction to upper Hessenberg form
  for (int c = 0; c < n - 2; ++c) {
    int pivot = -1;
    for (int r = c + 1; r < n; ++r)
      if (h.at(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(c + 1, j), h.at(pivot, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, c + 1), h.at(i, pivot));
    }
    u64 inv = invmod(h.at(c + 1, c), p);
    for (int r = c + 2; r < n; ++r) {
      if (!h.at(r, c)) continue;
      u64 f = mulmod(h.at(r, c), inv, p);
      for (int j = 0; j < n; ++j)
        h.at(r, j) = (h.at(r, j) + p - mulmod(f, h.at(c + 1, j), p)) % p;
      for (int i = 0; i < n; ++i)
        h.at(i, c + 1) = (h.at(i, c + 1) + mulmod(f, h.at(i, r), p)) % p;
    }
  }
  // charpoly of leading k x k block by recurrence on Hessenberg matrices
  std::vector<std::vector<u64>> cp(n + 1);
  cp[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // (x - h[k-1][k-1]) * cp[k-1]
    std::vector<u64> acc(k + 1, 0);
    u64 diag = h.at(k - 1, k - 1);
    for (int i = 0; i < k; ++i) {
      acc[i + 1] = (acc[i + 1] + cp[k - 1][i]) % p;
      acc[i] = (acc[i] + p - mulmod(diag, cp[k - 1][i], p)) % p;
    }
    // minus sum over i < k-1 of h[i][k-1] * (prod subdiag) * cp[i]
    u64 prod = 1;
    for (int i = k - 2; i >= 0; --i) {
      prod = mulmod(prod, h.at(i + 1, i), p);
      if (!prod) break;
      u64 coeff = mulmod(h.at(i, k - 1), prod, p);
      if (!coeff) continue;
      for (int j = 0; j <= i; ++j)
        acc[j] = (acc[j] + p - mulmod(coeff, cp[i][j], p)) % p;
    }
    cp[k] = std::move(acc);
  }
  return cp[n];
}

std::vector<u64> fp_poly_roots(const std::vector<u64>& poly, u64 mod) {
  std::vector<u64> roots;
  for (u64 x = 0; x < mod; ++x) {
    u64 v = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
      v = (mulmod(v, x, mod) + poly[i] % mod) % mod;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

namespace {

// x := M * v over F_mod.
std::vector<u64> apply(const FpMatrix& m, const std::vector<u64>& v) {
  std::vector<u64> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    unsigned __int128 acc = 0;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) && v[j]) acc += static_cast<unsigned __int128>(m.at(i, j)) * v[j];
    out[i] = static_cast<u64>(acc % m.mod);
  }
  return out;
}

// Restriction of M to the span of basis (columns): solves B * A = M * B.
FpMatrix restrict_to(const FpMatrix& m, const std::vector<std::vector<u64>>& basis) {
  int k = static_cast<int>(basis.size());
  int dim = m.rows;
  FpMatrix sys(m.mod, dim, k + k);  // [B | M*B]
  for (int j = 0; j < k; ++j) {
    std::vector<u64> mb = apply(m, basis[j]);
    for (int i = 0; i < dim; ++i) {
      sys.at(i, j) = basis[j][i];
      sys.at(i, k + j) = mb[i];
    }
  }
  std::vector<int> pivot_col;
  int rank = fp_rref(sys, pivot_col);
  FpMatrix a(m.mod, k, k);
  for (int i = 0; i < rank; ++i) {
    if (pivot_col[i] >= k)
      throw EigenSplitFailure("restriction: basis not independent");
    for (int j = 0; j < k; ++j) a.at(pivot_col[i], j) = sys.at(i, k + j);
  }
  // consistency: rows past rank must be zero on the rhs
  for (int r = rank; r < dim; ++r)
    for (int j = 0; j < k; ++j)
      if (sys.at(r, k + j))
        throw EigenSplitFailure("restriction: subspace not invariant");
  return a;
}

}  // namespace

std::vector<std::vector<u64>> common_eigenvectors(
    int dim, u64 mod, int count, const std::function<FpMatrix(int)>& mat) {
  std::vector<std::vector<std::vector<u64>>> spaces;
  {
    std::vector<std::vector<u64>> full;
    for (int i = 0; i < dim; ++i) {
      std::vector<u64> e(dim, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (int mi = 0; mi < count; ++mi) {
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_split = false;
    if (all_split) break;
    FpMatrix m = mat(mi);
    std::vector<std::vector<std::vector<u64>>> next;
    for (auto& space : spaces) {
      if (space.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      FpMatrix a = restrict_to(m, space);
      std::vector<u64> cp = fp_charpoly(a);
      std::vector<u64> roots = fp_poly_roots(cp, mod);
      int k = static_cast<int>(space.size());
      int collected = 0;
      for (u64 lam : roots) {
        FpMatrix shifted = a;
        for (int i = 0; i < k; ++i)
          shifted.at(i, i) = (shifted.at(i, i) + mod - lam) % mod;
        std::vector<std::vector<u64>> ker = fp_kernel(shifted);
        if (ker.empty()) continue;
        std::vector<std::vector<u64>> sub;
        for (const auto& coeffs : ker) {
          std::vector<u64> v(dim, 0);
          for (int j = 0; j < k; ++j) {
            if (!coeffs[j]) continue;
            for (int i = 0; i < dim; ++i)
              v[i] = (v[i] + mulmod(coeffs[j], space[j][i], mod)) % mod;
          }
          sub.push_back(std::move(v));
        }
        collected += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (collected != k)
        throw EigenSplitFailure("matrix does not act diagonalizably");
    }
    spaces = std::move(next);
  }
  std::vector<std::vector<u64>> out;
  for (const auto& s : spaces) {
    if (s.size() != 1)
      throw EigenSplitFailure("joint eigenspace of dimension > 1");
    std::vector<u64> v = s[0];
    u64 lead = 0;
    for (u64 x : v)
      if (x) {
        lead = x;
        break;
      }
    if (!lead) throw EigenSplitFailure("zero vector in eigenspace");
    u64 inv = invmod(lead, mod);
    for (u64& x : v) x = mulmod(x, inv, mod);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<u64>> common_eigenvectors(const std::vector<FpMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("common_eigenvectors: no matrices");
  return common_eigenvectors(mats[0].rows, mats[0].mod,
                             static_cast<int>(mats.size()),
                             [&](int i) { return mats[i]; });
}

u64 discrete_log(u64 base, u64 value, u64 m, u64 order) {
  base %= m;
  value %= m;
  u64 step = 1;
  while (step * step < order) ++step;
  std::unordered_map<u64, u64> baby;
  u64 cur = 1 % m;
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, base, m);
  }
  u64 giant = invmod(powmod(base, step, m), m);
  cur = value;
  for (u64 i = 0; i <= step; ++i) {
    auto it = baby.find(cur);
    if (it != baby.end()) {
      u64 k = i * step + it->second;
      if (k < order) return k;
    }
    cur = mulmod(cur, giant, m);
  }
  throw std::domain_error("discrete_log: no solution");
}

}  // namespace inertia
