#include "inertia/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace inertia {
namespace {

struct Int64Overflow {};

inline long long chk_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw Int64Overflow{};
  return r;
}

inline long long chk_sub(long long x, long long y) {
  long long r;
  if (__builtin_sub_overflow(x, y, &r)) throw Int64Overflow{};
  return r;
}

template <class T>
T abs_val(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Smith reduction by repeated gcd elimination. Pivot = entry of minimal
// absolute value in the remaining submatrix; row/column operations shrink it
// until it divides everything it meets, which makes the divisor chain exact.
template <class T>
std::vector<T> snf_reduce(int rows, int cols, std::vector<T> m) {
  auto at = [&](int r, int c) -> T& {
    return m[static_cast<std::size_t>(r) * cols + c];
  };
  std::vector<T> divisors;
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    T best(0);
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        const T& v = at(r, c);
        if (v == 0) continue;
        T av = abs_val(v);
        if (pr < 0 || av < best) {
          pr = r;
          pc = c;
          best = av;
          if (best == 1) goto found;
        }
      }
    if (pr < 0) break;
  found:
    if (pr != t)
      for (int c = 0; c < cols; ++c) std::swap(at(t, c), at(pr, c));
    if (pc != t)
      for (int r = 0; r < rows; ++r) std::swap(at(r, t), at(r, pc));

    for (bool settled = false; !settled;) {
      settled = true;
      for (int r = t + 1; r < rows; ++r) {
        if (at(r, t) == 0) continue;
        T q = at(r, t) / at(t, t);
        if (q != 0)
          for (int c = t; c < cols; ++c) {
            if (at(t, c) == 0) continue;
            if constexpr (std::is_same_v<T, long long>)
              at(r, c) = chk_sub(at(r, c), chk_mul(q, at(t, c)));
            else
              at(r, c) -= q * at(t, c);
          }
        if (at(r, t) != 0) {  // remainder became the smaller pivot
          for (int c = 0; c < cols; ++c) std::swap(at(t, c), at(r, c));
          settled = false;
        }
      }
      if (!settled) continue;
      for (int c = t + 1; c < cols; ++c) {
        if (at(t, c) == 0) continue;
        T q = at(t, c) / at(t, t);
        if (q != 0)
          for (int r = t; r < rows; ++r) {
            if (at(r, t) == 0) continue;
            if constexpr (std::is_same_v<T, long long>)
              at(r, c) = chk_sub(at(r, c), chk_mul(q, at(r, t)));
            else
              at(r, c) -= q * at(r, t);
          }
        if (at(t, c) != 0) {
          for (int r = 0; r < rows; ++r) std::swap(at(r, t), at(r, c));
          settled = false;
        }
      }
      if (!settled) continue;
      // Pivot must divide the rest of the submatrix for the chain property.
      for (int r = t + 1; r < rows && settled; ++r)
        for (int c = t + 1; c < cols; ++c) {
          if (at(r, c) % at(t, t) != 0) {
            for (int cc = t; cc < cols; ++cc) {
              if constexpr (std::is_same_v<T, long long>) {
                long long s = at(t, cc);
                if (__builtin_add_overflow(s, at(r, cc), &s)) throw Int64Overflow{};
                at(t, cc) = s;
              } else {
                at(t, cc) += at(r, cc);
              }
            }
            settled = false;
            break;
          }
        }
    }
    divisors.push_back(abs_val(at(t, t)));
    ++t;
  }
  return divisors;
}

}  // namespace

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Int& w = y.at(k, j);
        if (w != 0) r.at(i, j) += v * w;
      }
    }
  return r;
}

RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("rat_mul: shape mismatch");
  RatMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rat& w = y.at(k, j);
        if (w != 0) r.at(i, j) += v * w;
      }
    }
  return r;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

std::vector<Int> smith_normal_form(const IntMatrix& m) {
  bool small = true;
  for (const Int& v : m.a)
    if (v > (std::numeric_limits<long long>::max)() / 4 ||
        v < (std::numeric_limits<long long>::min)() / 4) {
      small = false;
      break;
    }
  if (small) {
    std::vector<long long> w(m.a.size());
    for (std::size_t i = 0; i < m.a.size(); ++i)
      w[i] = static_cast<long long>(m.a[i]);
    try {
      auto d = snf_reduce<long long>(m.rows, m.cols, std::move(w));
      std::vector<Int> out(d.begin(), d.end());
      return out;
    } catch (const Int64Overflow&) {
      // fall through to arbitrary precision
    }
  }
  return snf_reduce<Int>(m.rows, m.cols, m.a);
}

int rational_rank(const IntMatrix& m) {
  std::vector<Int> w = m.a;
  auto at = [&](int r, int c) -> Int& {
    return w[static_cast<std::size_t>(r) * m.cols + c];
  };
  Int prev(1);
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(at(rank, j), at(pivot, j));
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int j = c + 1; j < m.cols; ++j)
        at(r, j) = (at(rank, c) * at(r, j) - at(r, c) * at(rank, j)) / prev;
      at(r, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

RatMatrix kernel_basis(const IntMatrix& m) {
  RatMatrix w = to_rat(m);
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < w.cols && rank < w.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < w.rows; ++r)
      if (w.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(pivot, j));
    Rat inv = Rat(1) / w.at(rank, c);
    for (int j = c; j < w.cols; ++j) w.at(rank, j) *= inv;
    for (int r = 0; r < w.rows; ++r) {
      if (r == rank || w.at(r, c) == 0) continue;
      Rat f = w.at(r, c);
      for (int j = c; j < w.cols; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(w.cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < w.cols; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
  }
  RatMatrix basis(m.cols, static_cast<int>(free_cols.size()));
  for (int k = 0; k < basis.cols; ++k) {
    int fc = free_cols[k];
    basis.at(fc, k) = 1;
    for (int i = 0; i < rank; ++i) basis.at(pivot_col[i], k) = -w.at(i, fc);
  }
  return basis;
}

IntMatrix integer_kernel_basis(const IntMatrix& m) {
  IntMatrix A = m;
  IntMatrix V = IntMatrix::identity(m.cols);
  auto col_sub = [&](int dst, int src, const Int& q) {
    for (int r = 0; r < A.rows; ++r)
      if (A.at(r, src) != 0) A.at(r, dst) -= q * A.at(r, src);
    for (int r = 0; r < V.rows; ++r)
      if (V.at(r, src) != 0) V.at(r, dst) -= q * V.at(r, src);
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, x), A.at(r, y));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, x), V.at(r, y));
  };
  int lead = 0;
  for (int r = 0; r < A.rows && lead < A.cols; ++r) {
    for (;;) {
      int best_c = -1;
      Int best;
      for (int c = lead; c < A.cols; ++c) {
        if (A.at(r, c) == 0) continue;
        Int av = A.at(r, c) < 0 ? Int(-A.at(r, c)) : A.at(r, c);
        if (best_c < 0 || av < best) {
          best_c = c;
          best = av;
        }
      }
      if (best_c < 0) break;  // row already clear; next row
      col_swap(lead, best_c);
      bool clean = true;
      for (int c = lead + 1; c < A.cols; ++c) {
        if (A.at(r, c) == 0) continue;
        Int q = A.at(r, c) / A.at(r, lead);
        if (q != 0) col_sub(c, lead, q);
        if (A.at(r, c) != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  IntMatrix basis(m.cols, m.cols - lead);
  for (int k = lead; k < m.cols; ++k)
    for (int r = 0; r < m.cols; ++r) basis.at(r, k - lead) = V.at(r, k);
  return basis;
}

int rat_rank(RatMatrix w) {
  int rank = 0;
  for (int c = 0; c < w.cols && rank < w.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < w.rows; ++r)
      if (w.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(pivot, j));
    Rat inv = Rat(1) / w.at(rank, c);
    for (int j = c; j < w.cols; ++j) w.at(rank, j) *= inv;
    for (int r = rank + 1; r < w.rows; ++r) {
      if (w.at(r, c) == 0) continue;
      Rat f = w.at(r, c);
      for (int j = c; j < w.cols; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<RatMatrix> rat_solve(const RatMatrix& A, const RatMatrix& B) {
  if (A.rows != B.rows) throw std::invalid_argument("rat_solve: shape mismatch");
  RatMatrix w(A.rows, A.cols + B.cols);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) w.at(r, c) = A.at(r, c);
    for (int c = 0; c < B.cols; ++c) w.at(r, A.cols + c) = B.at(r, c);
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < A.cols && rank < w.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < w.rows; ++r)
      if (w.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(pivot, j));
    Rat inv = Rat(1) / w.at(rank, c);
    for (int j = c; j < w.cols; ++j) w.at(rank, j) *= inv;
    for (int r = 0; r < w.rows; ++r) {
      if (r == rank || w.at(r, c) == 0) continue;
      Rat f = w.at(r, c);
      for (int j = c; j < w.cols; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < w.rows; ++r)
    for (int c = 0; c < B.cols; ++c)
      if (w.at(r, A.cols + c) != 0) return std::nullopt;
  RatMatrix X(A.cols, B.cols);
  for (int i = 0; i < rank; ++i)
    for (int c = 0; c < B.cols; ++c) X.at(pivot_col[i], c) = w.at(i, A.cols + c);
  return X;
}

static RatMatrix hstack(const RatMatrix& l, const RatMatrix& r) {
  if (l.rows != r.rows) throw std::invalid_argument("hstack: shape mismatch");
  RatMatrix m(l.rows, l.cols + r.cols);
  for (int i = 0; i < l.rows; ++i) {
    for (int c = 0; c < l.cols; ++c) m.at(i, c) = l.at(i, c);
    for (int c = 0; c < r.cols; ++c) m.at(i, l.cols + c) = r.at(i, c);
  }
  return m;
}

RatMatrix quotient_space_reps(const RatMatrix& img, const RatMatrix& ker) {
  RatMatrix w = hstack(img, ker);
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < w.cols && rank < w.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < w.rows; ++r)
      if (w.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = c; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(pivot, j));
    Rat inv = Rat(1) / w.at(rank, c);
    for (int j = c; j < w.cols; ++j) w.at(rank, j) *= inv;
    for (int r = 0; r < w.rows; ++r) {
      if (r == rank || w.at(r, c) == 0) continue;
      Rat f = w.at(r, c);
      for (int j = c; j < w.cols; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    if (c >= img.cols) pivots.push_back(c - img.cols);
    ++rank;
  }
  RatMatrix reps(ker.rows, static_cast<int>(pivots.size()));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int r = 0; r < ker.rows; ++r) reps.at(r, i) = ker.at(r, pivots[i]);
  return reps;
}

RatMatrix quotient_coordinates(const RatMatrix& img, const RatMatrix& reps,
                               const RatMatrix& v) {
  auto coords = rat_solve(hstack(img, reps), v);
  if (!coords) throw std::domain_error("quotient_coordinates: vector outside span");
  RatMatrix out(reps.cols, v.cols);
  for (int r = 0; r < reps.cols; ++r)
    for (int c = 0; c < v.cols; ++c) out.at(r, c) = coords->at(img.cols + r, c);
  return out;
}

}  // namespace inertia
