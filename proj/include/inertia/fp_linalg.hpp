#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace inertia {

using u64 = std::uint64_t;

struct FpMatrix {
  u64 mod = 2;
  int rows = 0, cols = 0;
  std::vector<u64> a;

  FpMatrix() = default;
  FpMatrix(u64 m, int r, int c)
      : mod(m), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  u64& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const u64& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static FpMatrix identity(u64 mod, int n) {
    FpMatrix m(mod, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
};

bool is_prime_u64(u64 n);
u64 mulmod(u64 x, u64 y, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 x, u64 m);  // m prime
u64 smallest_primitive_root(u64 p);

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y);
FpMatrix fp_add(const FpMatrix& x, const FpMatrix& y);

// Basis of the right kernel; each vector has its first nonzero entry
// normalized to 1, listed in ascending free-column order.
std::vector<std::vector<u64>> fp_kernel(const FpMatrix& m);

// Monic characteristic polynomial, coefficients low degree first, computed
// via Hessenberg reduction.
std::vector<u64> fp_charpoly(const FpMatrix& m);

// Roots of a polynomial over F_mod, ascending, with multiplicity collapsed.
std::vector<u64> fp_poly_roots(const std::vector<u64>& poly, u64 mod);

// Simultaneous diagonalization of commuting matrices splits into pieces that
// are not all one-dimensional, or some matrix fails to act diagonalizably.
struct EigenSplitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Common eigenvectors of `count` pairwise commuting dim x dim matrices over
// F_mod, requested lazily through `mat`. Requires the joint eigenspaces to be
// one-dimensional; otherwise throws EigenSplitFailure. Vectors are normalized
// (first nonzero entry 1) and sorted lexicographically.
std::vector<std::vector<u64>> common_eigenvectors(
    int dim, u64 mod, int count, const std::function<FpMatrix(int)>& mat);

std::vector<std::vector<u64>> common_eigenvectors(
    const std::vector<FpMatrix>& mats);

// Exponent k in [0, order) with base^k = value (mod m), where base has the
// given multiplicative order; throws std::domain_error if there is none.
// Baby-step giant-step.
u64 discrete_log(u64 base, u64 value, u64 m, u64 order);

}  // namespace inertia
