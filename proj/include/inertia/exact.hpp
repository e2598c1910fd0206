#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace inertia {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  T& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const T& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat&) const = default;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y);
RatMatrix to_rat(const IntMatrix& m);

// Nonzero diagonal of the Smith normal form: d1 | d2 | ... | dk, all positive.
std::vector<Int> smith_normal_form(const IntMatrix& m);

// Rank over Q via fraction-free (Bareiss) elimination; pivots are chosen as
// the first nonzero entry in row-major order.
int rational_rank(const IntMatrix& m);

// Columns span ker(m) over Q; one column per free variable of the reduced
// echelon form, in ascending column order.
RatMatrix kernel_basis(const IntMatrix& m);

// Columns form a basis of the integer kernel lattice (which is saturated, so
// any rational solution of m*x = 0 with integer entries is an integer
// combination of these columns).
IntMatrix integer_kernel_basis(const IntMatrix& m);

int rat_rank(RatMatrix m);

// Solves A*X = B over Q; empty optional if the system is inconsistent. When
// A does not have full column rank the free variables are set to zero.
std::optional<RatMatrix> rat_solve(const RatMatrix& A, const RatMatrix& B);

// Columns of `ker` whose classes modulo span(img) form a basis of
// span([img ker]) / span(img); deterministic (echelon pivots).
RatMatrix quotient_space_reps(const RatMatrix& img, const RatMatrix& ker);

// Coordinates of each column of v on the `reps` classes modulo span(img);
// unique when the reps classes are independent modulo img. Throws if v does
// not lie in span([img reps]).
RatMatrix quotient_coordinates(const RatMatrix& img, const RatMatrix& reps,
                               const RatMatrix& v);

}  // namespace inertia
