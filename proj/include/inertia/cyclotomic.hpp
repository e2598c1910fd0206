#pragma once

#include <string>
#include <vector>

#include "inertia/exact.hpp"

namespace inertia {

int euler_phi(int n);

// Monic minimal polynomial of a primitive n-th root of unity; coefficients
// low degree first, length phi(n) + 1.
const std::vector<Int>& cyclotomic_polynomial(int n);

// Element of Q(zeta_n), stored as coefficients 0 .. phi(n)-1 in the power
// basis of zeta_n. Representation is canonical: equal values have equal
// coefficient vectors at equal conductors. Binary operations promote both
// sides to the lcm of their conductors.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rat& value);
  static Cyclotomic root_power(int conductor, long long k);  // zeta_n^k

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
  friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
  friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }
  Cyclotomic& operator*=(const Rat& s);
  friend Cyclotomic operator*(Cyclotomic x, const Rat& s) { return x *= s; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Field automorphism zeta |-> zeta^k, requires gcd(k, n) = 1.
  Cyclotomic galois(long long k) const;
  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;  // throws on zero
  Rat norm_to_rational() const;

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws if not rational

  Cyclotomic promoted(int conductor) const;  // n_ must divide conductor

  // Lexicographic comparison of coefficient vectors after promotion to a
  // common conductor; total order used for deterministic sorting.
  static int compare(const Cyclotomic& x, const Cyclotomic& y);

  std::string to_string() const;  // e.g. "1/2*z^3 - z + 2" with z = zeta_n

 private:
  int n_;
  std::vector<Rat> c_;
  void assign_poly(std::vector<Rat> p);  // reduce arbitrary-degree polynomial
};

}  // namespace inertia
