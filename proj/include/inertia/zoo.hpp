#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inertia/exact.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"

namespace inertia {

// Element of Q(sqrt2, sqrt5): r + s2*sqrt2 + s5*sqrt5 + s10*sqrt10.
struct Quad {
  Rat r, s2, s5, s10;
  Quad() : r(0), s2(0), s5(0), s10(0) {}
  explicit Quad(const Rat& v) : r(v), s2(0), s5(0), s10(0) {}
  Quad(Rat r_, Rat s2_, Rat s5_, Rat s10_)
      : r(std::move(r_)), s2(std::move(s2_)), s5(std::move(s5_)), s10(std::move(s10_)) {}
  friend Quad operator+(const Quad& x, const Quad& y);
  friend Quad operator-(const Quad& x, const Quad& y);
  friend Quad operator*(const Quad& x, const Quad& y);
  Quad operator-() const;
  bool operator==(const Quad&) const = default;
  bool operator<(const Quad& o) const {
    if (r != o.r) return r < o.r;
    if (s2 != o.s2) return s2 < o.s2;
    if (s5 != o.s5) return s5 < o.s5;
    return s10 < o.s10;
  }
};

struct Quaternion {
  Quad w, x, y, z;
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  bool operator==(const Quaternion&) const = default;
  bool operator<(const Quaternion& o) const {
    if (!(w == o.w)) return w < o.w;
    if (!(x == o.x)) return x < o.x;
    if (!(y == o.y)) return y < o.y;
    return z < o.z;
  }
};

// Builds a named group. Accepted forms:
//   sym:N  alt:N  cyclic:M  dihedral:M  quaternion_generalized:M
//   binary_dihedral:M  binary_tetrahedral  binary_octahedral
//   binary_icosahedral  heisenberg_p:P
//   direct_product:NAME:ARGS,NAME:ARGS[,...]
FiniteGroup make_zoo_group(const std::string& spec, const RunLimits& limits);

struct ZooInfo {
  std::string name;
  std::string params;
  std::string description;
};
const std::vector<ZooInfo>& zoo_catalog();

// Unit quaternion coordinates aligned with element indices, available for
// the three binary polyhedral groups.
std::optional<std::vector<Quaternion>> zoo_quaternions(const std::string& spec,
                                                       const RunLimits& limits);

}  // namespace inertia
