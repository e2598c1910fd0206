#include "inertia/zoo.hpp"

#include <algorithm>
#include <sstream>

#include "closure.hpp"

namespace inertia {

Quad operator+(const Quad& x, const Quad& y) {
  return {x.r + y.r, x.s2 + y.s2, x.s5 + y.s5, x.s10 + y.s10};
}

Quad operator-(const Quad& x, const Quad& y) {
  return {x.r - y.r, x.s2 - y.s2, x.s5 - y.s5, x.s10 - y.s10};
}

Quad Quad::operator-() const { return {-r, -s2, -s5, -s10}; }

Quad operator*(const Quad& x, const Quad& y) {
  return {x.r * y.r + Rat(2) * x.s2 * y.s2 + Rat(5) * x.s5 * y.s5 +
              Rat(10) * x.s10 * y.s10,
          x.r * y.s2 + x.s2 * y.r + Rat(5) * (x.s5 * y.s10 + x.s10 * y.s5),
          x.r * y.s5 + x.s5 * y.r + Rat(2) * (x.s2 * y.s10 + x.s10 * y.s2),
          x.r * y.s10 + x.s10 * y.r + x.s2 * y.s5 + x.s5 * y.s2};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

namespace {

Rat half() { return Rat(1) / 2; }

std::vector<Quaternion> binary_polyhedral_generators(const std::string& name) {
  Quad h(half()), one(Rat(1)), zero;
  // (1 + i + j + k)/2 together with i generates the binary tetrahedral group
  Quaternion omega{h, h, h, h};
  Quaternion qi{zero, one, zero, zero};
  if (name == "binary_tetrahedral") return {omega, qi};
  if (name == "binary_octahedral") {
    // add (1 + i)/sqrt2 = sqrt2/2 * (1 + i)
    Quad s(Rat(0), half(), Rat(0), Rat(0));
    Quaternion c{s, s, zero, zero};
    return {omega, qi, c};
  }
  if (name == "binary_icosahedral") {
    // (phi + phi^{-1} i + j)/2 with phi the golden ratio
    Quad phi(half(), Rat(0), half(), Rat(0));        // (1 + sqrt5)/2
    Quad phi_inv(-half(), Rat(0), half(), Rat(0));   // (sqrt5 - 1)/2
    Quad h2(half());
    Quaternion s{phi * Quad(half()), phi_inv * Quad(half()), h2, zero};
    return {omega, s};
  }
  throw ValidationError("unknown binary polyhedral group: " + name);
}

detail::ClosureResult<Quaternion> quaternion_closure(const std::string& name,
                                                     const RunLimits& limits) {
  Quaternion identity{Quad(Rat(1)), Quad(), Quad(), Quad()};
  auto gens = binary_polyhedral_generators(name);
  return detail::bfs_closure<Quaternion>(
      identity, gens, [](const Quaternion& a, const Quaternion& b) { return a * b; },
      limits.order_cap, "quaternion group");
}

FiniteGroup group_from_quaternions(const std::string& name,
                                   const RunLimits& limits) {
  auto closure = quaternion_closure(name, limits);
  int n = static_cast<int>(closure.elements.size());
  std::map<Quaternion, int> index;
  for (int i = 0; i < n; ++i) index.emplace(closure.elements[i], i);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = index.at(closure.elements[i] * closure.elements[j]);
  return group_from_cayley(name, table, limits, closure.gen_index);
}

FiniteGroup make_cyclic(int m, const RunLimits& limits) {
  if (m < 1) throw ValidationError("cyclic: order must be >= 1");
  if (static_cast<std::uint64_t>(m) > limits.order_cap)
    throw CapExceeded("cyclic order exceeds cap");
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = (i + j) % m;
  std::vector<int> gens;
  if (m > 1) gens.push_back(1);
  return group_from_cayley("cyclic:" + std::to_string(m), table, limits, gens);
}

// Elements 0..m-1 are rotations r^i, m..2m-1 are reflections r^i s.
FiniteGroup make_dihedral(int m, const RunLimits& limits) {
  if (m < 1) throw ValidationError("dihedral: parameter must be >= 1");
  int n = 2 * m;
  if (static_cast<std::uint64_t>(n) > limits.order_cap)
    throw CapExceeded("dihedral order exceeds cap");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto rot = [&](int i) { return ((i % m) + m) % m; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      table[i][j] = rot(i + j);              // r^i r^j
      table[i][m + j] = m + rot(i + j);      // r^i (r^j s)
      table[m + i][j] = m + rot(i - j);      // (r^i s) r^j
      table[m + i][m + j] = rot(i - j);      // (r^i s)(r^j s)
    }
  std::vector<int> gens;
  if (m > 1) gens.push_back(1);
  gens.push_back(m);
  return group_from_cayley("dihedral:" + std::to_string(m), table, limits, gens);
}

// Dicyclic group of order 4m: elements 0..2m-1 are a^i, 2m..4m-1 are a^i b,
// with a of order 2m, b^2 = a^m, b a b^{-1} = a^{-1}.
FiniteGroup make_dicyclic(const std::string& name, int m, const RunLimits& limits) {
  if (m < 2) throw ValidationError(name + ": parameter must be >= 2");
  int two_m = 2 * m, n = 4 * m;
  if (static_cast<std::uint64_t>(n) > limits.order_cap)
    throw CapExceeded(name + " order exceeds cap");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  auto rot = [&](int i) { return ((i % two_m) + two_m) % two_m; };
  for (int i = 0; i < two_m; ++i)
    for (int j = 0; j < two_m; ++j) {
      table[i][j] = rot(i + j);                        // a^i a^j
      table[i][two_m + j] = two_m + rot(i + j);        // a^i (a^j b)
      table[two_m + i][j] = two_m + rot(i - j);        // (a^i b) a^j
      table[two_m + i][two_m + j] = rot(i - j + m);    // (a^i b)(a^j b)
    }
  return group_from_cayley(name + ":" + std::to_string(m), table, limits,
                           {1, two_m});
}

// Extraspecial group of order p^3 and exponent p (p odd): triples (a, b, c)
// with (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
FiniteGroup make_heisenberg(int p, const RunLimits& limits) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw ValidationError("heisenberg_p: parameter must be prime");
  long long n = static_cast<long long>(p) * p * p;
  if (static_cast<std::uint64_t>(n) > limits.order_cap)
    throw CapExceeded("heisenberg order exceeds cap");
  auto enc = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              table[enc(a, b, c)][enc(a2, b2, c2)] =
                  enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return group_from_cayley("heisenberg_p:" + std::to_string(p), table, limits,
                           {enc(1, 0, 0), enc(0, 1, 0)});
}

FiniteGroup make_symmetric(int n, const RunLimits& limits) {
  if (n < 0) throw ValidationError("sym: parameter must be >= 0");
  int degree = std::max(n, 1);
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(degree);
    for (int i = 0; i < degree; ++i) t[i] = i;
    std::swap(t[0], t[1]);
    gens.push_back(t);
    if (n >= 3) {
      std::vector<int> c(degree);
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      gens.push_back(c);
    }
  }
  return group_from_permutations("sym:" + std::to_string(n), degree, gens, limits);
}

FiniteGroup make_alternating(int n, const RunLimits& limits) {
  if (n < 0) throw ValidationError("alt: parameter must be >= 0");
  int degree = std::max(n, 1);
  std::vector<std::vector<int>> gens;
  if (n >= 3) {
    std::vector<int> t(degree);
    for (int i = 0; i < degree; ++i) t[i] = i;
    t[0] = 1;
    t[1] = 2;
    t[2] = 0;
    gens.push_back(t);
    if (n >= 4) {
      std::vector<int> c(degree);
      for (int i = 0; i < degree; ++i) c[i] = i;
      if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;  // n-cycle, even
      } else {
        c[0] = 0;
        for (int i = 1; i < n; ++i) c[i] = 1 + (i % (n - 1));  // (n-1)-cycle
      }
      gens.push_back(c);
    }
  }
  return group_from_permutations("alt:" + std::to_string(n), degree, gens, limits);
}

FiniteGroup make_direct_product(const std::string& args, const RunLimits& limits) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : args) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 2)
    throw ValidationError("direct_product needs at least two factors");
  std::vector<FiniteGroup> factors;
  long long n = 1;
  for (const std::string& p : parts) {
    factors.push_back(make_zoo_group(p, limits));
    n *= factors.back().order;
    if (static_cast<std::uint64_t>(n) > limits.order_cap)
      throw CapExceeded("direct product order exceeds cap");
  }
  // mixed-radix encoding, first factor most significant
  std::vector<int> radix(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) radix[i] = factors[i].order;
  auto decode = [&](int code) {
    std::vector<int> v(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      v[i] = code % radix[i];
      code /= radix[i];
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int code = 0;
    for (std::size_t i = 0; i < v.size(); ++i) code = code * radix[i] + v[i];
    return code;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<int> xv = decode(x);
    for (int y = 0; y < n; ++y) {
      std::vector<int> yv = decode(y);
      std::vector<int> zv(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i)
        zv[i] = factors[i].mul(xv[i], yv[i]);
      table[x][y] = encode(zv);
    }
  }
  std::vector<int> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (int gi : factors[i].generators) {
      std::vector<int> v(factors.size(), 0);
      v[i] = gi;
      gens.push_back(encode(v));
    }
  }
  return group_from_cayley("direct_product:" + args, table, limits, gens);
}

}  // namespace

FiniteGroup make_zoo_group(const std::string& spec, const RunLimits& limits) {
  std::string name = spec, args;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    args = spec.substr(pos + 1);
  }
  auto int_arg = [&]() {
    if (args.empty() || args.size() > 9 ||
        args.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError(name + ": expected a nonnegative integer parameter");
    long long v = std::stoll(args);
    if (v > 1000000) throw ValidationError(name + ": parameter too large");
    return static_cast<int>(v);
  };
  if (name == "sym") return make_symmetric(int_arg(), limits);
  if (name == "alt") return make_alternating(int_arg(), limits);
  if (name == "cyclic") return make_cyclic(int_arg(), limits);
  if (name == "dihedral") return make_dihedral(int_arg(), limits);
  if (name == "quaternion_generalized")
    return make_dicyclic("quaternion_generalized", int_arg(), limits);
  if (name == "binary_dihedral")
    return make_dicyclic("binary_dihedral", int_arg(), limits);
  if (name == "heisenberg_p") return make_heisenberg(int_arg(), limits);
  if (name == "binary_tetrahedral" || name == "binary_octahedral" ||
      name == "binary_icosahedral") {
    if (!args.empty()) throw ValidationError(name + " takes no parameter");
    return group_from_quaternions(name, limits);
  }
  if (name == "direct_product") return make_direct_product(args, limits);
  throw ValidationError("unknown zoo group: " + spec);
}

const std::vector<ZooInfo>& zoo_catalog() {
  static const std::vector<ZooInfo> catalog = {
      {"sym", "N", "symmetric group on N letters"},
      {"alt", "N", "alternating group on N letters"},
      {"cyclic", "M", "cyclic group of order M"},
      {"dihedral", "M", "dihedral group of order 2M"},
      {"quaternion_generalized", "M", "dicyclic group of order 4M"},
      {"binary_dihedral", "M", "binary dihedral group of order 4M"},
      {"binary_tetrahedral", "", "binary tetrahedral group, order 24"},
      {"binary_octahedral", "", "binary octahedral group, order 48"},
      {"binary_icosahedral", "", "binary icosahedral group, order 120"},
      {"heisenberg_p", "P", "Heisenberg group of order P^3, P prime"},
      {"direct_product", "A,B[,...]", "direct product of zoo groups"},
  };
  return catalog;
}

std::optional<std::vector<Quaternion>> zoo_quaternions(const std::string& spec,
                                                       const RunLimits& limits) {
  if (spec != "binary_tetrahedral" && spec != "binary_octahedral" &&
      spec != "binary_icosahedral")
    return std::nullopt;
  auto closure = quaternion_closure(spec, limits);
  return std::move(closure.elements);
}

}  // namespace inertia
