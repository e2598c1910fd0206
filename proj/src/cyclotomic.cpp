#include "inertia/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace inertia {
namespace {

std::mutex cache_mu;
std::map<int, std::vector<Int>> poly_cache;

// Quotient of x^n - 1 by the product of cyclotomic polynomials of the proper
// divisors of n; exact integer polynomial division.
std::vector<Int> compute_cyclotomic(int n) {
  if (n == 1) return {Int(-1), Int(1)};  // x - 1
  std::vector<Int> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Int>& q = cyclotomic_polynomial(d);
    // divide num by q (monic), exactly
    std::vector<Int> res(num.size() - q.size() + 1);
    for (int i = static_cast<int>(res.size()) - 1; i >= 0; --i) {
      Int lead = num[i + q.size() - 1];
      res[i] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j < q.size(); ++j) num[i + j] -= lead * q[j];
    }
    num = std::move(res);
  }
  return num;
}

}  // namespace

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Int>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = poly_cache.find(n);
    if (it != poly_cache.end()) return it->second;
  }
  std::vector<Int> p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cache_mu);
  return poly_cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int conductor) : n_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor < 1");
  c_.assign(std::max(1, euler_phi(conductor)), Rat(0));
}

Cyclotomic::Cyclotomic(int conductor, const Rat& value) : Cyclotomic(conductor) {
  c_[0] = value;
}

void Cyclotomic::assign_poly(std::vector<Rat> p) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n_);
  std::size_t deg = phi.size() - 1;  // = euler_phi(n_)
  if (p.size() > deg) {
    for (int i = static_cast<int>(p.size()) - 1; i >= static_cast<int>(deg); --i) {
      Rat lead = p[i];
      if (lead == 0) continue;
      for (std::size_t j = 0; j < phi.size(); ++j)
        p[i - deg + j] -= lead * Rat(phi[j]);
    }
    p.resize(deg);
  }
  p.resize(std::max<std::size_t>(1, deg), Rat(0));
  c_ = std::move(p);
}

Cyclotomic Cyclotomic::root_power(int conductor, long long k) {
  Cyclotomic z(conductor);
  long long r = k % conductor;
  if (r < 0) r += conductor;
  std::vector<Rat> p(static_cast<std::size_t>(r) + 1, Rat(0));
  p[static_cast<std::size_t>(r)] = 1;
  z.assign_poly(std::move(p));
  return z;
}

Cyclotomic Cyclotomic::promoted(int conductor) const {
  if (conductor == n_) return *this;
  if (conductor % n_ != 0)
    throw std::invalid_argument("promoted: old conductor must divide new one");
  // zeta_{n} = zeta_{conductor}^{conductor/n}
  int step = conductor / n_;
  Cyclotomic out(conductor);
  std::vector<Rat> p(static_cast<std::size_t>(conductor), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  out.assign_poly(std::move(p));
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rat& v : out.c_) v = -v;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int l = std::lcm(n_, o.n_);
    *this = promoted(l);
    return *this += o.promoted(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int l = std::lcm(n_, o.n_);
    *this = promoted(l);
    return *this -= o.promoted(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    int l = std::lcm(n_, o.n_);
    *this = promoted(l);
    return *this *= o.promoted(l);
  }
  std::vector<Rat> p(c_.size() + o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      p[i + j] += c_[i] * o.c_[j];
    }
  }
  assign_poly(std::move(p));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rat& s) {
  for (Rat& v : c_) v *= s;
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return compare(*this, o) == 0;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  long long r = k % n_;
  if (r < 0) r += n_;
  if (std::gcd(static_cast<long long>(n_), r) != 1)
    throw std::invalid_argument("galois: exponent not coprime to conductor");
  std::vector<Rat> p(static_cast<std::size_t>(n_), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    p[(i * static_cast<std::size_t>(r)) % n_] += c_[i];
  Cyclotomic out(n_);
  out.assign_poly(std::move(p));
  return out;
}

Cyclotomic Cyclotomic::conjugate() const { return galois(n_ == 1 ? 1 : n_ - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Extended Euclid in Q[x] against the minimal polynomial.
  const std::vector<Int>& phi_int = cyclotomic_polynomial(n_);
  std::vector<Rat> r0(phi_int.size());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
  std::vector<Rat> r1 = c_;
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r1);
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // s tracks coefficient of our value
  while (true) {
    trim(r1);
    if (r1.empty()) throw std::domain_error("inverse: value not invertible");
    if (r1.size() == 1) break;
    // r0 = q*r1 + rem
    std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                       Rat(0));
    std::vector<Rat> rem = r0;
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      Rat f = rem[i + r1.size() - 1] / r1.back();
      q[i] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= f * r1[j];
    }
    trim(rem);
    // s_next = s0 - q*s1
    std::vector<Rat> s_next = s0;
    s_next.resize(std::max(s_next.size(), q.size() + s1.size()), Rat(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  Rat unit = r1[0];
  for (Rat& v : s1) v /= unit;
  Cyclotomic out(n_);
  out.assign_poly(std::move(s1));
  return out;
}

Rat Cyclotomic::norm_to_rational() const {
  Cyclotomic prod(n_, Rat(1));
  for (int k = 1; k <= n_; ++k) {
    if (std::gcd(k, n_) != 1) continue;
    prod *= galois(k);
  }
  return prod.rational_value();
}

bool Cyclotomic::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  return c_[0];
}

int Cyclotomic::compare(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.n_ != y.n_) {
    int l = std::lcm(x.n_, y.n_);
    return compare(x.promoted(l), y.promoted(l));
  }
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] < y.c_[i]) return -1;
    if (x.c_[i] > y.c_[i]) return 1;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0 || v != 1) {
      os << v;
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace inertia
