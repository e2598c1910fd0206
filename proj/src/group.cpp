#include "inertia/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "closure.hpp"

namespace inertia {
namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

// Fill the dense table from generator columns and the word tree: with
// b = parent(b) * gen(via(b)), the column of b follows from already-filled
// columns via t[a][b] = t[t[a][parent(b)]][gen(via(b))].
void fill_table_by_words(FiniteGroup& g,
                         const std::function<int(int, int)>& mul_direct) {
  int n = g.order;
  g.table.assign(static_cast<std::size_t>(n) * n, 0);
  auto t = [&](int a, int b) -> std::uint16_t& {
    return g.table[static_cast<std::size_t>(a) * n + b];
  };
  std::vector<char> filled(n, 0);
  for (int a = 0; a < n; ++a) t(a, 0) = static_cast<std::uint16_t>(a);
  filled[0] = 1;
  for (int gi : g.generators) {
    for (int a = 0; a < n; ++a) t(a, gi) = static_cast<std::uint16_t>(mul_direct(a, gi));
    filled[gi] = 1;
  }
  for (int b = 1; b < n; ++b) {
    if (filled[b]) continue;
    int pb = g.parent[b];
    int gb = g.generators[g.via_gen[b]];
    for (int a = 0; a < n; ++a) t(a, b) = t(t(a, pb), gb);
    filled[b] = 1;
  }
}

}  // namespace

int FiniteGroup::mul_perm(int a, int b) const {
  return perm_index_.at(compose(perms[a], perms[b]));
}

int FiniteGroup::power(int g, long long e) const {
  int ord = elt_order[g];
  long long r = e % ord;
  if (r < 0) r += ord;
  int acc = 0;
  int base = g;
  while (r) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int a : generators)
    for (int b : generators)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  long long e = 1;
  for (int g = 0; g < order; ++g) e = std::lcm(e, static_cast<long long>(elt_order[g]));
  return static_cast<int>(e);
}

std::vector<int> FiniteGroup::word(int g) const {
  std::vector<int> w;
  while (g != 0) {
    w.push_back(via_gen[g]);
    g = parent[g];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string FiniteGroup::canonical_serialization() const {
  std::ostringstream os;
  if (!table.empty()) {
    os << "table:" << order << ":";
    for (std::size_t i = 0; i < table.size(); ++i) os << table[i] << ",";
  } else {
    os << "perms:" << order << ":" << degree << ":";
    for (const auto& p : perms) {
      for (int x : p) os << x << ",";
      os << ";";
    }
  }
  return os.str();
}

void FiniteGroup::finalize() {
  inv.assign(order, -1);
  elt_order.assign(order, 0);
  if (table.empty()) {
    // permutation-backed: invert images and read orders off cycle types
    for (int a = 0; a < order; ++a) {
      std::vector<int> ip(degree);
      for (int x = 0; x < degree; ++x) ip[perms[a][x]] = x;
      auto it = perm_index_.find(ip);
      if (it == perm_index_.end())
        throw ValidationError("element without inverse");
      inv[a] = it->second;
      std::vector<char> seen(degree, 0);
      long long ord = 1;
      for (int x = 0; x < degree; ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        while (!seen[y]) {
          seen[y] = 1;
          y = perms[a][y];
          ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
      }
      elt_order[a] = static_cast<int>(ord);
    }
    return;
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mul(a, b) == 0) {
        inv[a] = b;
        break;
      }
  for (int a = 0; a < order; ++a)
    if (inv[a] < 0) throw ValidationError("element without inverse");
  for (int a = 0; a < order; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > order) throw ValidationError("element order exceeds group order");
    }
    elt_order[a] = k;
  }
}

FiniteGroup group_from_permutations(const std::string& name, int degree,
                                    const std::vector<std::vector<int>>& gens,
                                    const RunLimits& limits) {
  if (degree < 1) throw ValidationError("degree must be positive");
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw ValidationError("generator image length != degree");
    std::vector<char> seen(degree, 0);
    for (int x : p) {
      if (x < 0 || x >= degree || seen[x])
        throw ValidationError("generator is not a permutation");
      seen[x] = 1;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> uniq;
  for (const auto& p : gens)
    if (p != identity && std::find(uniq.begin(), uniq.end(), p) == uniq.end())
      uniq.push_back(p);
  auto closure = detail::bfs_closure<std::vector<int>>(
      identity, uniq, compose, limits.order_cap, "permutation group");

  FiniteGroup g;
  g.name = name;
  g.order = static_cast<int>(closure.elements.size());
  g.parent = std::move(closure.parent);
  g.via_gen = std::move(closure.via);
  g.generators = closure.gen_index;
  g.degree = degree;
  if (g.order <= FiniteGroup::kTableLimit) {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < g.order; ++i) index.emplace(closure.elements[i], i);
    auto mul_direct = [&](int a, int b) {
      return index.at(compose(closure.elements[a], closure.elements[b]));
    };
    fill_table_by_words(g, mul_direct);
  } else {
    g.perms = std::move(closure.elements);
    for (int i = 0; i < g.order; ++i) g.perm_index_.emplace(g.perms[i], i);
  }
  g.finalize();
  return g;
}

FiniteGroup group_from_cayley(const std::string& name,
                              const std::vector<std::vector<int>>& cayley,
                              const RunLimits& limits, std::vector<int> gens) {
  int n = static_cast<int>(cayley.size());
  if (n < 1) throw ValidationError("empty multiplication table");
  if (static_cast<std::uint64_t>(n) > limits.order_cap)
    throw CapExceeded("table order exceeds cap");
  if (n > 65535) throw ValidationError("table order exceeds supported range");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw ValidationError("table entry out of range");
  }
  for (int j = 0; j < n; ++j)
    if (cayley[0][j] != j || cayley[j][0] != j)
      throw ValidationError("index 0 is not an identity");
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[cayley[i][j]])
        throw ValidationError("table row is not a permutation");
      seen_row[cayley[i][j]] = 1;
      if (seen_col[cayley[j][i]])
        throw ValidationError("table column is not a permutation");
      seen_col[cayley[j][i]] = 1;
    }
  }

  FiniteGroup g;
  g.name = name;
  g.order = n;
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.table[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::uint16_t>(cayley[i][j]);

  // Greedy generating set (used for Light's associativity test, and as the
  // group's generators when none were supplied).
  std::vector<int> greedy;
  {
    std::set<int> span{0};
    for (int cand = 1; cand < n; ++cand) {
      if (span.count(cand)) continue;
      greedy.push_back(cand);
      std::vector<int> queue(span.begin(), span.end());
      span.insert(cand);
      queue.push_back(cand);
      while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int s : greedy) {
          int y = cayley[x][s];
          if (span.insert(y).second) queue.push_back(y);
          y = cayley[s][x];
          if (span.insert(y).second) queue.push_back(y);
        }
      }
    }
  }
  // Light's test: associativity on a generating set implies associativity.
  for (int s : greedy)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (cayley[cayley[a][s]][b] != cayley[a][cayley[s][b]])
          throw ValidationError("multiplication table is not associative");

  if (gens.empty()) {
    gens = greedy;
  } else {
    std::set<int> uniq;
    std::vector<int> cleaned;
    for (int x : gens) {
      if (x <= 0 || x >= n)
        throw ValidationError("generator index out of range");
      if (uniq.insert(x).second) cleaned.push_back(x);
    }
    gens = cleaned;
  }
  g.generators = gens;

  // Word tree over the chosen generators.
  g.parent.assign(n, -2);
  g.via_gen.assign(n, -2);
  g.parent[0] = -1;
  g.via_gen[0] = -1;
  std::vector<int> frontier{0};
  int reached = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int y = cayley[x][gens[gi]];
        if (g.parent[y] != -2) continue;
        g.parent[y] = x;
        g.via_gen[y] = static_cast<int>(gi);
        next.push_back(y);
        ++reached;
      }
    frontier = std::move(next);
  }
  if (reached != n)
    throw ValidationError("generators do not generate the whole group");
  g.finalize();
  return g;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjClass> classes;
  std::vector<char> seen(g.order, 0);
  for (int rep = 0; rep < g.order; ++rep) {
    if (seen[rep]) continue;
    ConjClass cl;
    cl.representative = rep;
    std::vector<int> queue{rep};
    seen[rep] = 1;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      cl.members.push_back(x);
      for (int h : g.generators) {
        int y = g.conj(h, x);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(cl.members.begin(), cl.members.end());
    cl.centralizer_order = g.order / static_cast<long long>(cl.members.size());
    classes.push_back(std::move(cl));
  }
  return classes;
}

std::vector<int> class_index_map(const FiniteGroup& g,
                                 const std::vector<ConjClass>& classes) {
  std::vector<int> map(g.order, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int m : classes[i].members) map[m] = static_cast<int>(i);
  return map;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& tuple) {
  Subgroup h;
  for (int x = 0; x < g.order; ++x) {
    bool ok = true;
    for (int t : tuple)
      if (g.mul(x, t) != g.mul(t, x)) {
        ok = false;
        break;
      }
    if (ok) h.members.push_back(x);
  }
  return h;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> span{0};
  std::vector<int> queue{0};
  for (int x : gens)
    if (span.insert(x).second) queue.push_back(x);
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int s : gens) {
      int y = g.mul(x, s);
      if (span.insert(y).second) queue.push_back(y);
    }
  }
  Subgroup h;
  h.members.assign(span.begin(), span.end());
  return h;
}

std::vector<int> greedy_generators(const FiniteGroup& g,
                                   const std::vector<int>& members) {
  std::vector<int> gens;
  std::set<int> span{0};
  for (int cand : members) {
    if (span.count(cand)) continue;
    gens.push_back(cand);
    Subgroup h = subgroup_closure(g, gens);
    span = std::set<int>(h.members.begin(), h.members.end());
  }
  return gens;
}

LocalGroup as_group(const FiniteGroup& g, const Subgroup& h,
                    const std::string& name) {
  if (h.members.empty() || h.members[0] != 0)
    throw ValidationError("subgroup does not contain the identity");
  int n = h.order();
  std::vector<int> local(g.order, -1);
  for (int i = 0; i < n; ++i) local[h.members[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = g.mul(h.members[i], h.members[j]);
      if (local[prod] < 0) throw ValidationError("set is not closed");
      table[i][j] = local[prod];
    }
  RunLimits local_limits;
  local_limits.order_cap = static_cast<std::uint64_t>(n) + 1;
  LocalGroup out{group_from_cayley(name, table, local_limits), h.members};
  return out;
}

std::vector<Int> abelianization(const FiniteGroup& g) {
  // normal closure of the commutators of the generators
  std::vector<int> closure_gens;
  for (int a : g.generators)
    for (int b : g.generators) {
      int c = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
      if (c != 0) closure_gens.push_back(c);
    }
  Subgroup k = subgroup_closure(g, closure_gens);
  for (bool grew = true; grew;) {
    grew = false;
    for (int h : g.generators) {
      for (int x : k.members) {
        int y = g.conj(h, x);
        if (!k.contains(y)) {
          closure_gens.push_back(y);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (grew) k = subgroup_closure(g, closure_gens);
  }

  // quotient by K
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int kk : k.members) coset_of[g.mul(x, kk)] = id;
  }
  int q = static_cast<int>(reps.size());

  // abelian invariants of the quotient via a triangular presentation:
  // greedy generators q_i, with q_i^{o_i} expressed over the previous ones
  auto qmul = [&](int a, int b) { return coset_of[g.mul(reps[a], reps[b])]; };
  std::vector<int> qgens;
  std::vector<int> rel_orders;
  std::map<int, std::vector<long long>> expo;  // coset -> exponent vector
  expo[0] = {};
  for (int cand = 1; cand < q; ++cand) {
    if (expo.count(cand)) continue;
    qgens.push_back(cand);
    // order of cand modulo the span of the previous generators
    int o = 1, p = cand;
    while (!expo.count(p)) {
      p = qmul(p, cand);
      ++o;
    }
    rel_orders.push_back(o);
    std::map<int, std::vector<long long>> bigger;
    int pw = 0;
    for (int a = 0; a < o; ++a) {
      for (const auto& [elt, vec] : expo) {
        std::vector<long long> v = vec;
        v.push_back(a);
        bigger.emplace(qmul(pw, elt), std::move(v));
      }
      pw = qmul(pw, cand);
    }
    for (auto& [elt, vec] : bigger) vec.resize(qgens.size(), 0);
    expo = std::move(bigger);
  }
  if (static_cast<int>(expo.size()) != q)
    throw ConsistencyError("abelian span mismatch");

  int m = static_cast<int>(qgens.size());
  IntMatrix rel(m, m);
  for (int i = 0; i < m; ++i) {
    int p = 0;
    for (int a = 0; a < rel_orders[i]; ++a) p = qmul(p, qgens[i]);
    const std::vector<long long>& vec = expo.at(p);
    rel.at(i, i) = rel_orders[i];
    for (int j = 0; j < i; ++j) rel.at(i, j) -= Int(vec[j]);
    // q_i^{o_i} lies in the span of q_1..q_{i-1}
    for (int j = i; j < m; ++j)
      if (vec[j] != 0) throw ConsistencyError("triangular relation violated");
  }
  std::vector<Int> divisors = smith_normal_form(rel);
  std::vector<Int> factors;
  Int total(1);
  for (const Int& d : divisors) {
    total *= d;
    if (d > 1) factors.push_back(d);
  }
  if (total != q) throw ConsistencyError("presentation does not match quotient");
  return factors;
}

std::map<int, int> p_part_decomposition(const FiniteGroup& g, int elt) {
  std::map<int, int> parts;
  long long n = g.elt_order[elt];
  long long rest = n;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    long long pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    parts[static_cast<int>(p)] = static_cast<int>(pk);
  }
  if (rest > 1) parts[static_cast<int>(rest)] = static_cast<int>(rest);

  std::map<int, int> out;
  for (auto [p, pk] : parts) {
    long long cof = n / pk;
    // exponent congruent to 1 mod pk and 0 mod n/pk
    long long c = 0;
    for (long long t = 0; t < pk; ++t) {
      if ((t * cof) % pk == 1 % pk) {
        c = t * cof;
        break;
      }
    }
    out[p] = g.power(elt, c);
  }
  return out;
}

std::vector<int> power_class_map(const FiniteGroup& g,
                                 const std::vector<ConjClass>& classes,
                                 long long k) {
  long long r = k % g.order;
  if (r < 0) r += g.order;
  if (std::gcd(static_cast<long long>(g.order), r) != 1)
    throw ValidationError("power map exponent not coprime to group order");
  std::vector<int> cls_of = class_index_map(g, classes);
  std::vector<int> out(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i)
    out[i] = cls_of[g.power(classes[i].representative, r)];
  return out;
}

}  // namespace inertia
