#include "inertia/tuples.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "inertia/fp_linalg.hpp"
#include "inertia/util.hpp"

namespace inertia {
namespace {

bool is_prime_int(int p) { return p >= 2 && is_prime_u64(static_cast<u64>(p)); }

// Smallest generator of the (cyclic) unit group mod an odd prime power.
long long unit_group_generator(long long pe, int prime) {
  long long phi = pe / prime * (prime - 1);
  for (long long r = 2; r < pe; ++r) {
    if (std::gcd(r, pe) != 1) continue;
    long long x = r % pe, ord = 1;
    while (x != 1) {
      x = (x * r) % pe;
      ++ord;
    }
    if (ord == phi) return r;
  }
  throw ConsistencyError("unit group of odd prime power not cyclic");
}

}  // namespace

std::vector<int> canonical_tuple(const FiniteGroup& g, const std::vector<int>& tuple) {
  std::vector<int> conjugators(g.order);
  std::iota(conjugators.begin(), conjugators.end(), 0);
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    int best = -1;
    for (int h : conjugators) {
      int v = g.conj(h, tuple[i]);
      if (best < 0 || v < best) best = v;
    }
    std::vector<int> kept;
    for (int h : conjugators)
      if (g.conj(h, tuple[i]) == best) kept.push_back(h);
    conjugators = std::move(kept);
    out[i] = best;
  }
  return out;
}

bool is_prime_power_order(const FiniteGroup& g, int elt, int prime) {
  int o = g.elt_order[elt];
  while (o % prime == 0) o /= prime;
  return o == 1;
}

std::uint64_t count_commuting_tuples(const FiniteGroup& g, int n,
                                     std::optional<int> prime,
                                     const RunLimits& limits) {
  if (n < 0) throw ValidationError("tuple length must be nonnegative");
  if (prime && (*prime < 2 || !is_prime_int(*prime)))
    throw ValidationError("prime filter must be a prime number");
  std::map<std::pair<std::vector<int>, int>, std::uint64_t> memo;
  std::vector<int> all(g.order);
  std::iota(all.begin(), all.end(), 0);
  std::function<std::uint64_t(const std::vector<int>&, int)> cnt =
      [&](const std::vector<int>& members, int r) -> std::uint64_t {
    if (r == 0) return 1;
    auto key = std::make_pair(members, r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    limits.check_deadline("count_commuting_tuples");
    std::uint64_t total = 0;
    for (int cand : members) {
      if (prime && !is_prime_power_order(g, cand, *prime)) continue;
      std::vector<int> next;
      next.reserve(members.size());
      for (int h : members)
        if (g.mul(h, cand) == g.mul(cand, h)) next.push_back(h);
      total += cnt(next, r - 1);
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return cnt(all, n);
}

std::vector<InertiaLevel> tuple_class_tower(const FiniteGroup& g, int n,
                                            std::optional<int> prime,
                                            const RunLimits& limits,
                                            TupleKind kind) {
  if (n < 0) throw ValidationError("tuple length must be nonnegative");
  if (prime && (*prime < 2 || !is_prime_int(*prime)))
    throw ValidationError("prime filter must be a prime number");
  std::vector<InertiaLevel> tower;
  {
    InertiaLevel base;
    base.n = 0;
    base.prime = prime;
    TupleClass empty;
    empty.orbit_size = 1;
    empty.centralizer.resize(g.order);
    std::iota(empty.centralizer.begin(), empty.centralizer.end(), 0);
    base.classes.push_back(std::move(empty));
    tower.push_back(std::move(base));
  }
  for (int level = 1; level <= n; ++level) {
    const std::vector<TupleClass>& prev = tower.back().classes;
    auto extend = [&](std::size_t ci) {
      limits.check_deadline("tuple_class_tower");
      const TupleClass& t = prev[ci];
      const std::vector<int>& c = t.centralizer;
      std::vector<int> local(g.order, -1);
      for (std::size_t i = 0; i < c.size(); ++i) local[c[i]] = static_cast<int>(i);
      std::vector<int> cgens = greedy_generators(g, c);
      // candidate set: for commuting tuples the next entry must centralize
      // the prefix; otherwise any element extends
      std::vector<int> cands;
      if (kind == TupleKind::Commuting) {
        for (int x : c)
          if (!prime || is_prime_power_order(g, x, *prime)) cands.push_back(x);
      } else {
        for (int x = 0; x < g.order; ++x)
          if (!prime || is_prime_power_order(g, x, *prime)) cands.push_back(x);
      }
      std::vector<char> in_cands(g.order, 0), seen(g.order, 0);
      for (int x : cands) in_cands[x] = 1;
      std::vector<TupleClass> out;
      for (int x : cands) {
        if (seen[x]) continue;
        // orbit of x under conjugation by the prefix centralizer
        std::vector<int> queue{x};
        seen[x] = 1;
        while (!queue.empty()) {
          int y = queue.back();
          queue.pop_back();
          for (int h : cgens) {
            int z = g.conj(h, y);
            if (!seen[z]) {
              if (!in_cands[z]) throw ConsistencyError("orbit left candidate set");
              seen[z] = 1;
              queue.push_back(z);
            }
          }
        }
        TupleClass ext;
        ext.rep = t.rep;
        ext.rep.push_back(x);
        for (int h : c)
          if (g.mul(h, x) == g.mul(x, h)) ext.centralizer.push_back(h);
        ext.orbit_size = g.order / static_cast<long long>(ext.centralizer.size());
        out.push_back(std::move(ext));
      }
      return out;
    };
    std::vector<std::vector<TupleClass>> chunks =
        parallel_map<std::vector<TupleClass>>(prev.size(), limits.threads, extend);
    InertiaLevel next;
    next.n = level;
    next.prime = prime;
    std::uint64_t total = 0;
    for (const auto& ch : chunks) total += ch.size();
    if (total > limits.tuple_cap)
      throw CapExceeded("tuple class count exceeds cap at level " +
                            std::to_string(level),
                        "levels completed: " + std::to_string(level - 1));
    next.classes.reserve(total);
    for (auto& ch : chunks)
      for (auto& t : ch) next.classes.push_back(std::move(t));
    tower.push_back(std::move(next));
  }
  return tower;
}

InertiaLevel tuple_classes(const FiniteGroup& g, int n, std::optional<int> prime,
                           const RunLimits& limits, TupleKind kind) {
  return tuple_class_tower(g, n, prime, limits, kind).back();
}

namespace {

// Enumerates commuting tuples with a callback; entries restricted to prime
// power order when a prime is given.
void for_each_commuting_tuple(const FiniteGroup& g, int n, std::optional<int> prime,
                              const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> all(g.order);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> tuple;
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& pool) {
    if (static_cast<int>(tuple.size()) == n) {
      fn(tuple);
      return;
    }
    for (int cand : pool) {
      if (prime && !is_prime_power_order(g, cand, *prime)) continue;
      std::vector<int> next;
      next.reserve(pool.size());
      for (int h : pool)
        if (g.mul(h, cand) == g.mul(cand, h)) next.push_back(h);
      tuple.push_back(cand);
      rec(next);
      tuple.pop_back();
    }
  };
  rec(all);
}

}  // namespace

RecursionReport recursion_check(const FiniteGroup& g, int n, const RunLimits& limits) {
  if (n < 1) throw ValidationError("recursion check needs n >= 1");
  RecursionReport report;
  // direct route: count tuples that are their own canonical form
  for_each_commuting_tuple(g, n, std::nullopt, [&](const std::vector<int>& t) {
    if (canonical_tuple(g, t) == t) ++report.direct_classes;
  });
  // recursion route: extend each level-(n-1) class by one conjugacy class of
  // its centralizer, counted as a standalone group
  std::vector<InertiaLevel> tower = tuple_class_tower(g, n - 1, std::nullopt, limits);
  for (const TupleClass& t : tower.back().classes) {
    Subgroup c{t.centralizer};
    LocalGroup lc = as_group(g, c, "centralizer");
    report.recursion_classes += conjugacy_classes(lc.group).size();
  }
  report.ok = report.direct_classes == report.recursion_classes;
  if (!report.ok)
    throw ConsistencyError("tuple class recursion mismatch: direct " +
                           std::to_string(report.direct_classes) + " vs " +
                           std::to_string(report.recursion_classes));
  return report;
}

std::uint64_t hkr_rank(const FiniteGroup& g, int n, int prime,
                       const RunLimits& limits) {
  return tuple_classes(g, n, prime, limits).classes.size();
}

FiberReport fiber_product_check(const FiniteGroup& g, int n, const RunLimits& limits) {
  if (n < 1) throw ValidationError("fiber product check needs n >= 1");
  FiberReport report;
  {
    long long o = g.order;
    for (long long p = 2; p * p <= o; ++p) {
      if (o % p) continue;
      report.primes.push_back(static_cast<int>(p));
      while (o % p == 0) o /= p;
    }
    if (o > 1) report.primes.push_back(static_cast<int>(o));
  }
  std::vector<std::vector<std::vector<int>>> locals(report.primes.size());
  for (std::size_t pi = 0; pi < report.primes.size(); ++pi)
    for_each_commuting_tuple(g, n, report.primes[pi],
                             [&](const std::vector<int>& t) { locals[pi].push_back(t); });

  std::vector<std::vector<int>> homs;
  for_each_commuting_tuple(g, n, std::nullopt,
                           [&](const std::vector<int>& t) { homs.push_back(t); });
  report.hom_count = homs.size();

  // every commuting tuple decomposes entrywise into commuting p-parts
  bool roundtrip_ok = true;
  for (const std::vector<int>& t : homs) {
    std::vector<std::vector<int>> parts(report.primes.size(),
                                        std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (auto [p, gp] : p_part_decomposition(g, t[i])) {
        auto it = std::lower_bound(report.primes.begin(), report.primes.end(), p);
        parts[it - report.primes.begin()][i] = gp;
      }
    }
    for (std::size_t a = 0; a < parts.size() && roundtrip_ok; ++a)
      for (std::size_t b = a; b < parts.size() && roundtrip_ok; ++b)
        for (int i = 0; i < n && roundtrip_ok; ++i)
          for (int j = 0; j < n; ++j)
            if (g.mul(parts[a][i], parts[b][j]) != g.mul(parts[b][j], parts[a][i])) {
              roundtrip_ok = false;
              break;
            }
    for (int i = 0; i < n && roundtrip_ok; ++i) {
      int prod = 0;
      for (const auto& part : parts) prod = g.mul(prod, part[i]);
      if (prod != t[i]) roundtrip_ok = false;
    }
  }

  // families of local tuples commuting crosswise, counted by backtracking
  std::vector<const std::vector<int>*> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t pi) {
    if (pi == locals.size()) {
      ++report.family_count;
      return;
    }
    for (const std::vector<int>& cand : locals[pi]) {
      bool ok = true;
      for (const std::vector<int>* prev : chosen) {
        for (int a : *prev) {
          for (int b : cand)
            if (g.mul(a, b) != g.mul(b, a)) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      chosen.push_back(&cand);
      rec(pi + 1);
      chosen.pop_back();
    }
  };
  rec(0);

  report.bijection_ok = roundtrip_ok && report.family_count == report.hom_count;

  report.class_count = tuple_classes(g, n, std::nullopt, limits).classes.size();
  for (int p : report.primes) {
    std::uint64_t c = tuple_classes(g, n, p, limits).classes.size();
    report.local_class_counts.push_back(c);
    report.naive_class_product *= c;
  }
  report.class_product_matches = report.naive_class_product == report.class_count;
  return report;
}

std::vector<std::vector<int>> gl_orbits(const FiniteGroup& g, int n, int prime,
                                        const RunLimits& limits) {
  if (n < 1) throw ValidationError("gl_orbits needs n >= 1");
  InertiaLevel level = tuple_classes(g, n, prime, limits);
  const std::vector<TupleClass>& classes = level.classes;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < classes.size(); ++i)
    index.emplace(classes[i].rep, static_cast<int>(i));

  long long pe = 1;
  for (int x = 0; x < g.order; ++x)
    if (is_prime_power_order(g, x, prime))
      pe = std::max(pe, static_cast<long long>(g.elt_order[x]));

  // exponent matrices generating GL_n(Z/p^e): all transvections plus a
  // diagonal unit in the first slot
  std::vector<long long> units;
  if (pe > 1) {
    if (prime == 2) {
      if (pe == 4) units = {3};
      if (pe >= 8) units = {pe - 1, 5};
    } else {
      units = {unit_group_generator(pe, prime)};
    }
  }
  struct Move {
    int i = 0, j = 0;        // transvection g_i <- g_i * g_j when i != j
    long long u = 1;         // otherwise g_i <- g_i^u
  };
  std::vector<Move> moves;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) moves.push_back({i, j, 1});
  for (long long u : units) moves.push_back({0, 0, u});

  auto apply = [&](int ci, const Move& mv) {
    std::vector<int> t = classes[ci].rep;
    if (mv.i != mv.j)
      t[mv.i] = g.mul(t[mv.i], t[mv.j]);
    else
      t[mv.i] = g.power(t[mv.i], mv.u);
    return index.at(canonical_tuple(g, t));
  };

  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(classes.size(), 0);
  for (std::size_t start = 0; start < classes.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    std::vector<int> queue{static_cast<int>(start)};
    seen[start] = 1;
    while (!queue.empty()) {
      int ci = queue.back();
      queue.pop_back();
      orbit.push_back(ci);
      for (const Move& mv : moves) {
        int cj = apply(ci, mv);
        if (!seen[cj]) {
          seen[cj] = 1;
          queue.push_back(cj);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::vector<int>> rational_classes(const FiniteGroup& g) {
  std::vector<ConjClass> classes = conjugacy_classes(g);
  std::vector<std::vector<int>> maps;
  for (long long k = 1; k <= std::max(1, g.order - 1); ++k) {
    if (std::gcd(static_cast<long long>(g.order), k) != 1) continue;
    maps.push_back(power_class_map(g, classes, k));
  }
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(classes.size(), 0);
  for (std::size_t start = 0; start < classes.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    std::vector<int> queue{static_cast<int>(start)};
    seen[start] = 1;
    while (!queue.empty()) {
      int ci = queue.back();
      queue.pop_back();
      orbit.push_back(ci);
      for (const auto& pm : maps) {
        int cj = pm[ci];
        if (!seen[cj]) {
          seen[cj] = 1;
          queue.push_back(cj);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace inertia
