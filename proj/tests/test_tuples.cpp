#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "inertia/tuples.hpp"
#include "inertia/zoo.hpp"
#include "oracles.hpp"

using namespace inertia;

namespace {

const RunLimits kLimits;

FiniteGroup zoo(const std::string& spec) { return make_zoo_group(spec, kLimits); }

std::vector<std::vector<int>> reps_of(const InertiaLevel& lvl) {
  std::vector<std::vector<int>> out;
  for (const auto& c : lvl.classes) out.push_back(c.rep);
  return out;
}

}  // namespace

TEST_CASE("canonical tuples") {
  FiniteGroup s3 = zoo("sym:3");
  // canonical form is conjugation invariant and minimal
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (s3.mul(a, b) != s3.mul(b, a)) continue;
      auto can = canonical_tuple(s3, {a, b});
      for (int h = 0; h < 6; ++h) {
        std::vector<int> conj = {s3.conj(h, a), s3.conj(h, b)};
        CHECK(canonical_tuple(s3, conj) == can);
        CHECK(!(conj < can));
      }
    }
  CHECK(canonical_tuple(s3, {}) == std::vector<int>{});
}

TEST_CASE("prime power order predicate") {
  FiniteGroup c12 = zoo("cyclic:12");
  // element k has order 12/gcd(k,12)
  CHECK(is_prime_power_order(c12, 0, 2));   // identity counts for every prime
  CHECK(is_prime_power_order(c12, 0, 3));
  CHECK(is_prime_power_order(c12, 6, 2));   // order 2
  CHECK(is_prime_power_order(c12, 3, 2));   // order 4
  CHECK(is_prime_power_order(c12, 4, 3));   // order 3
  CHECK_FALSE(is_prime_power_order(c12, 4, 2));
  CHECK_FALSE(is_prime_power_order(c12, 1, 2));  // order 12 is not a 2-power
  CHECK_FALSE(is_prime_power_order(c12, 1, 3));
}

TEST_CASE("commuting tuple counts") {
  FiniteGroup s3 = zoo("sym:3");
  CHECK(count_commuting_tuples(s3, 2, std::nullopt, kLimits) == 18);
  CHECK(count_commuting_tuples(s3, 1, std::nullopt, kLimits) == 6);
  CHECK(count_commuting_tuples(s3, 0, std::nullopt, kLimits) == 1);
  CHECK(count_commuting_tuples(s3, 2, 2, kLimits) == 10);
  // |Hom(Z^2, G)| = |G| * (number of conjugacy classes)
  for (const char* spec : {"sym:3", "sym:4", "dihedral:5", "quaternion_generalized:2",
                           "alt:4", "heisenberg_p:3"}) {
    FiniteGroup g = zoo(spec);
    CHECK(count_commuting_tuples(g, 2, std::nullopt, kLimits) ==
          static_cast<std::uint64_t>(g.order) * conjugacy_classes(g).size());
  }
  // abelian: every tuple commutes
  FiniteGroup ab = zoo("direct_product:cyclic:2,cyclic:4");
  for (int n = 0; n <= 3; ++n)
    CHECK(count_commuting_tuples(ab, n, std::nullopt, kLimits) ==
          (std::uint64_t{1} << (3 * n)));
  // against the exhaustive oracle, including p-local variants
  for (const char* spec : {"sym:3", "dihedral:4", "alt:4", "cyclic:12"}) {
    FiniteGroup g = zoo(spec);
    for (int n = 1; n <= 2; ++n) {
      CHECK(count_commuting_tuples(g, n, std::nullopt, kLimits) ==
            oracle::commuting_tuples(g, n, std::nullopt).size());
      for (int p : {2, 3})
        CHECK(count_commuting_tuples(g, n, p, kLimits) ==
              oracle::commuting_tuples(g, n, p).size());
    }
  }
}

TEST_CASE("tuple classes match the orbit oracle") {
  for (const char* spec : {"sym:3", "sym:4", "dihedral:4", "quaternion_generalized:2",
                           "alt:4", "heisenberg_p:3"}) {
    FiniteGroup g = zoo(spec);
    for (int n = 0; n <= 2; ++n) {
      InertiaLevel lvl = tuple_classes(g, n, std::nullopt, kLimits);
      auto tuples = oracle::commuting_tuples(g, n, std::nullopt);
      auto orbits = oracle::tuple_orbit_partition(g, tuples);
      REQUIRE(lvl.classes.size() == orbits.size());
      // orbit minima coincide with the library reps (both sorted)
      std::vector<std::vector<int>> minima;
      for (const auto& orb : orbits) minima.push_back(orb.front());
      std::sort(minima.begin(), minima.end());
      CHECK(reps_of(lvl) == minima);
      // orbit sizes and centralizers
      std::map<std::vector<int>, std::size_t> size_of;
      for (const auto& orb : orbits) size_of[orb.front()] = orb.size();
      for (const auto& c : lvl.classes) {
        CHECK(static_cast<std::size_t>(c.orbit_size) == size_of[c.rep]);
        CHECK(c.orbit_size * static_cast<long long>(c.centralizer.size()) == g.order);
        for (int z : c.centralizer)
          for (int e : c.rep) CHECK(g.mul(z, e) == g.mul(e, z));
      }
    }
  }
}

TEST_CASE("pinned class counts") {
  FiniteGroup s3 = zoo("sym:3");
  CHECK(tuple_classes(s3, 1, std::nullopt, kLimits).classes.size() == 3);
  CHECK(tuple_classes(s3, 2, std::nullopt, kLimits).classes.size() == 8);
  CHECK(tuple_classes(s3, 3, std::nullopt, kLimits).classes.size() == 21);
  FiniteGroup q8 = zoo("quaternion_generalized:2");
  CHECK(tuple_classes(q8, 2, std::nullopt, kLimits).classes.size() == 22);
  // towers agree level by level with fresh computations
  auto tower = tuple_class_tower(s3, 3, std::nullopt, kLimits);
  REQUIRE(tower.size() == 4);
  for (int m = 0; m <= 3; ++m) {
    CHECK(tower[m].n == m);
    CHECK(reps_of(tower[m]) == reps_of(tuple_classes(s3, m, std::nullopt, kLimits)));
  }
  // arbitrary (non-commuting) tuples: n = 2 on sym:3 has more classes
  InertiaLevel all2 = tuple_classes(s3, 2, std::nullopt, kLimits, TupleKind::All);
  auto all_orbits = oracle::tuple_orbit_partition(s3, [&] {
    std::vector<std::vector<int>> ts;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) ts.push_back({a, b});
    return ts;
  }());
  CHECK(all2.classes.size() == all_orbits.size());
  CHECK(all2.classes.size() > 8);
}

TEST_CASE("p-local classes") {
  FiniteGroup s3 = zoo("sym:3");
  InertiaLevel p2 = tuple_classes(s3, 2, 2, kLimits);
  CHECK(p2.classes.size() == oracle::commuting_class_count(s3, 2, 2));
  CHECK(p2.prime == 2);
  InertiaLevel p3 = tuple_classes(s3, 2, 3, kLimits);
  CHECK(p3.classes.size() == oracle::commuting_class_count(s3, 2, 3));
  // a prime not dividing the order leaves only the identity tuple
  InertiaLevel p5 = tuple_classes(s3, 2, 5, kLimits);
  CHECK(p5.classes.size() == 1);
  CHECK(p5.classes[0].rep == std::vector<int>{0, 0});
}

TEST_CASE("recursion against centralizer sums") {
  for (const char* spec : {"sym:3", "sym:4", "quaternion_generalized:2", "alt:4",
                           "dihedral:6", "heisenberg_p:3"}) {
    FiniteGroup g = zoo(spec);
    for (int n = 1; n <= 2; ++n) {
      RecursionReport r = recursion_check(g, n, kLimits);
      CHECK(r.ok);
      CHECK(r.direct_classes == r.recursion_classes);
      CHECK(r.direct_classes == oracle::commuting_class_count(g, n, std::nullopt));
    }
  }
}

TEST_CASE("local rank counts") {
  FiniteGroup s3 = zoo("sym:3");
  CHECK(hkr_rank(s3, 2, 2, kLimits) == 4);
  CHECK(hkr_rank(s3, 2, 3, kLimits) == 5);
  CHECK(hkr_rank(s3, 1, 2, kLimits) == 2);
  CHECK(hkr_rank(s3, 1, 3, kLimits) == 2);
  FiniteGroup q8 = zoo("quaternion_generalized:2");
  CHECK(hkr_rank(q8, 2, 2, kLimits) == 22);
  // n = 1: the rank is the number of p-power-order classes
  for (const char* spec : {"sym:4", "dihedral:6", "alt:4"}) {
    FiniteGroup g = zoo(spec);
    for (int p : {2, 3}) {
      auto classes = conjugacy_classes(g);
      std::uint64_t expected = 0;
      for (const auto& c : classes)
        if (is_prime_power_order(g, c.representative, p)) ++expected;
      CHECK(hkr_rank(g, 1, p, kLimits) == expected);
    }
  }
  // matches the oracle's orbit count of p-local tuples
  for (int p : {2, 3})
    for (int n = 1; n <= 2; ++n)
      CHECK(hkr_rank(zoo("sym:4"), n, p, kLimits) ==
            oracle::commuting_class_count(zoo("sym:4"), n, p));
}

TEST_CASE("fiber decomposition over primes") {
  FiniteGroup s3 = zoo("sym:3");
  FiberReport r = fiber_product_check(s3, 2, kLimits);
  CHECK(r.primes == std::vector<int>{2, 3});
  CHECK(r.hom_count == 18);
  CHECK(r.family_count == 18);
  CHECK(r.bijection_ok);
  CHECK(r.class_count == 8);
  CHECK(r.local_class_counts == std::vector<std::uint64_t>{4, 5});
  CHECK(r.naive_class_product == 20);
  CHECK_FALSE(r.class_product_matches);

  // on an abelian group the class product is exact
  FiniteGroup c6 = zoo("cyclic:6");
  FiberReport ra = fiber_product_check(c6, 2, kLimits);
  CHECK(ra.bijection_ok);
  CHECK(ra.class_product_matches);
  CHECK(ra.class_count == 36);
  CHECK(ra.local_class_counts == std::vector<std::uint64_t>{4, 9});

  // prime-power order: a single prime, product trivially exact
  FiniteGroup q8 = zoo("quaternion_generalized:2");
  FiberReport rq = fiber_product_check(q8, 2, kLimits);
  CHECK(rq.primes == std::vector<int>{2});
  CHECK(rq.bijection_ok);
  CHECK(rq.class_product_matches);

  // sym:4 at n = 2: bijection between tuples and cross-commuting families
  FiberReport r4 = fiber_product_check(zoo("sym:4"), 2, kLimits);
  CHECK(r4.bijection_ok);
  CHECK(r4.hom_count == static_cast<std::uint64_t>(24) * 5);
  CHECK(r4.hom_count == r4.family_count);
}

TEST_CASE("matrix group orbits on local classes") {
  // cyclic:4 at p = 2, n = 1: classes {0}, {1,3}, {2} under units mod 4
  FiniteGroup c4 = zoo("cyclic:4");
  auto orb4 = gl_orbits(c4, 1, 2, kLimits);
  InertiaLevel lvl4 = tuple_classes(c4, 1, 2, kLimits);
  REQUIRE(lvl4.classes.size() == 4);
  std::vector<std::vector<int>> expect4;
  {
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < lvl4.classes.size(); ++i) idx[lvl4.classes[i].rep] = static_cast<int>(i);
    expect4 = {{idx[{0}]}, {idx[{1}], idx[{3}]}, {idx[{2}]}};
    std::sort(expect4.begin(), expect4.end());
  }
  CHECK(orb4 == expect4);
  CHECK(orb4.size() == oracle::gl_orbit_count_exhaustive(c4, 1, 2));

  // klein four group at p = 2, n = 1: units mod 2 are trivial, so every
  // class is its own orbit
  FiniteGroup v4 = zoo("direct_product:cyclic:2,cyclic:2");
  auto orbv = gl_orbits(v4, 1, 2, kLimits);
  CHECK(orbv.size() == 4);
  CHECK(orbv.size() == oracle::gl_orbit_count_exhaustive(v4, 1, 2));

  // cyclic:2 at n = 1: two orbits ({e}, {t})
  CHECK(gl_orbits(zoo("cyclic:2"), 1, 2, kLimits).size() == 2);

  // exhaustive cross-check on n = 2 instances
  for (const char* spec : {"cyclic:4", "sym:3", "quaternion_generalized:2",
                           "direct_product:cyclic:2,cyclic:2"}) {
    FiniteGroup g = zoo(spec);
    auto orbits = gl_orbits(g, 2, 2, kLimits);
    CHECK(orbits.size() == oracle::gl_orbit_count_exhaustive(g, 2, 2));
    // orbits partition the class indices
    std::set<int> seen;
    std::size_t total = 0;
    for (const auto& orb : orbits) {
      CHECK(std::is_sorted(orb.begin(), orb.end()));
      for (int c : orb) seen.insert(c);
      total += orb.size();
    }
    CHECK(seen.size() == total);
    CHECK(total == tuple_classes(g, 2, 2, kLimits).classes.size());
  }
  // odd prime
  FiniteGroup c9 = zoo("cyclic:9");
  auto orb9 = gl_orbits(c9, 1, 3, kLimits);
  // classes {0}, {1,2,4,5,7,8}, {3,6}: three orbits under units mod 9
  CHECK(orb9.size() == 3);
  CHECK(orb9.size() == oracle::gl_orbit_count_exhaustive(c9, 1, 3));
}

TEST_CASE("rational classes") {
  CHECK(rational_classes(zoo("sym:3")).size() == 3);
  CHECK(rational_classes(zoo("sym:4")).size() == 5);   // symmetric: all rational
  CHECK(rational_classes(zoo("cyclic:3")).size() == 2);
  CHECK(rational_classes(zoo("cyclic:7")).size() == 2);
  CHECK(rational_classes(zoo("quaternion_generalized:2")).size() == 5);
  CHECK(rational_classes(zoo("alt:4")).size() == 3);  // two 3-cycle classes fuse
  CHECK(rational_classes(zoo("alt:5")).size() == 4);  // the two 5-classes fuse
  // orbits partition the classes
  FiniteGroup g = zoo("dihedral:6");
  auto classes = conjugacy_classes(g);
  auto orbits = rational_classes(g);
  std::size_t total = 0;
  for (const auto& orb : orbits) total += orb.size();
  CHECK(total == classes.size());
  // each orbit is closed under every coprime power map
  auto cmap = class_index_map(g, classes);
  for (const auto& orb : orbits) {
    std::set<int> members(orb.begin(), orb.end());
    for (int ci : orb)
      for (long long k = 1; k <= g.exponent(); ++k) {
        if (std::gcd(k, static_cast<long long>(g.order)) != 1) continue;
        CHECK(members.count(cmap[g.power(classes[ci].representative, k)]) == 1);
      }
  }
}

TEST_CASE("class data is invariant under relabeling by inner automorphisms") {
  FiniteGroup s4 = zoo("sym:4");
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, s4.order - 1);
  // conjugating the generator set gives an isomorphic group; class counts,
  // tuple class counts, and local ranks must not move
  int h = pick(rng);
  std::vector<std::vector<int>> gens2;
  // rebuild from permutation images of conjugated generators
  // (sym:4 is a permutation group on 4 points)
  for (int gi : s4.generators) {
    int cg = s4.conj(h, gi);
    gens2.push_back(s4.perms.empty() ? std::vector<int>{} : s4.perms[cg]);
  }
  if (!s4.perms.empty()) {
    FiniteGroup g2 = group_from_permutations("s4c", s4.degree, gens2, kLimits);
    CHECK(g2.order == 24);
    CHECK(conjugacy_classes(g2).size() == 5);
    CHECK(tuple_classes(g2, 2, std::nullopt, kLimits).classes.size() ==
          tuple_classes(s4, 2, std::nullopt, kLimits).classes.size());
    CHECK(hkr_rank(g2, 2, 2, kLimits) == hkr_rank(s4, 2, 2, kLimits));
  } else {
    // table-backed group: same invariance through the cayley constructor
    std::vector<std::vector<int>> cay(24, std::vector<int>(24));
    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b) cay[a][b] = s4.mul(a, b);
    FiniteGroup g2 = group_from_cayley("s4c", cay, kLimits);
    CHECK(tuple_classes(g2, 2, std::nullopt, kLimits).classes.size() ==
          tuple_classes(s4, 2, std::nullopt, kLimits).classes.size());
    CHECK(hkr_rank(g2, 2, 2, kLimits) == hkr_rank(s4, 2, 2, kLimits));
  }
}

TEST_CASE("tuple cap aborts with partial progress") {
  RunLimits small = kLimits;
  small.tuple_cap = 5;
  CHECK_THROWS_AS((void)tuple_classes(zoo("sym:4"), 3, std::nullopt, small),
                  CapExceeded);
  try {
    (void)tuple_classes(zoo("sym:4"), 3, std::nullopt, small);
  } catch (const CapExceeded& e) {
    CHECK(!e.partial.empty());
  }
}
