#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "inertia/gcomplex.hpp"
#include "inertia/serialize.hpp"
#include "inertia/zoo.hpp"
#include "oracles.hpp"

using namespace inertia;

namespace {

const RunLimits kLimits;

FiniteGroup zoo(const std::string& spec) { return make_zoo_group(spec, kLimits); }

GComplex fixture(const std::string& name) {
  return load_gcomplex_file(oracle::fixture_path(name), kLimits);
}

// triangle boundary with the full symmetric group action
GComplex triangle() { return fixture("triangle_s3.json"); }

}  // namespace

TEST_CASE("building a complex validates and closes faces") {
  FiniteGroup s3 = zoo("sym:3");
  GComplex x = build_gcomplex("tri", 3, {{0, 1}, {0, 2}, {1, 2}}, s3,
                              {{1, 0, 2}, {1, 2, 0}}, kLimits);
  CHECK(x.vertex_count == 3);
  CHECK(x.dimension() == 1);
  CHECK(x.simplices.size() == 6);  // 3 vertices + 3 edges
  // simplices sorted by (size, lex)
  for (std::size_t i = 1; i < x.simplices.size(); ++i) {
    const auto& a = x.simplices[i - 1];
    const auto& b = x.simplices[i];
    CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
  }
  // the action permutes simplices compatibly with vertices
  for (int e = 0; e < 6; ++e)
    for (std::size_t s = 0; s < x.simplices.size(); ++s) {
      std::vector<int> img;
      for (int v : x.simplices[s]) img.push_back(x.vertex_action[e][v]);
      std::sort(img.begin(), img.end());
      CHECK(x.simplices[x.simplex_action[e][s]] == img);
    }
  CHECK(x.simplex_index({0, 1}) >= 0);
  CHECK(x.simplices[x.simplex_index({0, 1})] == std::vector<int>{0, 1});
  CHECK_THROWS_AS((void)x.simplex_index({0, 1, 2}), ConsistencyError);

  // a vertex map that is not a simplicial automorphism is rejected: collapse
  CHECK_THROWS_AS((void)build_gcomplex("bad", 3, {{0, 1}, {0, 2}, {1, 2}}, zoo("cyclic:2"),
                                       {{0, 0, 1}}, kLimits),
                  ValidationError);
  // map count must equal the generator count
  CHECK_THROWS_AS((void)build_gcomplex("bad", 3, {{0, 1}, {0, 2}, {1, 2}}, zoo("sym:3"),
                                       {{1, 0, 2}}, kLimits),
                  ValidationError);
  // a valid permutation that does not preserve the complex is rejected
  CHECK_THROWS_AS((void)build_gcomplex("bad", 3, {{0, 1}, {0, 2}}, zoo("cyclic:2"),
                                       {{1, 0, 2}}, kLimits),
                  ValidationError);
  // a map that fails the homomorphism check is rejected: order mismatch
  CHECK_THROWS_AS((void)build_gcomplex("bad", 4, {{0}, {1}, {2}, {3}}, zoo("cyclic:2"),
                                       {{1, 2, 3, 0}}, kLimits),
                  ValidationError);
  // vertices out of range
  CHECK_THROWS_AS((void)build_gcomplex("bad", 2, {{0, 5}}, zoo("cyclic:1"), {}, kLimits),
                  ValidationError);
  // empty simplex list
  CHECK_THROWS_AS((void)build_gcomplex("bad", 2, {{}}, zoo("cyclic:1"), {}, kLimits),
                  ValidationError);
}

TEST_CASE("fixture files load") {
  GComplex tri = triangle();
  CHECK(tri.group.order == 6);
  CHECK(tri.simplices.size() == 6);
  GComplex hex = fixture("hexagon_z2_free.json");
  CHECK(hex.group.order == 2);
  CHECK(hex.simplices.size() == 12);
  GComplex disk = fixture("disk_trivial.json");
  CHECK(disk.group.order == 1);
  CHECK(disk.simplices.size() == 7);
  CHECK(disk.dimension() == 2);
  CHECK_THROWS_AS((void)fixture("does_not_exist.json"), ValidationError);
}

TEST_CASE("barycentric subdivision") {
  GComplex tri = triangle();
  SdComplex sd = subdivide(tri);
  CHECK(sd.dimension() == tri.dimension());
  // flags: 6 singletons + 6 (vertex < edge) pairs... each edge has 2
  // vertices: 3 * 2 = 6 strict pairs
  CHECK(sd.flags.size() == 12);
  int pairs = 0;
  for (const auto& f : sd.flags)
    if (f.size() == 2) ++pairs;
  CHECK(pairs == 6);
  // flag_index inverts the listing
  for (std::size_t i = 0; i < sd.flags.size(); ++i)
    CHECK(sd.flag_index(sd.flags[i]) == static_cast<int>(i));
  // the induced action permutes flags; orbits of top flags count 1 under
  // the full symmetry (the barycentric subdivision of the quotient is a
  // single arc)
  std::set<std::vector<int>> orbit;
  std::vector<int> top;
  for (const auto& f : sd.flags)
    if (f.size() == 2) {
      top = f;
      break;
    }
  for (int e = 0; e < 6; ++e) orbit.insert(sd.act(e, top));
  CHECK(orbit.size() == 6);

  GComplex disk = fixture("disk_trivial.json");
  SdComplex sd2 = subdivide(disk);
  // 7 simplices, flags = chains in the face poset of a 2-simplex:
  // 7 singletons, vertex<edge 6, vertex<face 3, edge<face 3, v<e<f 6
  CHECK(sd2.flags.size() == 7 + 6 + 3 + 3 + 6);
}

TEST_CASE("fixed subcomplexes") {
  GComplex tri = triangle();
  SdComplex sd = subdivide(tri);
  // identity fixes everything
  FixedSubcomplex all = fixed_subcomplex(sd, {0});
  CHECK(all.flag_ids.size() == sd.flags.size());
  CHECK_FALSE(all.empty());
  // a transposition fixes one vertex barycenter and one opposite-edge
  // barycenter: two isolated points in the subdivision
  int t = -1, c = -1;
  for (int e = 1; e < 6; ++e) {
    if (tri.group.elt_order[e] == 2 && t < 0) t = e;
    if (tri.group.elt_order[e] == 3 && c < 0) c = e;
  }
  FixedSubcomplex ft = fixed_subcomplex(sd, {t});
  CHECK(ft.flag_ids.size() == 2);
  for (int fid : ft.flag_ids) CHECK(sd.flags[fid].size() == 1);
  // a rotation fixes nothing
  FixedSubcomplex fc = fixed_subcomplex(sd, {c});
  CHECK(fc.empty());
  // tuples: the fixed set of (t, c) is the intersection, empty here
  CHECK(fixed_subcomplex(sd, {t, c}).empty());
  CHECK(fixed_subcomplex(sd, {t, t}).flag_ids == ft.flag_ids);
  // monotone: adding entries only shrinks the fixed set
  for (int a = 0; a < 6; ++a) {
    FixedSubcomplex fa = fixed_subcomplex(sd, {a});
    for (int b = 0; b < 6; ++b) {
      FixedSubcomplex fab = fixed_subcomplex(sd, {a, b});
      for (int fid : fab.flag_ids)
        CHECK(std::binary_search(fa.flag_ids.begin(), fa.flag_ids.end(), fid));
    }
  }
  // euler characteristic agrees with the strict-chain oracle on every tuple
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      if (tri.group.mul(a, b) != tri.group.mul(b, a)) continue;
      FixedSubcomplex f = fixed_subcomplex(sd, {a, b});
      long long chi = 0;
      for (int fid : f.flag_ids) chi += (sd.flags[fid].size() % 2 == 1) ? 1 : -1;
      CHECK(chi == oracle::fixed_set_euler(tri, {a, b}));
    }
}

TEST_CASE("orbit space homology") {
  GComplex tri = triangle();
  SdComplex sd = subdivide(tri);
  std::vector<int> everyone(6);
  std::iota(everyone.begin(), everyone.end(), 0);
  // whole circle modulo the full action: an arc, contractible
  FixedSubcomplex whole = fixed_subcomplex(sd, {0});
  OrbitSpaceHomology q = quotient_homology(sd, whole, everyone, kLimits);
  CHECK(q.betti == std::vector<long long>{1, 0});
  CHECK(q.euler == 1);
  // circle modulo the rotation subgroup: still a circle
  FiniteGroup g = tri.group;
  int c = -1;
  for (int e = 1; e < 6; ++e)
    if (g.elt_order[e] == 3) {
      c = e;
      break;
    }
  std::vector<int> rot = {0, c, g.mul(c, c)};
  OrbitSpaceHomology qc = quotient_homology(sd, whole, rot, kLimits);
  CHECK(qc.betti == std::vector<long long>{1, 1});
  CHECK(qc.euler == 0);
  // trivial subgroup: the circle itself
  OrbitSpaceHomology qt = quotient_homology(sd, whole, {0}, kLimits);
  CHECK(qt.betti == std::vector<long long>{1, 1});
  CHECK(qt.euler == 0);
  // two fixed points of a transposition modulo its centralizer (which fixes
  // both): two points
  int t = -1;
  for (int e = 1; e < 6; ++e)
    if (g.elt_order[e] == 2) {
      t = e;
      break;
    }
  FixedSubcomplex ft = fixed_subcomplex(sd, {t});
  OrbitSpaceHomology q2 = quotient_homology(sd, ft, {0, t}, kLimits);
  CHECK(q2.betti == std::vector<long long>{2, 0});
  CHECK(q2.euler == 2);
}

TEST_CASE("sector tables") {
  GComplex tri = triangle();
  SectorTable s1 = sector_table(tri, 1, kLimits);
  CHECK(s1.level == 1);
  REQUIRE(s1.rows.size() == 3);
  // identity row: circle mod everything = arc
  CHECK(s1.rows[0].rep == std::vector<int>{0});
  CHECK(s1.rows[0].betti == std::vector<long long>{1, 0});
  CHECK(s1.rows[0].euler == 1);
  CHECK_FALSE(s1.rows[0].empty_fixed);
  // transposition row: two points mod centralizer of order 2
  bool saw_two_points = false, saw_empty = false;
  for (const auto& row : s1.rows) {
    if (row.rep == std::vector<int>{0}) continue;
    if (row.empty_fixed) {
      saw_empty = true;
      CHECK(tri.group.elt_order[row.rep[0]] == 3);
      CHECK(row.betti.empty());
    } else {
      saw_two_points = true;
      CHECK(tri.group.elt_order[row.rep[0]] == 2);
      CHECK(row.betti == std::vector<long long>{2, 0});
      CHECK(row.euler == 2);
    }
  }
  CHECK(saw_two_points);
  CHECK(saw_empty);
  CHECK(s1.total_rank == 3);
  // orbit sizes and centralizer orders multiply to the group order
  for (const auto& row : s1.rows)
    CHECK(row.orbit_size * row.centralizer_order == tri.group.order);

  // point with trivial group: one row, a point
  GComplex disk = fixture("disk_trivial.json");
  SectorTable sd1 = sector_table(disk, 1, kLimits);
  REQUIRE(sd1.rows.size() == 1);
  CHECK(sd1.rows[0].betti == std::vector<long long>{1, 0, 0});
  CHECK(sd1.total_rank == 1);

  // free action on the hexagon: only the identity row survives, and its
  // sector is the quotient circle
  GComplex hex = fixture("hexagon_z2_free.json");
  SectorTable sh = sector_table(hex, 1, kLimits);
  REQUIRE(sh.rows.size() == 2);
  CHECK(sh.rows[0].rep == std::vector<int>{0});
  CHECK(sh.rows[0].betti == std::vector<long long>{1, 1});
  CHECK(sh.rows[1].empty_fixed);
  CHECK(sh.total_rank == 2);

  // pair sectors on the triangle: commuting pairs only
  SectorTable s2 = sector_table(tri, 2, kLimits);
  CHECK(s2.level == 2);
  CHECK(s2.rows.size() == 8);
  // every row rep is a commuting pair and the canonical orbit minimum
  for (const auto& row : s2.rows) {
    REQUIRE(row.rep.size() == 2);
    CHECK(tri.group.mul(row.rep[0], row.rep[1]) ==
          tri.group.mul(row.rep[1], row.rep[0]));
    CHECK(canonical_tuple(tri.group, row.rep) == row.rep);
  }
  // lexicographic row order
  for (std::size_t i = 1; i < s2.rows.size(); ++i)
    CHECK(s2.rows[i - 1].rep < s2.rows[i].rep);
}

TEST_CASE("sector euler sums equal fixed-point averages") {
  for (const char* name :
       {"triangle_s3.json", "hexagon_z2_free.json", "disk_trivial.json",
        "interval_z2.json", "square_d4.json", "two_points_z2.json"}) {
    GComplex x = fixture(name);
    EulerReport r = euler_consistency(x, kLimits);
    CHECK(r.equal);
    CHECK(r.sector_sum == r.pair_average);
    // independent recomputation of the pair average over the oracle's
    // strict-chain euler characteristics
    Rat avg(0);
    for (int a = 0; a < x.group.order; ++a)
      for (int b = 0; b < x.group.order; ++b) {
        if (x.group.mul(a, b) != x.group.mul(b, a)) continue;
        avg += Rat(oracle::fixed_set_euler(x, {a, b}));
      }
    avg /= x.group.order;
    CHECK(r.pair_average == avg);
  }
}

TEST_CASE("pinned orbifold euler characteristics") {
  auto chi = [&](const char* name) {
    return euler_consistency(fixture(name), kLimits).sector_sum;
  };
  CHECK(chi("triangle_s3.json") == Rat(3));
  CHECK(chi("hexagon_z2_free.json") == Rat(0));
  CHECK(chi("disk_trivial.json") == Rat(1));
  CHECK(chi("interval_z2.json") == Rat(2));
  CHECK(chi("square_d4.json") == Rat(3));
  CHECK(chi("two_points_z2.json") == Rat(1));
  CHECK(chi("tetra_a4.json") == Rat(7));
}

TEST_CASE("diagonal model homology") {
  // single point, trivial group: the inertia nerve of the trivial group
  GComplex disk = fixture("disk_trivial.json");
  HomologySummary hd = total_inertia_homology(disk, 2, kLimits);
  CHECK(hd.ring == Ring::Q);
  CHECK(hd.betti == std::vector<long long>{1, 0, 0});

  // trivial group on a genuine complex: rational homology of the complex;
  // the disk is contractible
  CHECK(oracle::diagonal_homology_q(disk, 2) == std::vector<long long>{1, 0, 0});

  // interval with the flip: quotient is contractible and stabilizers are
  // rationally invisible
  GComplex seg = fixture("interval_z2.json");
  HomologySummary hs = total_inertia_homology(seg, 2, kLimits);
  CHECK(hs.betti == oracle::diagonal_homology_q(seg, 2));

  // two swapped points: one orbit, homology of a point
  GComplex pts = fixture("two_points_z2.json");
  HomologySummary hp = total_inertia_homology(pts, 2, kLimits);
  CHECK(hp.betti == std::vector<long long>{1, 0, 0});
  CHECK(hp.betti == oracle::diagonal_homology_q(pts, 2));

  // triangle boundary with the full symmetry, through degree 2
  GComplex tri = triangle();
  HomologySummary ht = total_inertia_homology(tri, 2, kLimits);
  CHECK(ht.betti == oracle::diagonal_homology_q(tri, 2));
  CHECK(ht.betti[0] == 1);

  // free action: the diagonal model collapses to the quotient circle
  GComplex hex = fixture("hexagon_z2_free.json");
  HomologySummary hh = total_inertia_homology(hex, 1, kLimits);
  CHECK(hh.betti == oracle::diagonal_homology_q(hex, 1));
  CHECK(hh.betti == std::vector<long long>{1, 1});
}

TEST_CASE("quotient second subdivision stays regular") {
  // the square with the dihedral action has edges flipped onto themselves;
  // the machinery must still produce an honest quotient
  GComplex sq = fixture("square_d4.json");
  SectorTable s = sector_table(sq, 1, kLimits);
  CHECK(s.rows.size() >= 4);
  // identity sector: square circle mod d4 = arc
  CHECK(s.rows[0].rep == std::vector<int>{0});
  CHECK(s.rows[0].betti == std::vector<long long>{1, 0});
  EulerReport r = euler_consistency(sq, kLimits);
  CHECK(r.equal);
}
