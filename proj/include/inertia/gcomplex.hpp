#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inertia/exact.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"
#include "inertia/simplicial.hpp"

namespace inertia {

// Finite simplicial complex with a group acting by simplicial automorphisms.
// Simplices are stored as sorted vertex lists, ordered by (size, lex); the
// action is tabulated per group element on vertices and on simplex ids.
struct GComplex {
  std::string name;
  int vertex_count = 0;
  FiniteGroup group;
  std::vector<std::vector<int>> maximal;        // as supplied, validated
  std::vector<std::vector<int>> simplices;      // full face closure
  std::vector<std::vector<int>> vertex_action;  // [element][vertex]
  std::vector<std::vector<int>> simplex_action; // [element][simplex id]

  int dimension() const;                 // max simplex size - 1 (-1 if empty)
  int simplex_index(const std::vector<int>& sorted_vertices) const;
};

// Validates vertex maps (permutations, one per group generator, preserving
// the complex), extends them to the whole group along the word tree, and
// checks the extension is a homomorphism on every (element, generator) pair.
GComplex build_gcomplex(const std::string& name, int vertex_count,
                        const std::vector<std::vector<int>>& maximal,
                        FiniteGroup group,
                        const std::vector<std::vector<int>>& generator_vertex_maps,
                        const RunLimits& limits);

// Barycentric subdivision: vertices are the base simplices, simplices are
// flags (chains under strict face inclusion, stored as ascending id lists).
// The induced action permutes flags componentwise and never reorders them,
// so every setwise-invariant flag is pointwise fixed; this makes orbit
// spaces below honest simplicial quotients.
struct SdComplex {
  const GComplex* base = nullptr;
  std::vector<std::vector<int>> flags;  // sorted by (length, lex)
  int dimension() const;
  int flag_index(const std::vector<int>& flag) const;
  std::vector<int> act(int element, const std::vector<int>& flag) const;
};

SdComplex subdivide(const GComplex& x);

// Full subcomplex of the subdivision spanned by the barycenters of simplices
// left invariant by every element of `tuple`.
struct FixedSubcomplex {
  std::vector<int> tuple;       // fixing elements (ambient group indices)
  std::vector<char> vertex_in;  // per base simplex id: barycenter kept?
  std::vector<int> flag_ids;    // flags inside the subcomplex, ascending
  bool empty() const { return flag_ids.empty(); }
};

FixedSubcomplex fixed_subcomplex(const SdComplex& sd, const std::vector<int>& tuple);

// Rational homology of the orbit space of a subgroup acting on a fixed
// subcomplex, computed two independent ways and cross-checked:
//   (a) image of the averaging projector on the homology of the subcomplex;
//   (b) homology of the levelwise orbit quotient of the nerve of the face
//       poset of the subcomplex (one further subdivision).
// Disagreement throws ConsistencyError. Betti numbers run over degrees
// 0..dim of the ambient complex so tables over many subcomplexes align.
struct OrbitSpaceHomology {
  std::vector<long long> betti;
  long long euler = 0;  // from the quotient model cell counts
};

OrbitSpaceHomology quotient_homology(const SdComplex& sd, const FixedSubcomplex& y,
                                     const std::vector<int>& subgroup_members,
                                     const RunLimits& limits);

// One sector per conjugation orbit of commuting n-tuples: the orbit space of
// the centralizer acting on the common fixed subcomplex. Tuples with empty
// fixed set are kept as flagged rows.
struct SectorRow {
  std::vector<int> rep;
  long long orbit_size = 0;
  long long centralizer_order = 0;
  bool empty_fixed = false;
  std::vector<long long> betti;  // empty when empty_fixed
  long long euler = 0;
};

struct SectorTable {
  int level = 0;
  std::vector<SectorRow> rows;   // canonical (lex by rep) order
  long long total_rank = 0;      // sum of all betti entries
};

SectorTable sector_table(const GComplex& x, int n, const RunLimits& limits);

// Rational homology of the diagonal of the bisimplicial orbit model whose
// (p, q)-cells are pairs (commuting p-tuple inside the stabilizer of a
// q-chain of flags, that chain), modulo the diagonal group action. Degrees
// 0..max_degree.
HomologySummary total_inertia_homology(const GComplex& x, int max_degree,
                                       const RunLimits& limits);

// Exact check that the orbifold Euler characteristic computed from one-tuple
// sectors matches the commuting-pair average.
struct EulerReport {
  Rat sector_sum;    // sum over classes [g] of chi(fixed(g) / centralizer)
  Rat pair_average;  // (1/|G|) * sum over commuting pairs of chi(fixed(g,h))
  bool equal = false;
};

EulerReport euler_consistency(const GComplex& x, const RunLimits& limits);

}  // namespace inertia
