#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "inertia/exact.hpp"
#include "inertia/limits.hpp"
#include "inertia/util.hpp"

namespace inertia {

// Finite group with elements indexed 0..order-1; index 0 is the identity.
// Small groups carry a dense multiplication table; larger permutation groups
// multiply by composing images and looking the result up.
class FiniteGroup {
 public:
  std::string name;
  int order = 1;
  std::vector<int> generators;  // element indices, identity excluded
  std::vector<int> inv;
  std::vector<int> elt_order;
  // BFS word tree: g = parent[g] * generators[via_gen[g]]; identity has -1s.
  std::vector<int> parent, via_gen;

  // dense table (row-major, order x order) when order <= kTableLimit or the
  // group was given by a table
  std::vector<std::uint16_t> table;
  // permutation images otherwise
  int degree = 0;
  std::vector<std::vector<int>> perms;

  static constexpr int kTableLimit = 4096;

  int mul(int a, int b) const {
    if (!table.empty())
      return table[static_cast<std::size_t>(a) * order + b];
    return mul_perm(a, b);
  }
  int inverse(int a) const { return inv[a]; }
  int conj(int h, int g) const { return mul(mul(h, g), inv[h]); }
  int power(int g, long long e) const;
  bool is_abelian() const;
  int exponent() const;
  std::vector<int> word(int g) const;  // generator indices multiplying to g

  // Stable fingerprint of the multiplication structure (not the name); used
  // for cache keys.
  std::string canonical_serialization() const;

  void finalize();  // fills inv, elt_order after table/perms are set

 private:
  int mul_perm(int a, int b) const;
  std::unordered_map<std::vector<int>, int, VecHash> perm_index_;
  friend FiniteGroup group_from_permutations(const std::string&, int,
                                             const std::vector<std::vector<int>>&,
                                             const RunLimits&);
};

struct ConjClass {
  int representative = 0;          // minimal element index in the class
  std::vector<int> members;        // ascending
  long long centralizer_order = 0; // = order / members.size()
};

// Sorted list of element indices of a subgroup of an ambient group.
struct Subgroup {
  std::vector<int> members;
  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

// A subgroup reindexed as a standalone group; to_parent maps local element
// indices back to the ambient group.
struct LocalGroup {
  FiniteGroup group;
  std::vector<int> to_parent;
};

FiniteGroup group_from_permutations(const std::string& name, int degree,
                                    const std::vector<std::vector<int>>& gens,
                                    const RunLimits& limits);
// `gens` may name the preferred generating set (element indices); when empty
// a greedy generating set is derived from the table.
FiniteGroup group_from_cayley(const std::string& name,
                              const std::vector<std::vector<int>>& cayley,
                              const RunLimits& limits,
                              std::vector<int> gens = {});

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);

// class_of[e] = index into `classes` for every element e.
std::vector<int> class_index_map(const FiniteGroup& g,
                                 const std::vector<ConjClass>& classes);

// Elements commuting with every entry of the tuple.
Subgroup centralizer(const FiniteGroup& g, const std::vector<int>& tuple);

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);

// Greedy generating set: scan ascending, add anything outside the running
// closure. Deterministic.
std::vector<int> greedy_generators(const FiniteGroup& g,
                                   const std::vector<int>& members);

LocalGroup as_group(const FiniteGroup& g, const Subgroup& h,
                    const std::string& name);

// Invariant factors d1 | d2 | ... (each > 1) of G made abelian; empty for a
// perfect group.
std::vector<Int> abelianization(const FiniteGroup& g);

// g as a product of commuting elements of prime power order, keyed by prime.
// The identity maps to an empty decomposition.
std::map<int, int> p_part_decomposition(const FiniteGroup& g, int elt);

// Permutation of class indices induced by g |-> g^k; requires gcd(k, |G|)=1.
std::vector<int> power_class_map(const FiniteGroup& g,
                                 const std::vector<ConjClass>& classes,
                                 long long k);

}  // namespace inertia
