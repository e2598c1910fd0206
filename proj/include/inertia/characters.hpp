#pragma once

#include <string>
#include <vector>

#include "inertia/cyclotomic.hpp"
#include "inertia/exact.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"

namespace inertia {

// Exact irreducible character table. Columns follow the conjugacy-class
// order of conjugacy_classes(); rows sort by degree, then lexicographically
// on the value vector. Values are cyclotomics of conductor exponent(G),
// computed by the modular (Dixon) method and verified against both
// orthogonality relations exactly.
struct CharacterTable {
  std::string group_name;
  int conductor = 1;
  long long prime = 0;  // modular prime used for the eigenvector stage
  std::vector<ConjClass> classes;
  std::vector<int> degrees;
  std::vector<std::vector<Cyclotomic>> rows;
};

CharacterTable character_table(const FiniteGroup& g, const RunLimits& limits);

struct GaloisOrbits {
  std::vector<std::vector<int>> orbits;  // row indices, each ascending
  int rational_rows = 0;                 // rows fixed by every symmetry
};

// Orbits of table rows under the value symmetries zeta -> zeta^k for units k
// modulo the conductor.
GaloisOrbits galois_orbits_of_rows(const CharacterTable& t);

// Row-orbit count must equal the power-map orbit count on classes, and
// chi(g^k) must equal the k-th value symmetry of chi(g) everywhere.
struct ArtinReport {
  std::size_t galois_orbit_count = 0;
  std::size_t rational_class_count = 0;
  bool equivariant = false;
  bool ok = false;
  std::string witness;  // first failure found, empty when ok
};

ArtinReport artin_check(const FiniteGroup& g, const RunLimits& limits);

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

// Representation given by one exact matrix per group generator.
struct ExactRep {
  std::string name;
  int dimension = 0;
  int conductor = 1;
  std::vector<CycMatrix> generator_matrices;
};

// Generator matrices extended to every element along the word tree; the
// extension is validated as a homomorphism on all (element, generator)
// pairs.
struct RepTable {
  ExactRep rep;
  std::vector<CycMatrix> element_matrices;
};

RepTable extend_rep(const FiniteGroup& g, const ExactRep& rep,
                    const RunLimits& limits);

// Built-in 2-dimensional representations for the quaternionic zoo entries:
// binary_tetrahedral, binary_octahedral, binary_icosahedral, and
// quaternion_generalized/binary_dihedral:M.
ExactRep builtin_rep(const std::string& zoo_spec, const RunLimits& limits);

// Sum of eigenvalue exponents k/m of the element's matrix, m = element
// order; multiplicities are recovered exactly by the trace transform and
// must be nonnegative integers summing to the dimension.
Rat age(const FiniteGroup& g, const RepTable& rho, int element);

// Flag decomposition of a commuting tuple: step i is the age of entry i on
// the common fixed subspace of the previous entries (computed with exact
// averaging projectors).
struct FlagAge {
  std::vector<Rat> steps;
  Rat total;
};

FlagAge tuple_age_flag(const FiniteGroup& g, const RepTable& rho,
                       const std::vector<int>& tuple);

// Flag totals across every ordering of the tuple; order invariance is
// reported, never assumed.
struct OrderScan {
  std::vector<std::vector<int>> orders;
  std::vector<Rat> totals;
  bool order_invariant = true;
};

OrderScan tuple_age_all_orders(const FiniteGroup& g, const RepTable& rho,
                               const std::vector<int>& tuple);

struct AgeCheck {
  bool ok = true;
  std::string witness;
};

// Equality of age across one conjugacy class / one simultaneous-conjugation
// orbit; returns the first counterexample if any.
AgeCheck age_class_invariance(const FiniteGroup& g, const RepTable& rho,
                              int class_representative);
AgeCheck tuple_age_invariance(const FiniteGroup& g, const RepTable& rho,
                              const std::vector<int>& tuple);

struct AgeRow {
  int class_representative = 0;
  int element_order = 1;
  Rat age_value;
};

std::vector<AgeRow> age_table(const FiniteGroup& g, const RepTable& rho);

struct TupleAgeRow {
  std::vector<int> rep;
  std::vector<Rat> steps;
  Rat total;
};

std::vector<TupleAgeRow> tuple_age_table(const FiniteGroup& g, const RepTable& rho,
                                         int n, const RunLimits& limits);

}  // namespace inertia
