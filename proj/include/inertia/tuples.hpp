#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "inertia/group.hpp"
#include "inertia/limits.hpp"

namespace inertia {

struct TupleClass {
  std::vector<int> rep;         // lexicographically least orbit member
  long long orbit_size = 0;
  std::vector<int> centralizer; // joint centralizer of the entries, sorted
};

struct InertiaLevel {
  int n = 0;
  std::optional<int> prime;
  std::vector<TupleClass> classes;  // sorted lexicographically by rep
};

// Commuting: pairwise commuting tuples (higher inertia); All: arbitrary
// tuples classed by simultaneous conjugation (used for the classifying-space
// quotient).
enum class TupleKind { Commuting, All };

// Lexicographically least simultaneous conjugate of the tuple.
std::vector<int> canonical_tuple(const FiniteGroup& g, const std::vector<int>& tuple);

bool is_prime_power_order(const FiniteGroup& g, int elt, int prime);

std::uint64_t count_commuting_tuples(const FiniteGroup& g, int n,
                                     std::optional<int> prime,
                                     const RunLimits& limits);

// Levels 0..n of the conjugation-orbit recursion; tower[m].classes are the
// orbit representatives of m-tuples.
std::vector<InertiaLevel> tuple_class_tower(const FiniteGroup& g, int n,
                                            std::optional<int> prime,
                                            const RunLimits& limits,
                                            TupleKind kind = TupleKind::Commuting);

InertiaLevel tuple_classes(const FiniteGroup& g, int n, std::optional<int> prime,
                           const RunLimits& limits,
                           TupleKind kind = TupleKind::Commuting);

struct RecursionReport {
  std::uint64_t direct_classes = 0;     // brute-force orbit count
  std::uint64_t recursion_classes = 0;  // sum of centralizer class counts
  bool ok = false;
};
RecursionReport recursion_check(const FiniteGroup& g, int n, const RunLimits& limits);

std::uint64_t hkr_rank(const FiniteGroup& g, int n, int prime,
                       const RunLimits& limits);

struct FiberReport {
  std::vector<int> primes;
  std::uint64_t hom_count = 0;     // commuting n-tuples
  std::uint64_t family_count = 0;  // cross-commuting families of local tuples
  bool bijection_ok = false;
  std::uint64_t class_count = 0;   // global tuple class count
  std::vector<std::uint64_t> local_class_counts;  // aligned with primes
  std::uint64_t naive_class_product = 1;
  bool class_product_matches = false;
};
FiberReport fiber_product_check(const FiniteGroup& g, int n, const RunLimits& limits);

// Orbits of GL_n(Z/p^e) on the p-local tuple classes, where p^e is the
// largest p-power element order; an integer matrix A sends (g_1..g_n) to the
// tuple with entries prod_j g_j^{A_ij}. Orbits are listed by ascending least
// member; members ascend within each orbit.
std::vector<std::vector<int>> gl_orbits(const FiniteGroup& g, int n, int prime,
                                        const RunLimits& limits);

// Orbits of the power maps c -> [rep^k], gcd(k, |G|) = 1, on conjugacy
// classes.
std::vector<std::vector<int>> rational_classes(const FiniteGroup& g);

}  // namespace inertia
