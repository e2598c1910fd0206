#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inertia/characters.hpp"
#include "inertia/cyclotomic.hpp"
#include "inertia/exact.hpp"
#include "inertia/gcomplex.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"

// Brute-force reference implementations, kept deliberately naive and separate
// from the optimized library paths. Everything here favors exhaustive loops
// over cleverness.
namespace oracle {

using inertia::Cyclotomic;
using inertia::CycMatrix;
using inertia::FiniteGroup;
using inertia::Rat;

// --- groups and tuples ---

// Conjugation orbits as sorted member lists, ordered by least member.
std::vector<std::vector<int>> conjugacy_partition(const FiniteGroup& g);

// Every commuting n-tuple (optionally with all entries of p-power order),
// enumerated by nested loops, in lexicographic order.
std::vector<std::vector<int>> commuting_tuples(const FiniteGroup& g, int n,
                                               std::optional<int> p);

// Orbit partition of the given tuples under simultaneous conjugation.
std::vector<std::vector<std::vector<int>>> tuple_orbit_partition(
    const FiniteGroup& g, const std::vector<std::vector<int>>& tuples);

std::uint64_t commuting_class_count(const FiniteGroup& g, int n,
                                    std::optional<int> p);

// The same count through the orbit-counting lemma: average over c in G of
// the number of commuting n-tuples drawn from the centralizer of c. Scales
// to larger groups than the explicit orbit partition.
std::uint64_t commuting_class_count_burnside(const FiniteGroup& g, int n);

// Orbit count of the full matrix group GL_n(Z/p^e) acting entrywise by
// exponent matrices on the p-local tuple classes; every invertible matrix is
// enumerated (no generator shortcuts).
std::uint64_t gl_orbit_count_exhaustive(const FiniteGroup& g, int n, int p);

// --- exact linear algebra ---

long long rank_q(const std::vector<std::vector<long long>>& m);

std::vector<long long> snf_divisors(std::vector<std::vector<long long>> m);

// Betti numbers and torsion (divisors > 1) of a chain complex given by
// per-degree dimensions and boundary matrices boundary[q]: dims[q-1] x dims[q].
std::pair<std::vector<long long>, std::vector<std::vector<long long>>>
homology_z(const std::vector<int>& dims,
           const std::vector<std::vector<std::vector<long long>>>& boundary);

// Normalized bar complex of Z/m through degree top: cells are tuples with no
// zero entry, boundary drops or merges entries modulo m.
struct SmallComplex {
  std::vector<int> dims;
  std::vector<std::vector<std::vector<long long>>> boundary;
};
SmallComplex bar_complex_cyclic(int m, int top);

// --- cyclotomic matrices, characters, ages ---

int cyc_rank(CycMatrix m);

// dim ker(M - zeta_order^k I): multiplicity of that eigenvalue when M^order=I.
int eigen_multiplicity(const CycMatrix& m, int order, int k);

// Age recomputed from eigenvalue multiplicities (kernel dimensions), not from
// the trace transform.
Rat age_from_eigenspaces(const CycMatrix& m, int order);

// Hand-checked character tables, columns aligned to the library's class
// order via (element order, class size); rows in no particular order.
// Supported: cyclic:M, sym:3, sym:4, dihedral:4, quaternion_generalized:2,
// alt:4.
std::vector<std::vector<Cyclotomic>> known_character_rows(
    const std::string& zoo_name, const FiniteGroup& g,
    const std::vector<inertia::ConjClass>& classes);

// --- G-complexes ---

// Rational Betti numbers of the diagonal of the commuting-tuple/flag-chain
// bisimplicial set modulo the group action, built by explicit orbit
// enumeration with no canonicalization shortcuts.
std::vector<long long> diagonal_homology_q(const inertia::GComplex& x,
                                           int max_degree);

// Euler characteristic of a fixed subcomplex, counted over strict flag chains.
long long fixed_set_euler(const inertia::GComplex& x, const std::vector<int>& tuple);

// --- CLI harness ---

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the binary named by the INERTIA_CLI environment variable.
CliResult run_cli(const std::string& args);

std::string fixture_path(const std::string& name);

}  // namespace oracle
