#pragma once

#include <optional>
#include <vector>

#include "inertia/exact.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"
#include "inertia/tuples.hpp"

namespace inertia {

enum class Ring { Z, Q };

// Levelwise model of a simplicial set: canonical keys per level (sorted),
// degeneracy flags, and face maps into the level below.
struct SimplicialLevel {
  std::vector<std::vector<int>> keys;
  std::vector<char> degenerate;
  // faces[s][i] = index of d_i(s) in the previous level; empty at level 0
  std::vector<std::vector<int>> faces;
};

struct SimplicialSetModel {
  std::vector<SimplicialLevel> levels;
  int top() const { return static_cast<int>(levels.size()) - 1; }
};

// Nerve of the conjugation groupoid on commuting tuples (optionally p-local):
// level m = orbit representatives of commuting m-tuples, faces drop the outer
// entries or multiply adjacent ones. Built through level max_degree + 1.
SimplicialSetModel inertia_nerve_model(const FiniteGroup& g,
                                       std::optional<int> prime, int max_degree,
                                       const RunLimits& limits);

// Same construction on arbitrary tuples: the levelwise conjugation quotient
// of the classifying-space nerve.
SimplicialSetModel full_nerve_quotient_model(const FiniteGroup& g, int max_degree,
                                             const RunLimits& limits);

struct ChainComplex {
  std::vector<int> dims;             // nondegenerate simplex counts per level
  std::vector<IntMatrix> boundary;   // boundary[m]: dims[m-1] x dims[m]
  // nondeg[m][s] = chain index of level-m simplex s, or -1 when degenerate
  std::vector<std::vector<int>> nondeg_index;
};

// Chains on nondegenerate simplices; boundary = alternating face sum with
// degenerate faces dropped. Verifies that consecutive boundaries compose to
// zero.
ChainComplex normalized_chains(const SimplicialSetModel& model);

struct HomologySummary {
  Ring ring = Ring::Z;
  std::vector<long long> betti;                 // degrees 0..max
  std::vector<std::vector<Int>> torsion;        // empty lists over Q
};

// Homology of the chain complex in degrees 0..max_degree (the complex must
// extend one level past max_degree).
HomologySummary homology(const ChainComplex& chains, Ring ring, int max_degree);

struct ComparisonDegree {
  long long source_betti = 0, target_betti = 0;
  std::vector<Int> source_torsion, target_torsion;
  RatMatrix matrix;  // induced map on homology presentations
  bool iso = false;
};

struct ComparisonResult {
  Ring ring = Ring::Z;
  std::vector<ComparisonDegree> degrees;  // 0..max_degree
};

// The inclusion of commuting tuples into all tuples induces a chain map from
// the inertia nerve to the full nerve quotient; this computes the induced map
// on homology with isomorphism flags per degree.
ComparisonResult compare_nerves(const FiniteGroup& g, int max_degree, Ring ring,
                                const RunLimits& limits);

}  // namespace inertia
