#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "inertia/characters.hpp"
#include "inertia/gcomplex.hpp"
#include "inertia/group.hpp"
#include "inertia/limits.hpp"
#include "inertia/simplicial.hpp"
#include "inertia/tuples.hpp"

namespace inertia {

// Deterministic (insertion-ordered) JSON used for all reports. All numbers
// are exact: wide integers become decimal strings, rationals become
// {num, den}.
using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Json rat_to_json(const Rat& v);
Json cyclotomic_to_json(const Cyclotomic& v);

Json classes_to_json(const FiniteGroup& g, const std::vector<ConjClass>& classes);
Json tuple_level_to_json(const InertiaLevel& level);
Json recursion_to_json(const RecursionReport& r);
Json fiber_to_json(const FiberReport& r);
Json gl_orbits_to_json(const InertiaLevel& local_classes,
                       const std::vector<std::vector<int>>& orbits);
Json rational_classes_to_json(const FiniteGroup& g,
                              const std::vector<std::vector<int>>& orbits);
Json homology_to_json(const HomologySummary& h);
Json comparison_to_json(const ComparisonResult& c);
Json sector_table_to_json(const SectorTable& t);
Json euler_to_json(const EulerReport& e);
Json character_table_to_json(const CharacterTable& t);
Json galois_orbits_to_json(const GaloisOrbits& o);
Json artin_to_json(const ArtinReport& r);
Json age_table_to_json(const RepTable& rho, const std::vector<AgeRow>& rows);
Json tuple_age_table_to_json(int n, const std::vector<TupleAgeRow>& rows);
Json order_scan_to_json(const OrderScan& s);
Json zoo_catalog_to_json();
Json group_to_json(const FiniteGroup& g);

Json read_json_file(const std::string& path);
FiniteGroup group_from_json(const Json& j, const RunLimits& limits);
FiniteGroup load_group_file(const std::string& path, const RunLimits& limits);
GComplex load_gcomplex_file(const std::string& path, const RunLimits& limits);
ExactRep load_rep_file(const std::string& path, const RunLimits& limits);

}  // namespace inertia
