#include "inertia/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <limits>

#include "inertia/zoo.hpp"

namespace inertia {

namespace {

const Int kI64Max = Int(std::numeric_limits<long long>::max());
const Int kI64Min = Int(std::numeric_limits<long long>::min());

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& require_field(const Json& j, const char* field, const char* what) {
  auto it = j.find(field);
  if (it == j.end())
    throw ValidationError(std::string(what) + " is missing field '" + field + "'");
  return *it;
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(require_int(v, what));
  return out;
}

std::vector<std::vector<int>> int_table(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const Json& row : j) out.push_back(int_list(row, what));
  return out;
}

Int int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": bad integer literal");
    }
  }
  throw ValidationError(std::string(what) + " must be an integer or string");
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v >= kI64Min && v <= kI64Max) return Json(v.convert_to<long long>());
  return Json(v.str());
}

Json rat_to_json(const Rat& v) {
  Json j = Json::object();
  j["num"] = int_to_json(numerator(v));
  j["den"] = int_to_json(denominator(v));
  return j;
}

Json cyclotomic_to_json(const Cyclotomic& v) {
  Json j = Json::object();
  j["conductor"] = v.conductor();
  Json coeffs = Json::array();
  for (const Rat& c : v.coeffs()) {
    Json pair = Json::array();
    pair.push_back(int_to_json(numerator(c)));
    pair.push_back(int_to_json(denominator(c)));
    coeffs.push_back(std::move(pair));
  }
  j["coeffs"] = std::move(coeffs);
  j["text"] = v.to_string();
  return j;
}

Json classes_to_json(const FiniteGroup& g, const std::vector<ConjClass>& classes) {
  Json j = Json::object();
  j["count"] = classes.size();
  Json rows = Json::array();
  for (const ConjClass& c : classes) {
    Json row = Json::object();
    row["representative"] = c.representative;
    row["size"] = c.members.size();
    row["centralizer_order"] = c.centralizer_order;
    row["element_order"] = g.elt_order[c.representative];
    rows.push_back(std::move(row));
  }
  j["classes"] = std::move(rows);
  return j;
}

Json tuple_level_to_json(const InertiaLevel& level) {
  Json j = Json::object();
  j["n"] = level.n;
  if (level.prime)
    j["prime"] = *level.prime;
  else
    j["prime"] = nullptr;
  unsigned long long total = 0;
  for (const TupleClass& c : level.classes)
    total += static_cast<unsigned long long>(c.orbit_size);
  j["tuple_count"] = total;
  j["class_count"] = level.classes.size();
  Json rows = Json::array();
  for (const TupleClass& c : level.classes) {
    Json row = Json::object();
    row["rep"] = c.rep;
    row["orbit_size"] = c.orbit_size;
    row["centralizer_order"] = c.centralizer.size();
    rows.push_back(std::move(row));
  }
  j["classes"] = std::move(rows);
  return j;
}

Json recursion_to_json(const RecursionReport& r) {
  Json j = Json::object();
  j["direct_classes"] = r.direct_classes;
  j["recursion_classes"] = r.recursion_classes;
  j["ok"] = r.ok;
  return j;
}

Json fiber_to_json(const FiberReport& r) {
  Json j = Json::object();
  j["primes"] = r.primes;
  j["hom_count"] = r.hom_count;
  j["family_count"] = r.family_count;
  j["bijection_ok"] = r.bijection_ok;
  j["class_count"] = r.class_count;
  j["local_class_counts"] = r.local_class_counts;
  j["naive_class_product"] = r.naive_class_product;
  j["class_product_matches"] = r.class_product_matches;
  return j;
}

Json gl_orbits_to_json(const InertiaLevel& local_classes,
                       const std::vector<std::vector<int>>& orbits) {
  Json j = Json::object();
  j["n"] = local_classes.n;
  j["prime"] = local_classes.prime ? Json(*local_classes.prime) : Json(nullptr);
  Json reps = Json::array();
  for (const TupleClass& c : local_classes.classes) reps.push_back(c.rep);
  j["local_classes"] = std::move(reps);
  j["orbit_count"] = orbits.size();
  j["orbits"] = orbits;
  return j;
}

Json rational_classes_to_json(const FiniteGroup& g,
                              const std::vector<std::vector<int>>& orbits) {
  Json j = Json::object();
  auto classes = conjugacy_classes(g);
  Json reps = Json::array();
  for (const ConjClass& c : classes) reps.push_back(c.representative);
  j["class_representatives"] = std::move(reps);
  j["orbit_count"] = orbits.size();
  j["orbits"] = orbits;
  return j;
}

Json homology_to_json(const HomologySummary& h) {
  Json j = Json::object();
  j["ring"] = h.ring == Ring::Z ? "Z" : "Q";
  Json degrees = Json::array();
  for (std::size_t m = 0; m < h.betti.size(); ++m) {
    Json row = Json::object();
    row["degree"] = m;
    row["betti"] = h.betti[m];
    Json tors = Json::array();
    if (m < h.torsion.size())
      for (const Int& t : h.torsion[m]) tors.push_back(int_to_json(t));
    row["torsion"] = std::move(tors);
    degrees.push_back(std::move(row));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json comparison_to_json(const ComparisonResult& c) {
  Json j = Json::object();
  j["ring"] = c.ring == Ring::Z ? "Z" : "Q";
  Json degrees = Json::array();
  for (std::size_t m = 0; m < c.degrees.size(); ++m) {
    const ComparisonDegree& d = c.degrees[m];
    Json row = Json::object();
    row["degree"] = m;
    row["source_betti"] = d.source_betti;
    row["target_betti"] = d.target_betti;
    Json st = Json::array(), tt = Json::array();
    for (const Int& t : d.source_torsion) st.push_back(int_to_json(t));
    for (const Int& t : d.target_torsion) tt.push_back(int_to_json(t));
    row["source_torsion"] = std::move(st);
    row["target_torsion"] = std::move(tt);
    Json mat = Json::array();
    for (int r = 0; r < d.matrix.rows; ++r) {
      Json mrow = Json::array();
      for (int col = 0; col < d.matrix.cols; ++col)
        mrow.push_back(rat_to_json(d.matrix.at(r, col)));
      mat.push_back(std::move(mrow));
    }
    row["matrix"] = std::move(mat);
    row["iso"] = d.iso;
    degrees.push_back(std::move(row));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json sector_table_to_json(const SectorTable& t) {
  Json j = Json::object();
  j["level"] = t.level;
  j["total_rank"] = t.total_rank;
  Json rows = Json::array();
  for (const SectorRow& r : t.rows) {
    Json row = Json::object();
    row["rep"] = r.rep;
    row["orbit_size"] = r.orbit_size;
    row["centralizer_order"] = r.centralizer_order;
    row["empty_fixed"] = r.empty_fixed;
    row["betti"] = r.betti;
    row["euler"] = r.euler;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json euler_to_json(const EulerReport& e) {
  Json j = Json::object();
  j["sector_sum"] = rat_to_json(e.sector_sum);
  j["pair_average"] = rat_to_json(e.pair_average);
  j["equal"] = e.equal;
  return j;
}

Json character_table_to_json(const CharacterTable& t) {
  Json j = Json::object();
  j["group"] = t.group_name;
  j["conductor"] = t.conductor;
  j["prime"] = t.prime;
  Json classes = Json::array();
  for (const ConjClass& c : t.classes) {
    Json row = Json::object();
    row["representative"] = c.representative;
    row["size"] = c.members.size();
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  j["degrees"] = t.degrees;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::array();
    for (const Cyclotomic& v : r) row.push_back(cyclotomic_to_json(v));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json galois_orbits_to_json(const GaloisOrbits& o) {
  Json j = Json::object();
  j["orbit_count"] = o.orbits.size();
  j["rational_rows"] = o.rational_rows;
  j["orbits"] = o.orbits;
  return j;
}

Json artin_to_json(const ArtinReport& r) {
  Json j = Json::object();
  j["galois_orbit_count"] = r.galois_orbit_count;
  j["rational_class_count"] = r.rational_class_count;
  j["equivariant"] = r.equivariant;
  j["ok"] = r.ok;
  j["witness"] = r.witness;
  return j;
}

Json age_table_to_json(const RepTable& rho, const std::vector<AgeRow>& rows) {
  Json j = Json::object();
  j["representation"] = rho.rep.name;
  j["dimension"] = rho.rep.dimension;
  Json list = Json::array();
  for (const AgeRow& r : rows) {
    Json row = Json::object();
    row["representative"] = r.class_representative;
    row["element_order"] = r.element_order;
    row["age"] = rat_to_json(r.age_value);
    list.push_back(std::move(row));
  }
  j["rows"] = std::move(list);
  return j;
}

Json tuple_age_table_to_json(int n, const std::vector<TupleAgeRow>& rows) {
  Json j = Json::object();
  j["n"] = n;
  Json list = Json::array();
  for (const TupleAgeRow& r : rows) {
    Json row = Json::object();
    row["rep"] = r.rep;
    Json steps = Json::array();
    for (const Rat& s : r.steps) steps.push_back(rat_to_json(s));
    row["steps"] = std::move(steps);
    row["total"] = rat_to_json(r.total);
    list.push_back(std::move(row));
  }
  j["rows"] = std::move(list);
  return j;
}

Json order_scan_to_json(const OrderScan& s) {
  Json j = Json::object();
  j["orders"] = s.orders;
  Json totals = Json::array();
  for (const Rat& t : s.totals) totals.push_back(rat_to_json(t));
  j["totals"] = std::move(totals);
  j["order_invariant"] = s.order_invariant;
  return j;
}

Json zoo_catalog_to_json() {
  Json list = Json::array();
  for (const ZooInfo& z : zoo_catalog()) {
    Json row = Json::object();
    row["name"] = z.name;
    row["params"] = z.params;
    row["description"] = z.description;
    list.push_back(std::move(row));
  }
  Json j = Json::object();
  j["zoo"] = std::move(list);
  return j;
}

Json group_to_json(const FiniteGroup& g) {
  Json j = Json::object();
  j["name"] = g.name;
  if (!g.table.empty()) {
    Json table = Json::array();
    for (int a = 0; a < g.order; ++a) {
      Json row = Json::array();
      for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
      table.push_back(std::move(row));
    }
    j["cayley"] = std::move(table);
    j["generators"] = g.generators;
  } else {
    j["degree"] = g.degree;
    Json gens = Json::array();
    for (int gen : g.generators) gens.push_back(g.perms[gen]);
    j["generators"] = std::move(gens);
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ValidationError("cannot parse JSON in " + path + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, const RunLimits& limits) {
  if (!j.is_object()) throw ValidationError("group description must be an object");
  std::string name = "group";
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ValidationError("group name must be a string");
    name = it->get<std::string>();
  }
  if (auto it = j.find("cayley"); it != j.end()) {
    std::vector<int> gens;
    if (auto g = j.find("generators"); g != j.end())
      gens = int_list(*g, "generators");
    return group_from_cayley(name, int_table(*it, "cayley"), limits, gens);
  }
  if (j.contains("degree") && j.contains("generators")) {
    int degree = require_int(j.at("degree"), "degree");
    return group_from_permutations(name, degree,
                                   int_table(j.at("generators"), "generators"),
                                   limits);
  }
  throw ValidationError(
      "group description needs either 'cayley' or 'degree' + 'generators'");
}

FiniteGroup load_group_file(const std::string& path, const RunLimits& limits) {
  return group_from_json(read_json_file(path), limits);
}

GComplex load_gcomplex_file(const std::string& path, const RunLimits& limits) {
  Json j = read_json_file(path);
  if (!j.is_object()) throw ValidationError("complex file must hold an object");
  int vertices = require_int(require_field(j, "vertices", "complex file"),
                             "vertices");
  auto maximal = int_table(require_field(j, "maximal_simplices", "complex file"),
                           "maximal_simplices");
  const Json& gref = require_field(j, "group", "complex file");
  FiniteGroup group;
  if (gref.is_string()) {
    std::filesystem::path gpath = gref.get<std::string>();
    if (gpath.is_relative())
      gpath = std::filesystem::path(path).parent_path() / gpath;
    group = load_group_file(gpath.string(), limits);
  } else {
    group = group_from_json(gref, limits);
  }
  auto maps = int_table(require_field(j, "generator_vertex_maps", "complex file"),
                        "generator_vertex_maps");
  std::string name = std::filesystem::path(path).stem().string();
  if (auto it = j.find("name"); it != j.end() && it->is_string())
    name = it->get<std::string>();
  return build_gcomplex(name, vertices, maximal, std::move(group), maps, limits);
}

ExactRep load_rep_file(const std::string& path, const RunLimits& limits) {
  (void)limits;
  Json j = read_json_file(path);
  if (!j.is_object()) throw ValidationError("representation file must hold an object");
  ExactRep rep;
  rep.name = std::filesystem::path(path).stem().string();
  if (auto it = j.find("name"); it != j.end() && it->is_string())
    rep.name = it->get<std::string>();
  rep.dimension = require_int(require_field(j, "dimension", "representation file"),
                              "dimension");
  rep.conductor = require_int(require_field(j, "conductor", "representation file"),
                              "conductor");
  if (rep.dimension <= 0 || rep.conductor <= 0)
    throw ValidationError("representation dimension and conductor must be positive");
  int phi = euler_phi(rep.conductor);
  const Json& mats = require_field(j, "generator_matrices", "representation file");
  if (!mats.is_array())
    throw ValidationError("generator_matrices must be an array");
  for (const Json& mat : mats) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != rep.dimension)
      throw ValidationError("generator matrix has the wrong shape");
    CycMatrix m;
    for (const Json& row : mat) {
      if (!row.is_array() || static_cast<int>(row.size()) != rep.dimension)
        throw ValidationError("generator matrix has the wrong shape");
      std::vector<Cyclotomic> out_row;
      for (const Json& entry : row) {
        if (!entry.is_array() || static_cast<int>(entry.size()) > phi)
          throw ValidationError(
              "matrix entry must list at most phi(conductor) coefficients");
        Cyclotomic value(rep.conductor);
        for (std::size_t i = 0; i < entry.size(); ++i) {
          const Json& pair = entry[i];
          if (!pair.is_array() || pair.size() != 2)
            throw ValidationError("coefficients must be [num, den] pairs");
          Int num = int_from_json(pair[0], "coefficient numerator");
          Int den = int_from_json(pair[1], "coefficient denominator");
          if (den == 0) throw ValidationError("coefficient denominator is zero");
          value += Cyclotomic::root_power(rep.conductor,
                                          static_cast<long long>(i)) *
                   Rat(num, den);
        }
        out_row.push_back(std::move(value));
      }
      m.push_back(std::move(out_row));
    }
    rep.generator_matrices.push_back(std::move(m));
  }
  return rep;
}

}  // namespace inertia
