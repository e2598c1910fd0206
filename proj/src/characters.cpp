#include "inertia/characters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "inertia/fp_linalg.hpp"
#include "inertia/tuples.hpp"
#include "inertia/zoo.hpp"

namespace inertia {

namespace {

constexpr int kCharOrderCap = 2000;

CycMatrix cyc_identity(int d) {
  CycMatrix m(d, std::vector<Cyclotomic>(d));
  for (int i = 0; i < d; ++i) m[i][i] = Cyclotomic(1, Rat(1));
  return m;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
  int n = static_cast<int>(a.size());
  int mid = static_cast<int>(b.size());
  int c = mid ? static_cast<int>(b[0].size()) : 0;
  CycMatrix out(n, std::vector<Cyclotomic>(c));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < mid; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

Cyclotomic cyc_trace(const CycMatrix& a) {
  Cyclotomic t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// Solves A * X = B for A d x r with independent columns (throws
// ConsistencyError otherwise or when inconsistent).
CycMatrix cyc_solve(CycMatrix a, CycMatrix b, const char* what) {
  int d = static_cast<int>(a.size());
  int r = d ? static_cast<int>(a[0].size()) : 0;
  int c = b.empty() ? 0 : static_cast<int>(b[0].size());
  std::vector<int> pivot_row(r, -1);
  int rank = 0;
  for (int col = 0; col < r; ++col) {
    int p = -1;
    for (int row = rank; row < d; ++row)
      if (!a[row][col].is_zero()) {
        p = row;
        break;
      }
    if (p < 0) throw ConsistencyError(std::string(what) + ": dependent columns");
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    Cyclotomic inv = a[rank][col].inverse();
    for (int j = col; j < r; ++j) a[rank][j] *= inv;
    for (int j = 0; j < c; ++j) b[rank][j] *= inv;
    for (int row = 0; row < d; ++row) {
      if (row == rank || a[row][col].is_zero()) continue;
      Cyclotomic f = a[row][col];
      for (int j = col; j < r; ++j) a[row][j] -= f * a[rank][j];
      for (int j = 0; j < c; ++j) b[row][j] -= f * b[rank][j];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (int row = rank; row < d; ++row)
    for (int j = 0; j < c; ++j)
      if (!b[row][j].is_zero())
        throw ConsistencyError(std::string(what) + ": inconsistent system");
  CycMatrix x(r, std::vector<Cyclotomic>(c));
  for (int i = 0; i < r; ++i) x[i] = b[pivot_row[i]];
  return x;
}

// Basis of the column space: the pivot columns of m, in order.
CycMatrix cyc_column_space(const CycMatrix& m) {
  int d = static_cast<int>(m.size());
  int cols = d ? static_cast<int>(m[0].size()) : 0;
  CycMatrix w = m;
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < cols && rank < d; ++col) {
    int p = -1;
    for (int row = rank; row < d; ++row)
      if (!w[row][col].is_zero()) {
        p = row;
        break;
      }
    if (p < 0) continue;
    std::swap(w[p], w[rank]);
    Cyclotomic inv = w[rank][col].inverse();
    for (int j = col; j < cols; ++j) w[rank][j] *= inv;
    for (int row = 0; row < d; ++row) {
      if (row == rank || w[row][col].is_zero()) continue;
      Cyclotomic f = w[row][col];
      for (int j = col; j < cols; ++j) w[row][j] -= f * w[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  CycMatrix basis(d, std::vector<Cyclotomic>(pivots.size()));
  for (int i = 0; i < d; ++i)
    for (std::size_t t = 0; t < pivots.size(); ++t) basis[i][t] = m[i][pivots[t]];
  return basis;
}

// Eigenvalue multiplicities from the traces of powers; exponent sum / m.
Rat age_from_traces(const std::vector<Cyclotomic>& tr, int m, const Rat& dim,
                    const char* what) {
  Rat total(0), sum(0);
  for (int k = 0; k < m; ++k) {
    Cyclotomic s;
    for (int j = 0; j < m; ++j) {
      long long expo = (static_cast<long long>(m) - (static_cast<long long>(j) * k) % m) % m;
      s += tr[j] * Cyclotomic::root_power(m, expo);
    }
    s *= Rat(1, m);
    if (!s.is_rational())
      throw ValidationError(std::string(what) +
                            ": eigenvalue multiplicity is not rational");
    Rat v = s.rational_value();
    if (denominator(v) != 1 || v < 0)
      throw ValidationError(std::string(what) +
                            ": eigenvalue multiplicity is not a nonnegative integer");
    sum += v;
    total += v * Rat(k, m);
  }
  if (sum != dim)
    throw ValidationError(std::string(what) +
                          ": multiplicities do not sum to the dimension");
  return total;
}

Rat matrix_age(const CycMatrix& r, int m, const char* what) {
  int dim = static_cast<int>(r.size());
  if (dim == 0) return Rat(0);
  std::vector<Cyclotomic> tr(m);
  CycMatrix p = cyc_identity(dim);
  for (int j = 0; j < m; ++j) {
    tr[j] = cyc_trace(p);
    if (j + 1 < m) p = cyc_mul(p, r);
  }
  return age_from_traces(tr, m, Rat(dim), what);
}

Cyclotomic quad_to_cyc(const Quad& q) {
  // conductor 40 hosts i, sqrt2 and sqrt5 simultaneously
  Cyclotomic s2 = Cyclotomic::root_power(40, 5) + Cyclotomic::root_power(40, 35);
  Cyclotomic s5 = Cyclotomic::root_power(40, 8) + Cyclotomic::root_power(40, 32) -
                  Cyclotomic::root_power(40, 16) - Cyclotomic::root_power(40, 24);
  Cyclotomic out(1, q.r);
  out += s2 * q.s2;
  out += s5 * q.s5;
  out += (s2 * s5) * q.s10;
  return out;
}

CycMatrix quat_matrix(const Quaternion& q) {
  Cyclotomic im = Cyclotomic::root_power(40, 10);
  Cyclotomic a = quad_to_cyc(q.w), b = quad_to_cyc(q.x);
  Cyclotomic c = quad_to_cyc(q.y), d = quad_to_cyc(q.z);
  CycMatrix m(2, std::vector<Cyclotomic>(2));
  m[0][0] = a + im * b;
  m[0][1] = c + im * d;
  m[1][0] = im * d - c;
  m[1][1] = a - im * b;
  return m;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g, const RunLimits& limits) {
  if (g.order > kCharOrderCap)
    throw CapExceeded("character table limited to groups of order <= 2000");
  CharacterTable t;
  t.group_name = g.name;
  t.classes = conjugacy_classes(g);
  const int k = static_cast<int>(t.classes.size());
  std::vector<int> class_of = class_index_map(g, t.classes);
  const int e = g.exponent();
  t.conductor = e;

  std::vector<int> inv_class(k);
  for (int i = 0; i < k; ++i)
    inv_class[i] = class_of[g.inverse(t.classes[i].representative)];

  const double bound = 2.0 * std::sqrt(static_cast<double>(g.order));
  std::vector<std::vector<u64>> eig;
  u64 ell = 0;
  int attempts = 0;
  for (u64 cand = static_cast<u64>(e) + 1;; cand += static_cast<u64>(e)) {
    if (cand > (static_cast<u64>(1) << 40))
      throw CapExceeded("no admissible modular prime found below the search bound");
    if (static_cast<double>(cand) <= bound || !is_prime_u64(cand)) continue;
    auto provider = [&, cand](int i) {
      FpMatrix m(cand, k, k);
      for (int kk = 0; kk < k; ++kk) {
        int z = t.classes[kk].representative;
        for (int x : t.classes[i].members) {
          int j = class_of[g.mul(g.inverse(x), z)];
          u64& cell = m.at(j, kk);
          cell = (cell + 1) % cand;
        }
      }
      return m;
    };
    try {
      limits.check_deadline("character table");
      eig = common_eigenvectors(k, cand, k, provider);
      ell = cand;
      break;
    } catch (const EigenSplitFailure&) {
      if (++attempts >= 25)
        throw CapExceeded("class-sum eigenvector splitting failed repeatedly");
    }
  }
  t.prime = static_cast<long long>(ell);

  const u64 ordmod = static_cast<u64>(g.order) % ell;
  const u64 w = smallest_primitive_root(ell);
  std::vector<std::pair<int, std::vector<Cyclotomic>>> table_rows;
  for (const auto& u : eig) {
    if (u[0] != 1)
      throw ConsistencyError("central character is not normalized at the identity");
    // degree from the second orthogonality of central characters
    u64 s = 0;
    for (int j = 0; j < k; ++j) {
      u64 sz = static_cast<u64>(t.classes[j].members.size()) % ell;
      s = (s + mulmod(mulmod(u[j], u[inv_class[j]], ell), invmod(sz, ell), ell)) % ell;
    }
    if (s == 0) throw ConsistencyError("degenerate central character norm");
    u64 d2 = mulmod(ordmod, invmod(s, ell), ell);
    int degree = 0;
    for (int d = 1; static_cast<long long>(d) * d <= g.order; ++d)
      if (mulmod(static_cast<u64>(d), static_cast<u64>(d), ell) == d2) {
        if (degree != 0) throw ConsistencyError("ambiguous character degree");
        degree = d;
      }
    if (degree == 0) throw ConsistencyError("no character degree matches");

    std::vector<u64> chi(k);
    for (int j = 0; j < k; ++j) {
      u64 sz = static_cast<u64>(t.classes[j].members.size()) % ell;
      chi[j] = mulmod(mulmod(static_cast<u64>(degree), u[j], ell), invmod(sz, ell), ell);
    }

    std::vector<Cyclotomic> row(k);
    for (int j = 0; j < k; ++j) {
      int rep = t.classes[j].representative;
      int m = g.elt_order[rep];
      u64 zm_inv = invmod(powmod(w, (ell - 1) / static_cast<u64>(m), ell), ell);
      u64 minv = invmod(static_cast<u64>(m) % ell, ell);
      Cyclotomic value;
      u64 total = 0;
      for (int kk = 0; kk < m; ++kk) {
        u64 acc = 0;
        for (int jj = 0; jj < m; ++jj) {
          u64 cj = chi[class_of[g.power(rep, jj)]];
          u64 tw = powmod(zm_inv, static_cast<u64>(jj) * kk % m, ell);
          acc = (acc + mulmod(cj, tw, ell)) % ell;
        }
        u64 mult = mulmod(acc, minv, ell);
        if (mult > static_cast<u64>(degree))
          throw ConsistencyError("lifted eigenvalue multiplicity out of range");
        if (mult == 0) continue;
        total += mult;
        long long expo = (static_cast<long long>(e) / m) * kk % e;
        value += Cyclotomic::root_power(e, expo) * Rat(static_cast<long long>(mult));
      }
      if (total != static_cast<u64>(degree))
        throw ConsistencyError("lifted multiplicities do not sum to the degree");
      row[j] = value;
    }
    table_rows.emplace_back(degree, std::move(row));
  }

  std::sort(table_rows.begin(), table_rows.end(),
            [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              for (std::size_t j = 0; j < x.second.size(); ++j) {
                int c = Cyclotomic::compare(x.second[j], y.second[j]);
                if (c != 0) return c < 0;
              }
              return false;
            });
  long long degsq = 0;
  for (auto& [d, row] : table_rows) {
    t.degrees.push_back(d);
    t.rows.push_back(std::move(row));
    degsq += static_cast<long long>(d) * d;
  }
  if (degsq != g.order)
    throw ConsistencyError("degree squares do not sum to the group order");

  // both orthogonality relations, exactly
  for (int r = 0; r < k; ++r)
    for (int s2 = r; s2 < k; ++s2) {
      Cyclotomic acc;
      for (int j = 0; j < k; ++j)
        acc += t.rows[r][j] * t.rows[s2][inv_class[j]] *
               Rat(static_cast<long long>(t.classes[j].members.size()));
      Cyclotomic expect(1, r == s2 ? Rat(g.order) : Rat(0));
      if (!(acc == expect))
        throw ConsistencyError("row orthogonality fails");
    }
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Cyclotomic acc;
      for (int r = 0; r < k; ++r) acc += t.rows[r][i] * t.rows[r][inv_class[j]];
      Cyclotomic expect(1, i == j ? Rat(t.classes[i].centralizer_order) : Rat(0));
      if (!(acc == expect))
        throw ConsistencyError("column orthogonality fails");
    }
  return t;
}

GaloisOrbits galois_orbits_of_rows(const CharacterTable& t) {
  const int rows = static_cast<int>(t.rows.size());
  const int e = t.conductor;
  std::vector<int> uf(rows);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (int k = 2; k < e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    for (int r = 0; r < rows; ++r) {
      std::vector<Cyclotomic> img;
      img.reserve(t.rows[r].size());
      for (const Cyclotomic& v : t.rows[r]) img.push_back(v.galois(k));
      int match = -1;
      for (int s = 0; s < rows; ++s)
        if (t.rows[s] == img) {
          match = s;
          break;
        }
      if (match < 0)
        throw ConsistencyError("table is not closed under value symmetries");
      uf[find(r)] = find(match);
    }
  }
  std::map<int, std::vector<int>> grouped;
  for (int r = 0; r < rows; ++r) grouped[find(r)].push_back(r);
  GaloisOrbits out;
  for (auto& [root, members] : grouped) {
    if (members.size() == 1) ++out.rational_rows;
    out.orbits.push_back(std::move(members));
  }
  std::sort(out.orbits.begin(), out.orbits.end());
  return out;
}

ArtinReport artin_check(const FiniteGroup& g, const RunLimits& limits) {
  CharacterTable t = character_table(g, limits);
  GaloisOrbits orbits = galois_orbits_of_rows(t);
  ArtinReport rep;
  rep.galois_orbit_count = orbits.orbits.size();
  rep.rational_class_count = rational_classes(g).size();
  rep.equivariant = true;
  std::vector<int> class_of = class_index_map(g, t.classes);
  const int e = t.conductor;
  for (int k = 1; k < e && rep.equivariant; ++k) {
    if (std::gcd(k, e) != 1) continue;
    for (std::size_t r = 0; r < t.rows.size() && rep.equivariant; ++r)
      for (std::size_t j = 0; j < t.classes.size(); ++j) {
        int pj = class_of[g.power(t.classes[j].representative, k)];
        if (!(t.rows[r][pj] == t.rows[r][j].galois(k))) {
          rep.equivariant = false;
          std::ostringstream os;
          os << "row " << r << " class " << j << " power " << k;
          rep.witness = os.str();
          break;
        }
      }
  }
  rep.ok = rep.equivariant && rep.galois_orbit_count == rep.rational_class_count;
  if (rep.ok == false && rep.witness.empty()) {
    std::ostringstream os;
    os << "orbit count " << rep.galois_orbit_count << " vs rational classes "
       << rep.rational_class_count;
    rep.witness = os.str();
  }
  return rep;
}

RepTable extend_rep(const FiniteGroup& g, const ExactRep& rep,
                    const RunLimits& limits) {
  const int d = rep.dimension;
  if (d <= 0) throw ValidationError("representation dimension must be positive");
  if (rep.generator_matrices.size() != g.generators.size())
    throw ValidationError("need exactly one matrix per group generator");
  for (const CycMatrix& m : rep.generator_matrices) {
    if (static_cast<int>(m.size()) != d)
      throw ValidationError("generator matrix has the wrong shape");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != d)
        throw ValidationError("generator matrix has the wrong shape");
  }
  RepTable out{rep, {}};
  out.element_matrices.assign(g.order, {});
  out.element_matrices[0] = cyc_identity(d);
  std::vector<std::vector<int>> children(g.order);
  for (int x = 1; x < g.order; ++x) children[g.parent[x]].push_back(x);
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int c : children[u]) {
      out.element_matrices[c] = cyc_mul(out.element_matrices[u],
                                        rep.generator_matrices[g.via_gen[c]]);
      queue.push_back(c);
    }
  }
  for (int x = 0; x < g.order; ++x) {
    limits.check_deadline("representation validation");
    for (std::size_t s = 0; s < g.generators.size(); ++s) {
      CycMatrix prod = cyc_mul(out.element_matrices[x], rep.generator_matrices[s]);
      if (out.element_matrices[g.mul(x, g.generators[s])] != prod)
        throw ValidationError("matrices do not satisfy the group relations");
    }
  }
  return out;
}

ExactRep builtin_rep(const std::string& zoo_spec, const RunLimits& limits) {
  std::string name = zoo_spec.substr(0, zoo_spec.find(':'));
  if (name == "binary_tetrahedral" || name == "binary_octahedral" ||
      name == "binary_icosahedral") {
    auto quats = zoo_quaternions(zoo_spec, limits);
    if (!quats) throw ValidationError("no built-in representation for " + zoo_spec);
    FiniteGroup g = make_zoo_group(zoo_spec, limits);
    ExactRep rep;
    rep.name = zoo_spec + "#2d";
    rep.dimension = 2;
    rep.conductor = 40;
    for (int gen : g.generators)
      rep.generator_matrices.push_back(quat_matrix((*quats)[gen]));
    return rep;
  }
  if (name == "quaternion_generalized" || name == "binary_dihedral") {
    FiniteGroup g = make_zoo_group(zoo_spec, limits);
    int two_m = g.order / 2;
    ExactRep rep;
    rep.name = zoo_spec + "#2d";
    rep.dimension = 2;
    rep.conductor = two_m;
    for (int gen : g.generators) {
      CycMatrix m(2, std::vector<Cyclotomic>(2));
      if (gen == 1) {
        m[0][0] = Cyclotomic::root_power(two_m, 1);
        m[1][1] = Cyclotomic::root_power(two_m, two_m - 1);
      } else if (gen == two_m) {
        m[0][1] = Cyclotomic(1, Rat(1));
        m[1][0] = Cyclotomic(1, Rat(-1));
      } else {
        throw ConsistencyError("unexpected generator layout");
      }
      rep.generator_matrices.push_back(std::move(m));
    }
    return rep;
  }
  throw ValidationError("no built-in representation for " + zoo_spec);
}

Rat age(const FiniteGroup& g, const RepTable& rho, int element) {
  if (element < 0 || element >= g.order)
    throw ValidationError("element index out of range");
  int m = g.elt_order[element];
  std::vector<Cyclotomic> tr(m);
  for (int j = 0; j < m; ++j)
    tr[j] = cyc_trace(rho.element_matrices[g.power(element, j)]);
  return age_from_traces(tr, m, Rat(rho.rep.dimension), "age");
}

FlagAge tuple_age_flag(const FiniteGroup& g, const RepTable& rho,
                       const std::vector<int>& tuple) {
  for (int x : tuple)
    if (x < 0 || x >= g.order) throw ValidationError("element index out of range");
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (g.mul(tuple[i], tuple[j]) != g.mul(tuple[j], tuple[i]))
        throw ValidationError("tuple entries must commute");
  const int d = rho.rep.dimension;
  FlagAge out;
  out.total = Rat(0);
  CycMatrix w = cyc_identity(d);
  std::vector<int> prefix;
  for (int gi : tuple) {
    int r = w.empty() ? 0 : static_cast<int>(w[0].size());
    Rat step(0);
    if (r > 0) {
      CycMatrix moved = cyc_mul(rho.element_matrices[gi], w);
      CycMatrix restriction = cyc_solve(w, moved, "flag restriction");
      step = matrix_age(restriction, g.elt_order[gi], "tuple age");
    }
    out.steps.push_back(step);
    out.total += step;
    prefix.push_back(gi);
    Subgroup h = subgroup_closure(g, prefix);
    CycMatrix proj(d, std::vector<Cyclotomic>(d));
    for (int member : h.members)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          proj[a][b] += rho.element_matrices[member][a][b];
    Rat scale(1, h.order());
    for (auto& row : proj)
      for (auto& v : row) v *= scale;
    w = cyc_column_space(proj);
  }
  return out;
}

OrderScan tuple_age_all_orders(const FiniteGroup& g, const RepTable& rho,
                               const std::vector<int>& tuple) {
  if (tuple.size() > 6)
    throw CapExceeded("ordering scan supports at most 6 entries");
  std::vector<int> idx(tuple.size());
  std::iota(idx.begin(), idx.end(), 0);
  OrderScan out;
  do {
    std::vector<int> perm;
    perm.reserve(tuple.size());
    for (int i : idx) perm.push_back(tuple[i]);
    FlagAge fa = tuple_age_flag(g, rho, perm);
    out.orders.push_back(perm);
    out.totals.push_back(fa.total);
  } while (std::next_permutation(idx.begin(), idx.end()));
  for (const Rat& v : out.totals)
    if (v != out.totals.front()) out.order_invariant = false;
  return out;
}

AgeCheck age_class_invariance(const FiniteGroup& g, const RepTable& rho,
                              int class_representative) {
  AgeCheck out;
  Rat base = age(g, rho, class_representative);
  std::vector<char> seen(g.order, 0);
  for (int h = 0; h < g.order; ++h) {
    int m = g.conj(h, class_representative);
    if (seen[m]) continue;
    seen[m] = 1;
    if (age(g, rho, m) != base) {
      out.ok = false;
      std::ostringstream os;
      os << "elements " << class_representative << " and " << m
         << " disagree";
      out.witness = os.str();
      return out;
    }
  }
  return out;
}

AgeCheck tuple_age_invariance(const FiniteGroup& g, const RepTable& rho,
                              const std::vector<int>& tuple) {
  AgeCheck out;
  Rat base = tuple_age_flag(g, rho, tuple).total;
  std::set<std::vector<int>> seen;
  for (int h = 0; h < g.order; ++h) {
    std::vector<int> conj;
    conj.reserve(tuple.size());
    for (int x : tuple) conj.push_back(g.conj(h, x));
    if (!seen.insert(conj).second) continue;
    if (tuple_age_flag(g, rho, conj).total != base) {
      out.ok = false;
      out.witness = "conjugate tuple disagrees";
      return out;
    }
  }
  return out;
}

std::vector<AgeRow> age_table(const FiniteGroup& g, const RepTable& rho) {
  std::vector<AgeRow> rows;
  for (const ConjClass& c : conjugacy_classes(g)) {
    AgeRow row;
    row.class_representative = c.representative;
    row.element_order = g.elt_order[c.representative];
    row.age_value = age(g, rho, c.representative);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TupleAgeRow> tuple_age_table(const FiniteGroup& g, const RepTable& rho,
                                         int n, const RunLimits& limits) {
  if (n < 0) throw ValidationError("tuple length must be nonnegative");
  std::vector<TupleAgeRow> rows;
  for (const TupleClass& tc : tuple_classes(g, n, std::nullopt, limits).classes) {
    TupleAgeRow row;
    row.rep = tc.rep;
    FlagAge fa = tuple_age_flag(g, rho, tc.rep);
    row.steps = fa.steps;
    row.total = fa.total;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace inertia
