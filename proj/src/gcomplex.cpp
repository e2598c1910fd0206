#include "inertia/gcomplex.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "inertia/tuples.hpp"
#include "inertia/util.hpp"

namespace inertia {

namespace {

// simplices and flags are ordered by (size, lex)
bool size_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> erase_at(const std::vector<int>& v, int i) {
  std::vector<int> out;
  out.reserve(v.size() - 1);
  for (int j = 0; j < static_cast<int>(v.size()); ++j)
    if (j != i) out.push_back(v[j]);
  return out;
}

}  // namespace

int GComplex::dimension() const {
  if (simplices.empty()) return -1;
  return static_cast<int>(simplices.back().size()) - 1;
}

int GComplex::simplex_index(const std::vector<int>& s) const {
  auto it = std::lower_bound(simplices.begin(), simplices.end(), s, size_lex_less);
  if (it == simplices.end() || *it != s)
    throw ConsistencyError("simplex lookup failed");
  return static_cast<int>(it - simplices.begin());
}

GComplex build_gcomplex(const std::string& name, int vertex_count,
                        const std::vector<std::vector<int>>& maximal,
                        FiniteGroup group,
                        const std::vector<std::vector<int>>& generator_vertex_maps,
                        const RunLimits& limits) {
  if (vertex_count <= 0) throw ValidationError("vertex count must be positive");
  if (maximal.empty())
    throw ValidationError("complex needs at least one maximal simplex");

  GComplex x;
  x.name = name;
  x.vertex_count = vertex_count;

  std::set<std::vector<int>> closure;
  for (const auto& raw : maximal) {
    if (raw.empty()) throw ValidationError("empty simplex in input");
    std::vector<int> s = raw;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= vertex_count)
        throw ValidationError("simplex vertex out of range");
      if (i > 0 && s[i] == s[i - 1])
        throw ValidationError("repeated vertex in simplex");
    }
    if (s.size() > 20)
      throw CapExceeded("maximal simplex too large to close over faces");
    x.maximal.push_back(s);
    for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      closure.insert(std::move(face));
      if (closure.size() > 200000)
        throw CapExceeded("face closure exceeds the supported size");
    }
  }
  x.simplices.assign(closure.begin(), closure.end());
  std::sort(x.simplices.begin(), x.simplices.end(), size_lex_less);
  const int scount = static_cast<int>(x.simplices.size());

  if (generator_vertex_maps.size() != group.generators.size())
    throw ValidationError("need exactly one vertex map per group generator");
  for (const auto& m : generator_vertex_maps) {
    if (static_cast<int>(m.size()) != vertex_count)
      throw ValidationError("vertex map length must equal the vertex count");
    std::vector<char> seen(vertex_count, 0);
    for (int v : m) {
      if (v < 0 || v >= vertex_count || seen[v])
        throw ValidationError("vertex map is not a permutation");
      seen[v] = 1;
    }
    for (const auto& s : x.simplices) {
      std::vector<int> img;
      img.reserve(s.size());
      for (int v : s) img.push_back(m[v]);
      std::sort(img.begin(), img.end());
      auto it = std::lower_bound(x.simplices.begin(), x.simplices.end(), img,
                                 size_lex_less);
      if (it == x.simplices.end() || *it != img)
        throw ValidationError("vertex maps must send simplices to simplices");
    }
  }

  // extend the generator maps along the word tree: g = parent * s acts by
  // v -> parent-image of the s-image
  const int n = group.order;
  x.vertex_action.assign(n, {});
  x.vertex_action[0].resize(vertex_count);
  std::iota(x.vertex_action[0].begin(), x.vertex_action[0].end(), 0);
  std::vector<std::vector<int>> children(n);
  for (int g = 1; g < n; ++g) children[group.parent[g]].push_back(g);
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int c : children[u]) {
      const std::vector<int>& pm = x.vertex_action[u];
      const std::vector<int>& sm = generator_vertex_maps[group.via_gen[c]];
      std::vector<int> cm(vertex_count);
      for (int v = 0; v < vertex_count; ++v) cm[v] = pm[sm[v]];
      x.vertex_action[c] = std::move(cm);
      queue.push_back(c);
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw ConsistencyError("word tree does not reach every element");

  for (int g = 0; g < n; ++g) {
    limits.check_deadline("group action validation");
    for (std::size_t k = 0; k < group.generators.size(); ++k) {
      int h = group.mul(g, group.generators[k]);
      const std::vector<int>& gm = x.vertex_action[g];
      const std::vector<int>& sm = generator_vertex_maps[k];
      for (int v = 0; v < vertex_count; ++v)
        if (x.vertex_action[h][v] != gm[sm[v]])
          throw ValidationError("vertex maps do not extend to a group action");
    }
  }

  x.simplex_action.assign(n, std::vector<int>(scount));
  for (int g = 0; g < n; ++g)
    for (int s = 0; s < scount; ++s) {
      std::vector<int> img;
      img.reserve(x.simplices[s].size());
      for (int v : x.simplices[s]) img.push_back(x.vertex_action[g][v]);
      std::sort(img.begin(), img.end());
      x.simplex_action[g][s] = x.simplex_index(img);
    }

  x.group = std::move(group);
  return x;
}

int SdComplex::dimension() const {
  if (flags.empty()) return -1;
  return static_cast<int>(flags.back().size()) - 1;
}

int SdComplex::flag_index(const std::vector<int>& flag) const {
  auto it = std::lower_bound(flags.begin(), flags.end(), flag, size_lex_less);
  if (it == flags.end() || *it != flag)
    throw ConsistencyError("flag lookup failed");
  return static_cast<int>(it - flags.begin());
}

std::vector<int> SdComplex::act(int element, const std::vector<int>& flag) const {
  // entries have strictly increasing simplex dimension, which the action
  // preserves, so the mapped ids are already ascending
  std::vector<int> out;
  out.reserve(flag.size());
  for (int id : flag) out.push_back(base->simplex_action[element][id]);
  return out;
}

SdComplex subdivide(const GComplex& x) {
  SdComplex sd;
  sd.base = &x;
  const int scount = static_cast<int>(x.simplices.size());
  std::vector<std::vector<int>> succ(scount);
  for (int a = 0; a < scount; ++a)
    for (int b = a + 1; b < scount; ++b)
      if (x.simplices[a].size() < x.simplices[b].size() &&
          subset_of(x.simplices[a], x.simplices[b]))
        succ[a].push_back(b);
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int last) {
    sd.flags.push_back(cur);
    for (int nxt : succ[last]) {
      cur.push_back(nxt);
      extend(nxt);
      cur.pop_back();
    }
  };
  for (int s = 0; s < scount; ++s) {
    cur.assign(1, s);
    extend(s);
  }
  std::sort(sd.flags.begin(), sd.flags.end(), size_lex_less);
  return sd;
}

FixedSubcomplex fixed_subcomplex(const SdComplex& sd, const std::vector<int>& tuple) {
  const GComplex& x = *sd.base;
  const int scount = static_cast<int>(x.simplices.size());
  FixedSubcomplex out;
  out.tuple = tuple;
  out.vertex_in.assign(scount, 1);
  for (int t : tuple) {
    if (t < 0 || t >= x.group.order)
      throw ValidationError("element index out of range");
    for (int s = 0; s < scount; ++s)
      if (x.simplex_action[t][s] != s) out.vertex_in[s] = 0;
  }
  for (int f = 0; f < static_cast<int>(sd.flags.size()); ++f) {
    bool inside = true;
    for (int id : sd.flags[f])
      if (!out.vertex_in[id]) {
        inside = false;
        break;
      }
    if (inside) out.flag_ids.push_back(f);
  }
  return out;
}

namespace {

// chain complex of the flags listed in `kept` (a full subcomplex of the
// subdivision), one level per flag length; boundary = alternating vertex
// deletion
struct FlagComplex {
  std::vector<std::vector<int>> level_flags;  // global flag ids per degree
  std::vector<IntMatrix> boundary;            // boundary[q]: lvl q -> q-1
};

FlagComplex flag_chain_complex(const SdComplex& sd, const std::vector<int>& kept,
                               int top_degree) {
  FlagComplex fc;
  fc.level_flags.assign(top_degree + 2, {});
  for (int f : kept) {
    int q = static_cast<int>(sd.flags[f].size()) - 1;
    if (q <= top_degree + 1) fc.level_flags[q].push_back(f);
  }
  fc.boundary.resize(top_degree + 2);
  fc.boundary[0] = IntMatrix(0, static_cast<int>(fc.level_flags[0].size()));
  for (int q = 1; q <= top_degree + 1; ++q) {
    const auto& below = fc.level_flags[q - 1];
    const auto& here = fc.level_flags[q];
    IntMatrix b(static_cast<int>(below.size()), static_cast<int>(here.size()));
    for (int c = 0; c < b.cols; ++c) {
      const std::vector<int>& flag = sd.flags[here[c]];
      for (int i = 0; i <= q; ++i) {
        int face = sd.flag_index(erase_at(flag, i));
        auto it = std::lower_bound(below.begin(), below.end(), face);
        if (it == below.end() || *it != face)
          throw ConsistencyError("face missing from full subcomplex");
        b.at(static_cast<int>(it - below.begin()), c) += (i % 2 == 0) ? 1 : -1;
      }
    }
    fc.boundary[q] = std::move(b);
  }
  return fc;
}

long long snf_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return static_cast<long long>(smith_normal_form(m).size());
}

}  // namespace

OrbitSpaceHomology quotient_homology(const SdComplex& sd, const FixedSubcomplex& y,
                                     const std::vector<int>& subgroup_members,
                                     const RunLimits& limits) {
  const GComplex& x = *sd.base;
  const int dim = sd.dimension();
  OrbitSpaceHomology out;
  out.betti.assign(std::max(dim + 1, 0), 0);
  if (y.flag_ids.empty()) return out;

  const std::vector<int>& members = subgroup_members;
  if (members.empty() || members[0] != 0)
    throw ValidationError("subgroup must be sorted and contain the identity");
  {
    std::vector<char> in_sub(x.group.order, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      int m = members[i];
      if (m < 0 || m >= x.group.order || in_sub[m])
        throw ValidationError("bad subgroup member list");
      in_sub[m] = 1;
      if (i > 0 && members[i] <= members[i - 1])
        throw ValidationError("subgroup members must ascend");
    }
    for (int a : members)
      for (int b : members)
        if (!in_sub[x.group.mul(a, b)])
          throw ValidationError("member list is not closed under products");
  }

  std::vector<char> in_y(sd.flags.size(), 0);
  for (int f : y.flag_ids) in_y[f] = 1;
  // mapped[h][local flag] = image flag id under members[h]
  std::vector<std::vector<int>> mapped(members.size(),
                                       std::vector<int>(y.flag_ids.size()));
  for (std::size_t h = 0; h < members.size(); ++h)
    for (std::size_t i = 0; i < y.flag_ids.size(); ++i) {
      int img = sd.flag_index(sd.act(members[h], sd.flags[y.flag_ids[i]]));
      if (!in_y[img])
        throw ValidationError("subgroup does not preserve the subcomplex");
      // componentwise images of ascending flags stay ascending, so a setwise
      // invariant flag is pointwise fixed; the orbit complexes below rely on
      // this
      mapped[h][i] = img;
    }

  // path (a): rank of the averaging projector on the homology of the
  // subcomplex
  FlagComplex fc = flag_chain_complex(sd, y.flag_ids, dim);
  std::vector<long long> betti_projector(dim + 1, 0);
  for (int q = 0; q <= dim; ++q) {
    limits.check_deadline("orbit space homology");
    RatMatrix ker = kernel_basis(fc.boundary[q]);
    RatMatrix img = to_rat(fc.boundary[q + 1]);
    RatMatrix reps = quotient_space_reps(img, ker);
    if (reps.cols == 0) continue;
    const auto& here = fc.level_flags[q];
    // local index of each flag of this degree inside y, then inside `here`
    RatMatrix acc(reps.rows, reps.cols);
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (int r = 0; r < reps.rows; ++r) {
        int gid = here[r];
        auto yit = std::lower_bound(y.flag_ids.begin(), y.flag_ids.end(), gid);
        int img_gid = mapped[h][yit - y.flag_ids.begin()];
        auto hit = std::lower_bound(here.begin(), here.end(), img_gid);
        if (hit == here.end() || *hit != img_gid)
          throw ConsistencyError("image flag left its degree");
        int mr = static_cast<int>(hit - here.begin());
        for (int c = 0; c < reps.cols; ++c) acc.at(mr, c) += reps.at(r, c);
      }
    }
    Rat scale = Rat(1) / Rat(static_cast<long long>(members.size()));
    for (auto& v : acc.a) v *= scale;
    RatMatrix coords = quotient_coordinates(img, reps, acc);
    betti_projector[q] = rat_rank(coords);
  }

  // path (b): orbits of the nerve of the face poset (one further
  // subdivision), quotiented levelwise; chains hold local indices into
  // y.flag_ids
  const int m_count = static_cast<int>(y.flag_ids.size());
  std::vector<std::vector<int>> loc_img(members.size(), std::vector<int>(m_count));
  for (std::size_t h = 0; h < members.size(); ++h)
    for (int i = 0; i < m_count; ++i) {
      auto it = std::lower_bound(y.flag_ids.begin(), y.flag_ids.end(), mapped[h][i]);
      loc_img[h][i] = static_cast<int>(it - y.flag_ids.begin());
    }
  std::vector<std::vector<int>> succ(m_count);
  for (int a = 0; a < m_count; ++a)
    for (int b = 0; b < m_count; ++b) {
      const auto& fa = sd.flags[y.flag_ids[a]];
      const auto& fb = sd.flags[y.flag_ids[b]];
      if (fa.size() < fb.size() && subset_of(fa, fb)) succ[a].push_back(b);
    }
  // canonical representative: lex-least orbit member under the subgroup
  auto canon_chain = [&](const std::vector<int>& chain) {
    std::vector<int> best = chain;
    std::vector<int> cand(chain.size());
    for (std::size_t h = 1; h < members.size(); ++h) {
      for (std::size_t i = 0; i < chain.size(); ++i)
        cand[i] = loc_img[h][chain[i]];
      if (cand < best) best = cand;
    }
    return best;
  };
  std::vector<std::vector<std::vector<int>>> orbit_level(dim + 2);
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int last) {
    int q = static_cast<int>(chain.size()) - 1;
    if (canon_chain(chain) == chain) orbit_level[q].push_back(chain);
    if (q + 1 <= dim + 1)
      for (int nxt : succ[last]) {
        chain.push_back(nxt);
        grow(nxt);
        chain.pop_back();
      }
  };
  for (int s = 0; s < m_count; ++s) {
    chain.assign(1, s);
    grow(s);
  }
  for (auto& lvl : orbit_level) std::sort(lvl.begin(), lvl.end());

  std::vector<long long> betti_orbit(dim + 1, 0);
  std::vector<IntMatrix> qbnd(dim + 2);
  qbnd[0] = IntMatrix(0, static_cast<int>(orbit_level[0].size()));
  for (int q = 1; q <= dim + 1; ++q) {
    const auto& below = orbit_level[q - 1];
    const auto& here = orbit_level[q];
    IntMatrix b(static_cast<int>(below.size()), static_cast<int>(here.size()));
    for (int c = 0; c < b.cols; ++c)
      for (int i = 0; i <= q; ++i) {
        std::vector<int> face = canon_chain(erase_at(here[c], i));
        auto it = std::lower_bound(below.begin(), below.end(), face);
        if (it == below.end() || *it != face)
          throw ConsistencyError("orbit face missing");
        b.at(static_cast<int>(it - below.begin()), c) += (i % 2 == 0) ? 1 : -1;
      }
    qbnd[q] = std::move(b);
  }
  long long euler = 0;
  for (int q = 0; q <= dim + 1; ++q)
    euler += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(orbit_level[q].size());
  std::vector<long long> rank(dim + 3, 0);
  for (int q = 0; q <= dim + 1; ++q) rank[q] = snf_rank(qbnd[q]);
  for (int q = 0; q <= dim; ++q)
    betti_orbit[q] = static_cast<long long>(orbit_level[q].size()) - rank[q] -
                     rank[q + 1];

  if (betti_projector != betti_orbit)
    throw ConsistencyError(
        "orbit space homology: projector and quotient models disagree");
  out.betti = betti_projector;
  out.euler = euler;
  return out;
}

SectorTable sector_table(const GComplex& x, int n, const RunLimits& limits) {
  if (n < 0) throw ValidationError("tuple length must be nonnegative");
  SectorTable out;
  out.level = n;
  SdComplex sd = subdivide(x);
  InertiaLevel lvl = tuple_classes(x.group, n, std::nullopt, limits);
  out.rows = parallel_map<SectorRow>(
      lvl.classes.size(), limits.threads, [&](std::size_t i) {
        const TupleClass& tc = lvl.classes[i];
        SectorRow row;
        row.rep = tc.rep;
        row.orbit_size = tc.orbit_size;
        row.centralizer_order = static_cast<long long>(tc.centralizer.size());
        FixedSubcomplex y = fixed_subcomplex(sd, tc.rep);
        if (y.empty()) {
          row.empty_fixed = true;
          return row;
        }
        OrbitSpaceHomology h = quotient_homology(sd, y, tc.centralizer, limits);
        row.betti = h.betti;
        row.euler = h.euler;
        return row;
      });
  for (const auto& row : out.rows)
    for (long long b : row.betti) out.total_rank += b;
  return out;
}

HomologySummary total_inertia_homology(const GComplex& x, int max_degree,
                                       const RunLimits& limits) {
  if (max_degree < 0) throw ValidationError("degree must be nonnegative");
  SdComplex sd = subdivide(x);
  const FiniteGroup& g = x.group;
  const int fcount = static_cast<int>(sd.flags.size());

  // flag_act[e][f] = image flag id
  std::vector<std::vector<int>> flag_act(g.order, std::vector<int>(fcount));
  for (int e = 0; e < g.order; ++e)
    for (int f = 0; f < fcount; ++f)
      flag_act[e][f] = sd.flag_index(sd.act(e, sd.flags[f]));

  // weak successors: f' with f contained in f' (both directions of the
  // diagonal need chains that may repeat entries)
  std::vector<std::vector<int>> wsucc(fcount);
  for (int a = 0; a < fcount; ++a) {
    wsucc[a].push_back(a);
    for (int b = 0; b < fcount; ++b)
      if (sd.flags[a].size() < sd.flags[b].size() &&
          subset_of(sd.flags[a], sd.flags[b]))
        wsucc[a].push_back(b);
    std::sort(wsucc[a].begin(), wsucc[a].end());
  }

  auto canon_chain_full = [&](const std::vector<int>& chain,
                              std::vector<int>* best_movers) {
    std::vector<int> best;
    std::vector<int> cand(chain.size());
    if (best_movers) best_movers->clear();
    for (int e = 0; e < g.order; ++e) {
      for (std::size_t i = 0; i < chain.size(); ++i) cand[i] = flag_act[e][chain[i]];
      if (best.empty() || cand < best) {
        best = cand;
        if (best_movers) best_movers->assign(1, e);
      } else if (best_movers && cand == best) {
        best_movers->push_back(e);
      }
    }
    return best;
  };

  struct Cell {
    std::vector<int> chain;
    std::vector<int> tuple;  // ambient element ids
  };

  // per-level memo: stabilizer member list -> commuting tuple class reps
  SimplicialSetModel model;
  model.levels.resize(max_degree + 2);
  std::vector<std::vector<Cell>> cells(max_degree + 2);

  for (int m = 0; m <= max_degree + 1; ++m) {
    limits.check_deadline("total inertia homology");
    // canonical weak chains of length m+1
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int last) {
      if (static_cast<int>(cur.size()) == m + 1) {
        if (canon_chain_full(cur, nullptr) == cur) chains.push_back(cur);
        return;
      }
      for (int nxt : wsucc[last]) {
        cur.push_back(nxt);
        grow(nxt);
        cur.pop_back();
      }
    };
    for (int s = 0; s < fcount; ++s) {
      cur.assign(1, s);
      grow(s);
    }
    std::sort(chains.begin(), chains.end());

    std::map<std::vector<int>, std::vector<std::vector<int>>> tuple_memo;
    for (const auto& ch : chains) {
      std::vector<int> stab;
      for (int e = 0; e < g.order; ++e) {
        bool fixes = true;
        for (int f : ch)
          if (flag_act[e][f] != f) {
            fixes = false;
            break;
          }
        if (fixes) stab.push_back(e);
      }
      auto it = tuple_memo.find(stab);
      if (it == tuple_memo.end()) {
        LocalGroup lg = as_group(g, Subgroup{stab}, "stab");
        InertiaLevel lvl = tuple_classes(lg.group, m, std::nullopt, limits);
        std::vector<std::vector<int>> reps;
        for (const auto& tc : lvl.classes) {
          std::vector<int> t;
          for (int loc : tc.rep) t.push_back(lg.to_parent[loc]);
          reps.push_back(std::move(t));
        }
        it = tuple_memo.emplace(stab, std::move(reps)).first;
      }
      for (const auto& t : it->second) {
        cells[m].push_back(Cell{ch, t});
        if (cells[m].size() > limits.tuple_cap)
          throw CapExceeded("diagonal model exceeds the tuple cap");
      }
    }

    SimplicialLevel& lvl = model.levels[m];
    for (const auto& cell : cells[m]) {
      std::vector<int> key = cell.chain;
      key.push_back(-1);
      key.insert(key.end(), cell.tuple.begin(), cell.tuple.end());
      lvl.keys.push_back(std::move(key));
      bool degen = false;
      for (int j = 0; j + 1 <= m; ++j)
        if (j < static_cast<int>(cell.tuple.size()) && cell.tuple[j] == 0 &&
            cell.chain[j] == cell.chain[j + 1]) {
          degen = true;
          break;
        }
      lvl.degenerate.push_back(degen ? 1 : 0);
    }

    if (m == 0) continue;
    // faces: simplicial deletion on the chain paired with the bar face on
    // the tuple, then canonical form over the whole group
    const SimplicialLevel& prev = model.levels[m - 1];
    for (const auto& cell : cells[m]) {
      std::vector<int> face_idx(m + 1);
      for (int i = 0; i <= m; ++i) {
        std::vector<int> fch = erase_at(cell.chain, i);
        std::vector<int> ft;
        if (i == 0) {
          ft.assign(cell.tuple.begin() + 1, cell.tuple.end());
        } else if (i == m) {
          ft.assign(cell.tuple.begin(), cell.tuple.end() - 1);
        } else {
          ft = cell.tuple;
          ft[i - 1] = g.mul(ft[i - 1], ft[i]);
          ft.erase(ft.begin() + i);
        }
        std::vector<int> movers;
        std::vector<int> cch = canon_chain_full(fch, &movers);
        std::vector<int> ct;
        bool first = true;
        for (int e : movers) {
          std::vector<int> cand(ft.size());
          for (std::size_t j = 0; j < ft.size(); ++j) cand[j] = g.conj(e, ft[j]);
          if (first || cand < ct) {
            ct = cand;
            first = false;
          }
        }
        std::vector<int> key = cch;
        key.push_back(-1);
        key.insert(key.end(), ct.begin(), ct.end());
        auto it = std::lower_bound(prev.keys.begin(), prev.keys.end(), key);
        if (it == prev.keys.end() || *it != key)
          throw ConsistencyError("diagonal face missing from level below");
        face_idx[i] = static_cast<int>(it - prev.keys.begin());
      }
      model.levels[m].faces.push_back(std::move(face_idx));
    }
  }

  ChainComplex chains = normalized_chains(model);
  return homology(chains, Ring::Q, max_degree);
}

EulerReport euler_consistency(const GComplex& x, const RunLimits& limits) {
  SdComplex sd = subdivide(x);
  const FiniteGroup& g = x.group;
  EulerReport rep;
  rep.sector_sum = 0;
  for (const ConjClass& c : conjugacy_classes(g)) {
    FixedSubcomplex y = fixed_subcomplex(sd, {c.representative});
    if (y.empty()) continue;
    Subgroup cz = centralizer(g, {c.representative});
    OrbitSpaceHomology h = quotient_homology(sd, y, cz.members, limits);
    rep.sector_sum += Rat(h.euler);
  }
  Rat total = 0;
  for (int a = 0; a < g.order; ++a) {
    limits.check_deadline("euler consistency");
    for (int b = 0; b < g.order; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) continue;
      FixedSubcomplex y = fixed_subcomplex(sd, {a, b});
      long long chi = 0;
      for (int f : y.flag_ids)
        chi += (sd.flags[f].size() % 2 == 1) ? 1 : -1;
      total += Rat(chi);
    }
  }
  rep.pair_average = total / Rat(g.order);
  rep.equal = rep.sector_sum == rep.pair_average;
  return rep;
}

}  // namespace inertia
