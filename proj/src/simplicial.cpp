#include "inertia/simplicial.hpp"

#include <algorithm>
#include <map>

namespace inertia {
namespace {

int find_key(const SimplicialLevel& level, const std::vector<int>& key) {
  auto it = std::lower_bound(level.keys.begin(), level.keys.end(), key);
  if (it == level.keys.end() || *it != key)
    throw ConsistencyError("face key missing from level");
  return static_cast<int>(it - level.keys.begin());
}

bool has_identity_entry(const std::vector<int>& key) {
  return std::find(key.begin(), key.end(), 0) != key.end();
}

SimplicialSetModel nerve_model(const FiniteGroup& g, std::optional<int> prime,
                               int max_degree, const RunLimits& limits,
                               TupleKind kind) {
  if (max_degree < 0) throw ValidationError("max degree must be nonnegative");
  int top = max_degree + 1;
  std::vector<InertiaLevel> tower = tuple_class_tower(g, top, prime, limits, kind);
  SimplicialSetModel model;
  model.levels.resize(top + 1);
  for (int m = 0; m <= top; ++m) {
    SimplicialLevel& level = model.levels[m];
    level.keys.reserve(tower[m].classes.size());
    for (const TupleClass& t : tower[m].classes) {
      level.keys.push_back(t.rep);
      level.degenerate.push_back(has_identity_entry(t.rep) ? 1 : 0);
    }
  }
  for (int m = 1; m <= top; ++m) {
    SimplicialLevel& level = model.levels[m];
    const SimplicialLevel& below = model.levels[m - 1];
    level.faces.resize(level.keys.size());
    for (std::size_t s = 0; s < level.keys.size(); ++s) {
      const std::vector<int>& t = level.keys[s];
      level.faces[s].resize(m + 1);
      for (int i = 0; i <= m; ++i) {
        std::vector<int> f;
        f.reserve(m - 1);
        if (i == 0) {
          f.assign(t.begin() + 1, t.end());
        } else if (i == m) {
          f.assign(t.begin(), t.end() - 1);
        } else {
          f.assign(t.begin(), t.end());
          f[i - 1] = g.mul(t[i - 1], t[i]);
          f.erase(f.begin() + i);
        }
        level.faces[s][i] = find_key(below, canonical_tuple(g, f));
      }
    }
  }
  return model;
}

}  // namespace

SimplicialSetModel inertia_nerve_model(const FiniteGroup& g,
                                       std::optional<int> prime, int max_degree,
                                       const RunLimits& limits) {
  return nerve_model(g, prime, max_degree, limits, TupleKind::Commuting);
}

SimplicialSetModel full_nerve_quotient_model(const FiniteGroup& g, int max_degree,
                                             const RunLimits& limits) {
  return nerve_model(g, std::nullopt, max_degree, limits, TupleKind::All);
}

ChainComplex normalized_chains(const SimplicialSetModel& model) {
  ChainComplex chains;
  int top = model.top();
  chains.dims.resize(top + 1, 0);
  chains.nondeg_index.resize(top + 1);
  for (int m = 0; m <= top; ++m) {
    const SimplicialLevel& level = model.levels[m];
    chains.nondeg_index[m].assign(level.keys.size(), -1);
    for (std::size_t s = 0; s < level.keys.size(); ++s)
      if (!level.degenerate[s]) chains.nondeg_index[m][s] = chains.dims[m]++;
  }
  chains.boundary.resize(top + 1);
  chains.boundary[0] = IntMatrix(0, chains.dims[0]);
  for (int m = 1; m <= top; ++m) {
    IntMatrix b(chains.dims[m - 1], chains.dims[m]);
    const SimplicialLevel& level = model.levels[m];
    for (std::size_t s = 0; s < level.keys.size(); ++s) {
      int col = chains.nondeg_index[m][s];
      if (col < 0) continue;
      for (int i = 0; i <= m; ++i) {
        int row = chains.nondeg_index[m - 1][level.faces[s][i]];
        if (row < 0) continue;  // degenerate face vanishes in normalized chains
        b.at(row, col) += (i % 2 == 0) ? 1 : -1;
      }
    }
    chains.boundary[m] = std::move(b);
  }
  // boundary of boundary must vanish
  for (int m = 2; m <= top; ++m) {
    const IntMatrix& hi = chains.boundary[m];
    const IntMatrix& lo = chains.boundary[m - 1];
    for (int col = 0; col < hi.cols; ++col) {
      std::map<int, Int> acc;
      for (int mid = 0; mid < hi.rows; ++mid) {
        const Int& v = hi.at(mid, col);
        if (v == 0) continue;
        for (int row = 0; row < lo.rows; ++row) {
          const Int& w = lo.at(row, mid);
          if (w != 0) acc[row] += v * w;
        }
      }
      for (const auto& [row, v] : acc)
        if (v != 0) throw ConsistencyError("boundary squared is nonzero");
    }
  }
  return chains;
}

HomologySummary homology(const ChainComplex& chains, Ring ring, int max_degree) {
  int top = static_cast<int>(chains.dims.size()) - 1;
  if (max_degree > top - 1)
    throw ValidationError("chain complex too short for requested degree");
  HomologySummary out;
  out.ring = ring;
  std::vector<std::vector<Int>> snfs(top + 1);
  for (int m = 0; m <= max_degree + 1; ++m)
    snfs[m] = smith_normal_form(chains.boundary[m]);
  for (int m = 0; m <= max_degree; ++m) {
    long long rank_in = static_cast<long long>(snfs[m + 1].size());
    long long rank_out = static_cast<long long>(snfs[m].size());
    out.betti.push_back(chains.dims[m] - rank_out - rank_in);
    std::vector<Int> tors;
    if (ring == Ring::Z)
      for (const Int& d : snfs[m + 1])
        if (d > 1) tors.push_back(d);
    out.torsion.push_back(std::move(tors));
  }
  return out;
}

namespace {

IntMatrix rat_to_int_exact(const RatMatrix& m, const char* what) {
  IntMatrix out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      const Rat& v = m.at(r, c);
      if (denominator(v) != 1)
        throw ConsistencyError(std::string(what) + ": expected integer entries");
      out.at(r, c) = numerator(v);
    }
  return out;
}

}  // namespace

ComparisonResult compare_nerves(const FiniteGroup& g, int max_degree, Ring ring,
                                const RunLimits& limits) {
  SimplicialSetModel src = inertia_nerve_model(g, std::nullopt, max_degree, limits);
  SimplicialSetModel tgt = full_nerve_quotient_model(g, max_degree, limits);
  ChainComplex csrc = normalized_chains(src);
  ChainComplex ctgt = normalized_chains(tgt);
  HomologySummary hsrc = homology(csrc, ring, max_degree);
  HomologySummary htgt = homology(ctgt, ring, max_degree);

  // chain map: a commuting tuple class includes as the same canonical key
  std::vector<IntMatrix> chain_map(src.top() + 1);
  for (int m = 0; m <= src.top(); ++m) {
    IntMatrix f(ctgt.dims[m], csrc.dims[m]);
    for (std::size_t s = 0; s < src.levels[m].keys.size(); ++s) {
      int col = csrc.nondeg_index[m][s];
      if (col < 0) continue;
      int ts = find_key(tgt.levels[m], src.levels[m].keys[s]);
      int row = ctgt.nondeg_index[m][ts];
      if (row < 0) throw ConsistencyError("inclusion hit a degenerate simplex");
      f.at(row, col) = 1;
    }
    chain_map[m] = std::move(f);
  }
  for (int m = 1; m <= src.top(); ++m) {
    IntMatrix lhs = mat_mul(chain_map[m - 1], csrc.boundary[m]);
    IntMatrix rhs = mat_mul(ctgt.boundary[m], chain_map[m]);
    if (!(lhs == rhs)) throw ConsistencyError("inclusion is not a chain map");
  }

  ComparisonResult out;
  out.ring = ring;
  for (int m = 0; m <= max_degree; ++m) {
    ComparisonDegree deg;
    deg.source_betti = hsrc.betti[m];
    deg.target_betti = htgt.betti[m];
    deg.source_torsion = hsrc.torsion[m];
    deg.target_torsion = htgt.torsion[m];
    if (ring == Ring::Z) {
      IntMatrix ks = integer_kernel_basis(csrc.boundary[m]);
      IntMatrix kt = integer_kernel_basis(ctgt.boundary[m]);
      auto ys = rat_solve(to_rat(ks), to_rat(csrc.boundary[m + 1]));
      auto yt = rat_solve(to_rat(kt), to_rat(ctgt.boundary[m + 1]));
      if (!ys || !yt) throw ConsistencyError("image does not lie in the kernel");
      IntMatrix ysi = rat_to_int_exact(*ys, "cycle coordinates");
      IntMatrix yti = rat_to_int_exact(*yt, "cycle coordinates");
      auto w = rat_solve(to_rat(kt), rat_mul(to_rat(chain_map[m]), to_rat(ks)));
      if (!w) throw ConsistencyError("mapped cycle is not a target cycle");
      IntMatrix wi = rat_to_int_exact(*w, "induced map");
      deg.matrix = to_rat(wi);
      // invariant factors of both presentations; cross-check against the
      // direct homology computation
      auto invariants = [](int k, const IntMatrix& rel) {
        std::vector<Int> snf = smith_normal_form(rel);
        long long betti = k - static_cast<long long>(snf.size());
        std::vector<Int> tors;
        for (const Int& d : snf)
          if (d > 1) tors.push_back(d);
        return std::make_pair(betti, tors);
      };
      auto [bs, ts] = invariants(ks.cols, ysi);
      auto [bt, tt] = invariants(kt.cols, yti);
      if (bs != deg.source_betti || ts != deg.source_torsion ||
          bt != deg.target_betti || tt != deg.target_torsion)
        throw ConsistencyError("presentation disagrees with homology");
      bool same_type = bs == bt && ts == tt;
      // surjectivity of the induced map: W and the target relations must
      // together hit every presentation generator
      IntMatrix stacked(kt.cols, wi.cols + yti.cols);
      for (int r = 0; r < kt.cols; ++r) {
        for (int c = 0; c < wi.cols; ++c) stacked.at(r, c) = wi.at(r, c);
        for (int c = 0; c < yti.cols; ++c) stacked.at(r, wi.cols + c) = yti.at(r, c);
      }
      std::vector<Int> st = smith_normal_form(stacked);
      bool onto = static_cast<int>(st.size()) == kt.cols;
      for (const Int& d : st)
        if (d != 1) onto = false;
      // a surjection between isomorphic finitely generated abelian groups is
      // an isomorphism
      deg.iso = same_type && onto;
    } else {
      RatMatrix ks = kernel_basis(csrc.boundary[m]);
      RatMatrix kt = kernel_basis(ctgt.boundary[m]);
      RatMatrix img_s = to_rat(csrc.boundary[m + 1]);
      RatMatrix img_t = to_rat(ctgt.boundary[m + 1]);
      // homology bases: kernel columns extending an image basis
      RatMatrix reps_s = quotient_space_reps(img_s, ks);
      RatMatrix reps_t = quotient_space_reps(img_t, kt);
      if (reps_s.cols != deg.source_betti || reps_t.cols != deg.target_betti)
        throw ConsistencyError("homology basis size mismatch");
      // express mapped representatives in target homology coordinates
      RatMatrix mapped = rat_mul(to_rat(chain_map[m]), reps_s);
      RatMatrix induced = quotient_coordinates(img_t, reps_t, mapped);
      deg.matrix = induced;
      deg.iso = deg.source_betti == deg.target_betti &&
                rat_rank(induced) == deg.source_betti;
    }
    out.degrees.push_back(std::move(deg));
  }
  return out;
}

}  // namespace inertia
