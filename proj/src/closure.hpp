#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "inertia/limits.hpp"

namespace inertia::detail {

template <class Elt>
struct ClosureResult {
  std::vector<Elt> elements;     // identity first, then BFS layers sorted
  std::vector<int> parent, via;  // first discovery: elt = parent * gens[via]
  std::vector<int> gen_index;    // element index of each input generator
};

// Breadth-first closure under right multiplication by the generators, layer
// by layer; within a layer, elements are indexed in their natural order, so
// the numbering is independent of discovery order.
template <class Elt, class MulFn>
ClosureResult<Elt> bfs_closure(const Elt& identity, const std::vector<Elt>& gens,
                               MulFn mul, std::uint64_t cap,
                               const char* what) {
  ClosureResult<Elt> out;
  std::map<Elt, int> index;
  out.elements.push_back(identity);
  out.parent.push_back(-1);
  out.via.push_back(-1);
  index.emplace(identity, 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::map<Elt, std::pair<int, int>> fresh;
    for (int idx : frontier) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Elt p = mul(out.elements[idx], gens[gi]);
        if (index.count(p) || fresh.count(p)) continue;
        fresh.emplace(std::move(p), std::make_pair(idx, static_cast<int>(gi)));
      }
    }
    frontier.clear();
    for (auto& [elt, src] : fresh) {
      if (out.elements.size() + 1 > cap)
        throw CapExceeded(std::string(what) + ": closure exceeds cap " +
                          std::to_string(cap));
      int id = static_cast<int>(out.elements.size());
      index.emplace(elt, id);
      out.elements.push_back(elt);
      out.parent.push_back(src.first);
      out.via.push_back(src.second);
      frontier.push_back(id);
    }
  }
  for (const Elt& g : gens) out.gen_index.push_back(index.at(g));
  return out;
}

}  // namespace inertia::detail
