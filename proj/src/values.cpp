#include "focal/values.hpp"

#include <algorithm>
#include <map>

namespace focal {

namespace {

const ElemSet& value_set_rec(const FiniteGroup& G, const Word& w,
                             std::map<Word, ElemSet>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  ElemSet result;
  if (w.is_leaf()) {
    result = G.all_elements();
  } else {
    const ElemSet& left = value_set_rec(G, w.left(), memo);
    const ElemSet& right = value_set_rec(G, w.right(), memo);
    std::vector<char> mark(G.order(), 0);
    for (Elem a : left)
      for (Elem b : right) mark[G.comm(a, b)] = 1;
    for (Elem x = 0; x < G.order(); ++x)
      if (mark[x]) result.push_back(x);
  }
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

ValueSet value_set(const FiniteGroup& G, const Word& w) {
  std::map<Word, ElemSet> memo;
  ElemSet elements = value_set_rec(G, w, memo);
  return ValueSet{G, w, std::move(elements)};
}

ElemSet power_value_set(const FiniteGroup& G, const Word& w, long m) {
  if (m < 1) throw Error("power exponent must be >= 1");
  return power_set(G, value_set(G, w).elements, m);
}

Subgroup verbal_subgroup(const FiniteGroup& G, const Word& w) {
  return subgroup_generated(G, value_set(G, w).elements);
}

Subgroup verbal_product(const FiniteGroup& G, const std::vector<Word>& ws) {
  ElemSet seed;
  for (const Word& w : ws) seed = set_union(seed, value_set(G, w).elements);
  if (seed.empty()) return trivial_subgroup(G);
  return subgroup_generated(G, seed);
}

}  // namespace focal
