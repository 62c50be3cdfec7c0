#pragma once

#include <vector>

#include "focal/group.hpp"
#include "focal/word.hpp"

namespace focal {

// The set G_w of values a word takes in a group.  Always contains the
// identity (all-identity arguments) and is closed under conjugation.
struct ValueSet {
  FiniteGroup group;
  Word word;
  ElemSet elements;
};

// Computed bottom-up: a leaf takes every group element, a commutator node
// takes {[a,b] : a from the left set, b from the right set}.  Because the
// indeterminates of an outer commutator word are pairwise distinct, this
// equals brute-force enumeration over all argument tuples.  Subword results
// are memoized per call.
ValueSet value_set(const FiniteGroup& G, const Word& w);

// {g^m : g in G_w} — the value set of the power word w^m.
ElemSet power_value_set(const FiniteGroup& G, const Word& w, long m);

// w(G) = subgroup generated by all w-values.
Subgroup verbal_subgroup(const FiniteGroup& G, const Word& w);

// Subgroup generated by the union of the words' value sets; since verbal
// subgroups are normal this is their product.  Empty list gives the trivial
// subgroup.
Subgroup verbal_product(const FiniteGroup& G, const std::vector<Word>& ws);

}  // namespace focal
