#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "focal/errors.hpp"
#include "focal/perm.hpp"

namespace focal {

// An element handle: the index of the element in its group's canonically
// sorted element list.  Only meaningful together with that group.
using Elem = int;

// A sorted, duplicate-free list of element indices.  All subset-valued
// operations in the library produce and consume this shape.
using ElemSet = std::vector<Elem>;

bool set_contains(const ElemSet& s, Elem x);
ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
ElemSet set_difference(const ElemSet& a, const ElemSet& b);
bool set_subset(const ElemSet& a, const ElemSet& b);  // a subset of b?

inline constexpr int kDefaultOrderCap = 20000;

// A finite group, fully enumerated at construction.  Instances are cheap
// immutable handles onto a shared representation and can be copied freely.
//
// Two backings exist: permutation groups (elements carry a Permutation and
// are sorted lexicographically by image array) and multiplication tables
// (used for quotients).  Element arithmetic is uniform across both.
class FiniteGroup {
 public:
  // Closes `gens` under composition (breadth-first), aborting with
  // OrderCapExceeded once more than `cap` elements appear.
  static FiniteGroup from_generators(std::vector<Permutation> gens, int degree,
                                     int cap = kDefaultOrderCap,
                                     std::string name = "");

  // Builds from an n*n multiplication table (table[a*n + b] = a*b).
  // Validates associativity-free group axioms: a unique two-sided identity
  // and an inverse for every element.
  static FiniteGroup from_table(std::vector<Elem> table,
                                std::vector<std::string> labels,
                                std::vector<Elem> generators,
                                std::string name = "");

  int order() const;
  const std::string& name() const;
  Elem identity() const;
  const std::vector<Elem>& generators() const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem conj(Elem x, Elem g) const;  // g^-1 * x * g
  Elem comm(Elem x, Elem y) const;  // x^-1 * y^-1 * x * y
  Elem power(Elem a, long e) const;
  int element_order(Elem a) const;

  bool is_perm_backed() const;
  const Permutation& perm(Elem a) const;  // permutation backing only
  std::optional<Elem> index_of(const Permutation& p) const;
  std::string label(Elem a) const;

  ElemSet all_elements() const;  // {0, ..., order()-1}

  // True when both handles share one underlying representation.  Element
  // indices are only exchangeable between groups related this way.
  bool same_group(const FiniteGroup& other) const;

  void check_element(Elem a) const;  // throws ElementNotInGroup

 private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

FiniteGroup generate_group(std::vector<Permutation> gens, int degree,
                           int cap = kDefaultOrderCap, std::string name = "");

// A subgroup is its parent plus a sorted element subset plus a generating
// list.  Cheap to copy.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, ElemSet elements, std::vector<Elem> generators);

  const FiniteGroup& parent() const { return parent_; }
  const ElemSet& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(Elem x) const { return set_contains(elements_, x); }
  bool is_trivial() const { return order() == 1; }

  // Same parent representation and same element set.
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_group(b.parent_) && a.elements_ == b.elements_;
  }

 private:
  FiniteGroup parent_;
  ElemSet elements_;
  std::vector<Elem> generators_;
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);

// Closure of `seed` inside G.
Subgroup subgroup_generated(const FiniteGroup& G, const ElemSet& seed);

// Least normal subgroup containing `seed`.
Subgroup normal_closure(const FiniteGroup& G, const ElemSet& seed);

bool is_normal(const FiniteGroup& G, const Subgroup& H);

// [A,B] = subgroup generated by all commutators [a,b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A,
                             const Subgroup& B);

// [G, G^(0), G^(1), ...]: each term the commutator subgroup of the previous
// with itself.  Emits at most k+1 terms and stops once a term repeats (the
// repeated term is emitted, so a stable tail is visible).
std::vector<Subgroup> derived_series(const FiniteGroup& G, int k);

// [gamma_1, gamma_2, ...] with gamma_1 = G, gamma_{i+1} = [gamma_i, G];
// truncation rule as for derived_series.
std::vector<Subgroup> lower_central_series(const FiniteGroup& G, int k);

// All minimal nontrivial normal subgroups, sorted by (order, elements).
// Throws TrivialGroup when |G| = 1.
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G);

Subgroup intersect(const Subgroup& A, const Subgroup& B);
Subgroup conjugate_subgroup(const Subgroup& H, Elem g);

// {a*b : a in A, b in B} as a set.
ElemSet product_set(const FiniteGroup& G, const ElemSet& A, const ElemSet& B);

// {s^m : s in S} as a set.
ElemSet power_set(const FiniteGroup& G, const ElemSet& S, long m);

bool is_abelian(const Subgroup& H);
bool is_nilpotent(const Subgroup& H);  // via the lower central series of H

inline bool is_abelian(const FiniteGroup& G) {
  return is_abelian(full_subgroup(G));
}
inline bool is_nilpotent(const FiniteGroup& G) {
  return is_nilpotent(full_subgroup(G));
}

ElemSet conjugacy_class(const FiniteGroup& G, Elem g);
std::vector<ElemSet> conjugacy_classes(const FiniteGroup& G);
bool is_conjugation_closed(const FiniteGroup& G, const ElemSet& S);

// A surjective homomorphism G -> G/N with canonical (least-representative)
// cosets; the target is a table-backed FiniteGroup.
class QuotientMap {
 public:
  QuotientMap(FiniteGroup source, Subgroup kernel);  // throws NotNormal

  const FiniteGroup& source() const { return source_; }
  const Subgroup& kernel() const { return kernel_; }
  const FiniteGroup& target() const { return *target_; }

  Elem map(Elem g) const;  // image of g in the target
  Elem rep(Elem g) const;  // least source element of the coset g*kernel
  ElemSet image(const ElemSet& s) const;

 private:
  FiniteGroup source_;
  Subgroup kernel_;
  std::vector<Elem> coset_rep_;  // per source element: least of its coset
  std::vector<Elem> to_target_;  // per source element: target index
  std::optional<FiniteGroup> target_;
};

inline QuotientMap quotient(const FiniteGroup& G, const Subgroup& N) {
  return QuotientMap(G, N);
}

}  // namespace focal
