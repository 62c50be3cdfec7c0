#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "focal/corpus.hpp"
#include "focal/errors.hpp"
#include "focal/group.hpp"
#include "focal/perm.hpp"

using namespace focal;

namespace {

FiniteGroup sym(int n) { return symmetric_group(n); }

// Element index of a cycle expression, at the group's natural degree.
Elem idx(const FiniteGroup& g, const std::string& cycles) {
  const int degree = g.perm(g.identity()).degree();
  return g.index_of(parse_cycle_notation(cycles, degree)).value();
}

std::vector<long> orders_of(const std::vector<Subgroup>& subs) {
  std::vector<long> out;
  for (const Subgroup& h : subs) out.push_back(h.order());
  return out;
}

std::vector<long> series_orders(const std::vector<Subgroup>& series) {
  return orders_of(series);
}

}  // namespace

TEST_CASE("generation by closure") {
  const FiniteGroup s3 = generate_group(
      {parse_cycle_notation("(1 2)", 3), parse_cycle_notation("(1 2 3)", 3)},
      3);
  CHECK(s3.order() == 6);
  CHECK(s3.is_perm_backed());
  CHECK(s3.perm(s3.identity()).is_identity());

  // One generator of full support gives the cyclic group.
  const FiniteGroup c5 =
      generate_group({parse_cycle_notation("(1 2 3 4 5)", 5)}, 5);
  CHECK(c5.order() == 5);

  CHECK(generate_group({}, 4).order() == 1);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(FiniteGroup::from_generators(
                      {parse_cycle_notation("(1 2)", 6),
                       parse_cycle_notation("(1 2 3 4 5 6)", 6)},
                      6, 100),
                  OrderCapExceeded);
}

TEST_CASE("element arithmetic agrees with permutations") {
  const FiniteGroup g = sym(4);
  for (Elem a = 0; a < 24; a += 5)
    for (Elem b = 0; b < 24; b += 7) {
      CHECK(g.perm(g.mul(a, b)) == compose(g.perm(a), g.perm(b)));
      CHECK(g.perm(g.inv(a)) == g.perm(a).inverse());
      CHECK(g.conj(a, b) == g.mul(g.mul(g.inv(b), a), b));
      CHECK(g.comm(a, b) ==
            g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  CHECK(g.power(idx(g, "(1 2 3 4)"), 4) == g.identity());
  CHECK(g.element_order(idx(g, "(1 2 3)")) == 3);
}

TEST_CASE("table-backed groups check axioms") {
  // C3 as a flat multiplication table.
  const FiniteGroup g = FiniteGroup::from_table({0, 1, 2, 1, 2, 0, 2, 0, 1},
                                                {"e", "a", "b"}, {1});
  CHECK(g.order() == 3);
  CHECK_FALSE(g.is_perm_backed());
  CHECK(g.label(1) == "a");
  CHECK(g.element_order(1) == 3);
  CHECK(g.mul(1, 2) == 0);
  CHECK(g.inv(1) == 2);

  // The identity may sit anywhere in the table.
  CHECK(FiniteGroup::from_table({1, 0, 0, 1}, {"a", "e"}, {0}).identity() ==
        1);
  // Broken inverse row.
  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 1, 1}, {"e", "a"}, {1}),
                  Error);
  // No identity at all.
  CHECK_THROWS_AS(FiniteGroup::from_table({1, 0, 1, 0}, {"e", "a"}, {1}),
                  Error);
  // Non-associative magma with identity and inverses: the smallest one needs
  // five elements.
  CHECK_THROWS_AS(
      FiniteGroup::from_table(
          {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1,
           4, 3, 1, 2, 0},
          {"e", "a", "b", "c", "d"}, {1}),
      Error);
}

TEST_CASE("subgroup construction and membership") {
  const FiniteGroup g = sym(3);
  const Subgroup whole = full_subgroup(g);
  CHECK(whole.order() == 6);
  CHECK(trivial_subgroup(g).order() == 1);

  const Elem rot = idx(g, "(1 2 3)");
  const Subgroup a3 = subgroup_generated(g, {rot});
  CHECK(a3.order() == 3);
  CHECK(a3.contains(g.identity()));
  CHECK_FALSE(a3.contains(idx(g, "(1 2)")));
  CHECK(a3 == subgroup_generated(g, {g.inv(rot)}));
}

TEST_CASE("normality and normal closure") {
  const FiniteGroup g = sym(4);
  const Elem t = idx(g, "(1 2)");
  const Elem dbl = idx(g, "(1 2)(3 4)");

  CHECK_FALSE(is_normal(g, subgroup_generated(g, {t})));
  const Subgroup v4 = normal_closure(g, {dbl});
  CHECK(v4.order() == 4);
  CHECK(is_normal(g, v4));
  CHECK(normal_closure(g, {t}).order() == 24);
}

TEST_CASE("commutator subgroups and derived series") {
  const FiniteGroup s4 = sym(4);
  const Subgroup whole = full_subgroup(s4);
  CHECK(commutator_subgroup(s4, whole, whole).order() == 12);

  CHECK(series_orders(derived_series(s4, 3)) ==
        std::vector<long>{24, 12, 4, 1});
  // Stops one term after the first repeat.
  CHECK(series_orders(derived_series(s4, 10)) ==
        std::vector<long>{24, 12, 4, 1, 1});
  CHECK(series_orders(derived_series(cyclic_group(6), 2)) ==
        std::vector<long>{6, 1, 1});
  CHECK(series_orders(derived_series(s4, 0)) == std::vector<long>{24});
}

TEST_CASE("lower central series") {
  CHECK(series_orders(lower_central_series(sym(3), 3)) ==
        std::vector<long>{6, 3, 3});
  CHECK(series_orders(lower_central_series(sym(3), 10)) ==
        std::vector<long>{6, 3, 3});
  CHECK(lower_central_series(sym(3), 0).empty());

  // D4 is nilpotent of class 2: the series reaches 1.
  CHECK(series_orders(lower_central_series(dihedral_group(4), 4)) ==
        std::vector<long>{8, 2, 1, 1});
}

TEST_CASE("minimal normal subgroups") {
  CHECK(orders_of(minimal_normal_subgroups(sym(4))) ==
        std::vector<long>{4});
  CHECK(orders_of(minimal_normal_subgroups(sym(3))) ==
        std::vector<long>{3});
  CHECK(orders_of(minimal_normal_subgroups(cyclic_group(6))) ==
        std::vector<long>{2, 3});
  CHECK(orders_of(minimal_normal_subgroups(alternating_group(5))) ==
        std::vector<long>{60});
  CHECK(orders_of(minimal_normal_subgroups(quaternion_group8())) ==
        std::vector<long>{2});
  // S3 x S3 has exactly the two rotation factors.
  const FiniteGroup s3s3 = direct_product(sym(3), sym(3));
  CHECK(orders_of(minimal_normal_subgroups(s3s3)) ==
        std::vector<long>{3, 3});
  CHECK_THROWS_AS(minimal_normal_subgroups(cyclic_group(1)), TrivialGroup);

  const FiniteGroup s4 = sym(4);
  for (const Subgroup& n : minimal_normal_subgroups(s4))
    CHECK(is_normal(s4, n));
}

TEST_CASE("set operations on subgroups") {
  const FiniteGroup g = sym(4);
  const Subgroup v4 = normal_closure(g, {idx(g, "(1 2)(3 4)")});
  const Subgroup p =
      subgroup_generated(g, {idx(g, "(1 2 3 4)"), idx(g, "(1 3)")});
  CHECK(p.order() == 8);
  CHECK(intersect(p, v4).order() == 4);

  const Elem t = idx(g, "(1 2)");
  const Subgroup moved = conjugate_subgroup(p, t);
  CHECK(moved.order() == 8);
  CHECK(intersect(p, moved).order() == 4);

  // |HK| = |H||K| / |H cap K| as plain sets.
  CHECK(product_set(g, p.elements(), v4.elements()).size() == 8);
  CHECK(power_set(g, v4.elements(), 2).size() == 1);
}

TEST_CASE("abelian and nilpotent predicates") {
  CHECK(is_abelian(cyclic_group(6)));
  CHECK_FALSE(is_abelian(sym(3)));
  CHECK(is_nilpotent(quaternion_group8()));
  CHECK(is_nilpotent(dihedral_group(4)));
  CHECK(is_nilpotent(cyclic_group(12)));
  CHECK_FALSE(is_nilpotent(sym(3)));
  CHECK_FALSE(is_nilpotent(alternating_group(4)));
}

TEST_CASE("conjugacy classes") {
  const FiniteGroup g = sym(4);
  const std::vector<ElemSet> classes = conjugacy_classes(g);
  std::vector<size_t> sizes;
  for (const ElemSet& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 3, 6, 6, 8});

  size_t total = 0;
  for (const ElemSet& c : classes) {
    total += c.size();
    CHECK(is_conjugation_closed(g, c));
    // All members share an order.
    for (Elem x : c) CHECK(g.element_order(x) == g.element_order(c[0]));
  }
  CHECK(total == 24u);

  const Elem t = idx(g, "(1 2)");
  CHECK(conjugacy_class(g, t).size() == 6);
  CHECK_FALSE(is_conjugation_closed(g, ElemSet{t}));
}

TEST_CASE("quotient maps are homomorphisms") {
  const FiniteGroup g = sym(4);
  const Subgroup v4 = minimal_normal_subgroups(g)[0];
  const QuotientMap q(g, v4);
  const FiniteGroup& t = q.target();
  CHECK(t.order() == 6);
  CHECK_FALSE(is_abelian(t));

  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); b += 3)
      CHECK(q.map(g.mul(a, b)) == t.mul(q.map(a), q.map(b)));
  for (Elem x : v4.elements()) CHECK(q.map(x) == t.identity());
  // rep picks the least element of the coset, stable under iteration.
  for (Elem x = 0; x < g.order(); ++x) {
    CHECK(q.map(q.rep(x)) == q.map(x));
    CHECK(q.rep(q.rep(x)) == q.rep(x));
    CHECK(q.rep(x) <= x);
  }

  const ElemSet whole = full_subgroup(g).elements();
  CHECK(q.image(whole).size() == 6u);

  CHECK_THROWS_AS(QuotientMap(g, subgroup_generated(g, {idx(g, "(1 2)")})),
                  NotNormal);
}

TEST_CASE("quotients of quotients still work") {
  // S4 / V4 has derived series 6, 3, 1.
  const FiniteGroup g = sym(4);
  const FiniteGroup q = quotient(g, minimal_normal_subgroups(g)[0]).target();
  CHECK(series_orders(derived_series(q, 2)) == std::vector<long>{6, 3, 1});
  const FiniteGroup q2 = quotient(q, derived_series(q, 1)[1]).target();
  CHECK(q2.order() == 2);
  CHECK(is_abelian(q2));
}

TEST_CASE("lagrange holds for every constructed subgroup") {
  for (const FiniteGroup& g :
       {sym(4), alternating_group(5), quaternion_group8()}) {
    for (const Subgroup& n : minimal_normal_subgroups(g))
      CHECK(g.order() % n.order() == 0);
    for (Elem x = 0; x < g.order(); ++x)
      CHECK(g.order() % g.element_order(x) == 0);
  }
}

TEST_CASE("same_group identity") {
  const FiniteGroup a = sym(3);
  const FiniteGroup b = a;  // shared implementation
  CHECK(a.same_group(b));
  CHECK_FALSE(a.same_group(sym(3)));  // rebuilt from scratch
}

TEST_CASE("element lookup") {
  const FiniteGroup g = sym(3);
  CHECK(g.index_of(parse_cycle_notation("(1 2)", 3)).has_value());
  // Wrong degree or absent permutation: no index.
  CHECK_FALSE(g.index_of(parse_cycle_notation("(1 2)", 4)).has_value());
  const FiniteGroup c2 = generate_group({parse_cycle_notation("(1 2)", 4)}, 4);
  CHECK_FALSE(c2.index_of(parse_cycle_notation("(1 3)", 4)).has_value());
  CHECK_THROWS_AS(g.check_element(-1), ElementNotInGroup);
  CHECK_THROWS_AS(g.check_element(6), ElementNotInGroup);
}
