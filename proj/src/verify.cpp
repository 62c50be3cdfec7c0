#include "focal/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "focal/sylow.hpp"

namespace focal {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string render_report_line(const VerificationReport& r) {
  std::string out = "statement=" + r.statement + " group=" + r.group_desc;
  if (r.word_text) out += " word=" + *r.word_text;
  if (r.p) out += " p=" + std::to_string(*r.p);
  out += " verdict=";
  out += verdict_name(r.verdict);
  for (const auto& [key, value] : r.numbers)
    out += " " + key + "=" + std::to_string(value);
  if (!r.witnesses.empty()) {
    out += " witnesses=[";
    for (size_t i = 0; i < r.witnesses.size(); ++i) {
      if (i) out += ',';
      out += r.witnesses[i];
    }
    out += ']';
  }
  return out;
}

namespace {

std::vector<std::string> labels_of(const FiniteGroup& G, const ElemSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(G.label(x));
  return out;
}

// The least element where the two sets differ — the canonical witness for a
// failed set equality.
ElemSet symmetric_difference(const ElemSet& a, const ElemSet& b) {
  return set_union(set_difference(a, b), set_difference(b, a));
}

bool is_p_power_order(long order, long p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

// Greedy pass over sorted candidates keeping enlargers, then one
// left-to-right elimination pass; the result is irredundant (every removal
// strictly shrinks the closure) and deterministic.
std::vector<Elem> minimal_generating_subset(const FiniteGroup& G,
                                            const ElemSet& candidates,
                                            const ElemSet& target) {
  std::vector<Elem> kept;
  ElemSet closure = {G.identity()};
  for (Elem x : candidates) {
    if (set_contains(closure, x)) continue;
    kept.push_back(x);
    closure = subgroup_generated(G, ElemSet(kept.begin(), kept.end())).elements();
  }
  if (closure != target)
    throw TheoremViolated("candidate set does not generate the target subgroup");
  for (size_t i = 0; i < kept.size();) {
    std::vector<Elem> trial = kept;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (subgroup_generated(G, ElemSet(trial.begin(), trial.end())).elements() ==
        target)
      kept = std::move(trial);
    else
      ++i;
  }
  return kept;
}

void require_p_elements(const FiniteGroup& G, const ElemSet& X, long p) {
  for (Elem x : X)
    if (!is_p_power_order(G.element_order(x), p))
      throw HypothesisViolated("set contains " + G.label(x) + " of order " +
                               std::to_string(G.element_order(x)) +
                               ", not a power of " + std::to_string(p));
  if (!is_conjugation_closed(G, X))
    throw HypothesisViolated("set is not closed under conjugation");
}

}  // namespace

VerificationReport verify_theorem_a(const FiniteGroup& G, const Word& w, long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const OrderFactorization f = factor_order(G.order(), p);
  const Subgroup P = sylow_subgroup(G, p);
  const Subgroup W = verbal_subgroup(G, w);
  const ElemSet powers = power_value_set(G, w, f.m);
  const ElemSet seed = set_intersection(powers, P.elements());
  const Subgroup generated = subgroup_generated(G, seed);
  const Subgroup direct = intersect(P, W);

  VerificationReport r;
  r.statement = "theorem-a";
  r.group_desc = G.name();
  r.word_text = w.text();
  r.p = p;
  r.verdict = generated.elements() == direct.elements() ? Verdict::holds
                                                        : Verdict::fails;
  r.numbers = {{"|G|", G.order()},
               {"|P|", P.order()},
               {"|wG|", W.order()},
               {"|PcapwG|", direct.order()},
               {"|genSide|", generated.order()},
               {"p^a", f.p_power},
               {"m", f.m}};
  if (r.verdict == Verdict::holds) {
    const std::vector<Elem> gens =
        minimal_generating_subset(G, seed, generated.elements());
    r.witnesses = labels_of(G, ElemSet(gens.begin(), gens.end()));
  } else {
    r.witnesses = labels_of(
        G, {symmetric_difference(generated.elements(), direct.elements())[0]});
  }
  return r;
}

std::vector<Elem> extract_focal_generators(const FiniteGroup& G, const Word& w,
                                           long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const OrderFactorization f = factor_order(G.order(), p);
  const Subgroup P = sylow_subgroup(G, p);
  const Subgroup W = verbal_subgroup(G, w);
  const ElemSet seed =
      set_intersection(power_value_set(G, w, f.m), P.elements());
  const Subgroup generated = subgroup_generated(G, seed);
  if (generated.elements() != intersect(P, W).elements())
    throw TheoremViolated("P cap w(G) is not generated by P cap G_{w^m} on " +
                          G.name() + " with w=" + w.text() +
                          ", p=" + std::to_string(p));
  return minimal_generating_subset(G, seed, generated.elements());
}

VerificationReport check_question1(const FiniteGroup& G, const ElemSet& values,
                                   long p) {
  const Subgroup P = sylow_subgroup(G, p);
  const Subgroup verbal = subgroup_generated(G, values);
  const Subgroup direct = intersect(P, verbal);
  const Subgroup generated =
      subgroup_generated(G, set_intersection(values, P.elements()));

  VerificationReport r;
  r.statement = "question1";
  r.group_desc = G.name();
  r.p = p;
  r.verdict = generated.elements() == direct.elements() ? Verdict::holds
                                                        : Verdict::fails;
  r.numbers = {{"|G|", G.order()},
               {"|P|", P.order()},
               {"|wG|", verbal.order()},
               {"|PcapwG|", direct.order()},
               {"|genSide|", generated.order()},
               {"values", static_cast<long>(values.size())}};
  if (r.verdict == Verdict::fails)
    r.witnesses = labels_of(
        G, {symmetric_difference(generated.elements(), direct.elements())[0]});
  return r;
}

VerificationReport verify_lemma_intersection(const FiniteGroup& G,
                                             const Subgroup& N, const ElemSet& X,
                                             long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (!N.parent().same_group(G)) throw Error("N has a different parent group");
  if (!is_normal(G, N)) throw HypothesisViolated("N is not normal");
  require_p_elements(G, X, p);

  const Subgroup P = sylow_subgroup(G, p);
  const ElemSet XN = product_set(G, X, N.elements());
  const ElemSet PN = product_set(G, P.elements(), N.elements());
  const ElemSet lhs = set_intersection(XN, PN);
  const ElemSet rhs =
      product_set(G, set_intersection(X, P.elements()), N.elements());

  VerificationReport r;
  r.statement = "lemma-intersection";
  r.group_desc = G.name();
  r.p = p;
  r.verdict = lhs == rhs ? Verdict::holds : Verdict::fails;
  r.numbers = {{"|G|", G.order()},
               {"|P|", P.order()},
               {"|N|", N.order()},
               {"Xsize", static_cast<long>(X.size())},
               {"XNcapPN", static_cast<long>(lhs.size())},
               {"XcapP_N", static_cast<long>(rhs.size())}};
  if (r.verdict == Verdict::fails)
    r.witnesses = labels_of(G, {symmetric_difference(lhs, rhs)[0]});
  return r;
}

VerificationReport verify_lemma_lift(const FiniteGroup& G, const Subgroup& N,
                                     const Subgroup& L, const ElemSet& X,
                                     long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (!N.parent().same_group(G) || !L.parent().same_group(G))
    throw Error("subgroup arguments have a different parent group");
  if (!set_subset(N.elements(), L.elements()))
    throw HypothesisViolated("N is not contained in L");
  if (!is_normal(G, N)) throw HypothesisViolated("N is not normal");
  if (!is_normal(G, L)) throw HypothesisViolated("L is not normal");
  require_p_elements(G, X, p);

  const Subgroup P = sylow_subgroup(G, p);

  // Hypothesis in the quotient: P-bar cap L-bar = <P-bar cap X-bar>.
  const QuotientMap Q(G, N);
  const ElemSet barP = Q.image(P.elements());
  const ElemSet barL = Q.image(L.elements());
  const ElemSet barX = Q.image(X);
  const ElemSet bar_direct = set_intersection(barP, barL);
  const ElemSet bar_generated =
      subgroup_generated(Q.target(), set_intersection(barP, barX)).elements();

  VerificationReport r;
  r.statement = "lemma-lift";
  r.group_desc = G.name();
  r.p = p;
  r.numbers = {{"|G|", G.order()},
               {"|P|", P.order()},
               {"|N|", N.order()},
               {"|L|", L.order()},
               {"Xsize", static_cast<long>(X.size())},
               {"barPcapL", static_cast<long>(bar_direct.size())},
               {"barGen", static_cast<long>(bar_generated.size())}};
  if (bar_generated != bar_direct) {
    r.verdict = Verdict::inapplicable;
    return r;
  }

  const Subgroup lhs = intersect(P, L);
  const Subgroup rhs = subgroup_generated(
      G, set_union(set_intersection(P.elements(), X),
                   set_intersection(P.elements(), N.elements())));
  r.verdict =
      lhs.elements() == rhs.elements() ? Verdict::holds : Verdict::fails;
  r.numbers.emplace_back("|PcapL|", lhs.order());
  r.numbers.emplace_back("|genSide|", rhs.order());
  if (r.verdict == Verdict::fails)
    r.witnesses =
        labels_of(G, {symmetric_difference(lhs.elements(), rhs.elements())[0]});
  return r;
}

VerificationReport verify_lemma_min_normal(const FiniteGroup& G, int i) {
  if (i < 1) throw InvalidIndex("derived-word index must be >= 1");
  if (G.order() == 1) throw TrivialGroup("|G| = 1 has no minimal normals");
  const std::vector<Subgroup> mns = minimal_normal_subgroups(G);
  const ElemSet delta_values = value_set(G, delta_word(i)).elements;
  // derived_series is stable once it repeats, so the final emitted term is
  // G^(i-1) even when the series stabilized earlier.
  const Subgroup derived_term = derived_series(G, i - 1).back();

  VerificationReport r;
  r.statement = "lemma-min-normal";
  r.group_desc = G.name();
  r.verdict = Verdict::inapplicable;  // until some N meets the hypothesis
  long checked = 0;
  for (const Subgroup& N : mns) {
    if (set_intersection(N.elements(), delta_values).size() != 1)
      continue;  // N contains a nontrivial delta_i-value
    ++checked;
    const Subgroup C = commutator_subgroup(G, N, derived_term);
    if (!C.is_trivial() && r.verdict != Verdict::fails) {
      r.verdict = Verdict::fails;
      const ElemSet nontrivial =
          set_difference(C.elements(), {G.identity()});
      r.witnesses = labels_of(G, {nontrivial[0]});
    }
  }
  if (checked > 0 && r.verdict == Verdict::inapplicable)
    r.verdict = Verdict::holds;
  r.numbers = {{"|G|", G.order()},
               {"i", i},
               {"minNormal", static_cast<long>(mns.size())},
               {"checked", checked}};
  return r;
}

VerificationReport verify_nilpotent_case(const FiniteGroup& G, const Word& w,
                                         long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const Subgroup W = verbal_subgroup(G, w);

  VerificationReport r;
  r.statement = "nilpotent-case";
  r.group_desc = G.name();
  r.word_text = w.text();
  r.p = p;
  if (!is_nilpotent(W)) {
    r.verdict = Verdict::inapplicable;
    r.numbers = {{"|G|", G.order()}, {"|wG|", W.order()}};
    return r;
  }

  const OrderFactorization f = factor_order(G.order(), p);
  const BezoutPair bz = bezout(f.p_power, f.m);
  const ElemSet u_values = power_value_set(G, w, f.p_power);
  const ElemSet v_values = power_value_set(G, w, f.m);
  const Subgroup U = subgroup_generated(G, u_values);
  const Subgroup V = subgroup_generated(G, v_values);
  const Subgroup P = sylow_subgroup(G, p);
  const ElemSet p_part = set_intersection(P.elements(), W.elements());

  auto fail = [&](Elem witness) {
    r.verdict = Verdict::fails;
    r.witnesses = labels_of(G, {witness});
  };
  r.verdict = Verdict::holds;

  // (i) the two power-value sets together generate w(G)
  const ElemSet joint =
      subgroup_generated(G, set_union(u_values, v_values)).elements();
  if (joint != W.elements())
    fail(symmetric_difference(joint, W.elements())[0]);

  // (ii) <G_u> is a p'-group and <G_v> a p-group
  if (r.verdict == Verdict::holds && U.order() % p == 0) {
    for (Elem x : U.elements())
      if (G.element_order(x) % p == 0) {
        fail(x);
        break;
      }
  }
  if (r.verdict == Verdict::holds && !is_p_power_order(V.order(), p)) {
    for (Elem x : V.elements())
      if (!is_p_power_order(G.element_order(x), p)) {
        fail(x);
        break;
      }
  }

  // (iii) the join is direct: trivial intersection, elementwise commuting,
  // multiplicative orders
  if (r.verdict == Verdict::holds) {
    const Subgroup meet = intersect(U, V);
    if (!meet.is_trivial())
      fail(set_difference(meet.elements(), {G.identity()})[0]);
  }
  if (r.verdict == Verdict::holds) {
    for (Elem a : u_values) {
      for (Elem b : v_values)
        if (G.comm(a, b) != G.identity()) {
          fail(G.comm(a, b));
          break;
        }
      if (r.verdict == Verdict::fails) break;
    }
  }
  if (r.verdict == Verdict::holds &&
      static_cast<long>(U.order()) * V.order() != W.order())
    fail(set_difference(W.elements(), {G.identity()})[0]);

  // (iv) P cap w(G) = <G_v>
  if (r.verdict == Verdict::holds && p_part != V.elements())
    fail(symmetric_difference(p_part, V.elements())[0]);

  r.numbers = {{"|G|", G.order()},
               {"|P|", P.order()},
               {"|wG|", W.order()},
               {"|PcapwG|", static_cast<long>(p_part.size())},
               {"|genSide|", V.order()},
               {"|uGen|", U.order()},
               {"p^a", f.p_power},
               {"m", f.m},
               {"lambda", bz.lambda},
               {"mu", bz.mu}};
  return r;
}

VerificationReport verify_product_extensions(const FiniteGroup& G,
                                             const Word& w) {
  VerificationReport r;
  r.statement = "product-extensions";
  r.group_desc = G.name();
  r.word_text = w.text();
  if (w.defect() == 0) {  // leaf or derived word: no same-height extensions
    r.verdict = Verdict::inapplicable;
    r.numbers = {{"|G|", G.order()}};
    return r;
  }

  const std::vector<Word> phi = proper_extensions_same_height(w);
  const Subgroup N = verbal_product(G, phi);
  const Subgroup WG = verbal_subgroup(G, w);
  const Subgroup UG = verbal_subgroup(G, w.left());
  const Subgroup VG = verbal_subgroup(G, w.right());
  const Subgroup commU = commutator_subgroup(G, WG, UG);
  const Subgroup commV = commutator_subgroup(G, WG, VG);
  const bool u_contained = set_subset(commU.elements(), N.elements());
  const bool v_contained = set_subset(commV.elements(), N.elements());

  r.verdict = u_contained || v_contained ? Verdict::holds : Verdict::fails;
  r.numbers = {{"|G|", G.order()},
               {"|wG|", WG.order()},
               {"|uG|", UG.order()},
               {"|vG|", VG.order()},
               {"|N|", N.order()},
               {"phi", static_cast<long>(phi.size())},
               {"|commU|", commU.order()},
               {"|commV|", commV.order()}};
  if (r.verdict == Verdict::fails) {
    const ElemSet missU = set_difference(commU.elements(), N.elements());
    const ElemSet missV = set_difference(commV.elements(), N.elements());
    r.witnesses = labels_of(G, {std::min(missU[0], missV[0])});
  }
  return r;
}

VerificationReport verify_ore(const FiniteGroup& G) {
  if (G.order() == 1) throw HypothesisViolated("the trivial group is abelian");
  if (is_abelian(full_subgroup(G))) throw HypothesisViolated(G.name() + " is abelian");
  const std::vector<Subgroup> mns = minimal_normal_subgroups(G);
  if (mns.size() != 1 || mns[0].order() != G.order())
    throw HypothesisViolated(G.name() + " is not simple");

  const ElemSet commutators = value_set(G, delta_word(1)).elements;
  VerificationReport r;
  r.statement = "ore";
  r.group_desc = G.name();
  r.verdict = static_cast<int>(commutators.size()) == G.order()
                  ? Verdict::holds
                  : Verdict::fails;
  r.numbers = {{"|G|", G.order()},
               {"values", static_cast<long>(commutators.size())}};
  if (r.verdict == Verdict::fails)
    r.witnesses =
        labels_of(G, {set_difference(G.all_elements(), commutators)[0]});
  return r;
}

VerificationReport verify_remark_power(const FiniteGroup& G, const Word& w,
                                       long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const OrderFactorization f = factor_order(G.order(), p);
  const Subgroup P = sylow_subgroup(G, p);
  const ElemSet m_side =
      subgroup_generated(
          G, set_intersection(power_value_set(G, w, f.m), P.elements()))
          .elements();

  VerificationReport r;
  r.statement = "remark-power";
  r.group_desc = G.name();
  r.word_text = w.text();
  r.p = p;
  r.verdict = Verdict::holds;
  long divisors = 0;
  for (long d = 1; d <= f.m && r.verdict == Verdict::holds; ++d) {
    if (f.m % d != 0) continue;
    ++divisors;
    const ElemSet in_p = set_intersection(power_value_set(G, w, d), P.elements());
    const ElemSet star_side = subgroup_generated(G, in_p).elements();
    if (!set_subset(m_side, star_side)) {
      r.verdict = Verdict::fails;
      r.numbers.emplace_back("mStar", d);
      r.witnesses = labels_of(G, {set_difference(m_side, star_side)[0]});
      break;
    }
    const ElemSet raised =
        subgroup_generated(G, power_set(G, in_p, f.m / d)).elements();
    if (raised != m_side) {
      r.verdict = Verdict::fails;
      r.numbers.emplace_back("mStar", d);
      r.witnesses = labels_of(G, {symmetric_difference(raised, m_side)[0]});
      break;
    }
  }
  r.numbers.insert(r.numbers.begin(),
                   {{"|G|", G.order()},
                    {"|P|", P.order()},
                    {"p^a", f.p_power},
                    {"m", f.m},
                    {"divisors", divisors}});
  return r;
}

std::vector<Word> default_suite_words() {
  return {gamma_word(2),  gamma_word(3), gamma_word(4), delta_word(1),
          delta_word(2),  delta_word(3),
          parse_word("[[x1,x2],[[x3,x4],x5]]")};
}

namespace {

struct SuiteItem {
  std::string context;
  std::function<VerificationReport()> run;
};

// The canonical suite order, group-major:
//   per group: lemma-min-normal i=1..3; ore (simple nonabelian groups);
//     per prime: lemma-intersection over (minimal normal N, class X of
//       p-elements), N then X ascending;
//   per word: product-extensions;
//     per prime: theorem-a, question1, lemma-lift (one per minimal normal
//       N; the instantiation L = w(G), X = G_{w^m} follows the way the
//       lemma is used, and N not inside L reports inapplicable),
//       nilpotent-case, remark-power.
std::vector<SuiteItem> build_suite_items(const std::vector<FiniteGroup>& groups,
                                         const std::vector<Word>& words) {
  std::vector<SuiteItem> items;
  for (const FiniteGroup& G : groups) {
    const std::vector<long> primes = primes_dividing(G.order());
    std::vector<Subgroup> mns;
    if (G.order() > 1) mns = minimal_normal_subgroups(G);

    if (G.order() > 1) {
      for (int i = 1; i <= 3; ++i) {
        items.push_back({"lemma-min-normal group=" + G.name() +
                             " i=" + std::to_string(i),
                         [G, i] { return verify_lemma_min_normal(G, i); }});
      }
      const bool simple_nonabelian = mns.size() == 1 &&
                                     mns[0].order() == G.order() &&
                                     !is_abelian(full_subgroup(G));
      if (simple_nonabelian)
        items.push_back(
            {"ore group=" + G.name(), [G] { return verify_ore(G); }});
    }

    const std::vector<ElemSet> classes = conjugacy_classes(G);
    for (long p : primes) {
      for (const Subgroup& N : mns) {
        for (const ElemSet& cls : classes) {
          // A class has one element order; p-element classes only.
          long order = G.element_order(cls[0]);
          while (order % p == 0) order /= p;
          if (order != 1) continue;
          items.push_back(
              {"lemma-intersection group=" + G.name() + " p=" +
                   std::to_string(p) + " N.order=" + std::to_string(N.order()) +
                   " class=" + G.label(cls[0]),
               [G, N, cls, p] { return verify_lemma_intersection(G, N, cls, p); }});
        }
      }
    }

    for (const Word& w : words) {
      const std::string wtext = w.text();
      items.push_back({"product-extensions group=" + G.name() + " word=" + wtext,
                       [G, w] { return verify_product_extensions(G, w); }});
      for (long p : primes) {
        const std::string tail =
            " group=" + G.name() + " word=" + wtext + " p=" + std::to_string(p);
        items.push_back(
            {"theorem-a" + tail, [G, w, p] { return verify_theorem_a(G, w, p); }});
        items.push_back({"question1" + tail, [G, w, p, wtext] {
                           VerificationReport r = check_question1(
                               G, value_set(G, w).elements, p);
                           r.word_text = wtext;
                           return r;
                         }});
        for (const Subgroup& N : mns) {
          items.push_back(
              {"lemma-lift" + tail + " N.order=" + std::to_string(N.order()),
               [G, w, p, N, wtext] {
                 const Subgroup L = verbal_subgroup(G, w);
                 if (!set_subset(N.elements(), L.elements())) {
                   // Not an instance of the lemma for this word: w(G) does
                   // not contain N.
                   VerificationReport r;
                   r.statement = "lemma-lift";
                   r.group_desc = G.name();
                   r.word_text = wtext;
                   r.p = p;
                   r.verdict = Verdict::inapplicable;
                   r.numbers = {{"|G|", G.order()},
                                {"|N|", N.order()},
                                {"|L|", L.order()}};
                   return r;
                 }
                 const long m = factor_order(G.order(), p).m;
                 VerificationReport r = verify_lemma_lift(
                     G, N, L, power_value_set(G, w, m), p);
                 r.word_text = wtext;
                 return r;
               }});
        }
        items.push_back({"nilpotent-case" + tail,
                         [G, w, p] { return verify_nilpotent_case(G, w, p); }});
        items.push_back({"remark-power" + tail,
                         [G, w, p] { return verify_remark_power(G, w, p); }});
      }
    }
  }
  return items;
}

}  // namespace

SuiteResult run_suite(const std::vector<FiniteGroup>& groups,
                      const std::vector<Word>& words, int threads) {
  const std::vector<SuiteItem> items = build_suite_items(groups, words);
  std::vector<std::optional<VerificationReport>> slots(items.size());
  std::vector<std::optional<SuiteError>> errors(items.size());

  auto run_one = [&](size_t i) {
    try {
      slots[i] = items[i].run();
    } catch (const std::exception& e) {
      errors[i] = SuiteError{items[i].context, e.what()};
    }
  };

  if (threads <= 1) {
    for (size_t i = 0; i < items.size(); ++i) run_one(i);
  } else {
    // Workers pull item indices and write into their own slots; the merged
    // order below is the item order, independent of scheduling.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < items.size();
             i = next.fetch_add(1))
          run_one(i);
      });
    for (std::thread& t : pool) t.join();
  }

  SuiteResult result;
  for (size_t i = 0; i < items.size(); ++i) {
    if (slots[i]) result.reports.push_back(std::move(*slots[i]));
    if (errors[i]) result.errors.push_back(std::move(*errors[i]));
  }
  return result;
}

}  // namespace focal
