#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "focal/group.hpp"
#include "focal/values.hpp"
#include "focal/word.hpp"

namespace focal {

enum class Verdict { holds, fails, inapplicable };

std::string_view verdict_name(Verdict v);

// Structured outcome of one statement check.  `numbers` preserves insertion
// order; keys wrapped in |...| are subgroup orders (they divide |G|), bare
// keys are set sizes or parameters.  A fails verdict always carries at least
// one witness element label.
struct VerificationReport {
  std::string statement;
  std::string group_desc;
  std::optional<std::string> word_text;
  std::optional<long> p;
  Verdict verdict = Verdict::holds;
  std::vector<std::pair<std::string, long>> numbers;
  std::vector<std::string> witnesses;
};

// One line, fixed field order: statement, group, word, p, verdict, numbers,
// witnesses; absent fields are omitted.
std::string render_report_line(const VerificationReport& r);

// P cap w(G) = <P cap G_{w^m}> with |G| = p^a * m: computes both sides
// directly and compares.  On holds the witnesses are an irredundant
// generating list drawn from P cap G_{w^m}.
VerificationReport verify_theorem_a(const FiniteGroup& G, const Word& w, long p);

// The generating list alone; throws TheoremViolated if the two sides differ
// (an implementation bug, never a mathematical event for these words).
std::vector<Elem> extract_focal_generators(const FiniteGroup& G, const Word& w,
                                           long p);

// Compares <P cap S> with P cap <S> for an arbitrary value set S — the
// question the power-word counterexample answers negatively.
VerificationReport check_question1(const FiniteGroup& G, const ElemSet& values,
                                   long p);

// XN cap PN = (X cap P)N for a normal subgroup N and a conjugation-closed
// set X of p-elements.
VerificationReport verify_lemma_intersection(const FiniteGroup& G,
                                             const Subgroup& N, const ElemSet& X,
                                             long p);

// From P-bar cap L-bar = <P-bar cap X-bar> in G/N (hypothesis; when it does
// not hold the verdict is inapplicable) conclude P cap L = <P cap X, P cap N>.
VerificationReport verify_lemma_lift(const FiniteGroup& G, const Subgroup& N,
                                     const Subgroup& L, const ElemSet& X,
                                     long p);

// Every minimal normal subgroup N meeting the delta_i value set trivially
// must centralize the (i-1)-th derived subgroup.
VerificationReport verify_lemma_min_normal(const FiniteGroup& G, int i);

// When w(G) is nilpotent, w(G) splits as <G_u> x <G_v> for u = w^(p^a),
// v = w^m, and P cap w(G) = <G_v>; records the Bezout pair behind the split.
VerificationReport verify_nilpotent_case(const FiniteGroup& G, const Word& w,
                                         long p);

// For w = [u,v] of positive defect, with Phi the same-height proper
// extensions of w: [w(G),u(G)] or [w(G),v(G)] lies in the product of the
// phi(G).
VerificationReport verify_product_extensions(const FiniteGroup& G, const Word& w);

// Every element of a nonabelian simple group is a commutator.
VerificationReport verify_ore(const FiniteGroup& G);

// For every divisor m* of m: <P cap G_{w^m*}> contains <P cap G_{w^m}> and
// its (m/m*)-th powers generate exactly <P cap G_{w^m}>.
VerificationReport verify_remark_power(const FiniteGroup& G, const Word& w,
                                       long p);

struct SuiteError {
  std::string context;
  std::string message;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<SuiteError> errors;
};

// Runs every applicable verifier over groups x words x primes dividing each
// order.  Report order is canonical (group-major, then word, then prime, then
// statement) and independent of thread count; per-item errors are collected,
// never fatal.
SuiteResult run_suite(const std::vector<FiniteGroup>& groups,
                      const std::vector<Word>& words, int threads = 1);

// gamma_2..gamma_4, delta_1..delta_3, and one mixed-shape word.
std::vector<Word> default_suite_words();

}  // namespace focal
