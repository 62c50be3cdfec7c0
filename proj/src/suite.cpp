#include "focal/suite.hpp"

namespace focal {

std::vector<FiniteGroup> corpus_groups(int max_order) {
  std::vector<FiniteGroup> groups;
  for (const GroupDescriptor& d : default_corpus()) {
    FiniteGroup G = d.build();
    if (d.expected_order && G.order() != *d.expected_order)
      throw Error("corpus group " + d.name + " has order " +
                  std::to_string(G.order()) + ", expected " +
                  std::to_string(*d.expected_order));
    if (G.order() <= max_order) groups.push_back(std::move(G));
  }
  return groups;
}

std::string summary_line(const std::vector<VerificationReport>& reports) {
  int holds = 0, fails = 0, inapplicable = 0;
  for (const VerificationReport& r : reports) {
    switch (r.verdict) {
      case Verdict::holds: ++holds; break;
      case Verdict::fails: ++fails; break;
      case Verdict::inapplicable: ++inapplicable; break;
    }
  }
  return "total=" + std::to_string(reports.size()) +
         " holds=" + std::to_string(holds) + " fails=" + std::to_string(fails) +
         " inapplicable=" + std::to_string(inapplicable);
}

SuiteOutput corpus_run_output(int max_order, const std::vector<Word>& words,
                              int threads) {
  const SuiteResult result = run_suite(corpus_groups(max_order), words, threads);
  SuiteOutput out;
  for (const VerificationReport& r : result.reports) {
    out.text += render_report_line(r);
    out.text += '\n';
    if (r.verdict == Verdict::fails) ++out.fails;
  }
  out.text += summary_line(result.reports);
  out.text += '\n';
  out.errors = result.errors;
  return out;
}

}  // namespace focal
