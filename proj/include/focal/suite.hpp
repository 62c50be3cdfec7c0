#pragma once

#include <string>
#include <vector>

#include "focal/corpus.hpp"
#include "focal/verify.hpp"

namespace focal {

// Builds every default-corpus group of order <= max_order, in manifest order.
std::vector<FiniteGroup> corpus_groups(int max_order);

// total=... holds=... fails=... inapplicable=...
std::string summary_line(const std::vector<VerificationReport>& reports);

struct SuiteOutput {
  std::string text;  // one machine report line per item plus the summary line
  int fails = 0;
  std::vector<SuiteError> errors;
};

// The whole corpus-run pipeline in machine form; byte-identical output for
// identical inputs regardless of thread count.
SuiteOutput corpus_run_output(int max_order, const std::vector<Word>& words,
                              int threads);

}  // namespace focal
