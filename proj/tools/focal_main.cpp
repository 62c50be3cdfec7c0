// Command-line front end: word inspection, single verifications, corpus
// suites, and the power-word counterexample search.
//
// Exit codes: 0 = every verdict holds or is inapplicable, 1 = at least one
// fails, 2 = usage or input error.

#include <atomic>
#include <cctype>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "focal/corpus.hpp"
#include "focal/suite.hpp"
#include "focal/sylow.hpp"
#include "focal/values.hpp"
#include "focal/verify.hpp"
#include "focal/word.hpp"

namespace {

using namespace focal;

// Sub-word text using the leaf numbering of the whole word, so the labels in
// a tree rendering agree across vertices.
std::string subword_text(const Word& w, int base) {
  if (w.is_leaf()) return "x" + std::to_string(base);
  return "[" + subword_text(w.left(), base) + "," +
         subword_text(w.right(), base + w.left().leaf_count()) + "]";
}

void print_tree(const Word& w, int base, const std::string& prefix,
                bool last_child, bool root) {
  if (root)
    std::cout << "  " << subword_text(w, base) << "\n";
  else
    std::cout << "  " << prefix << (last_child ? "\\- " : "+- ")
              << subword_text(w, base) << "\n";
  if (w.is_leaf()) return;
  const std::string child_prefix =
      root ? prefix : prefix + (last_child ? "   " : "|  ");
  print_tree(w.left(), base, child_prefix, false, false);
  print_tree(w.right(), base + w.left().leaf_count(), child_prefix, true, false);
}

int cmd_word_info(const std::string& text) {
  const ParsedWord parsed = parse_word_details(text);
  const Word& w = parsed.word;
  std::cout << "word: " << w.text() << "\n";
  if (parsed.renumbered)
    std::cout << "note: leaf indices renumbered to canonical form\n";
  std::cout << "height: " << w.height() << "\n"
            << "leaves: " << w.leaf_count() << "\n"
            << "vertices: " << w.vertex_count() << "\n"
            << "defect: " << w.defect() << "\n";
  const std::vector<Word> phi = proper_extensions_same_height(w);
  std::cout << "proper extensions of height " << w.height() << ": "
            << phi.size() << "\n";
  for (const Word& u : phi) std::cout << "  " << u.text() << "\n";
  std::cout << "tree:\n";
  print_tree(w, 1, "", true, true);
  return 0;
}

// Text mode puts the verdict first and then repeats the machine fields.
void print_report(const VerificationReport& r, bool machine) {
  if (machine) {
    std::cout << render_report_line(r) << "\n";
    return;
  }
  std::string verdict(verdict_name(r.verdict));
  for (char& c : verdict) c = static_cast<char>(std::toupper(c));
  verdict.resize(13, ' ');
  std::cout << verdict << render_report_line(r) << "\n";
}

int finish(const std::vector<VerificationReport>& reports) {
  int fails = 0;
  for (const VerificationReport& r : reports)
    if (r.verdict == Verdict::fails) ++fails;
  std::cout << summary_line(reports) << "\n";
  return fails > 0 ? 1 : 0;
}

int cmd_verify(const std::string& group_arg, const std::string& word_text,
               long prime, long power, bool machine) {
  const FiniteGroup G = build_group_argument(group_arg);
  const ParsedWord parsed = parse_word_details(word_text);
  if (parsed.renumbered)
    std::cerr << "note: leaf indices renumbered to canonical form\n";
  const Word& w = parsed.word;

  std::vector<long> primes =
      prime > 0 ? std::vector<long>{prime} : primes_dividing(G.order());
  std::vector<VerificationReport> reports;
  if (power > 0) {
    const ElemSet values = power_value_set(G, w, power);
    const std::string label =
        power == 1 ? w.text() : w.text() + "^" + std::to_string(power);
    for (long p : primes) {
      VerificationReport r = check_question1(G, values, p);
      r.word_text = label;
      reports.push_back(std::move(r));
    }
  } else {
    reports.push_back(verify_product_extensions(G, w));
    for (long p : primes) {
      reports.push_back(verify_theorem_a(G, w, p));
      reports.push_back(verify_nilpotent_case(G, w, p));
      reports.push_back(verify_remark_power(G, w, p));
    }
  }
  for (const VerificationReport& r : reports) print_report(r, machine);
  return finish(reports);
}

int cmd_corpus_run(int max_order, const std::vector<std::string>& word_texts,
                   int threads, bool machine) {
  std::vector<Word> words;
  if (word_texts.empty())
    words = default_suite_words();
  else
    for (const std::string& t : word_texts) words.push_back(parse_word(t));

  if (machine) {
    const SuiteOutput out = corpus_run_output(max_order, words, threads);
    std::cout << out.text;
    for (const SuiteError& e : out.errors)
      std::cerr << "error: " << e.context << ": " << e.message << "\n";
    return out.fails > 0 ? 1 : 0;
  }
  const SuiteResult result =
      run_suite(corpus_groups(max_order), words, threads);
  for (const VerificationReport& r : result.reports) print_report(r, false);
  for (const SuiteError& e : result.errors)
    std::cerr << "error: " << e.context << ": " << e.message << "\n";
  return finish(result.reports);
}

int cmd_question1_search(int max_order,
                         const std::vector<std::string>& word_texts,
                         long power, int threads, bool machine) {
  std::vector<Word> words;
  if (word_texts.empty())
    words = default_suite_words();
  else
    for (const std::string& t : word_texts) words.push_back(parse_word(t));

  // One question1 item per (group, word, prime); the optional --power wraps
  // every word's value set, exposing power words like x^3.
  std::vector<FiniteGroup> groups = corpus_groups(max_order);
  struct Item {
    FiniteGroup G;
    Word w;
    std::string label;
    long p;
  };
  std::vector<Item> items;
  for (const FiniteGroup& G : groups)
    for (const Word& w : words) {
      const std::string label =
          power > 1 ? w.text() + "^" + std::to_string(power) : w.text();
      for (long p : primes_dividing(G.order()))
        items.push_back({G, w, label, p});
    }

  std::vector<VerificationReport> reports(items.size());
  auto run_one = [&](size_t i) {
    const Item& it = items[i];
    ElemSet values = value_set(it.G, it.w).elements;
    if (power > 1) values = power_set(it.G, values, power);
    VerificationReport r = check_question1(it.G, values, it.p);
    r.word_text = it.label;
    reports[i] = std::move(r);
  };
  if (threads <= 1) {
    for (size_t i = 0; i < items.size(); ++i) run_one(i);
  } else {
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

  int fails = 0;
  for (const VerificationReport& r : reports) {
    if (r.verdict == Verdict::fails) {
      ++fails;
      if (!machine) std::cout << "COUNTEREXAMPLE ";
      std::cout << render_report_line(r) << "\n";
    } else if (machine) {
      std::cout << render_report_line(r) << "\n";
    }
  }
  if (!machine && fails == 0)
    std::cout << "no counterexamples found\n";
  std::cout << summary_line(reports) << "\n";
  return fails > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Empirical checks that Sylow intersections with verbal subgroups are "
      "generated by power values of outer commutator words"};
  app.require_subcommand(1);

  std::string word_text;
  std::string group_arg;
  long prime = 0;
  long power = 0;
  int max_order = 1000;
  int threads = 1;
  std::string output = "text";
  const auto output_check = CLI::IsMember({"text", "machine"});

  CLI::App* word_info = app.add_subcommand(
      "word-info", "Inspect an outer commutator word: canonical form, "
                   "height, defect, extension family, tree");
  word_info->add_option("word", word_text, "word text, e.g. \"[x1,x2,x3]\"")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "Verify the power-value generation statements on one group");
  verify->add_option("-g,--group", group_arg,
                     "builder name (S4, A5, D4, C6, Q8, SL23, PSL27, "
                     "products via 'x') or @path to a group file")
      ->required();
  verify->add_option("-w,--word", word_text, "outer commutator word")
      ->required();
  verify->add_option("-p,--prime", prime, "check one prime only");
  verify->add_option("--power", power,
                     "check generation for the raw value set of word^m "
                     "instead (admits the x^3 counterexample)");
  verify->add_option("-o,--output", output, "text or machine")
      ->check(output_check);

  CLI::App* corpus_run = app.add_subcommand(
      "corpus-run", "Run the full verifier suite over the built-in corpus");
  corpus_run->add_option("--max-order", max_order,
                         "skip corpus groups larger than this");
  std::vector<std::string> word_texts;
  corpus_run->add_option("-w,--word", word_texts,
                         "words to run (default: gamma_2..4, delta_1..3 and "
                         "a mixed word)");
  corpus_run->add_option("-j,--threads", threads, "worker thread count");
  corpus_run->add_option("-o,--output", output, "text or machine")
      ->check(output_check);

  CLI::App* q1_search = app.add_subcommand(
      "question1-search",
      "Search the corpus for value sets where <P cap S> != P cap <S>");
  q1_search->add_option("--max-order", max_order,
                        "skip corpus groups larger than this");
  q1_search->add_option("-w,--word", word_texts, "words to search");
  q1_search->add_option("--power", power, "raise every value set to this power");
  q1_search->add_option("-j,--threads", threads, "worker thread count");
  q1_search->add_option("-o,--output", output, "text or machine")
      ->check(output_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const bool machine = output == "machine";
    if (word_info->parsed()) return cmd_word_info(word_text);
    if (verify->parsed())
      return cmd_verify(group_arg, word_text, prime, power, machine);
    if (corpus_run->parsed())
      return cmd_corpus_run(max_order, word_texts, threads, machine);
    return cmd_question1_search(max_order, word_texts, power, threads, machine);
  } catch (const focal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
