#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "focal/errors.hpp"
#include "focal/group.hpp"

namespace focal {

// An outer commutator word as a shape-only binary tree: a leaf stands for one
// indeterminate, an inner node for a commutator of its subtrees.  Because the
// indeterminates of an outer commutator word are pairwise distinct, canonical
// form numbers the leaves 1..n left-to-right and the indices never need to be
// stored.  Immutable and cheap to copy (shared nodes).
class Word {
 public:
  static Word leaf();
  static Word comm(Word left, Word right);

  bool is_leaf() const;
  Word left() const;   // non-leaf only
  Word right() const;  // non-leaf only

  int height() const;
  int leaf_count() const;
  int vertex_count() const { return 2 * leaf_count() - 1; }
  // Vertices missing relative to the complete tree of the same height.
  int defect() const { return (1 << (height() + 1)) - 1 - vertex_count(); }

  // Canonical bracket text, e.g. "[[x1,x2],x3]".
  std::string text() const;

  friend bool operator==(const Word& a, const Word& b);
  // Total order: vertex count first, then leaf-before-commutator
  // structurally; gives every enumeration a fixed canonical sequence.
  friend bool operator<(const Word& a, const Word& b);

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct ParsedWord {
  Word word;
  // Set when the input's leaf indices were valid but not 1..n left-to-right;
  // the word has been renumbered into canonical form.
  bool renumbered = false;
};

// Grammar: word := "x"<int> | "[" word ("," word)+ "]"; brackets with three
// or more entries nest to the left, so "[x1,x2,x3]" means "[[x1,x2],x3]".
// A repeated indeterminate is a SyntaxError (only outer commutator words,
// which use pairwise distinct indeterminates, are representable).
ParsedWord parse_word_details(std::string_view text);
Word parse_word(std::string_view text);

inline std::string format_word(const Word& w) { return w.text(); }

Word gamma_word(int i);  // [x1,...,xi], left-nested; throws InvalidIndex (i < 1)
Word delta_word(int i);  // complete tree of height i; throws InvalidIndex (i < 0)

// True iff w is obtained from u by pruning complete subtrees of u to leaves.
bool is_extension(const Word& u, const Word& w);

// All canonical words of height <= h, sorted by the Word order.
// Sizes follow T(0) = 1, T(h) = 1 + T(h-1)^2: 1, 2, 5, 26 for h = 0..3.
std::vector<Word> words_up_to_height(int h);

// All u != w with is_extension(u, w) and height(u) = height(w): every leaf at
// depth d is independently replaced by a word of height <= height(w) - d, the
// all-leaves combination (w itself) skipped.  Order: replacement choices run
// through the Word order, the first leaf varying slowest.  Throws
// EnumerationCapExceeded when the family would exceed `cap`.
std::vector<Word> proper_extensions_same_height(const Word& w, long cap = 10000);

// args[k] feeds the (k+1)-th leaf; throws ArityMismatch/ElementNotInGroup.
Elem evaluate_word(const Word& w, const FiniteGroup& G,
                   std::span<const Elem> args);

}  // namespace focal
