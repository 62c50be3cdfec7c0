#include "focal/word.hpp"

#include <algorithm>
#include <cctype>

namespace focal {

struct Word::Node {
  std::shared_ptr<const Node> left;  // both null for a leaf
  std::shared_ptr<const Node> right;
  int height = 0;
  int leaves = 1;
};

Word::Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Word Word::leaf() {
  // All leaves are structurally identical; share one node.
  static const auto kLeaf = std::make_shared<const Node>();
  return Word(kLeaf);
}

Word Word::comm(Word left, Word right) {
  auto node = std::make_shared<Node>();
  node->height = 1 + std::max(left.node_->height, right.node_->height);
  node->leaves = left.node_->leaves + right.node_->leaves;
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return Word(std::move(node));
}

bool Word::is_leaf() const { return node_->left == nullptr; }

Word Word::left() const {
  if (is_leaf()) throw Error("leaf word has no left part");
  return Word(node_->left);
}

Word Word::right() const {
  if (is_leaf()) throw Error("leaf word has no right part");
  return Word(node_->right);
}

int Word::height() const { return node_->height; }
int Word::leaf_count() const { return node_->leaves; }

namespace {

void append_text(const Word& w, int& next_index, std::string& out) {
  if (w.is_leaf()) {
    out += 'x';
    out += std::to_string(next_index++);
    return;
  }
  out += '[';
  append_text(w.left(), next_index, out);
  out += ',';
  append_text(w.right(), next_index, out);
  out += ']';
}

}  // namespace

std::string Word::text() const {
  std::string out;
  int next_index = 1;
  append_text(*this, next_index, out);
  return out;
}

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
  return a.left() == b.left() && a.right() == b.right();
}

bool operator<(const Word& a, const Word& b) {
  if (a.vertex_count() != b.vertex_count())
    return a.vertex_count() < b.vertex_count();
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && !b.is_leaf();
  if (a.left() == b.left()) return a.right() < b.right();
  return a.left() < b.left();
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  std::vector<int> leaf_indices;  // in left-to-right leaf order

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(what + " at position " + std::to_string(pos));
  }

  Word parse_term() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of word");
    if (text[pos] == 'x') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected an index after 'x'");
      long index = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        index = index * 10 + (text[pos] - '0');
        if (index > 1000000) fail("indeterminate index too large");
        ++pos;
      }
      if (index < 1) fail("indeterminate indices start at 1");
      leaf_indices.push_back(static_cast<int>(index));
      return Word::leaf();
    }
    if (text[pos] == '[') {
      ++pos;
      Word acc = parse_term();
      skip_ws();
      if (pos >= text.size() || text[pos] != ',')
        fail("a bracket needs at least two entries");
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        // Left-nested desugaring: [a,b,c] = [[a,b],c].
        acc = Word::comm(std::move(acc), parse_term());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ']') fail("expected ',' or ']'");
      ++pos;
      return acc;
    }
    fail(std::string("unexpected character '") + text[pos] + "'");
  }
};

}  // namespace

ParsedWord parse_word_details(std::string_view text) {
  Parser parser{text, 0, {}};
  Word w = parser.parse_term();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw SyntaxError("trailing input at position " +
                      std::to_string(parser.pos));

  std::vector<int> sorted = parser.leaf_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw SyntaxError(
        "repeated indeterminate: outer commutator words use pairwise "
        "distinct indeterminates");
  bool canonical = true;
  for (size_t k = 0; k < parser.leaf_indices.size(); ++k)
    canonical = canonical && parser.leaf_indices[k] == static_cast<int>(k) + 1;
  return ParsedWord{std::move(w), !canonical};
}

Word parse_word(std::string_view text) { return parse_word_details(text).word; }

Word gamma_word(int i) {
  if (i < 1) throw InvalidIndex("gamma index must be >= 1");
  Word w = Word::leaf();
  for (int k = 2; k <= i; ++k) w = Word::comm(std::move(w), Word::leaf());
  return w;
}

Word delta_word(int i) {
  if (i < 0) throw InvalidIndex("delta index must be >= 0");
  Word w = Word::leaf();
  for (int k = 1; k <= i; ++k) w = Word::comm(w, w);
  return w;
}

bool is_extension(const Word& u, const Word& w) {
  if (w.is_leaf()) return true;  // any subtree may be pruned to a leaf
  if (u.is_leaf()) return false;
  return is_extension(u.left(), w.left()) && is_extension(u.right(), w.right());
}

std::vector<Word> words_up_to_height(int h) {
  if (h < 0) throw InvalidIndex("height must be >= 0");
  std::vector<Word> acc = {Word::leaf()};
  for (int step = 1; step <= h; ++step) {
    // Every word of height exactly `step` is a commutator of two words of
    // height <= step-1, at least one of height exactly step-1; combining all
    // pairs of shorter words and filtering keeps the code obvious.
    const std::vector<Word> prev = acc;
    for (const Word& l : prev)
      for (const Word& r : prev)
        if (1 + std::max(l.height(), r.height()) == step)
          acc.push_back(Word::comm(l, r));
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

namespace {

void collect_leaf_depths(const Word& w, int depth, std::vector<int>& out) {
  if (w.is_leaf()) {
    out.push_back(depth);
    return;
  }
  collect_leaf_depths(w.left(), depth + 1, out);
  collect_leaf_depths(w.right(), depth + 1, out);
}

// Rebuilds w with each leaf replaced by the next word from `replacements`.
Word substitute_leaves(const Word& w, const std::vector<Word>& replacements,
                       size_t& next_leaf) {
  if (w.is_leaf()) return replacements[next_leaf++];
  Word l = substitute_leaves(w.left(), replacements, next_leaf);
  Word r = substitute_leaves(w.right(), replacements, next_leaf);
  return Word::comm(std::move(l), std::move(r));
}

}  // namespace

std::vector<Word> proper_extensions_same_height(const Word& w, long cap) {
  if (w.is_leaf()) return {};
  if (cap < 0) throw EnumerationCapExceeded("cap must be >= 0");
  const int h = w.height();
  std::vector<int> depths;
  collect_leaf_depths(w, 0, depths);

  // A leaf at depth d may grow into any tree of height <= h - d; the root
  // then keeps height exactly h (the deepest original leaf sits at depth h
  // and ends the maximum at h even when every other choice is a plain leaf).
  // Check the family size against the cap before materializing anything,
  // using the tree-count recurrence T(0)=1, T(k)=1+T(k-1)^2.
  // Saturating arithmetic keeps the size estimate overflow-free for any cap.
  const long saturation = std::min(cap, 1000000000L) + 2;
  std::vector<long> tree_count(h + 1);
  tree_count[0] = 1;
  for (int k = 1; k <= h; ++k)
    tree_count[k] = std::min(saturation, 1 + tree_count[k - 1] * tree_count[k - 1]);
  long combinations = 1;
  for (int d : depths) {
    combinations = std::min(saturation, combinations * tree_count[h - d]);
    if (combinations - 1 > cap)
      throw EnumerationCapExceeded("extension family exceeds cap of " +
                                   std::to_string(cap));
  }

  std::vector<std::vector<Word>> choices;
  choices.reserve(depths.size());
  for (int d : depths) choices.push_back(words_up_to_height(h - d));

  std::vector<Word> out;
  out.reserve(static_cast<size_t>(std::min(combinations - 1, 1000000L)));
  std::vector<size_t> pick(depths.size(), 0);
  while (true) {
    // pick == all zeros selects a leaf everywhere, i.e. w itself: skip.
    if (std::any_of(pick.begin(), pick.end(), [](size_t i) { return i != 0; })) {
      std::vector<Word> replacements;
      replacements.reserve(pick.size());
      for (size_t k = 0; k < pick.size(); ++k)
        replacements.push_back(choices[k][pick[k]]);
      size_t next_leaf = 0;
      out.push_back(substitute_leaves(w, replacements, next_leaf));
    }
    // Odometer with the first leaf most significant.
    size_t k = pick.size();
    while (k > 0) {
      --k;
      if (++pick[k] < choices[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

Elem evaluate_word(const Word& w, const FiniteGroup& G,
                   std::span<const Elem> args) {
  if (static_cast<int>(args.size()) != w.leaf_count())
    throw ArityMismatch("word takes " + std::to_string(w.leaf_count()) +
                        " arguments, got " + std::to_string(args.size()));
  for (Elem a : args) G.check_element(a);
  size_t next = 0;
  auto eval = [&](auto&& self, const Word& v) -> Elem {
    if (v.is_leaf()) return args[next++];
    const Elem l = self(self, v.left());
    const Elem r = self(self, v.right());
    return G.comm(l, r);
  };
  return eval(eval, w);
}

}  // namespace focal
