#include "focal/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace focal {

bool set_contains(const ElemSet& s, Elem x) {
  return std::binary_search(s.begin(), s.end(), x);
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// Above this order the n*n multiplication table is skipped and permutation
// products are recomputed on demand.
constexpr int kMulTableLimit = 2048;

// Full associativity validation is cubic; beyond this order a deterministic
// sample of triples is checked instead.
constexpr int kFullAxiomLimit = 128;

}  // namespace

struct FiniteGroup::Impl {
  std::string group_name;
  int n = 0;
  Elem id = 0;
  std::vector<Elem> gens;

  bool perm_backed = false;
  std::vector<Permutation> perms;  // sorted by image array when perm_backed

  std::vector<Elem> mul_table;  // n*n, empty when order exceeds kMulTableLimit
  std::vector<Elem> inv_table;
  std::vector<int> orders;

  std::vector<std::string> labels;  // table backing only

  Elem multiply(Elem a, Elem b) const {
    if (!mul_table.empty()) return mul_table[static_cast<size_t>(a) * n + b];
    const Permutation prod = perms[a] * perms[b];
    auto it = std::lower_bound(perms.begin(), perms.end(), prod);
    return static_cast<Elem>(it - perms.begin());
  }

  void fill_inverses_and_orders() {
    inv_table.assign(n, -1);
    orders.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      Elem cur = a;
      int ord = 1;
      while (cur != id) {
        cur = multiply(cur, a);
        ++ord;
      }
      orders[a] = ord;
      // a^(ord-1) is the inverse; recompute it directly.
      Elem inv = id;
      for (int i = 0; i + 1 < ord; ++i) inv = multiply(inv, a);
      inv_table[a] = inv;
    }
  }
};

FiniteGroup::FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FiniteGroup FiniteGroup::from_generators(std::vector<Permutation> gens, int degree,
                                         int cap, std::string name) {
  if (degree < 1) throw PointOutOfRange("group degree must be >= 1");
  if (cap < 1) throw OrderCapExceeded("enumeration cap must be >= 1");
  for (const Permutation& g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree));

  // Breadth-first closure under right multiplication by the generators.
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  seen.insert(Permutation(degree));
  frontier.push_back(Permutation(degree));
  while (!frontier.empty()) {
    const Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (static_cast<int>(seen.size()) > cap)
          throw OrderCapExceeded("group exceeds enumeration cap of " +
                                 std::to_string(cap) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->perm_backed = true;
  impl->perms.assign(seen.begin(), seen.end());  // std::set yields sorted order
  impl->n = static_cast<int>(impl->perms.size());
  auto id_it = std::lower_bound(impl->perms.begin(), impl->perms.end(),
                                Permutation(degree));
  impl->id = static_cast<Elem>(id_it - impl->perms.begin());

  for (const Permutation& g : gens) {
    auto it = std::lower_bound(impl->perms.begin(), impl->perms.end(), g);
    const Elem idx = static_cast<Elem>(it - impl->perms.begin());
    if (std::find(impl->gens.begin(), impl->gens.end(), idx) == impl->gens.end())
      impl->gens.push_back(idx);
  }

  if (impl->n <= kMulTableLimit) {
    impl->mul_table.resize(static_cast<size_t>(impl->n) * impl->n);
    for (Elem a = 0; a < impl->n; ++a)
      for (Elem b = 0; b < impl->n; ++b) {
        const Permutation prod = impl->perms[a] * impl->perms[b];
        auto it = std::lower_bound(impl->perms.begin(), impl->perms.end(), prod);
        impl->mul_table[static_cast<size_t>(a) * impl->n + b] =
            static_cast<Elem>(it - impl->perms.begin());
      }
  }
  impl->fill_inverses_and_orders();
  impl->group_name =
      name.empty() ? "G" + std::to_string(impl->n) : std::move(name);
  return FiniteGroup(std::move(impl));
}

FiniteGroup generate_group(std::vector<Permutation> gens, int degree, int cap,
                           std::string name) {
  return FiniteGroup::from_generators(std::move(gens), degree, cap,
                                      std::move(name));
}

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table,
                                    std::vector<std::string> labels,
                                    std::vector<Elem> generators,
                                    std::string name) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw Error("multiplication table needs at least one element");
  if (table.size() != static_cast<size_t>(n) * n)
    throw Error("multiplication table size is not order squared");
  for (Elem v : table)
    if (v < 0 || v >= n) throw Error("multiplication table entry out of range");

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->mul_table = std::move(table);
  impl->labels = std::move(labels);

  // Locate the unique two-sided identity.
  Elem id = -1;
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      ok = impl->mul_table[static_cast<size_t>(e) * n + x] == x &&
           impl->mul_table[static_cast<size_t>(x) * n + e] == x;
    if (ok) {
      if (id >= 0) throw Error("multiplication table has two identities");
      id = e;
    }
  }
  if (id < 0) throw Error("multiplication table has no identity");
  impl->id = id;

  // Every element needs a two-sided inverse.
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b)
      found = impl->mul_table[static_cast<size_t>(a) * n + b] == id &&
              impl->mul_table[static_cast<size_t>(b) * n + a] == id;
    if (!found)
      throw Error("multiplication table element " + std::to_string(a) +
                  " has no inverse");
  }

  // Associativity: full check for small tables, a deterministic sample above.
  auto t = [&](Elem a, Elem b) {
    return impl->mul_table[static_cast<size_t>(a) * n + b];
  };
  const int stride = n <= kFullAxiomLimit ? 1 : n / 17 + 1;
  for (Elem a = 0; a < n; a += stride)
    for (Elem b = 0; b < n; b += stride)
      for (Elem c = 0; c < n; c += stride)
        if (t(t(a, b), c) != t(a, t(b, c)))
          throw Error("multiplication table is not associative");

  for (Elem g : generators)
    if (g < 0 || g >= n) throw Error("table generator index out of range");
  if (generators.empty() && n > 1)
    for (Elem x = 0; x < n; ++x)
      if (x != id) generators.push_back(x);
  impl->gens = std::move(generators);

  impl->fill_inverses_and_orders();
  impl->group_name = name.empty() ? "T" + std::to_string(n) : std::move(name);
  return FiniteGroup(std::move(impl));
}

int FiniteGroup::order() const { return impl_->n; }
const std::string& FiniteGroup::name() const { return impl_->group_name; }
Elem FiniteGroup::identity() const { return impl_->id; }
const std::vector<Elem>& FiniteGroup::generators() const { return impl_->gens; }

void FiniteGroup::check_element(Elem a) const {
  if (a < 0 || a >= impl_->n)
    throw ElementNotInGroup("element index " + std::to_string(a) +
                            " outside 0.." + std::to_string(impl_->n - 1));
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  check_element(a);
  check_element(b);
  return impl_->multiply(a, b);
}

Elem FiniteGroup::inv(Elem a) const {
  check_element(a);
  return impl_->inv_table[a];
}

Elem FiniteGroup::conj(Elem x, Elem g) const {
  return mul(mul(inv(g), x), g);
}

Elem FiniteGroup::comm(Elem x, Elem y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

Elem FiniteGroup::power(Elem a, long e) const {
  check_element(a);
  if (e < 0) return power(impl_->inv_table[a], -e);
  Elem acc = impl_->id;
  Elem base = a;
  while (e > 0) {
    if (e & 1) acc = impl_->multiply(acc, base);
    base = impl_->multiply(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Elem a) const {
  check_element(a);
  return impl_->orders[a];
}

bool FiniteGroup::is_perm_backed() const { return impl_->perm_backed; }

const Permutation& FiniteGroup::perm(Elem a) const {
  check_element(a);
  if (!impl_->perm_backed)
    throw Error("group '" + impl_->group_name + "' is not permutation-backed");
  return impl_->perms[a];
}

std::optional<Elem> FiniteGroup::index_of(const Permutation& p) const {
  if (!impl_->perm_backed) return std::nullopt;
  auto it = std::lower_bound(impl_->perms.begin(), impl_->perms.end(), p);
  if (it == impl_->perms.end() || !(*it == p)) return std::nullopt;
  return static_cast<Elem>(it - impl_->perms.begin());
}

std::string FiniteGroup::label(Elem a) const {
  check_element(a);
  if (impl_->perm_backed) return format_cycles(impl_->perms[a]);
  return impl_->labels[a];
}

ElemSet FiniteGroup::all_elements() const {
  ElemSet out(impl_->n);
  for (int i = 0; i < impl_->n; ++i) out[i] = i;
  return out;
}

bool FiniteGroup::same_group(const FiniteGroup& other) const {
  return impl_ == other.impl_;
}

Subgroup::Subgroup(FiniteGroup parent, ElemSet elements,
                   std::vector<Elem> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  if (elements_.empty()) throw Error("subgroup element set is empty");
  for (size_t i = 0; i < elements_.size(); ++i) {
    parent_.check_element(elements_[i]);
    if (i > 0 && elements_[i - 1] >= elements_[i])
      throw Error("subgroup element set must be sorted and duplicate-free");
  }
  if (!set_contains(elements_, parent_.identity()))
    throw Error("subgroup must contain the identity");
  if (parent_.order() % static_cast<int>(elements_.size()) != 0)
    throw Error("subgroup size does not divide parent order");
  for (Elem g : generators_)
    if (!set_contains(elements_, g))
      throw Error("subgroup generator outside its element set");
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup(G, {G.identity()}, {});
}

Subgroup full_subgroup(const FiniteGroup& G) {
  return Subgroup(G, G.all_elements(), G.generators());
}

Subgroup subgroup_generated(const FiniteGroup& G, const ElemSet& seed) {
  for (Elem s : seed) G.check_element(s);
  std::vector<Elem> gens(seed.begin(), seed.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<char> in(G.order(), 0);
  std::deque<Elem> frontier;
  in[G.identity()] = 1;
  frontier.push_back(G.identity());
  while (!frontier.empty()) {
    const Elem cur = frontier.front();
    frontier.pop_front();
    for (Elem g : gens) {
      const Elem next = G.mul(cur, g);
      if (!in[next]) {
        in[next] = 1;
        frontier.push_back(next);
      }
    }
  }
  ElemSet elements;
  for (Elem x = 0; x < G.order(); ++x)
    if (in[x]) elements.push_back(x);
  return Subgroup(G, std::move(elements), std::move(gens));
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  if (!H.parent().same_group(G)) throw Error("subgroup has a different parent");
  // Conjugating the generators into H suffices: H^g = <gens^g> and a finite
  // subgroup containing its g-conjugate equals it.
  for (Elem h : H.elements())
    for (Elem g : G.generators())
      if (!H.contains(G.conj(h, g))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& G, const ElemSet& seed) {
  for (Elem s : seed) G.check_element(s);
  ElemSet gens(seed.begin(), seed.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Subgroup H = subgroup_generated(G, gens);
  while (true) {
    ElemSet missing;
    for (Elem h : H.elements())
      for (Elem g : G.generators()) {
        const Elem c = G.conj(h, g);
        if (!H.contains(c)) missing.push_back(c);
      }
    if (missing.empty()) break;
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    gens = set_union(gens, missing);
    H = subgroup_generated(G, gens);
  }
  return Subgroup(G, H.elements(), gens);
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A,
                             const Subgroup& B) {
  if (!A.parent().same_group(G) || !B.parent().same_group(G))
    throw Error("commutator subgroup arguments have different parents");
  std::vector<char> mark(G.order(), 0);
  for (Elem a : A.elements())
    for (Elem b : B.elements()) mark[G.comm(a, b)] = 1;
  ElemSet seed;
  for (Elem x = 0; x < G.order(); ++x)
    if (mark[x]) seed.push_back(x);
  return subgroup_generated(G, seed);
}

namespace {

// Shared emission rule for both characteristic series: emit the first term,
// then successive terms, stopping either after `steps` steps or right after
// the first repeated term (so a stable tail is visible in the output).
std::vector<Subgroup> run_series(Subgroup start, int steps,
                                 auto&& next_term) {
  std::vector<Subgroup> out;
  out.push_back(std::move(start));
  for (int i = 0; i < steps; ++i) {
    Subgroup next = next_term(out.back());
    const bool repeated = next.elements() == out.back().elements();
    out.push_back(std::move(next));
    if (repeated) break;
  }
  return out;
}

}  // namespace

std::vector<Subgroup> derived_series(const FiniteGroup& G, int k) {
  if (k < 0) throw Error("derived series length must be >= 0");
  return run_series(full_subgroup(G), k, [&](const Subgroup& prev) {
    return commutator_subgroup(G, prev, prev);
  });
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G, int k) {
  if (k < 0) throw Error("lower central series length must be >= 0");
  if (k == 0) return {};
  const Subgroup whole = full_subgroup(G);
  return run_series(whole, k - 1, [&](const Subgroup& prev) {
    return commutator_subgroup(G, prev, whole);
  });
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G) {
  if (G.order() == 1)
    throw TrivialGroup("the trivial group has no minimal normal subgroups");
  // Every nontrivial normal subgroup contains the normal closure of each of
  // its nontrivial elements, so the minimal members of the closure family are
  // exactly the minimal normal subgroups.
  std::map<ElemSet, Subgroup> closures;
  for (Elem g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    Subgroup N = normal_closure(G, {g});
    closures.emplace(N.elements(), std::move(N));
  }
  std::vector<Subgroup> out;
  for (const auto& [elems, N] : closures) {
    bool minimal = true;
    for (const auto& [other, M] : closures) {
      if (other.size() < elems.size() && set_subset(other, elems)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(N);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  if (!A.parent().same_group(B.parent()))
    throw Error("intersecting subgroups of different parents");
  ElemSet elems = set_intersection(A.elements(), B.elements());
  return Subgroup(A.parent(), elems, elems);
}

Subgroup conjugate_subgroup(const Subgroup& H, Elem g) {
  const FiniteGroup& G = H.parent();
  G.check_element(g);
  ElemSet elems;
  elems.reserve(H.elements().size());
  for (Elem h : H.elements()) elems.push_back(G.conj(h, g));
  std::sort(elems.begin(), elems.end());
  std::vector<Elem> gens;
  gens.reserve(H.generators().size());
  for (Elem h : H.generators()) gens.push_back(G.conj(h, g));
  return Subgroup(G, std::move(elems), std::move(gens));
}

ElemSet product_set(const FiniteGroup& G, const ElemSet& A, const ElemSet& B) {
  std::vector<char> mark(G.order(), 0);
  for (Elem a : A) {
    G.check_element(a);
    for (Elem b : B) mark[G.mul(a, b)] = 1;
  }
  for (Elem b : B) G.check_element(b);
  ElemSet out;
  for (Elem x = 0; x < G.order(); ++x)
    if (mark[x]) out.push_back(x);
  return out;
}

ElemSet power_set(const FiniteGroup& G, const ElemSet& S, long m) {
  std::vector<char> mark(G.order(), 0);
  for (Elem s : S) mark[G.power(s, m)] = 1;
  ElemSet out;
  for (Elem x = 0; x < G.order(); ++x)
    if (mark[x]) out.push_back(x);
  return out;
}

bool is_abelian(const Subgroup& H) {
  const FiniteGroup& G = H.parent();
  const ElemSet& e = H.elements();
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = i + 1; j < e.size(); ++j)
      if (G.mul(e[i], e[j]) != G.mul(e[j], e[i])) return false;
  return true;
}

bool is_nilpotent(const Subgroup& H) {
  Subgroup cur = H;
  while (true) {
    Subgroup next = commutator_subgroup(H.parent(), cur, H);
    if (next.elements() == cur.elements()) return cur.is_trivial();
    cur = std::move(next);
  }
}

ElemSet conjugacy_class(const FiniteGroup& G, Elem g) {
  G.check_element(g);
  std::vector<char> in(G.order(), 0);
  std::deque<Elem> frontier;
  in[g] = 1;
  frontier.push_back(g);
  while (!frontier.empty()) {
    const Elem cur = frontier.front();
    frontier.pop_front();
    for (Elem s : G.generators()) {
      const Elem c = G.conj(cur, s);
      if (!in[c]) {
        in[c] = 1;
        frontier.push_back(c);
      }
    }
  }
  ElemSet out;
  for (Elem x = 0; x < G.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<ElemSet> conjugacy_classes(const FiniteGroup& G) {
  std::vector<char> seen(G.order(), 0);
  std::vector<ElemSet> out;
  for (Elem g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    ElemSet cls = conjugacy_class(G, g);
    for (Elem x : cls) seen[x] = 1;
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_conjugation_closed(const FiniteGroup& G, const ElemSet& S) {
  for (Elem s : S) {
    G.check_element(s);
    for (Elem g : G.generators())
      if (!set_contains(S, G.conj(s, g))) return false;
  }
  return true;
}

QuotientMap::QuotientMap(FiniteGroup source, Subgroup kernel)
    : source_(std::move(source)), kernel_(std::move(kernel)) {
  if (!kernel_.parent().same_group(source_))
    throw Error("quotient kernel has a different parent");
  if (!is_normal(source_, kernel_))
    throw NotNormal("quotient kernel is not normal");

  const int n = source_.order();
  coset_rep_.assign(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset_rep_[x] != -1) continue;
    // Ascending scan: the first element met in each coset is its least.
    for (Elem k : kernel_.elements()) coset_rep_[source_.mul(x, k)] = x;
    reps.push_back(x);
  }

  const int t = static_cast<int>(reps.size());
  std::vector<Elem> target_index(n, -1);
  for (int i = 0; i < t; ++i) target_index[reps[i]] = i;
  to_target_.assign(n, -1);
  for (Elem x = 0; x < n; ++x) to_target_[x] = target_index[coset_rep_[x]];

  std::vector<Elem> table(static_cast<size_t>(t) * t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      table[static_cast<size_t>(i) * t + j] =
          to_target_[source_.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  labels.reserve(t);
  for (int i = 0; i < t; ++i) labels.push_back(source_.label(reps[i]));

  std::vector<Elem> gens;
  for (Elem g : source_.generators()) {
    const Elem img = to_target_[g];
    if (img != to_target_[source_.identity()] &&
        std::find(gens.begin(), gens.end(), img) == gens.end())
      gens.push_back(img);
  }

  target_ = FiniteGroup::from_table(
      std::move(table), std::move(labels), std::move(gens),
      source_.name() + "/" + std::to_string(kernel_.order()));
}

Elem QuotientMap::map(Elem g) const {
  source_.check_element(g);
  return to_target_[g];
}

Elem QuotientMap::rep(Elem g) const {
  source_.check_element(g);
  return coset_rep_[g];
}

ElemSet QuotientMap::image(const ElemSet& s) const {
  std::vector<char> mark(target_->order(), 0);
  for (Elem x : s) {
    source_.check_element(x);
    mark[to_target_[x]] = 1;
  }
  ElemSet out;
  for (Elem y = 0; y < target_->order(); ++y)
    if (mark[y]) out.push_back(y);
  return out;
}

}  // namespace focal
