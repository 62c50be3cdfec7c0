#include "focal/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace focal {

namespace {

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw ParameterOutOfRange(std::string(what) + " expects " +
                              std::to_string(lo) + ".." + std::to_string(hi) +
                              ", got " + std::to_string(n));
}

Permutation rotation(int n) {  // (1 2 ... n)
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return Permutation::from_images(std::move(images));
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  check_range(n, 1, 7, "symmetric_group");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycle_notation("(1 2)", n));
    gens.push_back(rotation(n));
  }
  return generate_group(std::move(gens), n, kDefaultOrderCap,
                        "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  check_range(n, 1, 7, "alternating_group");
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(parse_cycle_notation("(1 2 3)", n));
    if (n % 2 == 1) {
      gens.push_back(rotation(n));  // n-cycle, even for odd n
    } else if (n >= 4) {
      // (2 3 ... n): an (n-1)-cycle, even for even n.
      std::vector<int> images(n);
      images[0] = 0;
      for (int i = 1; i < n; ++i) images[i] = i % (n - 1) + 1;
      gens.push_back(Permutation::from_images(std::move(images)));
    }
  }
  return generate_group(std::move(gens), n, kDefaultOrderCap,
                        "A" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  check_range(n, 3, 10000, "dihedral_group");
  std::vector<int> reflection(n);
  for (int i = 0; i < n; ++i) reflection[i] = (n - i) % n;
  std::vector<Permutation> gens = {
      rotation(n), Permutation::from_images(std::move(reflection))};
  return generate_group(std::move(gens), n, kDefaultOrderCap,
                        "D" + std::to_string(n));
}

FiniteGroup cyclic_group(int n) {
  check_range(n, 1, kDefaultOrderCap, "cyclic_group");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(rotation(n));
  return generate_group(std::move(gens), n, kDefaultOrderCap,
                        "C" + std::to_string(n));
}

FiniteGroup quaternion_group8() {
  // Regular representation on the elements 1, -1, i, -i, j, -j, k, -k
  // (points 1..8 in that order); the generators are right multiplication
  // by i and by j.
  const std::vector<int> by_i = {3, 4, 2, 1, 8, 7, 5, 6};
  const std::vector<int> by_j = {5, 6, 7, 8, 2, 1, 4, 3};
  auto to_perm = [](const std::vector<int>& images1) {
    std::vector<int> images(images1.size());
    for (size_t k = 0; k < images1.size(); ++k) images[k] = images1[k] - 1;
    return Permutation::from_images(std::move(images));
  };
  return generate_group({to_perm(by_i), to_perm(by_j)}, 8, kDefaultOrderCap,
                        "Q8");
}

FiniteGroup sl23_group() {
  // The 8 nonzero row vectors of F_3^2 in lexicographic order; a matrix M
  // acts on the right, v -> v*M, matching the library's left-to-right
  // composition.  Generators: S = [[0,2],[1,0]] (S^2 = -I) and
  // T = [[1,1],[0,1]], which generate SL(2,3).
  std::vector<std::pair<int, int>> vectors;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != 0 || b != 0) vectors.emplace_back(a, b);

  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> images(vectors.size());
    for (size_t k = 0; k < vectors.size(); ++k) {
      const auto [a, b] = vectors[k];
      const int c = (a * m00 + b * m10) % 3;
      const int d = (a * m01 + b * m11) % 3;
      const auto it =
          std::find(vectors.begin(), vectors.end(), std::make_pair(c, d));
      images[k] = static_cast<int>(it - vectors.begin());
    }
    return Permutation::from_images(std::move(images));
  };
  FiniteGroup G = generate_group({act(0, 2, 1, 0), act(1, 1, 0, 1)}, 8,
                                 kDefaultOrderCap, "SL23");
  if (G.order() != 24) throw Error("SL(2,3) construction has wrong order");
  return G;
}

FiniteGroup psl27_group() {
  // The projective line over F_7: points infinity, 0, 1, ..., 6 numbered
  // 1..8.  Generators z -> z+1 and z -> -1/z.
  FiniteGroup G = generate_group({parse_cycle_notation("(2 3 4 5 6 7 8)", 8),
                                  parse_cycle_notation("(1 2)(3 8)(4 5)(6 7)", 8)},
                                 8, kDefaultOrderCap, "PSL27");
  if (G.order() != 168) throw Error("PSL(2,7) construction has wrong order");
  const auto mns = minimal_normal_subgroups(G);
  if (mns.size() != 1 || mns[0].order() != G.order() ||
      is_abelian(full_subgroup(G)))
    throw Error("PSL(2,7) construction is not simple nonabelian");
  return G;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (!a.is_perm_backed() || !b.is_perm_backed())
    throw Error("direct products need permutation-backed factors");
  const int da = a.perm(a.identity()).degree();
  const int db = b.perm(b.identity()).degree();
  std::vector<Permutation> gens;
  for (Elem g : a.generators()) {
    std::vector<int> images(da + db);
    for (int i = 0; i < da; ++i) images[i] = a.perm(g).image_of(i);
    for (int i = 0; i < db; ++i) images[da + i] = da + i;
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  for (Elem g : b.generators()) {
    std::vector<int> images(da + db);
    for (int i = 0; i < da; ++i) images[i] = i;
    for (int i = 0; i < db; ++i) images[da + i] = da + b.perm(g).image_of(i);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return generate_group(std::move(gens), da + db, kDefaultOrderCap,
                        a.name() + "x" + b.name());
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open group file: " + path);

  auto trim = [](std::string s) {
    const auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && is_space(s.front())) s.erase(s.begin());
    while (!s.empty() && is_space(s.back())) s.pop_back();
    return s;
  };

  int degree = -1;
  std::vector<Permutation> gens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "degree") {
      if (degree != -1)
        throw FileFormatError(path + ":" + std::to_string(line_no) +
                              ": duplicate degree line");
      long value = 0;
      if (!(fields >> value) || value < 1 || value > kDefaultOrderCap)
        throw FileFormatError(path + ":" + std::to_string(line_no) +
                              ": degree needs a positive integer");
      std::string rest;
      if (fields >> rest)
        throw FileFormatError(path + ":" + std::to_string(line_no) +
                              ": trailing text after degree");
      degree = static_cast<int>(value);
    } else if (keyword == "gen") {
      if (degree == -1)
        throw FileFormatError(path + ":" + std::to_string(line_no) +
                              ": gen before degree line");
      std::string cycles;
      std::getline(fields, cycles);
      gens.push_back(parse_cycle_notation(cycles, degree));
    } else {
      throw FileFormatError(path + ":" + std::to_string(line_no) +
                            ": unknown directive '" + keyword + "'");
    }
  }
  if (degree == -1) throw FileFormatError(path + ": missing degree line");
  return generate_group(std::move(gens), degree, kDefaultOrderCap, "@" + path);
}

namespace {

FiniteGroup build_named_factor(const std::string& lower) {
  if (lower == "q8") return quaternion_group8();
  if (lower == "sl23") return sl23_group();
  if (lower == "psl27") return psl27_group();
  if (lower.size() >= 2) {
    const char kind = lower[0];
    const std::string digits = lower.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
          return std::isdigit(c);
        })) {
      const int n = std::stoi(digits);
      switch (kind) {
        case 's': return symmetric_group(n);
        case 'a': return alternating_group(n);
        case 'd': return dihedral_group(n);
        case 'c': return cyclic_group(n);
        default: break;
      }
    }
  }
  throw Error("unknown group name '" + lower +
              "' (expected S<n>, A<n>, D<n>, C<n>, Q8, SL23, or PSL27)");
}

}  // namespace

FiniteGroup build_group_argument(std::string_view arg) {
  std::string s(arg);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty group argument");
  if (s[0] == '@') return load_group_file(s.substr(1));

  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::optional<FiniteGroup> acc;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t split = s.find('x', start);
    const std::string factor =
        s.substr(start, split == std::string::npos ? split : split - start);
    if (factor.empty()) throw Error("empty factor in group product");
    FiniteGroup g = build_named_factor(factor);
    acc = acc ? direct_product(*acc, g) : g;
    if (split == std::string::npos) break;
    start = split + 1;
  }
  return *acc;
}

std::vector<GroupDescriptor> default_corpus() {
  return {
      {"S3", [] { return symmetric_group(3); }, 6},
      {"S4", [] { return symmetric_group(4); }, 24},
      {"S5", [] { return symmetric_group(5); }, 120},
      {"A4", [] { return alternating_group(4); }, 12},
      {"A5", [] { return alternating_group(5); }, 60},
      {"D4", [] { return dihedral_group(4); }, 8},
      {"D5", [] { return dihedral_group(5); }, 10},
      {"D6", [] { return dihedral_group(6); }, 12},
      {"C2xC2", [] { return direct_product(cyclic_group(2), cyclic_group(2)); }, 4},
      {"C6", [] { return cyclic_group(6); }, 6},
      {"Q8", [] { return quaternion_group8(); }, 8},
      {"SL23", [] { return sl23_group(); }, 24},
      {"S3xS3", [] { return direct_product(symmetric_group(3), symmetric_group(3)); }, 36},
      {"PSL27", [] { return psl27_group(); }, 168},
  };
}

}  // namespace focal
