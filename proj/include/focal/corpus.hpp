#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focal/group.hpp"

namespace focal {

// One entry of the built-in group manifest.
struct GroupDescriptor {
  std::string name;
  std::function<FiniteGroup()> build;
  std::optional<int> expected_order;
};

FiniteGroup symmetric_group(int n);    // n points, 1 <= n <= 7
FiniteGroup alternating_group(int n);  // n points, 1 <= n <= 7
FiniteGroup dihedral_group(int n);     // n points, order 2n, n >= 3
FiniteGroup cyclic_group(int n);       // n points, n >= 1
FiniteGroup quaternion_group8();       // regular representation, degree 8
// SL(2,3) acting on the 8 nonzero row vectors of the plane over F_3.
FiniteGroup sl23_group();
// PSL(2,7) acting on the 8 points of the projective line over F_7;
// validated at construction: order 168, nonabelian, simple.
FiniteGroup psl27_group();

// Acts on the disjoint union of the factors' point sets; both factors must
// be permutation-backed.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Line-oriented file: '#' starts a comment line, the first content line is
// "degree <n>", every further content line is "gen <cycle-notation>".
FiniteGroup load_group_file(const std::string& path);

// Resolves a CLI group argument: "@path" loads a group file; otherwise a
// case-insensitive builder name (S3, A5, D4, C6, Q8, SL23, PSL27), with
// direct products spelled via 'x' as in "S3xS3".
FiniteGroup build_group_argument(std::string_view arg);

// The fixed 14-group manifest the suite runs on.
std::vector<GroupDescriptor> default_corpus();

}  // namespace focal
