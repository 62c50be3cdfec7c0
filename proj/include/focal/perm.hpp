#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "focal/errors.hpp"

namespace focal {

// A bijection of the points {0, ..., degree-1}.  Points are 0-based
// internally; all text I/O (cycle notation) is 1-based.
//
// Products act left to right: p^(a*b) = (p^a)^b.  Conjugation x^g = g^-1*x*g
// and the commutator [x,y] = x^-1*y^-1*x*y follow the same convention.
class Permutation {
 public:
  // The identity on `degree` points.
  explicit Permutation(int degree);

  // Builds from a 0-based image array; throws PointOutOfRange/RepeatedPoint
  // if the array is not a bijection.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int image_of(int point) const { return images_[point]; }
  bool is_identity() const;
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Lexicographic order on image arrays; this is the tie-break used whenever
  // the library picks a canonical "least" permutation.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) {
  return a * b;
}

Permutation conjugate(const Permutation& x, const Permutation& g);
Permutation commutator(const Permutation& x, const Permutation& y);

// Parses disjoint-cycle notation such as "(1 2 3)(4 5)" for the given degree.
// Points are 1-based and may be separated by spaces or commas; "" and "()"
// both denote the identity.  Throws MalformedCycle, PointOutOfRange, or
// RepeatedPoint.
Permutation parse_cycle_notation(std::string_view text, int degree);

// Renders disjoint cycles, each starting at its least point, cycles ordered
// by least moved point; fixed points are omitted.  The identity is "()".
std::string format_cycles(const Permutation& p);

}  // namespace focal
