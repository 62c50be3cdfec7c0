#include "focal/perm.hpp"

#include <cctype>
#include <numeric>
#include <utility>

namespace focal {

Permutation::Permutation(int degree) {
  if (degree < 1) throw PointOutOfRange("permutation degree must be >= 1");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw PointOutOfRange("permutation degree must be >= 1");
  std::vector<char> seen(n, 0);
  for (int img : images) {
    if (img < 0 || img >= n)
      throw PointOutOfRange("image " + std::to_string(img) +
                            " outside 0.." + std::to_string(n - 1));
    if (seen[img])
      throw RepeatedPoint("image " + std::to_string(img) + " repeated");
    seen[img] = 1;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("cannot compose degree " + std::to_string(degree()) +
                         " with degree " + std::to_string(rhs.degree()));
  Permutation out(degree());
  for (int i = 0; i < degree(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (int i = 0; i < degree(); ++i) out.images_[images_[i]] = i;
  return out;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g.inverse() * x * g;
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return x.inverse() * y.inverse() * x * y;
}

Permutation parse_cycle_notation(std::string_view text, int degree) {
  if (degree < 1) throw PointOutOfRange("permutation degree must be >= 1");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);  // points already placed in some cycle

  size_t i = 0;
  auto skip_separators = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_separators();
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedCycle("expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> cycle;  // 0-based points, in cycle order
    skip_separators();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedCycle(std::string("unexpected character '") + text[i] +
                             "' inside cycle");
      long point = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        point = point * 10 + (text[i] - '0');
        if (point > degree)
          throw PointOutOfRange("point " + std::to_string(point) +
                                " exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (point < 1)
        throw PointOutOfRange("points are 1-based; got " + std::to_string(point));
      const int p = static_cast<int>(point) - 1;
      if (used[p])
        throw RepeatedPoint("point " + std::to_string(point) +
                            " appears more than once");
      used[p] = 1;
      cycle.push_back(p);
      skip_separators();
    }
    if (i >= text.size()) throw MalformedCycle("unclosed cycle");
    ++i;  // consume ')'
    for (size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k]] = cycle[k + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_separators();
  }
  return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> visited(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (visited[start] || p.image_of(start) == start) continue;
    out += '(';
    int point = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(point + 1);
      visited[point] = 1;
      point = p.image_of(point);
      first = false;
    } while (point != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace focal
