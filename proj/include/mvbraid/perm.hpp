#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvbraid/word.hpp"

namespace mvbraid {

// A permutation of {1..n}.  Points act on the right: (k)(p*q) = ((k)p)q.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  // images[i-1] is the image of point i.
  static Permutation from_images(std::vector<int> images);
  // Product of the given cycles on n points, e.g. transposition(n, {i, i+1}).
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int a, int b) { return from_cycles(n, {{a, b}}); }
  // "(1 2)(3 4)" or "()" for cycle notation, "[2,1,3]" for one-line notation.
  static Permutation parse(std::string_view text, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  std::span<const int> images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;
  // Apply *this first, then q.
  Permutation operator*(const Permutation& q) const;

  // Cycle notation with each cycle starting at its least point.
  std::string str() const;
  std::string one_line() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

class DegreeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PermMap = std::map<GeneratorId, Permutation>;

// Left-to-right product of the images; identity of degree `degree` for the
// empty word.  Throws MissingImage or DegreeMismatch.
Permutation evaluate(const Word& w, const PermMap& images, int degree);
Permutation evaluate(const Word& w, const PermMap& images);

// All n! permutations in lexicographic order of their image arrays.
std::vector<Permutation> enumerate_symmetric(int n);
// Position of p in enumerate_symmetric(p.degree()).
std::size_t lex_rank(const Permutation& p);

}  // namespace mvbraid
