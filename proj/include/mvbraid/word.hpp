// Free-group words over an indexed generator alphabet.
//
// Text syntax (used by every CLI input and the JSON files):
//
//   word    := letter { ws letter } | "1" | ""
//   letter  := atom [ "^" ["-"] digits ]
//   atom    := family index { "." index }       e.g. s1  r2  r1.1  l1.3.0  m1.2
//            | "t" index                        alias for r<index>.1
//            | "S[" coset ";" atom "]"          Schreier symbol
//            | identifier                       user-defined generator (a, b, c1)
//
// Family letters: s sigma(i), r rho(i[,alpha]), l lambda(i,j[,alpha]),
// x x(i,j[,alpha]), m mu(i,j), y y(i,j), z z(i,j).  A power ^k with |k| > 1
// is expanded into |k| letters; ^0 is rejected.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mvbraid {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declaration order is the family rank used by the letter order.
enum class Family : std::uint8_t { sigma, rho, lambda, x, mu, y, z, schreier, user };

class GeneratorId {
 public:
  static constexpr std::size_t max_indices = 4;

  GeneratorId() = default;

  static GeneratorId sigma(int i) { return {Family::sigma, {i}}; }
  static GeneratorId rho(int i, int alpha = 0) { return {Family::rho, {i, alpha}}; }
  // Display alias of rho(i, 1).
  static GeneratorId tau(int i) { return rho(i, 1); }
  static GeneratorId lambda(int i, int j, int alpha = 0) { return {Family::lambda, {i, j, alpha}}; }
  static GeneratorId x(int i, int j, int alpha = 0) { return {Family::x, {i, j, alpha}}; }
  static GeneratorId mu(int i, int j) { return {Family::mu, {i, j}}; }
  static GeneratorId y(int i, int j) { return {Family::y, {i, j}}; }
  static GeneratorId z(int i, int j) { return {Family::z, {i, j}}; }
  static GeneratorId user(std::string name);
  // Schreier generator for (coset, ambient generator).
  static GeneratorId schreier(int coset, const GeneratorId& ambient);

  Family family() const { return family_; }
  std::size_t arity() const { return arity_; }
  int index(std::size_t k) const { return idx_.at(k); }
  const std::string& name() const { return name_; }

  // Schreier symbols only.
  int coset() const { return idx_[0]; }
  GeneratorId ambient() const;

  std::string str() const;
  auto operator<=>(const GeneratorId&) const = default;

 private:
  GeneratorId(Family f, std::initializer_list<int> indices);

  Family family_ = Family::user;
  std::uint8_t arity_ = 0;
  std::array<int, max_indices> idx_{};
  std::string name_;
};

struct Letter {
  GeneratorId gen;
  int exp = 1;  // exactly +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  bool cancels(const Letter& o) const { return exp == -o.exp && gen == o.gen; }
};

// Letter order: family rank, indices, name, then +1 before -1.
std::strong_ordering compare(const Letter& a, const Letter& b);
inline bool operator==(const Letter& a, const Letter& b) { return a.exp == b.exp && a.gen == b.gen; }

class Word {
 public:
  Word() = default;
  // Freely reduces the given letters.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word of(const GeneratorId& g, int exp = 1) { return Word({Letter{g, exp}}); }
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::string str() const;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Lexicographic in the letter order, shorter prefix first.
std::strong_ordering compare(const Word& a, const Word& b);
inline bool operator<(const Word& a, const Word& b) { return compare(a, b) < 0; }

Word free_reduce(std::vector<Letter> letters);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> parts);
// Exponent sum of g in w.
int exponent_sum(const Word& w, const GeneratorId& g);
// Number of letters of w on g, regardless of sign.
std::size_t occurrences(const Word& w, const GeneratorId& g);

class MissingImage : public std::runtime_error {
 public:
  explicit MissingImage(const GeneratorId& g)
      : std::runtime_error("no image for generator " + g.str()), gen(g) {}
  GeneratorId gen;
};

using WordMap = std::map<GeneratorId, Word>;

// Homomorphic image; throws MissingImage.
Word substitute(const Word& w, const WordMap& images);
// Like substitute but generators without an image map to themselves.
Word substitute_partial(const Word& w, const WordMap& images);

// A cyclically reduced word, normalised to the least rotation of itself or
// its inverse.  Two relators are equal iff they define the same cyclic word
// up to inversion.
class Relator {
 public:
  Relator() = default;
  explicit Relator(const Word& w);
  static Relator parse(std::string_view text) { return Relator(Word::parse(text)); }

  const Word& word() const { return word_; }
  bool trivial() const { return word_.empty(); }
  std::size_t size() const { return word_.size(); }
  std::string str() const { return word_.str(); }

  bool operator==(const Relator&) const = default;
  friend bool operator<(const Relator& a, const Relator& b) { return a.word_ < b.word_; }

 private:
  Word word_;
};

inline Relator canonical_relator(const Word& w) { return Relator(w); }
Word cyclic_reduce(const Word& w);

// Relator text for "lhs = rhs".
Relator relation(std::string_view lhs, std::string_view rhs);
Relator relation(const Word& lhs, const Word& rhs);

GeneratorId parse_generator(std::string_view token);

}  // namespace mvbraid
