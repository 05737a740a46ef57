#include <random>

#include "doctest.h"
#include "mvbraid/word.hpp"

using namespace mvbraid;

namespace {

Word w(const char* text) { return Word::parse(text); }

Word random_word(std::mt19937& rng, int len) {
  static const std::vector<GeneratorId> gens{GeneratorId::sigma(1), GeneratorId::sigma(2), GeneratorId::rho(1),
                                             GeneratorId::tau(2)};
  std::uniform_int_distribution<int> pick(0, 3), sign(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({gens[static_cast<std::size_t>(pick(rng))], sign(rng) ? 1 : -1});
  return Word(ls);
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w("s1 s1^-1").empty());
  CHECK(w("r1 r1").size() == 2);
  CHECK(w("r2 r1 s1^-1 r2") == Word({{GeneratorId::rho(2), 1},
                                     {GeneratorId::rho(1), 1},
                                     {GeneratorId::sigma(1), -1},
                                     {GeneratorId::rho(2), 1}}));
  CHECK(w("s1 s2 s2^-1 s1^-1 r1").str() == "r1");
}

TEST_CASE("invert") {
  CHECK(invert(Word()).empty());
  CHECK(invert(w("s1 r1")) == w("r1^-1 s1^-1"));
  CHECK(invert(w("r1 s1^-1")) == w("s1 r1^-1"));
}

TEST_CASE("substitute") {
  WordMap images{{GeneratorId::lambda(1, 2), w("r1 s1^-1")}};
  CHECK(substitute(w("l1.2"), images) == w("r1 s1^-1"));
  WordMap mu{{GeneratorId::mu(2, 1), w("r1.1 r1")}, {GeneratorId::mu(1, 2), w("r1 r1.1")}};
  CHECK(substitute(w("m2.1 m1.2"), mu) == w("r1.1 r1 r1 r1.1"));
  CHECK_THROWS_AS(substitute(w("m1.3"), mu), MissingImage);
  CHECK(substitute_partial(w("m1.3 m1.2"), mu) == w("m1.3 r1 r1.1"));
}

TEST_CASE("canonical relators") {
  CHECK(Relator(w("s1 s1^-1 s2")) == Relator(w("s2")));
  CHECK(Relator(w("s1 s2 s1^-1")) == Relator(w("s2")));
  auto braid = Relator::parse("s1 s2 s1 s2^-1 s1^-1 s2^-1");
  CHECK(braid == Relator::parse("s2 s1 s2^-1 s1^-1 s2^-1 s1"));
  CHECK(braid == Relator(invert(braid.word())));
  CHECK(braid == relation("s1 s2 s1", "s2 s1 s2"));
  CHECK(braid.word()[0].gen == GeneratorId::sigma(1));
}

TEST_CASE("generator syntax") {
  CHECK(parse_generator("s1") == GeneratorId::sigma(1));
  CHECK(parse_generator("r2") == GeneratorId::rho(2, 0));
  CHECK(parse_generator("r2.0") == GeneratorId::rho(2, 0));
  CHECK(parse_generator("r1.1") == GeneratorId::tau(1));
  CHECK(parse_generator("l1.3") == GeneratorId::lambda(1, 3, 0));
  CHECK(parse_generator("l1.2.1") == GeneratorId::lambda(1, 2, 1));
  CHECK(parse_generator("x3.2") == GeneratorId::x(3, 2));
  CHECK(parse_generator("m1.2") == GeneratorId::mu(1, 2));
  CHECK(parse_generator("y2.3") == GeneratorId::y(2, 3));
  CHECK(parse_generator("z1.3") == GeneratorId::z(1, 3));
  CHECK(GeneratorId::lambda(1, 2, 1).str() == "l1.2.1");
  CHECK(GeneratorId::rho(2).str() == "r2");
  auto s = GeneratorId::schreier(3, GeneratorId::sigma(1));
  CHECK(s.str() == "S[3;s1]");
  CHECK(parse_generator(s.str()) == s);
  CHECK(s.ambient() == GeneratorId::sigma(1));
  CHECK_THROWS_AS(Word::parse("s1 l2"), ParseError);
  CHECK_THROWS_AS(Word::parse("1x"), ParseError);
  CHECK(Word::parse("s1^2 r1^-2") == w("s1 s1 r1^-1 r1^-1"));
  CHECK(Word::parse("1").empty());
}

TEST_CASE("letter order follows the family rank") {
  CHECK(GeneratorId::sigma(9) < GeneratorId::rho(1));
  CHECK(GeneratorId::rho(1, 1) < GeneratorId::lambda(1, 2));
  CHECK(GeneratorId::lambda(3, 2) < GeneratorId::x(1, 2));
  CHECK(compare(Letter{GeneratorId::sigma(1), 1}, Letter{GeneratorId::sigma(1), -1}) < 0);
}

TEST_CASE("word properties on random input") {
  std::mt19937 rng(7);
  for (int c = 0; c < 300; ++c) {
    auto raw = random_word(rng, 12);
    auto u = free_reduce(raw.letters());
    CHECK(u.size() <= raw.size());
    CHECK(free_reduce(u.letters()) == u);
    CHECK(concat(u, invert(u)).empty());
    Relator r(u);
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::vector<Letter> rot(u.begin() + static_cast<long>(i), u.end());
      rot.insert(rot.end(), u.begin(), u.begin() + static_cast<long>(i));
      CHECK(Relator(Word(rot)) == r);
    }
    CHECK(Relator(invert(u)) == r);
    auto v = random_word(rng, 8);
    WordMap images{{GeneratorId::sigma(1), w("r1 s2")}, {GeneratorId::sigma(2), Word()},
                   {GeneratorId::rho(1), w("r1.1^-1")}, {GeneratorId::tau(2), w("s1 s1")}};
    CHECK(substitute(concat(u, v), images) == concat(substitute(u, images), substitute(v, images)));
  }
}
