#include <random>

#include "doctest.h"
#include "mvbraid/catalog.hpp"
#include "mvbraid/perm.hpp"

using namespace mvbraid;

TEST_CASE("evaluation acts on the right") {
  auto phi = build_perm_hom("phi", 3, 1);
  auto p = evaluate(Word::parse("s1 s2 s1"), phi.images, 3);
  CHECK(p == Permutation::transposition(3, 1, 3));
  CHECK(evaluate(Word(), phi.images, 3).is_identity());
  CHECK(evaluate(Word::parse("r1 r2 r1 r2^-1 r1^-1 r2^-1"), phi.images, 3).is_identity());
  // (1 2) then (2 3) sends 1 to 3.
  CHECK(evaluate(Word::parse("r1 r2"), phi.images, 3)(1) == 3);
}

TEST_CASE("permutation syntax") {
  CHECK(Permutation::parse("(1 2)(3 4)", 4).str() == "(1 2)(3 4)");
  CHECK(Permutation::parse("[2,3,1]", 3) == Permutation::from_cycles(3, {{1, 2, 3}}));
  CHECK(Permutation::identity(3).str() == "()");
  CHECK(Permutation::from_cycles(3, {{1, 2, 3}}).one_line() == "[2,3,1]");
}

TEST_CASE("enumerate symmetric") {
  CHECK(enumerate_symmetric(1).size() == 1);
  CHECK(enumerate_symmetric(2).size() == 2);
  auto s3 = enumerate_symmetric(3);
  REQUIRE(s3.size() == 6);
  for (std::size_t i = 0; i < s3.size(); ++i) CHECK(lex_rank(s3[i]) == i);
  for (std::size_t i = 1; i < s3.size(); ++i)
    CHECK(std::lexicographical_compare(s3[i - 1].images().begin(), s3[i - 1].images().end(), s3[i].images().begin(),
                                       s3[i].images().end()));
}

TEST_CASE("evaluate is a homomorphism") {
  auto h = build_perm_hom("phi", 4, 2);
  auto gens = build("MkVB", 4, 2).presentation.generators();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1), sign(0, 1), len(0, 10);
  auto random_word = [&] {
    std::vector<Letter> ls;
    for (int i = len(rng); i > 0; --i) ls.push_back({gens[static_cast<std::size_t>(pick(rng))], sign(rng) ? 1 : -1});
    return Word(ls);
  };
  for (int c = 0; c < 200; ++c) {
    auto u = random_word(), v = random_word();
    CHECK(evaluate(concat(u, v), h.images, 4) == evaluate(u, h.images, 4) * evaluate(v, h.images, 4));
  }
}
