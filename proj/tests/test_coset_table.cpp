#include "doctest.h"
#include "mvbraid/catalog.hpp"
#include "mvbraid/coset_table.hpp"

using namespace mvbraid;

namespace {

Word w(const char* text) { return Word::parse(text); }

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& x : ws) out.push_back(x.empty() ? "1" : x.str());
  return out;
}

}  // namespace

TEST_CASE("kernel tables") {
  auto vb2 = build("VB", 2).presentation;
  auto t = kernel_coset_table(vb2, build_perm_hom("phi", 2, 1).images, 2);
  REQUIRE(t.degree() == 2);
  CHECK(t.trace(w("s1")) == 1);
  CHECK(t.trace(w("r1")) == 1);
  CHECK(t.consistent_with(vb2));
  auto mvb = build("MkVB", 3, 2).presentation;
  CHECK(kernel_coset_table(mvb, build_perm_hom("phi", 3, 2).images, 3).degree() == 6);
  PermMap trivial;
  for (const auto& g : mvb.generators()) trivial[g] = Permutation::identity(3);
  CHECK(kernel_coset_table(mvb, trivial, 3).degree() == 1);
  CHECK_THROWS_AS(kernel_coset_table(build("sym-MkVB", 3, 2).presentation, build_perm_hom("rho-only", 3, 2).images, 3),
                  NotWellDefined);
}

TEST_CASE("Todd-Coxeter") {
  auto c2 = Presentation("C2", {GeneratorId::user("a")}, std::vector<Relator>{Relator::parse("a a")});
  CHECK(todd_coxeter(c2, {}).degree() == 2);
  auto s3 = build("S", 3).presentation;
  CHECK(todd_coxeter(s3, {}).degree() == 6);
  auto vb2 = build("VB", 2).presentation;
  auto tc = todd_coxeter(vb2, {w("r1 s1^-1"), w("s1^-1 r1")});
  auto kt = kernel_coset_table(vb2, build_perm_hom("phi", 2, 1).images, 2);
  CHECK(tc.degree() == 2);
  CHECK(tc.standardized() == kt.standardized());
  CHECK_THROWS_AS(todd_coxeter(s3, {}, 4), ResourceLimit);
}

TEST_CASE("Todd-Coxeter agrees with kernel tables") {
  for (const char* map : {"phi", "psi"})
    for (int n = 2; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k) {
        auto p = build("MkVB", n, k).presentation;
        std::vector<Word> gens;
        for (const auto& e : build_dictionary(std::string(map) == "phi" ? "MkVP" : "MkVH", n, k))
          gens.push_back(e.expansion);
        auto kt = kernel_coset_table(p, build_perm_hom(map, n, k).images, n);
        CHECK(todd_coxeter(p, gens).standardized() == kt.standardized());
      }
}

TEST_CASE("transversals") {
  auto t2 = kernel_coset_table(build("VB", 2).presentation, build_perm_hom("phi", 2, 1).images, 2);
  CHECK(strs(schreier_transversal(t2, TransversalStrategy::lambda, 2).reps()) ==
        std::vector<std::string>{"1", "r1"});
  auto vb3 = build("VB", 3).presentation;
  auto t3 = kernel_coset_table(vb3, build_perm_hom("phi", 3, 1).images, 3);
  auto lam = schreier_transversal(t3, TransversalStrategy::lambda, 3);
  std::vector<std::string> got = strs(lam.reps());
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{"1", "r1", "r1 r2", "r1 r2 r1", "r2", "r2 r1"};
  CHECK(got == want);
  CHECK(lambda_words(3).size() == 6);
  CHECK(is_schreier_transversal(t3, lam));
  CHECK(is_schreier_transversal(t3, schreier_transversal(t3, TransversalStrategy::bfs)));
  CHECK(representative(w("s1"), t2, schreier_transversal(t2, TransversalStrategy::lambda, 2)) == w("r1"));
  CHECK(representative(Word(), t3, lam).empty());
  CHECK(representative(w("r1 r2"), t3, lam) == w("r1 r2"));
  auto one = kernel_coset_table(vb3, build_perm_hom("psi", 3, 1).images, 3);
  (void)one;
  for (int n = 2; n <= 4; ++n) {
    auto t = kernel_coset_table(build("MkVB", n, 2).presentation, build_perm_hom("psi", n, 2).images, n);
    CHECK(is_schreier_transversal(t, schreier_transversal(t, TransversalStrategy::lambda, n)));
  }
}
