#include "doctest.h"
#include "mvbraid/catalog.hpp"
#include "mvbraid/homomorphism.hpp"
#include "mvbraid/pipeline.hpp"

using namespace mvbraid;

TEST_CASE("maps onto S_n are well defined") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const char* h : {"phi", "psi"}) {
        auto rep = check_well_defined(build("MkVB", n, k).presentation, build_perm_hom(h, n, k).images, n);
        CHECK(rep.ok());
      }
  auto m = build("MkVB", 3, 2).presentation;
  auto phi = check_well_defined(m, build_perm_hom("phi", 3, 2).images, 3);
  CHECK(phi.checked == 9);
  for (const char* h : {"chi3", "chi4"}) CHECK(check_well_defined(m, build_perm_hom(h, 3, 2).images, 3).ok());
  for (const char* h : {"phi", "psi"})
    CHECK(check_well_defined(build("sym-MkVB", 3, 2).presentation, build_perm_hom(h, 3, 2).images, 3).ok());
}

TEST_CASE("the rho-only map fails on the symmetric group") {
  auto rep = check_well_defined(build("sym-MkVB", 3, 2).presentation, build_perm_hom("rho-only", 3, 2).images, 3);
  REQUIRE_FALSE(rep.ok());
  bool found = false;
  for (const auto& f : rep.failures) {
    CHECK_FALSE(f.image.is_identity());
    for (const auto& r : symmetric_relators("abb", 3, 2)) found = found || f.relator == r;
  }
  CHECK(found);
}

TEST_CASE("retractions") {
  for (int k = 2; k <= 3; ++k) {
    auto check = [&](const char* proj, const char* incl) {
      auto p = build_word_hom(proj, 3, k), i = build_word_hom(incl, 3, k);
      return check_retraction(p.images, i.images, build(i.source, i.source_n, i.source_k).presentation).ok();
    };
    CHECK(check("psi1", "iota1"));
    CHECK(check("psi2", "iota2"));
    CHECK(check("psi3", "iota3"));
  }
  auto vb = build("VB", 3).presentation;
  WordMap id;
  for (const auto& g : vb.generators()) id[g] = Word::of(g);
  CHECK(check_retraction(id, id, vb).ok());
  WordMap broken = id;
  broken[GeneratorId::sigma(1)] = Word::parse("s2");
  CHECK_FALSE(check_retraction(broken, id, vb).ok());
}

TEST_CASE("word homomorphisms respect relators") {
  for (const char* key : {"psi1", "iota1", "psi2", "iota2", "psi3", "iota3"}) {
    auto h = build_word_hom(key, 3, 2);
    CAPTURE(key);
    CHECK(check_word_hom(build(h.source, h.source_n, h.source_k).presentation, h.images,
                         build(h.target, h.target_n, h.target_k).presentation)
              .ok());
  }
}

TEST_CASE("conjugation action") {
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}})
    for (const char* map : {"phi", "psi"}) {
      auto d = derive("MkVB", n, k, map);
      auto rep = verify_action(d.table, d.transversal, d.dictionary, d.images, d.degree, d.simplified.eliminations);
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(map);
      CHECK(rep.ok());
      CHECK(rep.checked == d.transversal.size() * d.dictionary.size());
    }
}

TEST_CASE("lambda12 under rho2 and rho2 rho1") {
  auto d = derive("VB", 3, 0, "phi", std::string("VP"));
  auto conj = [&](const char* a) {
    auto aw = Word::parse(a);
    return d.rewrite(concat({invert(aw), Word::parse("r1 s1^-1"), aw}));
  };
  CHECK(conj("r2") == Word::parse("l1.3"));
  CHECK(conj("r2 r1") == Word::parse("l2.3"));
  CHECK(conj("1") == Word::parse("l1.2"));
}

TEST_CASE("the index action is a group action") {
  auto h = build_perm_hom("phi", 4, 1);
  auto words = lambda_words(4);
  for (const auto& a : words)
    for (const auto& b : words) {
      auto pa = evaluate(a, h.images, 4), pb = evaluate(b, h.images, 4), pab = evaluate(concat(a, b), h.images, 4);
      for (int i = 1; i <= 4; ++i) CHECK(pb(pa(i)) == pab(i));
    }
}
