#include "doctest.h"
#include "mvbraid/catalog.hpp"
#include "mvbraid/reidemeister_schreier.hpp"
#include "mvbraid/tietze.hpp"

using namespace mvbraid;

namespace {

Word w(const char* text) { return Word::parse(text); }

struct Setup {
  Presentation p;
  CosetTable t;
  Transversal tr;
};

Setup setup(const std::string& group, int n, int k, const std::string& map) {
  Setup s;
  s.p = build(group, n, k).presentation;
  s.t = kernel_coset_table(s.p, build_perm_hom(map, n, k == 0 ? 1 : k).images, n);
  s.tr = schreier_transversal(s.t, TransversalStrategy::lambda, n);
  return s;
}

const SchreierSymbol& symbol(const std::vector<SchreierSymbol>& ss, int coset, const GeneratorId& g) {
  for (const auto& s : ss)
    if (s.coset == coset && s.gen == g) return s;
  throw std::logic_error("no such symbol");
}

}  // namespace

TEST_CASE("Schreier generators of the VB_2 kernel") {
  auto s = setup("VB", 2, 0, "phi");
  auto ss = schreier_generators(s.t, s.tr);
  CHECK(symbol(ss, 0, GeneratorId::rho(1)).trivial());
  CHECK(symbol(ss, 0, GeneratorId::sigma(1)).expansion == w("s1 r1^-1"));
  CHECK(symbol(ss, 0, GeneratorId::sigma(1)).expansion == invert(w("r1 s1^-1")));
}

TEST_CASE("index-one table") {
  auto p = build("B", 3).presentation;
  PermMap id;
  for (const auto& g : p.generators()) id[g] = Permutation::identity(3);
  auto t = kernel_coset_table(p, id, 3);
  auto tr = schreier_transversal(t, TransversalStrategy::bfs);
  for (const auto& s : schreier_generators(t, tr)) CHECK(s.expansion == Word::of(s.gen));
}

TEST_CASE("tau rewriting") {
  auto s = setup("MkVB", 2, 2, "phi");
  auto tau = tau_rewrite(w("r1.1 r1.1"), s.t, s.tr);
  CHECK(tau == Word({{GeneratorId::schreier(0, GeneratorId::tau(1)), 1},
                     {GeneratorId::schreier(1, GeneratorId::tau(1)), 1}}));
  CHECK(tau_rewrite(Word(), s.t, s.tr).empty());
  auto v = setup("VB", 2, 0, "phi");
  auto t2 = tau_rewrite(w("s1 r1"), v.t, v.tr);
  CHECK(t2 == Word({{GeneratorId::schreier(0, GeneratorId::sigma(1)), 1},
                    {GeneratorId::schreier(1, GeneratorId::rho(1)), 1}}));
  CHECK(expand_symbols(t2, v.t, v.tr) == w("s1 r1"));
  CHECK_THROWS_AS(tau_rewrite(w("s1"), v.t, v.tr), NotInSubgroup);
  // A -1 letter uses the coset after it.
  auto inv = tau_rewrite(w("r1^-1 s1^-1"), v.t, v.tr);
  CHECK(inv == Word({{GeneratorId::schreier(1, GeneratorId::rho(1)), -1},
                     {GeneratorId::schreier(0, GeneratorId::sigma(1)), -1}}));
  CHECK(inv == invert(t2));
}

TEST_CASE("tau is multiplicative and expands back") {
  auto s = setup("MkVB", 3, 2, "phi");
  std::vector<Word> elems;
  for (const auto& e : build_dictionary("MkVP", 3, 2)) elems.push_back(e.expansion);
  for (const auto& u : elems)
    for (const auto& v : elems) {
      auto uv = concat(u, v);
      CHECK(tau_rewrite(uv, s.t, s.tr) == concat(tau_rewrite(u, s.t, s.tr), tau_rewrite(v, s.t, s.tr)));
      CHECK(expand_symbols(tau_rewrite(uv, s.t, s.tr), s.t, s.tr) == uv);
    }
}

TEST_CASE("relator conjugates round-trip") {
  auto s = setup("MkVB", 3, 2, "psi");
  for (const auto& a : s.tr.reps())
    for (const auto& r : s.p.relators()) {
      auto conj = concat({a, r.word(), invert(a)});
      CHECK(expand_symbols(tau_rewrite(conj, s.t, s.tr), s.t, s.tr) == conj);
    }
}

TEST_CASE("derived presentation sizes") {
  auto s = setup("MkVB", 3, 2, "phi");
  auto d = derive_subgroup_presentation(s.p, s.t, s.tr);
  CHECK(d.relators().size() <= s.t.degree() * s.p.relators().size());
  std::size_t nontrivial = 0;
  for (const auto& sym : schreier_generators(s.t, s.tr)) nontrivial += !sym.trivial();
  CHECK(d.generators().size() == nontrivial);
  CHECK(nontrivial == 6 * 6 - 5);
  auto simp = simplify(d);
  CHECK(simp.presentation.generators().size() == 9);
  CHECK(simp.presentation.relators().size() == 7);
}

TEST_CASE("VB_2 kernel is free of rank 2") {
  auto s = setup("VB", 2, 0, "phi");
  auto d = derive_subgroup_presentation(s.p, s.t, s.tr);
  auto simp = simplify(d).presentation;
  CHECK(simp.generators().size() == 2);
  CHECK(simp.relators().empty());
}

TEST_CASE("VB_3 semi-pure kernel is VH_3") {
  auto s = setup("VB", 3, 0, "psi");
  auto d = derive_subgroup_presentation(s.p, s.t, s.tr);
  auto r = simplify(d);
  auto named = apply_dictionary(r.presentation, build_dictionary("VH", 3), s.t, s.tr, r.eliminations);
  CHECK(relator_diff(named, build("VH", 3).presentation).equal());
}
