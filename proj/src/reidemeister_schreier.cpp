#include "mvbraid/reidemeister_schreier.hpp"

namespace mvbraid {

std::vector<SchreierSymbol> schreier_generators(const CosetTable& t, const Transversal& tr) {
  std::vector<SchreierSymbol> out;
  out.reserve(t.degree() * t.generators().size());
  for (std::size_t c = 0; c < t.degree(); ++c)
    for (std::size_t g = 0; g < t.generators().size(); ++g) {
      const auto& a = t.generators()[g];
      int d = t.act(static_cast<int>(c), g, 1);
      out.push_back({static_cast<int>(c), a,
                     concat({tr.rep(static_cast<int>(c)), Word::of(a), invert(tr.rep(d))})});
    }
  return out;
}

namespace {

// Symbol (c, a) is freely trivial iff rep(c) a rep(c.a)^-1 reduces to e.
bool freely_trivial(const CosetTable& t, const Transversal& tr, int c, std::size_t g) {
  const auto& rc = tr.rep(c);
  const auto& rd = tr.rep(t.act(c, g, 1));
  if (rd.size() != rc.size() + 1 && rc.size() != rd.size() + 1) return false;
  return concat({rc, Word::of(t.generators()[g]), invert(rd)}).empty();
}

}  // namespace

Word tau_rewrite(const Word& w, const CosetTable& t, const Transversal& tr) {
  std::vector<Letter> out;
  out.reserve(w.size());
  int c = 0;
  for (const auto& l : w) {
    int g = t.generator_index(l.gen);
    if (g < 0) throw MissingImage(l.gen);
    const auto gi = static_cast<std::size_t>(g);
    if (l.exp > 0) {
      if (!freely_trivial(t, tr, c, gi)) out.push_back({GeneratorId::schreier(c, l.gen), 1});
      c = t.act(c, gi, 1);
    } else {
      int d = t.act(c, gi, -1);
      if (!freely_trivial(t, tr, d, gi)) out.push_back({GeneratorId::schreier(d, l.gen), -1});
      c = d;
    }
  }
  if (c != 0) throw NotInSubgroup(c);
  return Word(std::move(out));
}

Word expand_symbols(const Word& w, const CosetTable& t, const Transversal& tr) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    const auto a = l.gen.ambient();
    const int c = l.gen.coset();
    const int d = t.act(c, Letter{a, 1});
    Word e = concat({tr.rep(c), Word::of(a), invert(tr.rep(d))});
    if (l.exp < 0) e = invert(e);
    out.insert(out.end(), e.begin(), e.end());
  }
  return Word(std::move(out));
}

std::vector<Relator> rewrite_relators(const std::vector<Relator>& relators, const CosetTable& t, const Transversal& tr) {
  std::vector<Relator> out;
  out.reserve(relators.size() * tr.size());
  for (const auto& lam : tr.reps()) {
    const Word lam_inv = invert(lam);
    for (const auto& r : relators) out.emplace_back(tau_rewrite(concat({lam, r.word(), lam_inv}), t, tr));
  }
  return out;
}

Presentation derive_subgroup_presentation(const Presentation& p, const CosetTable& t, const Transversal& tr) {
  std::vector<GeneratorId> gens;
  for (const auto& s : schreier_generators(t, tr))
    if (!s.trivial()) gens.push_back(s.id());
  return Presentation(p.name() + ".kernel", std::move(gens), rewrite_relators(p.relators(), t, tr));
}

}  // namespace mvbraid
