#include "mvbraid/tietze.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "mvbraid/reidemeister_schreier.hpp"

namespace mvbraid {

Word solve_for(const Relator& defining, const GeneratorId& g) {
  const auto& ls = defining.word().letters();
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen != g) continue;
    if (at) throw TietzeError(g.str() + " occurs more than once in " + defining.str());
    at = i;
  }
  if (!at) throw TietzeError(g.str() + " does not occur in " + defining.str());
  // Rotate so g comes first: g^e w = 1.
  std::vector<Letter> rest(ls.begin() + static_cast<std::ptrdiff_t>(*at) + 1, ls.end());
  rest.insert(rest.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(*at));
  Word w(std::move(rest));
  return ls[*at].exp > 0 ? invert(w) : w;
}

namespace {

// Substitutes g := value in every relator; nullopt if some result exceeds
// the ceiling.
std::optional<Presentation> substitute_generator(const Presentation& p, const GeneratorId& g, const Relator& defining,
                                                 const Word& value, std::size_t ceiling) {
  WordMap images{{g, value}};
  std::vector<Relator> rs;
  rs.reserve(p.relators().size());
  bool skipped = false;
  for (const auto& r : p.relators()) {
    if (!skipped && r == defining) {
      skipped = true;
      continue;
    }
    Relator nr(substitute_partial(r.word(), images));
    if (nr.size() > ceiling) return std::nullopt;
    rs.push_back(std::move(nr));
  }
  std::vector<GeneratorId> gens;
  for (const auto& h : p.generators())
    if (h != g) gens.push_back(h);
  return Presentation(p.name(), std::move(gens), std::move(rs));
}

// Later-declared generator occurring exactly once in r, if any.
std::optional<GeneratorId> single_occurrence(const Presentation& p, const Relator& r) {
  std::map<GeneratorId, int> count;
  for (const auto& l : r.word()) ++count[l.gen];
  std::optional<GeneratorId> best;
  int best_index = -1;
  for (const auto& [g, c] : count) {
    if (c != 1) continue;
    int idx = p.generator_index(g);
    if (idx > best_index) {
      best_index = idx;
      best = g;
    }
  }
  return best;
}

}  // namespace

Presentation eliminate_generator(const Presentation& p, const GeneratorId& g, const Relator& defining) {
  if (!p.has_generator(g)) throw TietzeError(g.str() + " is not a generator of " + p.name());
  if (std::find(p.relators().begin(), p.relators().end(), defining) == p.relators().end())
    throw TietzeError(defining.str() + " is not a relator of " + p.name());
  auto q = substitute_generator(p, g, defining, solve_for(defining, g), static_cast<std::size_t>(-1));
  return *q;
}

SimplifyResult simplify(const Presentation& p, int budget, std::size_t length_ceiling) {
  SimplifyResult res;
  res.presentation = normalised(p);
  auto eliminate = [&](const Relator& r, const GeneratorId& g) {
    Word value = solve_for(r, g);
    auto q = substitute_generator(res.presentation, g, r, value, length_ceiling);
    if (!q) {
      res.length_ceiling_hit = true;
      return false;
    }
    res.presentation = std::move(*q);
    res.eliminations.push_back({g, std::move(value)});
    return true;
  };

  while (true) {
    if (res.passes >= budget) {
      res.budget_exhausted = true;
      break;
    }
    ++res.passes;
    bool changed = false;

    // Short relators, length 1 before length 2.
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t len = 1; len <= 2 && !again; ++len)
        for (const auto& r : res.presentation.relators()) {
          if (r.size() != len) continue;
          auto g = single_occurrence(res.presentation, r);
          if (!g) continue;
          Relator keep = r;
          if (!eliminate(keep, *g)) return res;
          again = changed = true;
          break;
        }
    }

    const Relator* best = nullptr;
    GeneratorId best_gen;
    for (const auto& r : res.presentation.relators()) {
      if (best && r.size() >= best->size()) continue;
      if (auto g = single_occurrence(res.presentation, r)) {
        best = &r;
        best_gen = *g;
      }
    }
    if (best) {
      Relator keep = *best;
      if (!eliminate(keep, best_gen)) return res;
      changed = true;
    }
    if (!changed) break;
  }
  return res;
}

Word apply_eliminations(const Word& w, const std::vector<Elimination>& eliminations) {
  Word cur = w;
  for (const auto& e : eliminations) cur = substitute_partial(cur, WordMap{{e.gen, e.value}});
  return cur;
}

std::vector<DictionaryMatch> match_dictionary(const Presentation& p, const Dictionary& d, const CosetTable& t,
                                              const Transversal& tr, const std::vector<Elimination>& eliminations) {
  std::vector<DictionaryMatch> out;
  std::set<GeneratorId> used;
  for (const auto& e : d) {
    Word image;
    try {
      image = apply_eliminations(tau_rewrite(e.expansion, t, tr), eliminations);
    } catch (const NotInSubgroup& ex) {
      throw DictionaryError(e.name, "expansion " + e.expansion.str() + " is not in the subgroup");
    } catch (const MissingImage& ex) {
      throw DictionaryError(e.name, ex.what());
    }
    if (image.size() != 1) throw DictionaryError(e.name, "rewrites to " + image.str() + ", not a single generator");
    const auto& l = image[0];
    if (!p.has_generator(l.gen)) throw DictionaryError(e.name, "rewrites to " + l.gen.str() + ", not a generator");
    if (!used.insert(l.gen).second) throw DictionaryError(e.name, l.gen.str() + " is already named");
    out.push_back({e.name, l.gen, l.exp});
  }
  return out;
}

Presentation rename_generators(const Presentation& p, const std::vector<DictionaryMatch>& matches) {
  WordMap images;
  std::vector<GeneratorId> gens;
  std::set<GeneratorId> matched;
  for (const auto& m : matches) {
    images[m.symbol] = m.exp > 0 ? Word::of(m.name) : invert(Word::of(m.name));
    gens.push_back(m.name);
    matched.insert(m.symbol);
  }
  for (const auto& g : p.generators())
    if (!matched.count(g)) gens.push_back(g);
  std::vector<Relator> rs;
  rs.reserve(p.relators().size());
  for (const auto& r : p.relators()) rs.emplace_back(substitute_partial(r.word(), images));
  return Presentation(p.name(), std::move(gens), std::move(rs));
}

Presentation apply_dictionary(const Presentation& p, const Dictionary& d, const CosetTable& t, const Transversal& tr,
                              const std::vector<Elimination>& eliminations) {
  return rename_generators(p, match_dictionary(p, d, t, tr, eliminations));
}

std::string RelatorDiff::str() const {
  std::ostringstream os;
  for (const auto& g : generators_only_left) os << "generator only in left: " << g.str() << "\n";
  for (const auto& g : generators_only_right) os << "generator only in right: " << g.str() << "\n";
  for (const auto& r : only_left) os << "- " << r.str() << "\n";
  for (const auto& r : only_right) os << "+ " << r.str() << "\n";
  if (equal()) os << "equal\n";
  return os.str();
}

RelatorDiff relator_diff(const Presentation& p, const Presentation& q) {
  RelatorDiff d;
  auto gp = generator_set(p), gq = generator_set(q);
  std::set_difference(gp.begin(), gp.end(), gq.begin(), gq.end(), std::back_inserter(d.generators_only_left));
  std::set_difference(gq.begin(), gq.end(), gp.begin(), gp.end(), std::back_inserter(d.generators_only_right));
  auto rp = relator_multiset(p), rq = relator_multiset(q);
  std::set_difference(rp.begin(), rp.end(), rq.begin(), rq.end(), std::back_inserter(d.only_left));
  std::set_difference(rq.begin(), rq.end(), rp.begin(), rp.end(), std::back_inserter(d.only_right));
  return d;
}

Presentation involution_normal_form(const Presentation& p) {
  std::set<GeneratorId> involutions;
  for (const auto& r : p.relators())
    if (r.size() == 2 && r.word()[0] == r.word()[1]) involutions.insert(r.word()[0].gen);
  if (involutions.empty()) return p;
  std::vector<Relator> rs;
  for (const auto& r : p.relators()) {
    if (r.size() == 2 && involutions.count(r.word()[0].gen) && r.word()[0] == r.word()[1]) {
      rs.push_back(r);
      continue;
    }
    std::vector<Letter> ls(r.word().begin(), r.word().end());
    for (auto& l : ls)
      if (involutions.count(l.gen)) l.exp = 1;
    // Cancel g g pairs (cyclically) for involutions.
    std::vector<Letter> out;
    for (const auto& l : ls) {
      if (!out.empty() && involutions.count(l.gen) && out.back() == l) out.pop_back();
      else out.push_back(l);
    }
    while (out.size() >= 2 && involutions.count(out.front().gen) && out.front() == out.back()) {
      out.erase(out.begin());
      out.pop_back();
    }
    rs.emplace_back(Word(out));
  }
  return Presentation(p.name(), p.generators(), rs);
}

bool ComponentReport::ok() const {
  if (!uncovered.empty()) return false;
  for (const auto& f : factors)
    if (!f.matched) return false;
  return true;
}

std::string ComponentReport::str() const {
  std::ostringstream os;
  os << components << " components\n";
  for (const auto& f : factors) {
    os << f.factor << ": " << (f.matched ? "matched" : "not matched") << " by components [";
    for (std::size_t i = 0; i < f.components.size(); ++i) os << (i ? "," : "") << f.components[i];
    os << "]\n";
    if (!f.matched) {
      std::istringstream lines(f.diff.str());
      for (std::string line; std::getline(lines, line);) os << "  " << line << "\n";
    }
  }
  for (auto c : uncovered) os << "component " << c << " not covered by any factor\n";
  for (const auto& r : renamed_matches) os << r << "\n";
  return os.str();
}

namespace {

std::optional<std::map<GeneratorId, GeneratorId>> renaming_match(const Presentation& c, const Presentation& f) {
  constexpr std::size_t max_generators = 8;
  auto from = c.generators();
  auto to = f.generators();
  if (from.size() != to.size() || from.size() > max_generators) return std::nullopt;
  auto target = involution_normal_form(f);
  std::sort(to.begin(), to.end());
  do {
    std::map<GeneratorId, GeneratorId> names;
    for (std::size_t i = 0; i < from.size(); ++i) names[from[i]] = to[i];
    if (relator_diff(involution_normal_form(relabel(c, names)), target).equal()) return names;
  } while (std::next_permutation(to.begin(), to.end()));
  return std::nullopt;
}

}  // namespace

ComponentReport match_components(const Presentation& p, const std::vector<Presentation>& factors) {
  ComponentReport rep;
  auto comps = support_components(p);
  rep.components = comps.size();
  std::vector<bool> used(comps.size(), false);
  for (const auto& f : factors) {
    FactorMatch m;
    m.factor = f.name();
    auto fg = generator_set(f);
    std::vector<GeneratorId> gens;
    std::vector<Relator> rels;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto cg = generator_set(comps[c]);
      if (!std::includes(fg.begin(), fg.end(), cg.begin(), cg.end())) continue;
      m.components.push_back(c);
      used[c] = true;
      gens.insert(gens.end(), comps[c].generators().begin(), comps[c].generators().end());
      rels.insert(rels.end(), comps[c].relators().begin(), comps[c].relators().end());
    }
    Presentation u(f.name(), gens, rels);
    m.diff = relator_diff(involution_normal_form(u), involution_normal_form(f));
    m.matched = !m.components.empty() && m.diff.equal();
    rep.factors.push_back(std::move(m));
  }
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (!used[c]) rep.uncovered.push_back(c);
  for (auto c : rep.uncovered)
    for (const auto& f : factors)
      if (auto names = renaming_match(comps[c], f)) {
        std::ostringstream os;
        os << "component " << c << " equals " << f.name() << " after renaming";
        for (const auto& [from, to] : *names) os << " " << from.str() << "->" << to.str();
        rep.renamed_matches.push_back(os.str());
      }
  return rep;
}

}  // namespace mvbraid
