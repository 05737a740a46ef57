#include "mvbraid/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mvbraid {

namespace {

std::vector<Relator> dedup(std::vector<Relator> rs) {
  std::vector<Relator> out;
  std::set<Relator> seen;
  for (auto& r : rs) {
    if (r.trivial() || !seen.insert(r).second) continue;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Presentation::Presentation(std::string name, std::vector<GeneratorId> generators, const std::vector<Word>& relators)
    : name_(std::move(name)), generators_(std::move(generators)) {
  std::vector<Relator> rs;
  rs.reserve(relators.size());
  for (const auto& w : relators) rs.emplace_back(w);
  relators_ = dedup(std::move(rs));
}

Presentation::Presentation(std::string name, std::vector<GeneratorId> generators, std::vector<Relator> relators)
    : name_(std::move(name)), generators_(std::move(generators)), relators_(dedup(std::move(relators))) {}

Presentation Presentation::raw(std::string name, std::vector<GeneratorId> generators, std::vector<Relator> relators) {
  Presentation p;
  p.name_ = std::move(name);
  p.generators_ = std::move(generators);
  p.relators_ = std::move(relators);
  return p;
}

bool Presentation::has_generator(const GeneratorId& g) const { return generator_index(g) >= 0; }

int Presentation::generator_index(const GeneratorId& g) const {
  auto it = std::find(generators_.begin(), generators_.end(), g);
  return it == generators_.end() ? -1 : static_cast<int>(it - generators_.begin());
}

Presentation Presentation::renamed(std::string name) const {
  Presentation p = *this;
  p.name_ = std::move(name);
  return p;
}

Presentation Presentation::with_relators(const std::vector<Relator>& extra) const {
  auto rs = relators_;
  rs.insert(rs.end(), extra.begin(), extra.end());
  return Presentation(name_, generators_, std::move(rs));
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& [ri, g] : undeclared) os << "error: relator " << ri << " uses undeclared generator " << g.str() << "\n";
  for (const auto& g : duplicate_generators) os << "error: duplicate generator " << g.str() << "\n";
  for (const auto& r : duplicate_relators) os << "warning: duplicate relator " << r.str() << "\n";
  if (trivial_relators) os << "warning: " << trivial_relators << " trivial relator(s)\n";
  if (clean()) os << "ok\n";
  return os.str();
}

ValidationReport validate(const Presentation& p) {
  ValidationReport rep;
  std::set<GeneratorId> declared;
  for (const auto& g : p.generators())
    if (!declared.insert(g).second) rep.duplicate_generators.push_back(g);
  std::set<Relator> seen;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto& r = p.relators()[i];
    // Raw input may hold non-canonical words.
    Relator canon(r.word());
    if (canon.trivial()) {
      ++rep.trivial_relators;
      continue;
    }
    if (!seen.insert(canon).second) rep.duplicate_relators.push_back(canon);
    std::set<GeneratorId> reported;
    for (const auto& l : r.word())
      if (!declared.contains(l.gen) && reported.insert(l.gen).second) rep.undeclared.emplace_back(i, l.gen);
  }
  return rep;
}

Presentation normalised(const Presentation& p) {
  std::vector<Relator> rs;
  for (const auto& r : p.relators()) rs.emplace_back(r.word());
  return Presentation(p.name(), p.generators(), std::move(rs));
}

std::vector<Presentation> support_components(const Presentation& p) {
  const auto& gens = p.generators();
  std::map<GeneratorId, std::size_t> pos;
  for (std::size_t i = 0; i < gens.size(); ++i) pos.emplace(gens[i], i);

  std::vector<std::size_t> parent(gens.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& r : p.relators()) {
    std::size_t first = gens.size();
    for (const auto& l : r.word()) {
      auto it = pos.find(l.gen);
      if (it == pos.end()) continue;
      if (first == gens.size()) {
        first = it->second;
        continue;
      }
      auto a = find(first), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::map<std::size_t, std::size_t> slot;  // root -> component position
  std::vector<std::vector<GeneratorId>> cg;
  std::vector<std::vector<Relator>> cr;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto [it, fresh] = slot.emplace(find(i), cg.size());
    if (fresh) {
      cg.emplace_back();
      cr.emplace_back();
    }
    cg[it->second].push_back(gens[i]);
  }
  for (const auto& r : p.relators()) {
    if (r.trivial()) continue;
    auto it = pos.find(r.word()[0].gen);
    if (it == pos.end()) continue;
    cr[slot.at(find(it->second))].push_back(r);
  }
  std::vector<Presentation> out;
  for (std::size_t c = 0; c < cg.size(); ++c)
    out.emplace_back(p.name() + "/" + std::to_string(c), std::move(cg[c]), std::move(cr[c]));
  return out;
}

std::set<GeneratorId> generator_set(const Presentation& p) {
  return {p.generators().begin(), p.generators().end()};
}

std::multiset<Relator> relator_multiset(const Presentation& p) {
  return {p.relators().begin(), p.relators().end()};
}

std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << p.name() << " = < ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) os << (i ? ", " : "") << p.generators()[i].str();
  os << " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) os << (i ? ", " : "") << p.relators()[i].str();
  os << " >";
  return os.str();
}

Presentation relabel(const Presentation& p, const std::map<GeneratorId, GeneratorId>& names) {
  WordMap images;
  std::vector<GeneratorId> gens;
  for (const auto& g : p.generators()) {
    auto it = names.find(g);
    gens.push_back(it == names.end() ? g : it->second);
    images[g] = Word::of(gens.back());
  }
  std::vector<Relator> rs;
  for (const auto& r : p.relators()) rs.emplace_back(substitute_partial(r.word(), images));
  return Presentation(p.name(), gens, rs);
}

}  // namespace mvbraid
