#include "mvbraid/homomorphism.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <sstream>

#include "mvbraid/reidemeister_schreier.hpp"

namespace mvbraid {

std::string WellDefinedReport::str() const {
  std::ostringstream os;
  os << "checked " << checked << " relators, " << failures.size() << " failing\n";
  for (const auto& f : failures) os << "  " << f.relator.str() << " -> " << f.image.str() << "\n";
  return os.str();
}

WellDefinedReport check_well_defined(const Presentation& p, const PermMap& images, int degree) {
  WellDefinedReport rep;
  for (const auto& r : p.relators()) {
    ++rep.checked;
    auto img = evaluate(r.word(), images, degree);
    if (!img.is_identity()) rep.failures.push_back({r, img});
  }
  return rep;
}

std::string RetractionReport::str() const {
  std::ostringstream os;
  os << "checked " << checked << " generators, " << failures.size() << " failing\n";
  for (const auto& f : failures) os << "  " << f.gen.str() << " -> " << f.image.str() << "\n";
  return os.str();
}

RetractionReport check_retraction(const WordMap& proj, const WordMap& incl, const Presentation& source) {
  RetractionReport rep;
  for (const auto& g : source.generators()) {
    ++rep.checked;
    auto it = incl.find(g);
    if (it == incl.end()) throw MissingImage(g);
    Word back = substitute(it->second, proj);
    if (back != Word::of(g)) rep.failures.push_back({g, back});
  }
  return rep;
}

std::string WordHomReport::str() const {
  std::ostringstream os;
  os << "checked " << checked << " relators, " << unresolved.size() << " unresolved\n";
  for (const auto& [r, img] : unresolved) os << "  " << r.str() << " -> " << img.str() << "\n";
  return os.str();
}

WordHomReport check_word_hom(const Presentation& source, const WordMap& images, const Presentation& target) {
  WordHomReport rep;
  std::set<Relator> known(target.relators().begin(), target.relators().end());
  for (const auto& r : source.relators()) {
    ++rep.checked;
    Relator img(substitute(r.word(), images));
    if (!img.trivial() && !known.count(img)) rep.unresolved.emplace_back(r, img);
  }
  return rep;
}

std::string ActionReport::str() const {
  std::ostringstream os;
  os << "checked " << checked << " pairs, " << mismatches.size() << " mismatches\n";
  for (const auto& m : mismatches)
    os << "  a=" << (m.conjugator.empty() ? "1" : m.conjugator.str()) << " g=" << m.gen.str() << " expected "
       << m.expected << ": " << m.why << "\n";
  return os.str();
}

namespace {

std::optional<GeneratorId> with_indices(const GeneratorId& g, int i, int j) {
  switch (g.family()) {
    case Family::lambda: return GeneratorId::lambda(i, j, g.index(2));
    case Family::x: return GeneratorId::x(i, j, g.index(2));
    case Family::mu: return GeneratorId::mu(i, j);
    case Family::y: return GeneratorId::y(i, j);
    case Family::z: return GeneratorId::z(i, j);
    default: return std::nullopt;
  }
}

Word image_in_kernel(const Word& w, const CosetTable& t, const Transversal& tr, const std::vector<Elimination>& elims) {
  return apply_eliminations(tau_rewrite(w, t, tr), elims);
}

}  // namespace

ActionReport verify_action(const CosetTable& t, const Transversal& tr, const Dictionary& d, const PermMap& images,
                           int degree, const std::vector<Elimination>& eliminations) {
  std::map<GeneratorId, Word> expansion;
  for (const auto& e : d) expansion[e.name] = e.expansion;
  std::map<GeneratorId, Word> target;
  for (const auto& e : d) target[e.name] = image_in_kernel(e.expansion, t, tr, eliminations);

  auto one = [&](const Word& a) {
    std::vector<ActionMismatch> out;
    const Permutation bar = evaluate(a, images, degree);
    for (const auto& e : d) {
      const auto& g = e.name;
      ActionMismatch m{a, g, "", ""};
      auto moved = with_indices(g, bar(g.index(0)), bar(g.index(1)));
      if (!moved) {
        m.why = "generator family has no index action";
        out.push_back(m);
        continue;
      }
      Word want;
      if (target.count(*moved)) {
        want = target[*moved];
        m.expected = moved->str();
      } else if (auto swapped = with_indices(g, moved->index(1), moved->index(0)); target.count(*swapped)) {
        want = invert(target[*swapped]);
        m.expected = swapped->str() + "^-1";
      } else {
        m.why = "no dictionary entry " + moved->str();
        out.push_back(m);
        continue;
      }
      Word got;
      try {
        got = image_in_kernel(concat({invert(a), e.expansion, a}), t, tr, eliminations);
      } catch (const NotInSubgroup& ex) {
        m.why = ex.what();
        out.push_back(m);
        continue;
      }
      if (got != want) {
        m.why = "got " + (got.empty() ? std::string("1") : got.str()) + ", want " +
                (want.empty() ? std::string("1") : want.str());
        out.push_back(m);
      }
    }
    return out;
  };

  std::vector<std::future<std::vector<ActionMismatch>>> jobs;
  for (const auto& a : tr.reps()) jobs.push_back(std::async(std::launch::async, one, a));
  ActionReport rep;
  for (auto& j : jobs) {
    auto part = j.get();
    rep.mismatches.insert(rep.mismatches.end(), part.begin(), part.end());
  }
  rep.checked = tr.size() * d.size();
  return rep;
}

}  // namespace mvbraid
