#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mvbraid/word.hpp"

namespace mvbraid {

class Presentation {
 public:
  Presentation() = default;
  // Relators are canonicalised; trivial ones are dropped and duplicates
  // removed, keeping first occurrences.
  Presentation(std::string name, std::vector<GeneratorId> generators, const std::vector<Word>& relators);
  Presentation(std::string name, std::vector<GeneratorId> generators, std::vector<Relator> relators);

  // Builds without normalising, so validate() can report on raw input.
  static Presentation raw(std::string name, std::vector<GeneratorId> generators, std::vector<Relator> relators);

  const std::string& name() const { return name_; }
  const std::vector<GeneratorId>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }

  bool has_generator(const GeneratorId& g) const;
  // Position in declared order; -1 if absent.
  int generator_index(const GeneratorId& g) const;

  Presentation renamed(std::string name) const;
  Presentation with_relators(const std::vector<Relator>& extra) const;

  bool operator==(const Presentation&) const = default;

 private:
  std::string name_;
  std::vector<GeneratorId> generators_;
  std::vector<Relator> relators_;
};

struct ValidationReport {
  std::vector<std::pair<std::size_t, GeneratorId>> undeclared;  // (relator index, generator)
  std::vector<GeneratorId> duplicate_generators;
  std::vector<Relator> duplicate_relators;  // warnings; removed by normalised()
  std::size_t trivial_relators = 0;         // warnings

  bool ok() const { return undeclared.empty() && duplicate_generators.empty(); }
  bool clean() const { return ok() && duplicate_relators.empty() && trivial_relators == 0; }
  std::string str() const;
};

ValidationReport validate(const Presentation& p);
// Drops trivial and duplicate relators.
Presentation normalised(const Presentation& p);

// Connected components of the graph on generators with an edge whenever two
// generators occur in a common relator, each with the relators supported on
// it.  Components are ordered by their first generator in declared order.
std::vector<Presentation> support_components(const Presentation& p);

std::set<GeneratorId> generator_set(const Presentation& p);
std::multiset<Relator> relator_multiset(const Presentation& p);

// Renames generators; those absent from the map are kept.
Presentation relabel(const Presentation& p, const std::map<GeneratorId, GeneratorId>& names);

// Text form: "name = < g1, g2 | r1, r2 >".
std::string to_text(const Presentation& p);

}  // namespace mvbraid
