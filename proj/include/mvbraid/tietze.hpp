#pragma once

#include <string>
#include <vector>

#include "mvbraid/coset_table.hpp"
#include "mvbraid/presentation.hpp"

namespace mvbraid {

class TietzeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// g was removed and replaced by value, a word in the generators present at
// the time of the elimination.
struct Elimination {
  GeneratorId gen;
  Word value;
};

// Solves a relator with a single occurrence of g for g.
Word solve_for(const Relator& defining, const GeneratorId& g);

Presentation eliminate_generator(const Presentation& p, const GeneratorId& g, const Relator& defining);

inline constexpr int default_budget = 1000;
inline constexpr std::size_t default_length_ceiling = 512;

struct SimplifyResult {
  Presentation presentation;
  std::vector<Elimination> eliminations;
  int passes = 0;
  bool budget_exhausted = false;
  bool length_ceiling_hit = false;
};

// Each pass drops trivial and duplicate relators, eliminates through
// relators of length 1 or 2 until none is left, then eliminates once through
// the shortest relator with a single-occurrence generator.  Ties go to the
// earlier relator and, within it, the later-declared generator.
SimplifyResult simplify(const Presentation& p, int budget = default_budget,
                        std::size_t length_ceiling = default_length_ceiling);

// Rewrites a word over the original generators into the surviving ones.
Word apply_eliminations(const Word& w, const std::vector<Elimination>& eliminations);

struct DictionaryEntry {
  GeneratorId name;
  Word expansion;
};
using Dictionary = std::vector<DictionaryEntry>;

// name = symbol^exp in the simplified presentation.
struct DictionaryMatch {
  GeneratorId name;
  GeneratorId symbol;
  int exp = 1;
};

class DictionaryError : public std::runtime_error {
 public:
  DictionaryError(const GeneratorId& entry, const std::string& why)
      : std::runtime_error("dictionary entry " + entry.str() + ": " + why), entry(entry) {}
  GeneratorId entry;
};

// Locates each entry's tau-image among the generators of p (after the
// eliminations).  Throws DictionaryError when an image is not a single
// generator power or two entries hit the same generator.
std::vector<DictionaryMatch> match_dictionary(const Presentation& p, const Dictionary& d, const CosetTable& t,
                                              const Transversal& tr,
                                              const std::vector<Elimination>& eliminations = {});

// Renames matched generators; matched names come first in dictionary order,
// followed by unmatched generators in their original order.
Presentation rename_generators(const Presentation& p, const std::vector<DictionaryMatch>& matches);

Presentation apply_dictionary(const Presentation& p, const Dictionary& d, const CosetTable& t, const Transversal& tr,
                              const std::vector<Elimination>& eliminations = {});

struct RelatorDiff {
  std::vector<GeneratorId> generators_only_left, generators_only_right;
  std::vector<Relator> only_left, only_right;

  bool equal() const {
    return generators_only_left.empty() && generators_only_right.empty() && only_left.empty() && only_right.empty();
  }
  std::string str() const;
};

RelatorDiff relator_diff(const Presentation& p, const Presentation& q);
inline bool relator_sets_equal(const Presentation& p, const Presentation& q) { return relator_diff(p, q).equal(); }

// When g^2 is a relator, every g^-1 in the other relators is replaced by g
// and the result recanonicalised.  The presented group is unchanged.
Presentation involution_normal_form(const Presentation& p);

struct FactorMatch {
  std::string factor;
  std::vector<std::size_t> components;  // indices into support_components
  RelatorDiff diff;
  bool matched = false;
};

struct ComponentReport {
  std::size_t components = 0;
  std::vector<FactorMatch> factors;
  std::vector<std::size_t> uncovered;
  // Uncovered components equal to a factor after a bijective renaming of
  // generators (searched only up to 8 generators); informational.
  std::vector<std::string> renamed_matches;

  bool ok() const;
  std::string str() const;
};

// Each factor is compared with the union of the support components whose
// generators it contains, both sides in involution normal form.  Every
// component has to be used by some factor.
ComponentReport match_components(const Presentation& p, const std::vector<Presentation>& factors);

}  // namespace mvbraid
