#pragma once

#include <string>
#include <vector>

#include "mvbraid/coset_table.hpp"
#include "mvbraid/perm.hpp"
#include "mvbraid/presentation.hpp"
#include "mvbraid/tietze.hpp"

namespace mvbraid {

struct RelatorImage {
  Relator relator;
  Permutation image;
};

struct WellDefinedReport {
  std::size_t checked = 0;
  std::vector<RelatorImage> failures;

  bool ok() const { return failures.empty(); }
  std::string str() const;
};

// Evaluates every relator in S_n.  Throws MissingImage if a generator has
// no image.
WellDefinedReport check_well_defined(const Presentation& p, const PermMap& images, int degree);

struct RetractionFailure {
  GeneratorId gen;
  Word image;  // proj(incl(gen)), freely reduced
};

struct RetractionReport {
  std::size_t checked = 0;
  std::vector<RetractionFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string str() const;
};

// proj(incl(g)) == g for every generator g of source, as free words.
RetractionReport check_retraction(const WordMap& proj, const WordMap& incl, const Presentation& source);

struct WordHomReport {
  std::size_t checked = 0;
  // (source relator, image) pairs whose image is neither trivial nor a
  // relator of the target.
  std::vector<std::pair<Relator, Relator>> unresolved;

  bool ok() const { return unresolved.empty(); }
  std::string str() const;
};

// Sufficient syntactic test that a word map defines a homomorphism.
WordHomReport check_word_hom(const Presentation& source, const WordMap& images, const Presentation& target);

struct ActionMismatch {
  Word conjugator;
  GeneratorId gen;
  std::string expected;  // e.g. "l1.3" or "l1.2.1^-1"
  std::string why;
};

struct ActionReport {
  std::size_t checked = 0;
  std::vector<ActionMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string str() const;
};

// For every transversal word a and dictionary entry g(i,j,...) checks that
// tau(a^-1 g a), pushed through the eliminations, equals the tau-image of
// the entry whose first two indices are permuted by the image of a.  When
// only the swapped entry exists (i < j families) its inverse is expected.
ActionReport verify_action(const CosetTable& t, const Transversal& tr, const Dictionary& d, const PermMap& images,
                           int degree, const std::vector<Elimination>& eliminations);

}  // namespace mvbraid
