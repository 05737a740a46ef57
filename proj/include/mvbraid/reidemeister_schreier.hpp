#pragma once

#include <vector>

#include "mvbraid/coset_table.hpp"
#include "mvbraid/presentation.hpp"

namespace mvbraid {

// The subgroup element rep(c) * a * rep(c.a)^-1.
struct SchreierSymbol {
  int coset = 0;
  GeneratorId gen;
  Word expansion;

  bool trivial() const { return expansion.empty(); }
  GeneratorId id() const { return GeneratorId::schreier(coset, gen); }
};

// One symbol per (coset, generator), cosets outermost.
std::vector<SchreierSymbol> schreier_generators(const CosetTable& t, const Transversal& tr);

class NotInSubgroup : public std::runtime_error {
 public:
  explicit NotInSubgroup(int coset)
      : std::runtime_error("word ends at coset " + std::to_string(coset) + ", not in the subgroup"), final_coset(coset) {}
  int final_coset;
};

// Rewrites a subgroup word over the ambient generators into Schreier
// symbols.  Letter a^+1 read at coset c contributes S[c;a]; a^-1 contributes
// S[d;a]^-1 where d is the coset after the letter.  Freely trivial symbols
// are omitted.
Word tau_rewrite(const Word& w, const CosetTable& t, const Transversal& tr);

// Replaces each Schreier symbol by its expansion (free reduction applied).
Word expand_symbols(const Word& w, const CosetTable& t, const Transversal& tr);

// Generators are the non-trivial symbols; relators are tau(rep * r * rep^-1)
// for every transversal word and base relator, in (transversal, relator)
// order, canonicalised and deduplicated.
Presentation derive_subgroup_presentation(const Presentation& p, const CosetTable& t, const Transversal& tr);

// tau-images of the conjugates of the given relators, without
// deduplication.
std::vector<Relator> rewrite_relators(const std::vector<Relator>& relators, const CosetTable& t, const Transversal& tr);

}  // namespace mvbraid
