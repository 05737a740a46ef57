// Kernel derivation: coset table, transversal, Reidemeister-Schreier,
// Tietze simplification and dictionary naming in one place.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvbraid/catalog.hpp"
#include "mvbraid/coset_table.hpp"
#include "mvbraid/tietze.hpp"

namespace mvbraid {

struct Derivation {
  Presentation base;
  PermMap images;
  int degree = 0;
  CosetTable table;
  Transversal transversal;
  Presentation raw;  // straight out of Reidemeister-Schreier
  SimplifyResult simplified;
  Dictionary dictionary;
  std::vector<DictionaryMatch> matches;
  Presentation named;  // simplified, with dictionary names

  // An ambient word of the kernel, in the generators of `named`.
  Word rewrite(const Word& ambient) const;
  // Relators of `named` obtained from ambient relators via rewrite(), with
  // every conjugate by a transversal word.
  std::vector<Relator> rewrite_conjugates(const std::vector<Relator>& ambient) const;
};

struct DeriveOptions {
  TransversalStrategy transversal = TransversalStrategy::lambda;
  int budget = default_budget;
  std::size_t length_ceiling = default_length_ceiling;
};

Derivation derive(const Presentation& base, const PermMap& images, int degree, const Dictionary& dictionary,
                  const DeriveOptions& opts = {});

// Catalog-driven form.  The dictionary defaults to MkVP for phi, MkVH for
// psi, MVQ3 for chi3 and MVC3 for chi4; an empty key means none.
Derivation derive(const std::string& group, int n, int k, const std::string& map,
                  const std::optional<std::string>& dictionary = std::nullopt, const DeriveOptions& opts = {});

std::string default_dictionary(const std::string& map);

}  // namespace mvbraid
