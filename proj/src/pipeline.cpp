#include "mvbraid/pipeline.hpp"

#include "mvbraid/reidemeister_schreier.hpp"

namespace mvbraid {

Word Derivation::rewrite(const Word& ambient) const {
  WordMap names;
  for (const auto& m : matches) names[m.symbol] = Word::of(m.name, m.exp);
  return substitute_partial(apply_eliminations(tau_rewrite(ambient, table, transversal), simplified.eliminations),
                            names);
}

std::vector<Relator> Derivation::rewrite_conjugates(const std::vector<Relator>& ambient) const {
  std::vector<Relator> out;
  for (const auto& a : transversal.reps())
    for (const auto& r : ambient) out.emplace_back(rewrite(concat({a, r.word(), invert(a)})));
  return out;
}

Derivation derive(const Presentation& base, const PermMap& images, int degree, const Dictionary& dictionary,
                  const DeriveOptions& opts) {
  Derivation d;
  d.base = base;
  d.images = images;
  d.degree = degree;
  d.dictionary = dictionary;
  d.table = kernel_coset_table(base, images, degree);
  d.transversal = schreier_transversal(d.table, opts.transversal, degree);
  d.raw = derive_subgroup_presentation(base, d.table, d.transversal);
  d.simplified = simplify(d.raw, opts.budget, opts.length_ceiling);
  d.matches = match_dictionary(d.simplified.presentation, dictionary, d.table, d.transversal,
                               d.simplified.eliminations);
  d.named = rename_generators(d.simplified.presentation, d.matches);
  return d;
}

std::string default_dictionary(const std::string& map) {
  if (map == "phi") return "MkVP";
  if (map == "psi") return "MkVH";
  if (map == "chi3") return "MVQ3";
  if (map == "chi4") return "MVC3";
  return "";
}

Derivation derive(const std::string& group, int n, int k, const std::string& map,
                  const std::optional<std::string>& dictionary, const DeriveOptions& opts) {
  auto entry = build(group, n, k);
  int hk = entry.k > 0 ? entry.k : 1;
  auto hom = build_perm_hom(map, entry.n, hk);
  std::string dkey = dictionary.value_or(default_dictionary(map));
  Dictionary dict;
  if (!dkey.empty()) dict = build_dictionary(dkey, entry.n, hk);
  return derive(entry.presentation, hom.images, entry.n, dict, opts);
}

}  // namespace mvbraid
