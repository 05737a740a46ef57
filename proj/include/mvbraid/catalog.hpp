#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mvbraid/perm.hpp"
#include "mvbraid/presentation.hpp"
#include "mvbraid/tietze.hpp"

namespace mvbraid {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogKey {
  std::string key;
  bool uses_n;      // false for the fixed three-strand entries
  bool uses_k;
  int min_k;        // smallest admissible k when uses_k
  std::string description;
};

const std::vector<CatalogKey>& catalog_keys();

struct CatalogEntry {
  std::string key;
  int n = 0;
  int k = 0;
  Presentation presentation;
  std::string description;
};

// Keys without n or k ignore those arguments.
CatalogEntry build(const std::string& key, int n = 0, int k = 0);

// Relator families of the forbidden relations F1, F2, F3 for M_kVB_n.
std::vector<Relator> forbidden_relators(const std::string& family, int n, int k);

// Relations added to M_kVB_n in the symmetric group, by family:
//   sigma: s_i r^a_{i+1} r^a_i = r^a_{i+1} r^a_i s_{i+1}, a >= 1
//   aab:   r^a_i r^a_{i+1} r^b_i = r^b_{i+1} r^a_i r^a_{i+1}, 0 < a < b
//   abb:   r^a_i r^b_{i+1} r^b_i = r^b_{i+1} r^b_i r^a_{i+1}, 0 <= a < b
// aab and abb together are F3.
std::vector<Relator> symmetric_relators(const std::string& family, int n, int k);

// Relations claimed for the kernels of the quotient groups on top of the
// kernel presentation.  Keys: sym-MkVP, sym-MkVH, MkWP, MkUP, MkWH, MkUH.
std::vector<Relator> claimed_extra_relators(const std::string& key, int n, int k);

// lambda(i,j,a) as a word; for a >= 1 only i < j is a generator and
// lambda(j,i,a) stands for its inverse.  Likewise for x.
Word lambda_word(int i, int j, int a);
Word x_word(int i, int j, int a);

// Homomorphisms onto S_n.
struct PermHom {
  std::string key;
  int degree = 0;
  PermMap images;
};

// Homomorphisms between catalog presentations, given on generators.
struct WordHom {
  std::string key;
  std::string source, target;  // catalog keys
  int source_n = 0, source_k = 0, target_n = 0, target_k = 0;
  WordMap images;
};

using HomSpec = std::variant<PermHom, WordHom>;

// phi, psi, chi3, chi4, rho-only: onto S_n from M_kVB_n (and its quotients).
// psi1/iota1, psi2/iota2, psi3/iota3: the maps and sections between
// M_kVB_n and VB_n, FVB_n, M_{k-1}VB_n.  psi3 goes from M_{k+1}VB_n.
HomSpec build_hom(const std::string& key, int n, int k);
PermHom build_perm_hom(const std::string& key, int n, int k);
WordHom build_word_hom(const std::string& key, int n, int k);

// Keys: MkVP, MkVH, VP, VH, MVP3, MVH3, MVQ3, MVC3.
Dictionary build_dictionary(const std::string& key, int n = 0, int k = 0);

}  // namespace mvbraid
