#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvbraid/perm.hpp"
#include "mvbraid/presentation.hpp"

namespace mvbraid {

inline constexpr std::size_t default_max_cosets = 10000;

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotWellDefined : public std::runtime_error {
 public:
  NotWellDefined(const Relator& r, const Permutation& image)
      : std::runtime_error("relator " + r.str() + " maps to " + image.str() + ", not the identity"),
        relator(r),
        image(image) {}
  Relator relator;
  Permutation image;
};

// Complete action of the generators (and inverses) of a presentation on the
// cosets of a finite-index subgroup.  Coset 0 is the subgroup.
class CosetTable {
 public:
  CosetTable() = default;
  // action[2*g] is the column of generator g, action[2*g+1] of its inverse.
  CosetTable(std::vector<GeneratorId> generators, std::vector<std::vector<int>> action);

  std::size_t degree() const { return degree_; }
  const std::vector<GeneratorId>& generators() const { return generators_; }
  int generator_index(const GeneratorId& g) const;

  int act(int coset, std::size_t gen, int exp) const {
    return action_[2 * gen + (exp > 0 ? 0 : 1)][static_cast<std::size_t>(coset)];
  }
  int act(int coset, const Letter& l) const;
  int trace(const Word& w, int from = 0) const;
  const std::vector<std::vector<int>>& columns() const { return action_; }

  // Checks inverse columns and that every relator closes at every coset.
  bool consistent_with(const Presentation& p) const;

  // Renumbering by breadth-first search from coset 0 visiting the columns in
  // declared order (g1, g1^-1, g2, ...).
  CosetTable standardized() const;

  bool operator==(const CosetTable&) const = default;

 private:
  std::vector<GeneratorId> generators_;
  std::vector<std::vector<int>> action_;
  std::size_t degree_ = 0;
};

// Cosets of the kernel of a homomorphism to S_n: the permutations reachable
// from the identity, indexed by lexicographic rank among them.  Throws
// NotWellDefined if some relator does not map to the identity.
CosetTable kernel_coset_table(const Presentation& p, const PermMap& images, int degree);

// The permutation represented by each coset of a kernel table.
std::vector<Permutation> kernel_coset_images(const Presentation& p, const PermMap& images, int degree);

// Hasse-Low-Todd-Coxeter enumeration with coincidence processing.  Throws
// ResourceLimit when more than max_cosets cosets are live at once.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        std::size_t max_cosets = default_max_cosets);

// Coset representatives; reps[c] traces from coset 0 to c.
class Transversal {
 public:
  Transversal() = default;
  explicit Transversal(std::vector<Word> reps) : reps_(std::move(reps)) {}
  const Word& rep(int coset) const { return reps_.at(static_cast<std::size_t>(coset)); }
  const std::vector<Word>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

 private:
  std::vector<Word> reps_;
};

enum class TransversalStrategy { bfs, lambda };

class IncompatibleTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The words prod_{k=2..n} m_{k,j_k}, m_{kl} = rho_{k-1} rho_{k-2} ... rho_l,
// in the order j_2, j_3, ... ascending with later factors varying fastest.
std::vector<Word> lambda_words(int n);

// bfs: shortest representatives, ties broken by column order.
// lambda: the words of lambda_words(n); needs rho(i,0) generators and
// a table whose cosets they hit bijectively.
Transversal schreier_transversal(const CosetTable& t, TransversalStrategy strategy, int n = 0);

// Every prefix of every representative is itself a representative, and
// each representative traces to its coset.
bool is_schreier_transversal(const CosetTable& t, const Transversal& tr);

Word representative(const Word& w, const CosetTable& t, const Transversal& tr);

}  // namespace mvbraid
