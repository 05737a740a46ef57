#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "mvbraid/presentation.hpp"

namespace mvbraid {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
using Matrix = std::vector<std::vector<T>>;

using IntMatrix = Matrix<std::int64_t>;

// L * m * R = D with L, R unimodular and D diagonal, d1 | d2 | ...
struct SmithForm {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, nonnegative
  Matrix<BigInt> left, right, reduced;
  bool promoted = false;  // int64 overflowed and the computation was redone exactly
};

SmithForm smith_normal_form(const IntMatrix& m);

// Recomputes L * m * R and compares with the reduced matrix.
bool verify_smith(const IntMatrix& m, const SmithForm& s);

// Row per relator, column per generator: signed exponent sums.
IntMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // entries > 1, each dividing the next

  bool operator==(const AbelianInvariants&) const = default;
  // "Z^r ⊕ Z/d1 ⊕ ...", "Z" for rank 1, "0" for the trivial group.
  std::string str() const;
};

AbelianInvariants abelianization(const Presentation& p);

// Invariants of a direct sum.
AbelianInvariants direct_sum(const std::vector<AbelianInvariants>& parts);

}  // namespace mvbraid
