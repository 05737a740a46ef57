// Named verification items shared by the CLI and the acceptance suite.
#pragma once

#include <string>
#include <vector>

#include "mvbraid/pipeline.hpp"

namespace mvbraid {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // multi-line, empty when there is nothing to add
};

// Derived kernel (named) against a catalog presentation.
CheckResult compare_kernel(const std::string& group, int n, int k, const std::string& map,
                           const std::string& dictionary, const std::string& against);

// phi/psi/chi3/chi4 well-defined on the given group.
CheckResult hom_well_defined(const std::string& hom, const std::string& group, int n, int k);

// The rho-only map on the symmetric group; ok when the check FAILS with a
// nontrivial image, as it should.
CheckResult rho_only_map_rejected(int n, int k);

// Pair 1: psi1/iota1 (VB_n), 2: psi2/iota2 (FVB_n), 3: psi3/iota3.
CheckResult retraction(int pair, int n, int k);

// Relators of the source map to relators (or the identity) of the target.
CheckResult word_hom(const std::string& key, int n, int k);

// Conjugation action over the whole transversal; map is phi or psi.
CheckResult action(const std::string& map, int n, int k);

// Three-strand k = 2 kernels against their stated decompositions.
CheckResult zoo_mvp3();
CheckResult zoo_mvh3();
CheckResult zoo_mvq3();
CheckResult zoo_mvc3();

// The extra relations of the symmetric group rewritten in the kernel
// generators (phi with lambda names or psi with x names) against the
// claimed families.
CheckResult symmetric_extras(const std::string& map, int n, int k);

// The mu (phi) or z (psi) relators of the symmetric three-strand kernel
// present Z^3: all three commutators occur and the abelianization is Z^3.
CheckResult symmetric_abelian_triple(const std::string& map);

// Kernels of the welded and unrestricted quotients against the stated
// relation lists.  Report mode: callers should not treat failures as fatal.
std::vector<CheckResult> quotient_reports(int n, int k);

// Everything above that applies to (n, k); quotient reports excluded.
std::vector<CheckResult> verify_all(int n, int k);

}  // namespace mvbraid
