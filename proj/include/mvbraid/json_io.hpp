// JSON forms of presentations, coset tables and reports.
#pragma once

#include <string>
#include <string_view>

#include "mvbraid/coset_table.hpp"
#include "mvbraid/homomorphism.hpp"
#include "mvbraid/invariants.hpp"
#include "mvbraid/presentation.hpp"
#include "mvbraid/tietze.hpp"

namespace mvbraid {

// {name, generators: [string], relators: [string]}
std::string presentation_to_json(const Presentation& p, int indent = 2);
// Relators are kept as given (raw), so validate() can inspect them.
Presentation presentation_from_json(std::string_view text);

// {degree, generators, action: {gen: [...], gen^-1: [...]}}
std::string coset_table_to_json(const CosetTable& t, int indent = 2);

std::string diff_to_json(const RelatorDiff& d, int indent = 2);
std::string abelian_to_json(const AbelianInvariants& a, int indent = 2);
std::string well_defined_to_json(const WellDefinedReport& r, int indent = 2);
std::string retraction_to_json(const RetractionReport& r, int indent = 2);
std::string action_to_json(const ActionReport& r, int indent = 2);

}  // namespace mvbraid
