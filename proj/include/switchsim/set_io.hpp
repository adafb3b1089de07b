#ifndef SWITCHSIM_SET_IO_HPP
#define SWITCHSIM_SET_IO_HPP

#include <string>

#include "switchsim/unitary_set.hpp"

namespace switchsim {

/// JSON encoding of a unitary set:
///   {"n", "d", "representation": "monomial"|"dense",
///    "unitaries": [...], "claimed_y", "omega_power"}
/// Monomial operators are {"perm": [...], "phases": [[re, im], ...]};
/// dense operators are {"rows": [[[re, im], ...], ...]}. claimed_y and
/// omega_power are null when absent. Mixed-representation sets are
/// written dense.
std::string set_to_json(const UnitarySet& set);

/// Parses the encoding above, checks the set invariants (dimensions,
/// unitarity) and throws std::invalid_argument on malformed input.
UnitarySet set_from_json(const std::string& text);

UnitarySet load_set_file(const std::string& path);
void save_set_file(const UnitarySet& set, const std::string& path);

}  // namespace switchsim

#endif
