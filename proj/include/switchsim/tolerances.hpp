#ifndef SWITCHSIM_TOLERANCES_HPP
#define SWITCHSIM_TOLERANCES_HPP

#include <cstddef>

namespace switchsim {

/// Central numeric tolerances. Every comparison in the library routes
/// through one of these so that verification thresholds stay consistent.
namespace tol {

/// Unit-modulus checks on monomial phases.
inline constexpr double phase_modulus = 1e-12;

/// Unitarity, norm preservation, and protocol probability checks.
inline constexpr double unitarity = 1e-9;

/// Cross-implementation (structured vs dense) equivalence checks.
inline constexpr double oracle = 1e-10;

/// Amplitudes below this are treated as empty branches.
inline constexpr double support = 1e-12;

}  // namespace tol

/// Score threshold for accepting a phase property from noisy data.
inline constexpr double property_threshold = 2.0 / 3.0;

/// Resource caps. Dense matrices are refused above dense_dim; flat
/// monomial vectors above flat_entries; state vectors above state_amps.
struct Budget {
    std::size_t dense_dim = 4096;
    std::size_t flat_entries = std::size_t{1} << 22;
    std::size_t state_amps = std::size_t{1} << 22;
};

}  // namespace switchsim

#endif
