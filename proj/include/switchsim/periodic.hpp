#ifndef SWITCHSIM_PERIODIC_HPP
#define SWITCHSIM_PERIODIC_HPP

#include <cstdint>
#include <vector>

#include "switchsim/protocol.hpp"

namespace switchsim {

/// Periodic phase assignment over the n! control labels: branch x picks
/// up omega^{g(x)}. The protocol run with such scalar branch phases
/// isolates the control-register interference of the discrimination
/// algorithm.
struct PhaseFunction {
    std::size_t n = 1;
    std::uint64_t r = 1;            // period; divides n!
    std::vector<std::uint64_t> g;   // one value per label, reduced mod n!
};

/// Validates r >= 1, r | n!, one value per label, and r-periodicity of
/// the values (mod n!); throws std::invalid_argument otherwise.
PhaseFunction make_phase_function(std::size_t n, std::uint64_t r,
                                  std::vector<std::uint64_t> values);

/// g(x) = x*y mod n!, the phase pattern of an exact property-y set;
/// period n!/gcd(y, n!).
PhaseFunction linear_phase_function(std::size_t n, std::uint64_t y);

/// g(x) = x mod r, the canonical r-periodic ramp. Requires r | n!.
PhaseFunction sawtooth_phase_function(std::size_t n, std::uint64_t r);

/// Uniform control, branch phases omega^{g(x)}, forward transform,
/// measurement. The output is supported on multiples of n!/r.
OutcomeDistribution run_with_phase_function(const PhaseFunction& pf);

/// Closed form for the probability of outcome 0 under the ramp
/// g(x) = x mod r: sin^2(pi r / N) / (r^2 sin^2(pi / N)); 1 for r = 1.
double analytic_p0(std::uint64_t r, std::uint64_t N);

/// Probability 1/r on each multiple of N/r — what textbook period
/// finding would ideally produce. Requires r | N.
OutcomeDistribution uniform_period_distribution(std::uint64_t r, std::uint64_t N);

/// Total variation distance (half the L1 distance).
double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b);

}  // namespace switchsim

#endif
