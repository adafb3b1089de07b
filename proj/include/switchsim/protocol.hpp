#ifndef SWITCHSIM_PROTOCOL_HPP
#define SWITCHSIM_PROTOCOL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "switchsim/rng.hpp"
#include "switchsim/state.hpp"
#include "switchsim/unitary_set.hpp"

namespace switchsim {

/// Two-register state: control over the n! order labels, then target.
using JointState = StateVector;

struct OutcomeDistribution {
    std::vector<double> probs;
};

/// Throws std::logic_error unless every probability is nonnegative
/// (within tol::support slack) and the total is 1 within tol::unitarity.
void check_distribution(const OutcomeDistribution& dist);

/// |control> tensor |target> over registers {control dim, target dim}.
JointState product_state(const std::vector<Complex>& control, const std::vector<Complex>& target);

/// Normalized state with independent complex-Gaussian amplitudes.
StateVector random_pure_state(std::size_t dim, Rng& rng);

/// The switch gate: control branch x applies the label-x composite of
/// the set's operators to the target register.
JointState n_switch_apply(const UnitarySet& set, JointState state);

enum class FourierDirection { forward, inverse };

/// Fourier transform over Z_M on the control register. The forward
/// direction carries weight omega^{-x*s}/sqrt(M) from input x to output
/// s; the inverse is its adjoint.
JointState qft_control(JointState state, FourierDirection direction);

/// Interference protocol on a pure target: uniform control, switch,
/// forward transform, control measurement statistics. For a set with
/// exact property y this is the point distribution on y regardless of
/// the target state.
OutcomeDistribution run_algorithm_pure(const UnitarySet& set, const StateVector& psi);

/// Same protocol with a maximally mixed target, realized exactly as the
/// uniform average of the pure runs over the d basis targets. Equals
/// the property-score vector of the set.
OutcomeDistribution run_algorithm_mixed(const UnitarySet& set);

/// Inverse-CDF sample.
std::uint64_t sample_outcome(const OutcomeDistribution& dist, Rng& rng);

/// Most frequent value; ties resolve to the lowest label.
std::uint64_t majority_vote(const std::vector<std::uint64_t>& outcomes);

/// Majority vote over `repetitions` fresh samples of dist.
std::uint64_t majority_vote_sample(const OutcomeDistribution& dist, std::size_t repetitions,
                                   Rng& rng);

/// Majority vote over seeded samples of the mixed-target run.
std::uint64_t majority_vote_run(const UnitarySet& set, std::size_t repetitions,
                                std::uint64_t seed);

/// Operator-use counts per control branch. The switch applies each
/// operator exactly once on every branch, so the counts factor out of
/// the superposition: one shared all-ones vector.
struct QueryLedger {
    std::map<std::uint64_t, std::vector<std::uint64_t>> branch_counts;
    bool flags_factorize = false;     // all supported branches share one count vector
    std::uint64_t total_queries = 0;  // sum of the shared vector; 0 when not factorizing
};

QueryLedger count_queries_switch(const UnitarySet& set, const StateVector& control);

}  // namespace switchsim

#endif
