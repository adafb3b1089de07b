#ifndef SWITCHSIM_CIRCUIT_HPP
#define SWITCHSIM_CIRCUIT_HPP

#include <cstdint>
#include <vector>

#include "switchsim/protocol.hpp"
#include "switchsim/state.hpp"
#include "switchsim/unitary_set.hpp"

namespace switchsim {

/// Step program of the fixed-order circuit: digits[k] is the operator
/// index routed to the target during block k. Tuples with repeats are
/// legal inputs; only all-distinct tuples encode an ordering label.
struct CircuitControl {
    std::size_t n = 1;
    std::vector<std::size_t> digits;

    bool encodes_permutation() const;
};

/// digits = the application order of label x.
CircuitControl label_to_control(std::uint64_t x, std::size_t n);

/// Inverse of label_to_control; throws for non-permutation tuples.
std::uint64_t control_to_label(const CircuitControl& control);

/// Flat index of the digit tuple with digit 0 slowest-varying.
std::size_t control_index(const CircuitControl& control);

/// One-hot state over the n^n digit space.
StateVector control_basis_state(const CircuitControl& control);

/// Output of the fixed-order circuit. Register layout: n digit
/// registers of size n, the target of size d, then n ancillae of size d.
struct CircuitState {
    std::size_t n = 1;
    std::size_t dim = 1;
    StateVector state;

    std::size_t digit_register(std::size_t k) const { return k; }
    std::size_t target_register() const { return n; }
    std::size_t ancilla_register(std::size_t i) const { return n + 1 + i; }
};

/// Simulates the fixed-order circuit: n blocks, where block k swaps the
/// target into the slot named by digit k, applies every U_i to slot i,
/// and swaps back. On permutation-encoding branches the target receives
/// the label's composite and each ancilla i receives U_i^(n-1),
/// independent of the branch. `control` is any state over the n^n digit
/// space (digit 0 slowest); ancillae default to |0> each.
CircuitState run_fixed_circuit(const UnitarySet& set, const StateVector& control,
                               const StateVector& psi, const std::vector<StateVector>& ancillae,
                               const Budget& budget = Budget{});
CircuitState run_fixed_circuit(const UnitarySet& set, const StateVector& control,
                               const StateVector& psi, const Budget& budget = Budget{});

struct AncillaVerdict {
    bool disentangled = false;  // ancilla block reduced state pure within tol::unitarity
    double fidelity = 0.0;      // largest eigenvalue of that reduced state
};

/// Purity test of the joint ancilla block against the rest of the state.
AncillaVerdict check_ancilla_disentangled(const CircuitState& output);

/// Contracts the ancilla block with the product state phi_0 x ... x
/// phi_{n-1}, leaving a (digit registers, target) state. When the
/// ancillae are exactly in that product state the result has norm 1 and
/// carries the correct relative phases.
JointState project_ancillae(const CircuitState& output, const std::vector<StateVector>& phi);

/// Re-indexes a (digit registers, target) state by ordering label.
/// Branches whose digits are not a permutation must carry no amplitude.
/// Result registers: {n!, d}.
JointState digits_to_label_state(const JointState& digit_state, std::size_t n, std::size_t d);

/// How many blocks route the target through each operator: entry i
/// counts occurrences of digit i. The ancilla of operator i absorbs the
/// remaining n - entry_i applications, so branches disentangle exactly
/// when these vectors agree across the control's support.
std::vector<std::uint64_t> branch_target_counts(const CircuitControl& control);

/// Total operator uses of the circuit: n per block, n blocks.
std::uint64_t circuit_query_count(std::size_t n);

/// Per-branch use counts over the digit space (keys are flat digit
/// indices). Every operator runs once per block on some register, so
/// each supported branch counts n uses of each operator.
QueryLedger count_queries_circuit(std::size_t n, const StateVector& control);

}  // namespace switchsim

#endif
