#ifndef SWITCHSIM_ROUTER_HPP
#define SWITCHSIM_ROUTER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "switchsim/protocol.hpp"
#include "switchsim/state.hpp"
#include "switchsim/unitary_set.hpp"

namespace switchsim {

/// One controlled binary mode-swap: control bit (k, j) toggles modes
/// (low_mode, low_mode + 1), low_mode = k - j.
struct RouterSwap {
    std::size_t k = 0;
    std::size_t j = 0;
    std::size_t low_mode = 0;
};

/// The full mode-permutation network: n(n-1)/2 swaps ordered by
/// increasing k, then increasing j. The control bit pattern of label x
/// is factoradic_to_bits(label_to_factoradic(x, n)) in the same order.
struct RouterNetwork {
    std::size_t n = 1;
    std::vector<RouterSwap> swaps;
};

RouterNetwork build_router_network(std::size_t n);

/// JSON list of {"control": [k, j], "modes": [m, m+1]}.
std::string router_network_to_json(const RouterNetwork& network);

/// Classical replay of the network for control label x on input mode j.
/// Equals sigma_x(j) of label_to_permutation for every (x, j).
std::size_t route(const RouterNetwork& network, std::uint64_t x, std::size_t j);

/// Three-register state: control over n! labels, mode of size n, target.
using ModedState = StateVector;

/// Coherent network application, branch-wise over the control register;
/// the inverse flag replays the self-inverse swaps in reverse order.
ModedState apply_router(const RouterNetwork& network, ModedState state, bool inverse);

/// Routed realization of the switch: the target is injected in mode 0,
/// makes n passes (each pass routes it to the wire of the operator due
/// at that step, applies it, and routes back), stepping the mode by one
/// between passes, and is read out in mode n-1. Returns the (control,
/// target) state; throws std::logic_error if any amplitude remains
/// outside the readout mode.
JointState simulate_switch_via_routers(const UnitarySet& set, const StateVector& control,
                                       const StateVector& psi);

}  // namespace switchsim

#endif
