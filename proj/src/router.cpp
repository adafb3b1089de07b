#include "switchsim/router.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace switchsim {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

/// Swap the amplitudes of two values of one register on branches where
/// another register holds control_value.
void controlled_value_swap(StateVector& state, std::size_t control_reg,
                           std::size_t control_value, std::size_t reg, std::size_t va,
                           std::size_t vb) {
    const std::size_t control_stride = state.stride(control_reg);
    const std::size_t control_dim = state.dims[control_reg];
    const std::size_t reg_stride = state.stride(reg);
    const std::size_t reg_dim = state.dims[reg];
    const std::size_t offset = (vb - va) * reg_stride;
    for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
        if ((idx / control_stride) % control_dim != control_value) continue;
        if ((idx / reg_stride) % reg_dim != va) continue;
        std::swap(state.amps[idx], state.amps[idx + offset]);
    }
}

MonomialUnitary mode_reversal_op(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = n - 1 - v;
    return MonomialUnitary(std::move(perm), std::vector<Complex>(n, Complex{1.0, 0.0}));
}

MonomialUnitary mode_shift_op(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = (v + 1) % n;
    return MonomialUnitary(std::move(perm), std::vector<Complex>(n, Complex{1.0, 0.0}));
}

}  // namespace

RouterNetwork build_router_network(std::size_t n) {
    require(n >= 1, "build_router_network: n must be at least 1");
    RouterNetwork network;
    network.n = n;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t j = 1; j <= k; ++j) network.swaps.push_back(RouterSwap{k, j, k - j});
    return network;
}

std::string router_network_to_json(const RouterNetwork& network) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& swap : network.swaps) {
        nlohmann::ordered_json entry;
        entry["control"] = {swap.k, swap.j};
        entry["modes"] = {swap.low_mode, swap.low_mode + 1};
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

std::size_t route(const RouterNetwork& network, std::uint64_t x, std::size_t j) {
    require(j < network.n, "route: mode out of range");
    const std::vector<bool> bits = factoradic_to_bits(label_to_factoradic(x, network.n));
    std::size_t mode = j;
    for (std::size_t s = 0; s < network.swaps.size(); ++s) {
        if (!bits[s]) continue;
        const std::size_t low = network.swaps[s].low_mode;
        if (mode == low) {
            mode = low + 1;
        } else if (mode == low + 1) {
            mode = low;
        }
    }
    return mode;
}

ModedState apply_router(const RouterNetwork& network, ModedState state, bool inverse) {
    const std::uint64_t m = factorial(network.n);
    require(state.register_count() >= 2, "apply_router: need control and mode registers");
    require(state.dims[0] == m, "apply_router: control register size must be n!");
    require(state.dims[1] == network.n, "apply_router: mode register size must be n");
    for (std::uint64_t x = 0; x < m; ++x) {
        const std::vector<bool> bits = factoradic_to_bits(label_to_factoradic(x, network.n));
        for (std::size_t step = 0; step < network.swaps.size(); ++step) {
            const std::size_t s = inverse ? network.swaps.size() - 1 - step : step;
            if (!bits[s]) continue;
            const std::size_t low = network.swaps[s].low_mode;
            controlled_value_swap(state, 0, x, 1, low, low + 1);
        }
    }
    return state;
}

JointState simulate_switch_via_routers(const UnitarySet& set, const StateVector& control,
                                       const StateVector& psi) {
    const std::size_t n = set.n;
    const std::uint64_t m = factorial(n);
    const std::size_t d = set.dim;
    require(control.total() == m, "simulate_switch_via_routers: control size must be n!");
    require(psi.total() == d, "simulate_switch_via_routers: target size must be d");

    ModedState state(std::vector<std::size_t>{m, n, d});
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::size_t t = 0; t < d; ++t)
            state.amps[(x * n + 0) * d + t] = control.amps[x] * psi.amps[t];

    const RouterNetwork network = build_router_network(n);
    const MonomialUnitary reversal = mode_reversal_op(n);
    const MonomialUnitary shift = mode_shift_op(n);

    // Pass t holds the system in mode t. Reversing the mode order and
    // running the inverse network lands it on the wire of the operator
    // applied at step t; the forward network and a second reversal bring
    // it back, and the shift hands it to the next pass.
    for (std::size_t t = 0; t < n; ++t) {
        apply(reversal, state, 1);
        state = apply_router(network, std::move(state), true);
        for (std::size_t i = 0; i < n; ++i) controlled_apply(set.unitaries[i], state, 1, i, 2);
        state = apply_router(network, std::move(state), false);
        apply(reversal, state, 1);
        if (t + 1 < n) apply(shift, state, 1);
    }

    JointState out(std::vector<std::size_t>{m, d});
    double residual = 0.0;
    for (std::uint64_t x = 0; x < m; ++x)
        for (std::size_t mode = 0; mode < n; ++mode)
            for (std::size_t t = 0; t < d; ++t) {
                const Complex amp = state.amps[(x * n + mode) * d + t];
                if (mode == n - 1) {
                    out.amps[x * d + t] = amp;
                } else {
                    residual += std::norm(amp);
                }
            }
    if (residual > tol::unitarity)
        throw std::logic_error("simulate_switch_via_routers: amplitude left outside readout mode");
    return out;
}

}  // namespace switchsim
