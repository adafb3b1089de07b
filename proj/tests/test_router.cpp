#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "switchsim/protocol.hpp"
#include "switchsim/router.hpp"
#include "switchsim/unitary_set.hpp"

using namespace switchsim;

namespace {

double max_amp_diff(const StateVector& a, const StateVector& b) {
    double diff = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        diff = std::max(diff, std::abs(a.amps[i] - b.amps[i]));
    return diff;
}

}  // namespace

TEST_CASE("network shape: one swap per (k, j) pair, ordered") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const RouterNetwork network = build_router_network(n);
        CHECK(network.n == n);
        CHECK(network.swaps.size() == n * (n - 1) / 2);
        std::size_t idx = 0;
        for (std::size_t k = 1; k < n; ++k)
            for (std::size_t j = 1; j <= k; ++j, ++idx) {
                CHECK(network.swaps[idx].k == k);
                CHECK(network.swaps[idx].j == j);
                CHECK(network.swaps[idx].low_mode == k - j);
            }
    }
}

TEST_CASE("classical routing reproduces the labeled permutations") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const RouterNetwork network = build_router_network(n);
        for (std::uint64_t x = 0; x < factorial(n); ++x) {
            const PermutationLabel p = label_to_permutation(x, n);
            for (std::size_t j = 0; j < n; ++j) CHECK(route(network, x, j) == p.sigma[j]);
        }
    }
}

TEST_CASE("coherent network application routes basis modes") {
    const std::size_t n = 3;
    const RouterNetwork network = build_router_network(n);
    for (std::uint64_t x = 0; x < 6; ++x) {
        const PermutationLabel p = label_to_permutation(x, n);
        for (std::size_t j = 0; j < n; ++j) {
            ModedState state(std::vector<std::size_t>{6, n, 2});
            state.amps[flat_index(state.dims, {static_cast<std::size_t>(x), j, 1})] =
                Complex{1.0, 0.0};
            const ModedState routed = apply_router(network, state, false);
            const std::size_t expect =
                flat_index(state.dims, {static_cast<std::size_t>(x), p.sigma[j], 1});
            CHECK(std::abs(routed.amps[expect] - Complex{1.0, 0.0}) < 1e-15);
            CHECK(routed.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("inverse routing undoes the network") {
    const RouterNetwork network = build_router_network(4);
    Rng rng(51);
    ModedState state(std::vector<std::size_t>{24, 4, 3});
    for (auto& a : state.amps) a = rng.complex_normal();

    const ModedState round =
        apply_router(network, apply_router(network, state, false), true);
    CHECK(max_amp_diff(round, state) < 1e-12);
}

TEST_CASE("routed switch equals the direct switch") {
    Rng rng(52);
    for (std::size_t n : {1, 2, 3}) {
        const std::uint64_t m = factorial(n);
        const std::uint64_t y = m > 1 ? m - 1 : 0;
        const UnitarySet set = build_standard_set(n, y);
        for (int trial = 0; trial < 10; ++trial) {
            const StateVector control = random_pure_state(m, rng);
            const StateVector psi = random_pure_state(set.dim, rng);
            const JointState via = simulate_switch_via_routers(set, control, psi);
            const JointState direct =
                n_switch_apply(set, product_state(control.amps, psi.amps));
            CHECK(max_amp_diff(via, direct) < 1e-12);
        }
    }
    // the six-level shortcut set routes identically
    const UnitarySet low = build_low_dim_set_n3(3);
    const StateVector control = random_pure_state(6, rng);
    const StateVector psi = random_pure_state(6, rng);
    CHECK(max_amp_diff(simulate_switch_via_routers(low, control, psi),
                       n_switch_apply(low, product_state(control.amps, psi.amps))) < 1e-12);
}

TEST_CASE("network export lists every controlled swap") {
    const RouterNetwork network = build_router_network(4);
    const auto parsed = nlohmann::json::parse(router_network_to_json(network));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 6);
    std::size_t idx = 0;
    for (std::size_t k = 1; k < 4; ++k)
        for (std::size_t j = 1; j <= k; ++j, ++idx) {
            CHECK(parsed[idx]["control"] == nlohmann::json::array({k, j}));
            CHECK(parsed[idx]["modes"] == nlohmann::json::array({k - j, k - j + 1}));
        }
}
