#include "switchsim/state.hpp"

#include <stdexcept>

namespace switchsim {

std::size_t unitary_dim(const Unitary& u) {
    return std::visit([](const auto& m) { return m.dim; }, u);
}

DenseMatrix unitary_to_dense(const Unitary& u) {
    if (const auto* m = std::get_if<MonomialUnitary>(&u)) return to_dense(*m);
    return std::get<DenseMatrix>(u);
}

Unitary unitary_multiply(const Unitary& a, const Unitary& b) {
    if (std::holds_alternative<MonomialUnitary>(a) && std::holds_alternative<MonomialUnitary>(b))
        return multiply(std::get<MonomialUnitary>(a), std::get<MonomialUnitary>(b));
    return multiply(unitary_to_dense(a), unitary_to_dense(b));
}

double unitary_max_abs_diff(const Unitary& a, const Unitary& b) {
    if (std::holds_alternative<MonomialUnitary>(a) && std::holds_alternative<MonomialUnitary>(b))
        return max_abs_diff(std::get<MonomialUnitary>(a), std::get<MonomialUnitary>(b));
    return max_abs_diff(unitary_to_dense(a), unitary_to_dense(b));
}

StateVector::StateVector(std::vector<std::size_t> dims_in) : dims(std::move(dims_in)) {
    std::size_t total = 1;
    for (const auto d : dims) {
        if (d == 0) throw std::invalid_argument("state: zero-sized register");
        total *= d;
    }
    amps.assign(total, Complex{0.0, 0.0});
}

std::size_t StateVector::stride(std::size_t reg) const {
    std::size_t s = 1;
    for (std::size_t i = reg + 1; i < dims.size(); ++i) s *= dims[i];
    return s;
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const auto& a : amps) total += std::norm(a);
    return total;
}

std::size_t flat_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& values) {
    if (dims.size() != values.size()) throw std::invalid_argument("flat_index: rank mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (values[i] >= dims[i]) throw std::out_of_range("flat_index: register value out of range");
        idx = idx * dims[i] + values[i];
    }
    return idx;
}

namespace {

// Iterate over all fibers of one register: base indices such that the
// register's amplitudes sit at base + v*stride for v in [0, reg_dim).
template <typename Fn>
void for_each_fiber(const StateVector& state, std::size_t reg, Fn&& fn) {
    const std::size_t stride = state.stride(reg);
    const std::size_t reg_dim = state.dims[reg];
    const std::size_t block = stride * reg_dim;
    const std::size_t total = state.total();
    for (std::size_t outer = 0; outer < total; outer += block)
        for (std::size_t inner = 0; inner < stride; ++inner) fn(outer + inner, stride);
}

}  // namespace

void apply(const MonomialUnitary& u, StateVector& state, std::size_t reg) {
    if (reg >= state.dims.size()) throw std::out_of_range("apply: no such register");
    if (u.dim != state.dims[reg]) throw std::invalid_argument("apply: operator/register size mismatch");
    std::vector<Complex> scratch(u.dim);
    for_each_fiber(state, reg, [&](std::size_t base, std::size_t stride) {
        for (std::size_t v = 0; v < u.dim; ++v)
            scratch[u.perm[v]] = u.phases[v] * state.amps[base + v * stride];
        for (std::size_t v = 0; v < u.dim; ++v) state.amps[base + v * stride] = scratch[v];
    });
}

void apply(const DenseMatrix& u, StateVector& state, std::size_t reg) {
    if (reg >= state.dims.size()) throw std::out_of_range("apply: no such register");
    if (u.dim != state.dims[reg]) throw std::invalid_argument("apply: operator/register size mismatch");
    std::vector<Complex> scratch(u.dim);
    for_each_fiber(state, reg, [&](std::size_t base, std::size_t stride) {
        for (std::size_t r = 0; r < u.dim; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < u.dim; ++c) acc += u.at(r, c) * state.amps[base + c * stride];
            scratch[r] = acc;
        }
        for (std::size_t v = 0; v < u.dim; ++v) state.amps[base + v * stride] = scratch[v];
    });
}

void apply(const Unitary& u, StateVector& state, std::size_t reg) {
    std::visit([&](const auto& m) { apply(m, state, reg); }, u);
}

void controlled_swap_registers(StateVector& state, std::size_t control_reg,
                               std::size_t control_value, std::size_t reg_a, std::size_t reg_b) {
    if (state.dims[reg_a] != state.dims[reg_b])
        throw std::invalid_argument("controlled swap: register sizes differ");
    const std::size_t d = state.dims[reg_a];
    const std::size_t stride_c = state.stride(control_reg);
    const std::size_t stride_a = state.stride(reg_a);
    const std::size_t stride_b = state.stride(reg_b);
    const std::size_t total = state.total();
    for (std::size_t idx = 0; idx < total; ++idx) {
        if ((idx / stride_c) % state.dims[control_reg] != control_value) continue;
        const std::size_t va = (idx / stride_a) % d;
        const std::size_t vb = (idx / stride_b) % d;
        if (va >= vb) continue;  // visit each unordered pair once
        const std::size_t partner = idx + (vb - va) * stride_a - (vb - va) * stride_b;
        std::swap(state.amps[idx], state.amps[partner]);
    }
}

void controlled_apply(const Unitary& u, StateVector& state, std::size_t control_reg,
                      std::size_t control_value, std::size_t target_reg) {
    // route through a scratch state holding only the selected branches
    const std::size_t stride_c = state.stride(control_reg);
    const std::size_t dim_c = state.dims[control_reg];
    StateVector branch(state.dims);
    for (std::size_t idx = 0; idx < state.total(); ++idx)
        if ((idx / stride_c) % dim_c == control_value) branch.amps[idx] = state.amps[idx];
    apply(u, branch, target_reg);
    for (std::size_t idx = 0; idx < state.total(); ++idx)
        if ((idx / stride_c) % dim_c == control_value) state.amps[idx] = branch.amps[idx];
    return;
}

}  // namespace switchsim
