#ifndef SWITCHSIM_STATE_HPP
#define SWITCHSIM_STATE_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "switchsim/dense.hpp"
#include "switchsim/monomial.hpp"

namespace switchsim {

/// Either representation of an operator on one register.
using Unitary = std::variant<MonomialUnitary, DenseMatrix>;

std::size_t unitary_dim(const Unitary& u);
DenseMatrix unitary_to_dense(const Unitary& u);
Unitary unitary_multiply(const Unitary& a, const Unitary& b);
double unitary_max_abs_diff(const Unitary& a, const Unitary& b);

/// Multi-register state vector. dims lists the register sizes with the
/// control register first; amplitudes are row-major (the last register
/// varies fastest).
struct StateVector {
    std::vector<std::size_t> dims;
    std::vector<Complex> amps;

    StateVector() = default;
    explicit StateVector(std::vector<std::size_t> dims_in);

    std::size_t total() const { return amps.size(); }
    std::size_t register_count() const { return dims.size(); }

    /// Stride of register r in the flattened index.
    std::size_t stride(std::size_t reg) const;

    double norm_sq() const;
};

/// Flattened index for the given per-register values.
std::size_t flat_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& values);

/// Apply a one-register unitary in place. O(total) for monomial
/// operators, O(total * reg_dim) for dense ones.
void apply(const MonomialUnitary& u, StateVector& state, std::size_t reg);
void apply(const DenseMatrix& u, StateVector& state, std::size_t reg);
void apply(const Unitary& u, StateVector& state, std::size_t reg);

/// Swap the contents of two same-sized registers on branches where
/// register `control_reg` holds `control_value`.
void controlled_swap_registers(StateVector& state, std::size_t control_reg,
                               std::size_t control_value, std::size_t reg_a, std::size_t reg_b);

/// Apply a one-register unitary only on branches where `control_reg`
/// holds `control_value`.
void controlled_apply(const Unitary& u, StateVector& state, std::size_t control_reg,
                      std::size_t control_value, std::size_t target_reg);

}  // namespace switchsim

#endif
