#ifndef SWITCHSIM_MONOMIAL_HPP
#define SWITCHSIM_MONOMIAL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "switchsim/tolerances.hpp"

namespace switchsim {

using Complex = std::complex<double>;

/// Unitary with exactly one nonzero entry per column: the entry in
/// column c sits at row perm[c] and has value phases[c], |phases[c]| = 1.
/// Products, tensor products, inverses and determinants stay in this
/// form, so composition is O(dim) and never materializes a dense matrix.
struct MonomialUnitary {
    std::size_t dim = 0;
    std::vector<std::size_t> perm;   // column -> row of the nonzero entry
    std::vector<Complex> phases;     // column -> value of that entry

    MonomialUnitary() = default;
    MonomialUnitary(std::vector<std::size_t> perm_in, std::vector<Complex> phases_in);

    static MonomialUnitary identity(std::size_t dim);

    /// perm is a bijection and every phase has unit modulus (within tolerance).
    bool is_valid(double phase_tol = tol::phase_modulus) const;
};

enum class Pauli { X, Z };

/// Generalized Pauli on `dim` levels: X shifts basis states up by one
/// (mod dim), Z multiplies |j> by omega^j. `power` may be any integer;
/// powers compose multiplicatively. omega must satisfy omega^dim = 1
/// within tol::unitarity.
MonomialUnitary generalized_pauli(Pauli kind, std::size_t dim, long long power, Complex omega);

/// Matrix product a*b (b applied first).
MonomialUnitary multiply(const MonomialUnitary& a, const MonomialUnitary& b);

/// Kronecker product of the factors in order; factor 0 is the leftmost
/// (slowest-varying) index. Throws BudgetError if the flat size would
/// exceed max_entries.
MonomialUnitary tensor(const std::vector<MonomialUnitary>& factors,
                       std::size_t max_entries = Budget{}.flat_entries);

MonomialUnitary adjoint(const MonomialUnitary& u);

MonomialUnitary pow(const MonomialUnitary& u, std::uint64_t exponent);

/// Permutation sign times the product of phases.
Complex determinant(const MonomialUnitary& u);

/// Entrywise max-norm of a - b over the union of their supports.
double max_abs_diff(const MonomialUnitary& a, const MonomialUnitary& b);

/// If a == c*b entrywise for a single scalar c, returns c; otherwise
/// nullopt. Used to check phase relations without subtraction.
std::optional<Complex> uniform_ratio(const MonomialUnitary& a, const MonomialUnitary& b,
                                     double tolerance = tol::oracle);

/// Tensor-structured monomial: a list of small monomial factors whose
/// Kronecker product is never flattened. Products and scalar-ratio
/// comparisons work factor-by-factor, so dimensions like 120^4 cost
/// only the sum of the factor sizes.
struct TensorMonomial {
    std::vector<MonomialUnitary> factors;

    /// Product of factor dimensions (may be astronomically large).
    double dim_product() const;
};

/// Factor-wise product; factor dimensions must match position by position.
TensorMonomial multiply(const TensorMonomial& a, const TensorMonomial& b);

/// Scalar c with a == c*b, matched factor-by-factor, or nullopt.
std::optional<Complex> uniform_ratio(const TensorMonomial& a, const TensorMonomial& b,
                                     double tolerance = tol::oracle);

}  // namespace switchsim

#endif
