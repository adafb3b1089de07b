#ifndef SWITCHSIM_UNITARY_SET_HPP
#define SWITCHSIM_UNITARY_SET_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "switchsim/perm.hpp"
#include "switchsim/state.hpp"
#include "switchsim/tolerances.hpp"

namespace switchsim {

/// A set of n same-dimension unitaries U_0..U_{n-1} that the switch
/// composes in label-dependent orders. claimed_y marks the phase
/// property the set is supposed to satisfy: reordering the product by
/// label x multiplies it by omega^{x*y}, omega = exp(i*2*pi/n!).
struct UnitarySet {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<Unitary> unitaries;
    std::optional<std::uint64_t> claimed_y;
    std::optional<std::uint64_t> omega_power;  // exponent e when built from omega^e
    bool verified = false;  // claimed_y checked exactly over all labels

    bool monomial() const;
};

/// Tensor-structured variant for dimensions too large to flatten;
/// products and phase comparisons stay factor-wise.
struct FactoredUnitarySet {
    std::size_t n = 0;
    std::vector<TensorMonomial> unitaries;
    std::optional<std::uint64_t> claimed_y;
};

/// Score of one candidate phase exponent (see property_score).
struct PropertyScore {
    std::uint64_t y = 0;
    double score = 0.0;
};

/// Throws std::invalid_argument unless the set is well-formed: n >= 1,
/// exactly n operators, all of dimension dim, each unitary within the
/// tolerance.
void check_set_invariants(const UnitarySet& set, double tolerance = tol::unitarity);

/// Shift/clock construction over dimension n!^(n-1): operator k is a
/// tensor word of k clock factors raised to y*k!, one shift factor and
/// identity padding; the last operator is all clock factors. Satisfies
/// the pairwise relation U_k U_j = omega^{y*k!} U_j U_k exactly, hence
/// the phase property for claimed_y = y. Verified exhaustively over all
/// labels before returning. Throws BudgetError when the flat size
/// exceeds the budget (n >= 5 needs the factored builder).
UnitarySet build_standard_set(std::size_t n, std::uint64_t y, const Budget& budget = Budget{});

/// Same construction kept in tensor-factored form; factors are only
/// n!-dimensional, so any n that fits in a machine word works.
FactoredUnitarySet build_standard_set_factored(std::size_t n, std::uint64_t y);

/// Minimal three-operator set {X, ZX, Z^2} on 6 levels for n = 3, with
/// X, Z generalized Paulis built from omega^y. The phase property is
/// checked exhaustively after construction and failure throws, since
/// the low-dimension shortcut is not covered by the general pairwise
/// argument.
UnitarySet build_low_dim_set_n3(std::uint64_t y);

/// Composite of the set's operators in the order selected by the label:
/// the application_order of label_to_permutation(x, n), with the step-0
/// operator applied first (rightmost matrix factor).
Unitary product_for_permutation(const UnitarySet& set, std::uint64_t x);
TensorMonomial product_for_permutation(const FactoredUnitarySet& set, std::uint64_t x);

/// Largest entrywise deviation over all labels x between the label-x
/// product and omega^{x*y} times the label-0 product.
double property_deviation(const UnitarySet& set, std::uint64_t y);
double property_deviation(const FactoredUnitarySet& set, std::uint64_t y);

/// True iff property_deviation(set, y) <= tolerance.
bool verify_property_exact(const UnitarySet& set, std::uint64_t y,
                           double tolerance = tol::unitarity);

/// Largest deviation over pairs k > j of U_k U_j - omega^{y*k!} U_j U_k.
double pairwise_phase_deviation(const UnitarySet& set, std::uint64_t y);
double pairwise_phase_deviation(const FactoredUnitarySet& set, std::uint64_t y);

/// Overlap of the set with the phase property for exponent y: the
/// squared Hilbert-Schmidt norm of the omega^{-x*y}-weighted average of
/// all label products, normalized by 1/(n!^2 d) to land in [0, 1].
/// Exactly 1 iff the property holds, and equals the mixed-input outcome
/// probability for measuring y.
PropertyScore property_score(const UnitarySet& set, std::uint64_t y);

/// All n! scores indexed by y; they sum to 1 for any unitary set.
std::vector<double> all_property_scores(const UnitarySet& set);

/// The unique exponent whose score reaches property_threshold (2/3), or
/// nullopt. Uniqueness is automatic because the scores sum to 1.
std::optional<std::uint64_t> infer_property(const UnitarySet& set);

/// Left-multiply every operator by an independent random unitary
/// exp(i*epsilon*H), H Hermitian with unit spectral norm, derived
/// deterministically from the seed. epsilon = 0 returns the set
/// unchanged. The result is dense; refuses dims above the budget.
UnitarySet perturb_set(const UnitarySet& set, double epsilon, std::uint64_t seed,
                       const Budget& budget = Budget{});

/// Whether a d-dimensional set can satisfy the property for exponent y:
/// taking determinants across the phase relation forces n! | y*d.
bool validate_dimension(std::size_t n, std::uint64_t y, std::size_t d);

/// Block-diagonal join: operator i becomes diag(a.U_i, b.U_i). Lets
/// tests build sets whose score is a dimension-weighted mixture of the
/// blocks' properties.
UnitarySet direct_sum_sets(const UnitarySet& a, const UnitarySet& b,
                           const Budget& budget = Budget{});

}  // namespace switchsim

#endif
