#include "switchsim/unitary_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "switchsim/errors.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a % m) * static_cast<unsigned __int128>(b % m)) % m);
}

/// omega^exponent for omega = exp(i*2*pi/m).
Complex root_phase(std::uint64_t m, std::uint64_t exponent) {
    return std::polar(1.0, kTwoPi * static_cast<double>(exponent % m) / static_cast<double>(m));
}

Unitary scale_unitary(Unitary u, Complex c) {
    if (auto* mono = std::get_if<MonomialUnitary>(&u)) {
        for (auto& p : mono->phases) p *= c;
    } else {
        std::get<DenseMatrix>(u) = scale(c, std::get<DenseMatrix>(u));
    }
    return u;
}

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

/// Tensor factors of operator k of the standard set, each n!-dimensional.
std::vector<MonomialUnitary> standard_factors(std::size_t n, std::uint64_t y, std::size_t k) {
    if (n == 1) return {MonomialUnitary::identity(1)};
    const std::uint64_t m = factorial(n);
    const Complex omega = root_phase(m, 1);
    const auto zpow = static_cast<long long>(mul_mod(y, factorial(k), m));
    std::vector<MonomialUnitary> factors;
    factors.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i < k) {
            factors.push_back(generalized_pauli(Pauli::Z, m, zpow, omega));
        } else if (i == k) {  // reachable only for k <= n-2
            factors.push_back(generalized_pauli(Pauli::X, m, 1, omega));
        } else {
            factors.push_back(MonomialUnitary::identity(m));
        }
    }
    return factors;
}

std::vector<Unitary> all_label_products(const UnitarySet& set) {
    const std::uint64_t m = factorial(set.n);
    std::vector<Unitary> products;
    products.reserve(m);
    for (std::uint64_t x = 0; x < m; ++x) products.push_back(product_for_permutation(set, x));
    return products;
}

/// Score for one exponent given precomputed label products.
double score_from_products(const std::vector<Unitary>& products, std::size_t n, std::size_t dim,
                           std::uint64_t y) {
    const std::uint64_t m = factorial(n);
    const bool monomial = std::all_of(products.begin(), products.end(), [](const Unitary& u) {
        return std::holds_alternative<MonomialUnitary>(u);
    });
    double norm_sq = 0.0;
    if (monomial) {
        // The weighted sum of monomials is column-sparse: per column,
        // group contributions by target row and total the squares.
        std::vector<std::pair<std::size_t, Complex>> buckets;
        buckets.reserve(m);
        for (std::size_t c = 0; c < dim; ++c) {
            buckets.clear();
            for (std::uint64_t x = 0; x < m; ++x) {
                const auto& p = std::get<MonomialUnitary>(products[x]);
                const Complex term = std::conj(root_phase(m, mul_mod(x, y, m))) * p.phases[c];
                const std::size_t row = p.perm[c];
                auto it = std::find_if(buckets.begin(), buckets.end(),
                                       [row](const auto& b) { return b.first == row; });
                if (it == buckets.end()) {
                    buckets.emplace_back(row, term);
                } else {
                    it->second += term;
                }
            }
            for (const auto& b : buckets) norm_sq += std::norm(b.second);
        }
    } else {
        DenseMatrix sum(dim);
        for (std::uint64_t x = 0; x < m; ++x) {
            const DenseMatrix p = unitary_to_dense(products[x]);
            const Complex w = std::conj(root_phase(m, mul_mod(x, y, m)));
            for (std::size_t i = 0; i < sum.entries.size(); ++i) sum.entries[i] += w * p.entries[i];
        }
        norm_sq = hs_norm_sq(sum);
    }
    return norm_sq / (static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(dim));
}

}  // namespace

bool UnitarySet::monomial() const {
    return std::all_of(unitaries.begin(), unitaries.end(), [](const Unitary& u) {
        return std::holds_alternative<MonomialUnitary>(u);
    });
}

void check_set_invariants(const UnitarySet& set, double tolerance) {
    require(set.n >= 1, "unitary set: n must be at least 1");
    require(set.unitaries.size() == set.n, "unitary set: operator count != n");
    for (const auto& u : set.unitaries) {
        require(unitary_dim(u) == set.dim, "unitary set: mixed dimensions");
        const bool ok = std::holds_alternative<MonomialUnitary>(u)
                            ? std::get<MonomialUnitary>(u).is_valid()
                            : is_unitary(std::get<DenseMatrix>(u), tolerance);
        require(ok, "unitary set: operator is not unitary");
    }
}

UnitarySet build_standard_set(std::size_t n, std::uint64_t y, const Budget& budget) {
    require(n >= 1, "build_standard_set: n must be at least 1");
    UnitarySet set;
    set.n = n;
    set.unitaries.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        set.unitaries.emplace_back(tensor(standard_factors(n, y, k), budget.flat_entries));
    set.dim = unitary_dim(set.unitaries.front());
    set.claimed_y = y % factorial(n);
    set.omega_power = y % factorial(n);
    if (!verify_property_exact(set, y))
        throw std::logic_error("build_standard_set: phase property failed verification");
    set.verified = true;
    return set;
}

FactoredUnitarySet build_standard_set_factored(std::size_t n, std::uint64_t y) {
    require(n >= 1, "build_standard_set_factored: n must be at least 1");
    FactoredUnitarySet set;
    set.n = n;
    set.unitaries.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        set.unitaries.push_back(TensorMonomial{standard_factors(n, y, k)});
    set.claimed_y = y % factorial(n);
    return set;
}

UnitarySet build_low_dim_set_n3(std::uint64_t y) {
    const std::uint64_t m = 6;
    const Complex omega = root_phase(m, 1);
    const auto ypow = static_cast<long long>(y % m);
    const MonomialUnitary x_op = generalized_pauli(Pauli::X, m, 1, omega);
    const MonomialUnitary z_op = generalized_pauli(Pauli::Z, m, ypow, omega);
    UnitarySet set;
    set.n = 3;
    set.dim = m;
    set.unitaries = {x_op, multiply(z_op, x_op), multiply(z_op, z_op)};
    set.claimed_y = y % m;
    set.omega_power = y % m;
    if (!verify_property_exact(set, y))
        throw std::logic_error("build_low_dim_set_n3: phase property failed verification");
    set.verified = true;
    return set;
}

Unitary product_for_permutation(const UnitarySet& set, std::uint64_t x) {
    require(set.n >= 1 && set.unitaries.size() == set.n, "product_for_permutation: malformed set");
    const PermutationLabel perm = label_to_permutation(x, set.n);
    Unitary result = set.unitaries[perm.application_order[0]];
    for (std::size_t t = 1; t < set.n; ++t)
        result = unitary_multiply(set.unitaries[perm.application_order[t]], result);
    return result;
}

TensorMonomial product_for_permutation(const FactoredUnitarySet& set, std::uint64_t x) {
    require(set.n >= 1 && set.unitaries.size() == set.n, "product_for_permutation: malformed set");
    const PermutationLabel perm = label_to_permutation(x, set.n);
    TensorMonomial result = set.unitaries[perm.application_order[0]];
    for (std::size_t t = 1; t < set.n; ++t)
        result = multiply(set.unitaries[perm.application_order[t]], result);
    return result;
}

double property_deviation(const UnitarySet& set, std::uint64_t y) {
    const std::uint64_t m = factorial(set.n);
    const Unitary pi0 = product_for_permutation(set, 0);
    double worst = 0.0;
    for (std::uint64_t x = 0; x < m; ++x) {
        const Unitary expected = scale_unitary(pi0, root_phase(m, mul_mod(x, y, m)));
        worst = std::max(worst, unitary_max_abs_diff(product_for_permutation(set, x), expected));
    }
    return worst;
}

double property_deviation(const FactoredUnitarySet& set, std::uint64_t y) {
    const std::uint64_t m = factorial(set.n);
    const TensorMonomial pi0 = product_for_permutation(set, 0);
    double worst = 0.0;
    for (std::uint64_t x = 0; x < m; ++x) {
        const auto ratio = uniform_ratio(product_for_permutation(set, x), pi0, tol::oracle);
        if (!ratio) return 2.0;  // supports differ or ratio non-uniform: maximal for unit entries
        worst = std::max(worst, std::abs(*ratio - root_phase(m, mul_mod(x, y, m))));
    }
    return worst;
}

bool verify_property_exact(const UnitarySet& set, std::uint64_t y, double tolerance) {
    return property_deviation(set, y) <= tolerance;
}

double pairwise_phase_deviation(const UnitarySet& set, std::uint64_t y) {
    const std::uint64_t m = factorial(set.n);
    double worst = 0.0;
    for (std::size_t k = 1; k < set.n; ++k) {
        const Complex phase = root_phase(m, mul_mod(y, factorial(k), m));
        for (std::size_t j = 0; j < k; ++j) {
            const Unitary lhs = unitary_multiply(set.unitaries[k], set.unitaries[j]);
            const Unitary rhs =
                scale_unitary(unitary_multiply(set.unitaries[j], set.unitaries[k]), phase);
            worst = std::max(worst, unitary_max_abs_diff(lhs, rhs));
        }
    }
    return worst;
}

double pairwise_phase_deviation(const FactoredUnitarySet& set, std::uint64_t y) {
    const std::uint64_t m = factorial(set.n);
    double worst = 0.0;
    for (std::size_t k = 1; k < set.n; ++k) {
        const Complex phase = root_phase(m, mul_mod(y, factorial(k), m));
        for (std::size_t j = 0; j < k; ++j) {
            const TensorMonomial lhs = multiply(set.unitaries[k], set.unitaries[j]);
            const TensorMonomial rhs = multiply(set.unitaries[j], set.unitaries[k]);
            const auto ratio = uniform_ratio(lhs, rhs, tol::oracle);
            if (!ratio) return 2.0;
            worst = std::max(worst, std::abs(*ratio - phase));
        }
    }
    return worst;
}

PropertyScore property_score(const UnitarySet& set, std::uint64_t y) {
    const auto products = all_label_products(set);
    return PropertyScore{y, score_from_products(products, set.n, set.dim, y)};
}

std::vector<double> all_property_scores(const UnitarySet& set) {
    const std::uint64_t m = factorial(set.n);
    const auto products = all_label_products(set);
    std::vector<double> scores;
    scores.reserve(m);
    for (std::uint64_t y = 0; y < m; ++y)
        scores.push_back(score_from_products(products, set.n, set.dim, y));
    return scores;
}

std::optional<std::uint64_t> infer_property(const UnitarySet& set) {
    const auto scores = all_property_scores(set);
    for (std::size_t y = 0; y < scores.size(); ++y)
        if (scores[y] >= property_threshold) return y;
    return std::nullopt;
}

UnitarySet perturb_set(const UnitarySet& set, double epsilon, std::uint64_t seed,
                       const Budget& budget) {
    require(epsilon >= 0.0, "perturb_set: epsilon must be nonnegative");
    if (set.dim > budget.dense_dim)
        throw BudgetError("perturb_set: dense dimension " + std::to_string(set.dim) +
                          " exceeds budget " + std::to_string(budget.dense_dim));
    UnitarySet out;
    out.n = set.n;
    out.dim = set.dim;
    out.claimed_y = set.claimed_y;
    out.omega_power = set.omega_power;
    out.unitaries.reserve(set.unitaries.size());
    for (std::size_t i = 0; i < set.unitaries.size(); ++i) {
        Rng rng = Rng::stream(seed, i);
        const DenseMatrix noise = unitary_exponential(random_hermitian_unit_norm(set.dim, rng),
                                                      epsilon);
        out.unitaries.emplace_back(multiply(noise, unitary_to_dense(set.unitaries[i])));
    }
    return out;
}

bool validate_dimension(std::size_t n, std::uint64_t y, std::size_t d) {
    return mul_mod(y, d, factorial(n)) == 0;
}

UnitarySet direct_sum_sets(const UnitarySet& a, const UnitarySet& b, const Budget& budget) {
    require(a.n == b.n && a.n >= 1, "direct_sum_sets: operator counts differ");
    require(a.unitaries.size() == a.n && b.unitaries.size() == b.n,
            "direct_sum_sets: malformed set");
    UnitarySet out;
    out.n = a.n;
    out.dim = a.dim + b.dim;
    if (a.claimed_y && b.claimed_y && *a.claimed_y == *b.claimed_y) out.claimed_y = a.claimed_y;
    for (std::size_t i = 0; i < a.n; ++i) {
        const auto* ma = std::get_if<MonomialUnitary>(&a.unitaries[i]);
        const auto* mb = std::get_if<MonomialUnitary>(&b.unitaries[i]);
        if (ma != nullptr && mb != nullptr) {
            if (out.dim > budget.flat_entries)
                throw BudgetError("direct_sum_sets: flat size exceeds budget");
            std::vector<std::size_t> perm(out.dim);
            std::vector<Complex> phases(out.dim);
            for (std::size_t c = 0; c < ma->dim; ++c) {
                perm[c] = ma->perm[c];
                phases[c] = ma->phases[c];
            }
            for (std::size_t c = 0; c < mb->dim; ++c) {
                perm[a.dim + c] = a.dim + mb->perm[c];
                phases[a.dim + c] = mb->phases[c];
            }
            out.unitaries.emplace_back(MonomialUnitary(std::move(perm), std::move(phases)));
        } else {
            if (out.dim > budget.dense_dim)
                throw BudgetError("direct_sum_sets: dense dimension exceeds budget");
            const DenseMatrix da = unitary_to_dense(a.unitaries[i]);
            const DenseMatrix db = unitary_to_dense(b.unitaries[i]);
            DenseMatrix block(out.dim);
            for (std::size_t r = 0; r < da.dim; ++r)
                for (std::size_t c = 0; c < da.dim; ++c) block.at(r, c) = da.at(r, c);
            for (std::size_t r = 0; r < db.dim; ++r)
                for (std::size_t c = 0; c < db.dim; ++c)
                    block.at(a.dim + r, a.dim + c) = db.at(r, c);
            out.unitaries.emplace_back(std::move(block));
        }
    }
    return out;
}

}  // namespace switchsim
