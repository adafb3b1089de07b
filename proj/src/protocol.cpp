#include "switchsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

DenseMatrix fourier_matrix(std::size_t m, FourierDirection direction) {
    const double sign = direction == FourierDirection::forward ? -1.0 : 1.0;
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(m));
    DenseMatrix f(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            const auto e = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(c) % m;
            f.at(r, c) = std::polar(amplitude, sign * kTwoPi * static_cast<double>(e) /
                                                   static_cast<double>(m));
        }
    return f;
}

}  // namespace

void check_distribution(const OutcomeDistribution& dist) {
    double total = 0.0;
    for (double p : dist.probs) {
        if (p < -tol::support) throw std::logic_error("distribution: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > tol::unitarity)
        throw std::logic_error("distribution: probabilities do not sum to 1");
}

JointState product_state(const std::vector<Complex>& control, const std::vector<Complex>& target) {
    require(!control.empty() && !target.empty(), "product_state: empty register");
    JointState state(std::vector<std::size_t>{control.size(), target.size()});
    for (std::size_t x = 0; x < control.size(); ++x)
        for (std::size_t t = 0; t < target.size(); ++t)
            state.amps[x * target.size() + t] = control[x] * target[t];
    return state;
}

StateVector random_pure_state(std::size_t dim, Rng& rng) {
    require(dim >= 1, "random_pure_state: dim must be at least 1");
    StateVector state(std::vector<std::size_t>{dim});
    double norm_sq = 0.0;
    do {
        for (auto& a : state.amps) a = rng.complex_normal();
        norm_sq = state.norm_sq();
    } while (norm_sq <= tol::support);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : state.amps) a *= inv;
    return state;
}

JointState n_switch_apply(const UnitarySet& set, JointState state) {
    const std::uint64_t m = factorial(set.n);
    require(state.register_count() >= 2, "n_switch_apply: need control and target registers");
    require(state.dims[0] == m, "n_switch_apply: control register size must be n!");
    require(state.dims[1] == set.dim, "n_switch_apply: target register size must be d");
    for (std::uint64_t x = 0; x < m; ++x)
        controlled_apply(product_for_permutation(set, x), state, 0, x, 1);
    return state;
}

JointState qft_control(JointState state, FourierDirection direction) {
    require(state.register_count() >= 1, "qft_control: state has no registers");
    apply(fourier_matrix(state.dims[0], direction), state, 0);
    return state;
}

OutcomeDistribution run_algorithm_pure(const UnitarySet& set, const StateVector& psi) {
    const std::uint64_t m = factorial(set.n);
    require(psi.total() == set.dim, "run_algorithm_pure: target size must be d");
    if (std::abs(psi.norm_sq() - 1.0) > tol::unitarity)
        throw std::invalid_argument("run_algorithm_pure: target state not normalized");
    const std::vector<Complex> uniform(m, Complex{1.0 / std::sqrt(static_cast<double>(m)), 0.0});
    JointState state = product_state(uniform, psi.amps);
    state = n_switch_apply(set, std::move(state));
    state = qft_control(std::move(state), FourierDirection::forward);
    OutcomeDistribution dist;
    dist.probs.assign(m, 0.0);
    for (std::uint64_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < set.dim; ++t)
            dist.probs[s] += std::norm(state.amps[s * set.dim + t]);
    return dist;
}

OutcomeDistribution run_algorithm_mixed(const UnitarySet& set) {
    const std::uint64_t m = factorial(set.n);
    OutcomeDistribution dist;
    dist.probs.assign(m, 0.0);
    StateVector basis(std::vector<std::size_t>{set.dim});
    for (std::size_t t = 0; t < set.dim; ++t) {
        std::fill(basis.amps.begin(), basis.amps.end(), Complex{0.0, 0.0});
        basis.amps[t] = Complex{1.0, 0.0};
        const OutcomeDistribution pure = run_algorithm_pure(set, basis);
        for (std::uint64_t s = 0; s < m; ++s) dist.probs[s] += pure.probs[s];
    }
    for (auto& p : dist.probs) p /= static_cast<double>(set.dim);
    return dist;
}

std::uint64_t sample_outcome(const OutcomeDistribution& dist, Rng& rng) {
    require(!dist.probs.empty(), "sample_outcome: empty distribution");
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (std::size_t s = 0; s < dist.probs.size(); ++s) {
        cumulative += std::max(dist.probs[s], 0.0);
        if (u < cumulative) return s;
    }
    return dist.probs.size() - 1;  // guard against rounding shortfall
}

std::uint64_t majority_vote(const std::vector<std::uint64_t>& outcomes) {
    require(!outcomes.empty(), "majority_vote: no outcomes");
    std::map<std::uint64_t, std::size_t> counts;
    for (auto o : outcomes) ++counts[o];
    std::uint64_t best = 0;
    std::size_t best_count = 0;
    for (const auto& [label, count] : counts) {
        if (count > best_count) {  // ascending labels, so ties keep the lowest
            best = label;
            best_count = count;
        }
    }
    return best;
}

std::uint64_t majority_vote_sample(const OutcomeDistribution& dist, std::size_t repetitions,
                                   Rng& rng) {
    require(repetitions >= 1, "majority_vote_sample: repetitions must be at least 1");
    std::vector<std::uint64_t> outcomes;
    outcomes.reserve(repetitions);
    for (std::size_t i = 0; i < repetitions; ++i) outcomes.push_back(sample_outcome(dist, rng));
    return majority_vote(outcomes);
}

std::uint64_t majority_vote_run(const UnitarySet& set, std::size_t repetitions,
                                std::uint64_t seed) {
    const OutcomeDistribution dist = run_algorithm_mixed(set);
    Rng rng(seed);
    return majority_vote_sample(dist, repetitions, rng);
}

QueryLedger count_queries_switch(const UnitarySet& set, const StateVector& control) {
    const std::uint64_t m = factorial(set.n);
    require(control.total() == m, "count_queries_switch: control size must be n!");
    QueryLedger ledger;
    for (std::uint64_t x = 0; x < m; ++x) {
        if (std::abs(control.amps[x]) <= tol::support) continue;
        std::vector<std::uint64_t> counts(set.n, 0);
        for (std::size_t op : label_to_permutation(x, set.n).application_order) ++counts[op];
        ledger.branch_counts.emplace(x, std::move(counts));
    }
    const std::vector<std::uint64_t>* shared = nullptr;
    ledger.flags_factorize = !ledger.branch_counts.empty();
    for (const auto& [x, counts] : ledger.branch_counts) {
        if (shared == nullptr) {
            shared = &counts;
        } else if (counts != *shared) {
            ledger.flags_factorize = false;
            break;
        }
    }
    if (ledger.flags_factorize && shared != nullptr)
        for (auto c : *shared) ledger.total_queries += c;
    return ledger;
}

}  // namespace switchsim
