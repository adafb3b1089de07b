#include "switchsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "switchsim/errors.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

std::size_t checked_pow(std::size_t base, std::size_t exponent, std::size_t cap) {
    std::size_t value = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (value > cap / base) return cap + 1;  // saturate instead of overflowing
        value *= base;
    }
    return value;
}

std::vector<Complex> outer(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

std::vector<std::size_t> decode_digits(std::size_t index, std::size_t n) {
    std::vector<std::size_t> digits(n);
    for (std::size_t k = n; k-- > 0;) {
        digits[k] = index % n;
        index /= n;
    }
    return digits;
}

}  // namespace

bool CircuitControl::encodes_permutation() const {
    if (digits.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t d : digits) {
        if (d >= n || seen[d]) return false;
        seen[d] = true;
    }
    return true;
}

CircuitControl label_to_control(std::uint64_t x, std::size_t n) {
    return CircuitControl{n, label_to_permutation(x, n).application_order};
}

std::uint64_t control_to_label(const CircuitControl& control) {
    require(control.encodes_permutation(), "control_to_label: digits are not a permutation");
    const std::size_t n = control.n;
    std::vector<std::size_t> position(n);
    for (std::size_t step = 0; step < n; ++step) position[control.digits[step]] = step;
    // the label's factoradic digit a_k counts smaller operators applied
    // before operator k
    std::uint64_t label = 0;
    for (std::size_t k = 1; k < n; ++k) {
        std::uint64_t a_k = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (position[j] < position[k]) ++a_k;
        label += a_k * factorial(k);
    }
    return label;
}

std::size_t control_index(const CircuitControl& control) {
    require(control.digits.size() == control.n, "control_index: digit count != n");
    std::size_t index = 0;
    for (std::size_t d : control.digits) {
        require(d < control.n, "control_index: digit out of range");
        index = index * control.n + d;
    }
    return index;
}

StateVector control_basis_state(const CircuitControl& control) {
    const std::size_t space = checked_pow(control.n, control.n, Budget{}.state_amps);
    StateVector state(std::vector<std::size_t>{space});
    state.amps[control_index(control)] = Complex{1.0, 0.0};
    return state;
}

CircuitState run_fixed_circuit(const UnitarySet& set, const StateVector& control,
                               const StateVector& psi, const std::vector<StateVector>& ancillae,
                               const Budget& budget) {
    const std::size_t n = set.n;
    const std::size_t d = set.dim;
    const std::size_t digit_space = checked_pow(n, n, budget.state_amps);
    require(control.total() == digit_space, "run_fixed_circuit: control size must be n^n");
    require(psi.total() == d, "run_fixed_circuit: target size must be d");
    require(ancillae.size() == n, "run_fixed_circuit: need one ancilla per operator");
    for (const auto& a : ancillae)
        require(a.total() == d, "run_fixed_circuit: ancilla size must be d");

    const std::size_t target_space = checked_pow(d, n + 1, budget.state_amps);
    if (target_space > budget.state_amps / digit_space)
        throw BudgetError("run_fixed_circuit: state amplitudes exceed budget");

    std::vector<std::size_t> dims(n, n);
    dims.push_back(d);
    dims.insert(dims.end(), n, d);
    CircuitState out{n, d, StateVector(dims)};
    std::vector<Complex> amps = outer(control.amps, psi.amps);
    for (const auto& a : ancillae) amps = outer(amps, a.amps);
    out.state.amps = std::move(amps);

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            controlled_swap_registers(out.state, k, i, out.target_register(),
                                      out.ancilla_register(i));
        for (std::size_t i = 0; i < n; ++i)
            apply(set.unitaries[i], out.state, out.ancilla_register(i));
        for (std::size_t i = 0; i < n; ++i)
            controlled_swap_registers(out.state, k, i, out.target_register(),
                                      out.ancilla_register(i));
    }
    return out;
}

CircuitState run_fixed_circuit(const UnitarySet& set, const StateVector& control,
                               const StateVector& psi, const Budget& budget) {
    StateVector zero(std::vector<std::size_t>{set.dim});
    zero.amps[0] = Complex{1.0, 0.0};
    return run_fixed_circuit(set, control, psi, std::vector<StateVector>(set.n, zero), budget);
}

AncillaVerdict check_ancilla_disentangled(const CircuitState& output) {
    std::size_t ancilla_dim = 1;
    for (std::size_t i = 0; i < output.n; ++i) ancilla_dim *= output.dim;
    const std::size_t rest_dim = output.state.total() / ancilla_dim;

    // Gram matrix of the per-rest-index ancilla fibers; it shares its
    // nonzero spectrum with the ancilla reduced state.
    DenseMatrix gram(rest_dim);
    const auto& amps = output.state.amps;
    for (std::size_t r = 0; r < rest_dim; ++r)
        for (std::size_t s = r; s < rest_dim; ++s) {
            Complex sum{0.0, 0.0};
            for (std::size_t a = 0; a < ancilla_dim; ++a)
                sum += std::conj(amps[r * ancilla_dim + a]) * amps[s * ancilla_dim + a];
            gram.at(r, s) = sum;
            gram.at(s, r) = std::conj(sum);
        }

    double purity = 0.0;
    for (const auto& e : gram.entries) purity += std::norm(e);

    // Largest eigenvalue by power iteration; gram is positive
    // semidefinite so plain iteration converges to the top eigenvalue.
    // Fixed pseudorandom start so no structured eigenvector is missed.
    Rng start(0x5eedf1de0f00dULL);
    std::vector<Complex> v(rest_dim);
    double v_norm = 0.0;
    for (auto& c : v) {
        c = start.complex_normal();
        v_norm += std::norm(c);
    }
    for (auto& c : v) c /= std::sqrt(v_norm);
    double lambda = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Complex> w(rest_dim, Complex{0.0, 0.0});
        for (std::size_t r = 0; r < rest_dim; ++r)
            for (std::size_t s = 0; s < rest_dim; ++s) w[r] += gram.at(r, s) * v[s];
        double norm_sq = 0.0;
        for (const auto& c : w) norm_sq += std::norm(c);
        if (norm_sq <= tol::support * tol::support) {
            lambda = 0.0;
            break;
        }
        lambda = std::sqrt(norm_sq);
        for (auto& c : w) c /= lambda;
        v = std::move(w);
    }

    AncillaVerdict verdict;
    verdict.fidelity = lambda;
    verdict.disentangled = std::abs(purity - 1.0) <= tol::unitarity;
    return verdict;
}

JointState project_ancillae(const CircuitState& output, const std::vector<StateVector>& phi) {
    require(phi.size() == output.n, "project_ancillae: need one state per ancilla");
    std::vector<Complex> flat{Complex{1.0, 0.0}};
    for (const auto& p : phi) {
        require(p.total() == output.dim, "project_ancillae: ancilla state size must be d");
        flat = outer(flat, p.amps);
    }
    const std::size_t ancilla_dim = flat.size();
    const std::size_t rest_dim = output.state.total() / ancilla_dim;

    std::vector<std::size_t> dims(output.n, output.n);
    dims.push_back(output.dim);
    JointState projected(dims);
    for (std::size_t r = 0; r < rest_dim; ++r) {
        Complex sum{0.0, 0.0};
        for (std::size_t a = 0; a < ancilla_dim; ++a)
            sum += std::conj(flat[a]) * output.state.amps[r * ancilla_dim + a];
        projected.amps[r] = sum;
    }
    return projected;
}

JointState digits_to_label_state(const JointState& digit_state, std::size_t n, std::size_t d) {
    const std::size_t digit_space = checked_pow(n, n, Budget{}.state_amps);
    require(digit_state.total() == digit_space * d,
            "digits_to_label_state: state size must be n^n * d");
    const std::uint64_t m = factorial(n);
    JointState labeled(std::vector<std::size_t>{m, d});
    for (std::size_t idx = 0; idx < digit_space; ++idx) {
        const CircuitControl control{n, decode_digits(idx, n)};
        if (!control.encodes_permutation()) {
            for (std::size_t t = 0; t < d; ++t)
                if (std::abs(digit_state.amps[idx * d + t]) > tol::support)
                    throw std::invalid_argument(
                        "digits_to_label_state: non-permutation branch carries amplitude");
            continue;
        }
        const std::uint64_t label = control_to_label(control);
        for (std::size_t t = 0; t < d; ++t)
            labeled.amps[label * d + t] = digit_state.amps[idx * d + t];
    }
    return labeled;
}

std::vector<std::uint64_t> branch_target_counts(const CircuitControl& control) {
    require(control.digits.size() == control.n, "branch_target_counts: digit count != n");
    std::vector<std::uint64_t> counts(control.n, 0);
    for (std::size_t d : control.digits) {
        require(d < control.n, "branch_target_counts: digit out of range");
        ++counts[d];
    }
    return counts;
}

std::uint64_t circuit_query_count(std::size_t n) {
    require(n >= 1, "circuit_query_count: n must be at least 1");
    return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
}

QueryLedger count_queries_circuit(std::size_t n, const StateVector& control) {
    const std::size_t digit_space = checked_pow(n, n, Budget{}.state_amps);
    require(control.total() == digit_space, "count_queries_circuit: control size must be n^n");
    QueryLedger ledger;
    for (std::size_t idx = 0; idx < digit_space; ++idx) {
        if (std::abs(control.amps[idx]) <= tol::support) continue;
        const CircuitControl branch{n, decode_digits(idx, n)};
        const std::vector<std::uint64_t> target_hits = branch_target_counts(branch);
        std::vector<std::uint64_t> counts(n);
        for (std::size_t i = 0; i < n; ++i)
            counts[i] = target_hits[i] + (n - target_hits[i]);  // ancilla i absorbs the rest
        ledger.branch_counts.emplace(idx, std::move(counts));
    }
    const std::vector<std::uint64_t>* shared = nullptr;
    ledger.flags_factorize = !ledger.branch_counts.empty();
    for (const auto& [idx, counts] : ledger.branch_counts) {
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
