#include "switchsim/periodic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace switchsim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kPi = 3.1415926535897932384626434;

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace

PhaseFunction make_phase_function(std::size_t n, std::uint64_t r,
                                  std::vector<std::uint64_t> values) {
    const std::uint64_t N = factorial(n);
    require(r >= 1 && N % r == 0, "phase function: period must divide n!");
    require(values.size() == N, "phase function: need one value per label");
    for (auto& v : values) v %= N;
    for (std::uint64_t x = 0; x < N; ++x)
        require(values[(x + r) % N] == values[x], "phase function: values not r-periodic");
    return PhaseFunction{n, r, std::move(values)};
}

PhaseFunction linear_phase_function(std::size_t n, std::uint64_t y) {
    const std::uint64_t N = factorial(n);
    std::vector<std::uint64_t> values(N);
    for (std::uint64_t x = 0; x < N; ++x)
        values[x] = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * (y % N)) % N);
    const std::uint64_t r = N / std::gcd(y % N, N);
    return make_phase_function(n, r, std::move(values));
}

PhaseFunction sawtooth_phase_function(std::size_t n, std::uint64_t r) {
    const std::uint64_t N = factorial(n);
    require(r >= 1 && N % r == 0, "sawtooth: period must divide n!");
    std::vector<std::uint64_t> values(N);
    for (std::uint64_t x = 0; x < N; ++x) values[x] = x % r;
    return make_phase_function(n, r, std::move(values));
}

OutcomeDistribution run_with_phase_function(const PhaseFunction& pf) {
    const std::uint64_t N = factorial(pf.n);
    require(pf.g.size() == N && pf.r >= 1 && N % pf.r == 0,
            "run_with_phase_function: malformed phase function");
    StateVector state(std::vector<std::size_t>{N});
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::uint64_t x = 0; x < N; ++x)
        state.amps[x] = std::polar(
            amplitude, kTwoPi * static_cast<double>(pf.g[x] % N) / static_cast<double>(N));
    state = qft_control(std::move(state), FourierDirection::forward);
    OutcomeDistribution dist;
    dist.probs.reserve(N);
    for (const auto& a : state.amps) dist.probs.push_back(std::norm(a));
    return dist;
}

double analytic_p0(std::uint64_t r, std::uint64_t N) {
    require(N >= 1 && r >= 1 && r <= N, "analytic_p0: need 1 <= r <= N");
    if (r == 1) return 1.0;
    const double rr = static_cast<double>(r);
    const double NN = static_cast<double>(N);
    const double numerator = std::sin(kPi * rr / NN);
    const double denominator = std::sin(kPi / NN);
    return (numerator * numerator) / (rr * rr * denominator * denominator);
}

OutcomeDistribution uniform_period_distribution(std::uint64_t r, std::uint64_t N) {
    require(r >= 1 && N % r == 0, "uniform_period_distribution: r must divide N");
    OutcomeDistribution dist;
    dist.probs.assign(N, 0.0);
    const std::uint64_t step = N / r;
    for (std::uint64_t k = 0; k < r; ++k) dist.probs[k * step] = 1.0 / static_cast<double>(r);
    return dist;
}

double total_variation(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    require(a.probs.size() == b.probs.size(), "total_variation: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i) sum += std::abs(a.probs[i] - b.probs[i]);
    return 0.5 * sum;
}

}  // namespace switchsim
