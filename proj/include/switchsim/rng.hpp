#ifndef SWITCHSIM_RNG_HPP
#define SWITCHSIM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace switchsim {

/// Deterministic random stream. The engine is std::mt19937_64; the
/// bit-to-double and Gaussian mappings are pinned here because the
/// standard distribution objects are implementation-defined and would
/// break the seeded-reproducibility contract across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Derive an independent stream for a named role under one user seed.
    static Rng stream(std::uint64_t seed, std::uint64_t role) {
        // splitmix64 finalizer as a mixing function
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (role + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    std::uint64_t bits() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (no cached spare, for simplicity).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    std::complex<double> complex_normal() { return {normal(), normal()}; }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % bound;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace switchsim

#endif
