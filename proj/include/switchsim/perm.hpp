#ifndef SWITCHSIM_PERM_HPP
#define SWITCHSIM_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace switchsim {

std::uint64_t factorial(std::size_t n);

/// Factoradic coefficients of a label: x = sum_{k=1..n-1} a_k * k!
/// with 0 <= a_k <= k. digit(k) returns a_k.
struct Factoradic {
    std::size_t n = 1;
    std::vector<std::size_t> digits;  // digits[i] = a_{i+1}, i in [0, n-1)

    std::size_t digit(std::size_t k) const { return digits.at(k - 1); }
};

Factoradic label_to_factoradic(std::uint64_t x, std::size_t n);
std::uint64_t factoradic_to_label(const Factoradic& f);

/// Ordering of the n operations selected by a label. Built by the
/// right-shift procedure: start from the line (n-1, ..., 1, 0), then for
/// k = 1..n-1 move element k right by a_k positions.
///
///   * application_order[t] is the index applied at step t (step 0 first);
///     it reads the shifted line left to right.
///   * sigma[j] is the final position of element j, counted from the
///     right end of the line, so sigma is the identity at label 0.
///     sigma[j] = n-1 - (application step of element j).
struct PermutationLabel {
    std::uint64_t label = 0;
    std::size_t n = 1;
    std::vector<std::size_t> application_order;
    std::vector<std::size_t> sigma;
};

PermutationLabel label_to_permutation(std::uint64_t x, std::size_t n);

/// Control bits of the routing network for one label: bit (k, j) with
/// 1 <= j <= k <= n-1 is set iff j <= a_k, i.e. row k carries exactly
/// a_k leading ones. Bits are listed in increasing k, then increasing j,
/// matching the swap order of the network.
std::vector<bool> factoradic_to_bits(const Factoradic& f);

/// Inverse of factoradic_to_bits; rejects rows that are not of the
/// leading-ones form.
Factoradic bits_to_factoradic(const std::vector<bool>& bits, std::size_t n);

}  // namespace switchsim

#endif
