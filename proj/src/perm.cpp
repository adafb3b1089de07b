#include "switchsim/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace switchsim {

std::uint64_t factorial(std::size_t n) {
    if (n > 20) throw std::invalid_argument("factorial: overflow beyond 20!");
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

Factoradic label_to_factoradic(std::uint64_t x, std::size_t n) {
    if (n == 0) throw std::invalid_argument("label_to_factoradic: n must be positive");
    if (x >= factorial(n)) throw std::out_of_range("label_to_factoradic: label outside [0, n!)");
    Factoradic f;
    f.n = n;
    f.digits.resize(n - 1);
    std::uint64_t fact = 1;
    for (std::size_t k = 1; k < n; ++k) {
        fact *= k;  // k!
        f.digits[k - 1] = static_cast<std::size_t>((x / fact) % (k + 1));
    }
    return f;
}

std::uint64_t factoradic_to_label(const Factoradic& f) {
    if (f.n == 0 || f.digits.size() != f.n - 1)
        throw std::invalid_argument("factoradic_to_label: digit count must be n-1");
    std::uint64_t x = 0, fact = 1;
    for (std::size_t k = 1; k < f.n; ++k) {
        fact *= k;
        if (f.digits[k - 1] > k)
            throw std::out_of_range("factoradic_to_label: digit a_k exceeds k");
        x += f.digits[k - 1] * fact;
    }
    return x;
}

PermutationLabel label_to_permutation(std::uint64_t x, std::size_t n) {
    const Factoradic f = label_to_factoradic(x, n);
    PermutationLabel result;
    result.label = x;
    result.n = n;

    // line[p] = element at position p, left to right
    std::vector<std::size_t> line(n);
    for (std::size_t p = 0; p < n; ++p) line[p] = n - 1 - p;
    for (std::size_t k = 1; k < n; ++k) {
        auto pos = static_cast<std::size_t>(
            std::find(line.begin(), line.end(), k) - line.begin());
        for (std::size_t step = 0; step < f.digit(k); ++step) {
            std::swap(line[pos], line[pos + 1]);
            ++pos;
        }
    }

    result.application_order = line;
    result.sigma.resize(n);
    for (std::size_t p = 0; p < n; ++p) result.sigma[line[p]] = n - 1 - p;
    return result;
}

std::vector<bool> factoradic_to_bits(const Factoradic& f) {
    std::vector<bool> bits;
    bits.reserve(f.n * (f.n - 1) / 2);
    for (std::size_t k = 1; k < f.n; ++k)
        for (std::size_t j = 1; j <= k; ++j) bits.push_back(j <= f.digit(k));
    return bits;
}

Factoradic bits_to_factoradic(const std::vector<bool>& bits, std::size_t n) {
    if (n == 0) throw std::invalid_argument("bits_to_factoradic: n must be positive");
    if (bits.size() != n * (n - 1) / 2)
        throw std::invalid_argument("bits_to_factoradic: expected n(n-1)/2 bits");
    Factoradic f;
    f.n = n;
    f.digits.resize(n - 1);
    std::size_t idx = 0;
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t ones = 0;
        bool seen_zero = false;
        for (std::size_t j = 1; j <= k; ++j, ++idx) {
            if (bits[idx]) {
                if (seen_zero)
                    throw std::invalid_argument("bits_to_factoradic: row is not leading-ones");
                ++ones;
            } else {
                seen_zero = true;
            }
        }
        f.digits[k - 1] = ones;
    }
    return f;
}

}  // namespace switchsim
