#include <algorithm>
#include <vector>

#include "doctest.h"
#include "switchsim/perm.hpp"

using namespace switchsim;

namespace {

/// Independent replay of the labeling procedure: start from the line
/// (n-1, ..., 1, 0) and move element k right by a_k slots, k ascending.
std::vector<std::size_t> replay_line(const Factoradic& f) {
    std::vector<std::size_t> line(f.n);
    for (std::size_t i = 0; i < f.n; ++i) line[i] = f.n - 1 - i;
    for (std::size_t k = 1; k < f.n; ++k) {
        const auto it = std::find(line.begin(), line.end(), k);
        const std::size_t pos = static_cast<std::size_t>(it - line.begin());
        line.erase(it);
        line.insert(line.begin() + static_cast<std::ptrdiff_t>(pos + f.digit(k)), k);
    }
    return line;
}

}  // namespace

TEST_CASE("factorial values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(2) == 2);
    CHECK(factorial(3) == 6);
    CHECK(factorial(4) == 24);
    CHECK(factorial(5) == 120);
    CHECK(factorial(6) == 720);
    CHECK(factorial(20) == 2432902008176640000ULL);
    CHECK_THROWS_AS(factorial(21), std::invalid_argument);
}

TEST_CASE("factoradic digits reconstruct the label") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t x = 0; x < factorial(n); ++x) {
            const Factoradic f = label_to_factoradic(x, n);
            REQUIRE(f.digits.size() == n - 1);
            std::uint64_t rebuilt = 0;
            std::uint64_t fact = 1;
            for (std::size_t k = 1; k < n; ++k) {
                fact *= k;
                CHECK(f.digit(k) <= k);
                rebuilt += f.digit(k) * fact;
            }
            CHECK(rebuilt == x);
            CHECK(factoradic_to_label(f) == x);
        }
    }
    CHECK_THROWS_AS(label_to_factoradic(6, 3), std::out_of_range);
    CHECK_THROWS_AS(label_to_factoradic(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(factoradic_to_label(Factoradic{3, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("label 21 at n=4 is the worked fixture") {
    const Factoradic f = label_to_factoradic(21, 4);
    CHECK(f.digit(1) == 1);
    CHECK(f.digit(2) == 1);
    CHECK(f.digit(3) == 3);  // 21 = 3*3! + 1*2! + 1*1!

    const PermutationLabel p = label_to_permutation(21, 4);
    CHECK(p.application_order == std::vector<std::size_t>{0, 2, 1, 3});
    CHECK(p.sigma == std::vector<std::size_t>{3, 1, 2, 0});
}

TEST_CASE("labeling matches an independent shift replay") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::uint64_t x = 0; x < factorial(n); ++x) {
            const PermutationLabel p = label_to_permutation(x, n);
            const std::vector<std::size_t> line = replay_line(label_to_factoradic(x, n));
            CHECK(p.application_order == line);
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t step = static_cast<std::size_t>(
                    std::find(line.begin(), line.end(), j) - line.begin());
                CHECK(p.sigma[j] == n - 1 - step);
            }
        }
    }
}

TEST_CASE("label 0 leaves the line untouched") {
    const PermutationLabel p = label_to_permutation(0, 4);
    CHECK(p.application_order == std::vector<std::size_t>{3, 2, 1, 0});
    CHECK(p.sigma == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("distinct labels give distinct orderings") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::vector<std::size_t>> seen;
        for (std::uint64_t x = 0; x < factorial(n); ++x)
            seen.push_back(label_to_permutation(x, n).application_order);
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
}

TEST_CASE("sigma and application order determine each other") {
    for (std::uint64_t x = 0; x < factorial(4); ++x) {
        const PermutationLabel p = label_to_permutation(x, 4);
        for (std::size_t t = 0; t < 4; ++t) CHECK(p.sigma[p.application_order[t]] == 4 - 1 - t);
    }
}

TEST_CASE("routing bits carry the digits as leading-ones rows") {
    const Factoradic f = label_to_factoradic(21, 4);  // digits (1, 1, 3)
    const std::vector<bool> bits = factoradic_to_bits(f);
    CHECK(bits == std::vector<bool>{true, true, false, true, true, true});

    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::uint64_t x = 0; x < factorial(n); ++x) {
            const Factoradic digits = label_to_factoradic(x, n);
            const std::vector<bool> b = factoradic_to_bits(digits);
            CHECK(b.size() == n * (n - 1) / 2);
            const Factoradic back = bits_to_factoradic(b, n);
            CHECK(back.digits == digits.digits);
        }
    }

    // row (0, 1) is not of leading-ones form
    CHECK_THROWS_AS(bits_to_factoradic({true, false, true}, 3), std::invalid_argument);
    CHECK_THROWS_AS(bits_to_factoradic({true, false}, 3), std::invalid_argument);
}
