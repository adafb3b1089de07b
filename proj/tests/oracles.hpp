#ifndef SWITCHSIM_TESTS_ORACLES_HPP
#define SWITCHSIM_TESTS_ORACLES_HPP

// Naive reference implementations the tests compare the library
// against. Everything here favors obviousness over speed: triple-loop
// products, index-arithmetic Kronecker products, Leibniz determinants.

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "switchsim/dense.hpp"
#include "switchsim/monomial.hpp"
#include "switchsim/rng.hpp"

namespace oracles {

using switchsim::Complex;
using switchsim::DenseMatrix;
using switchsim::MonomialUnitary;
using switchsim::Rng;

inline DenseMatrix naive_multiply(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k)
            for (std::size_t j = 0; j < a.dim; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    return c;
}

inline DenseMatrix naive_tensor(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.dim * b.dim);
    for (std::size_t ia = 0; ia < a.dim; ++ia)
        for (std::size_t ja = 0; ja < a.dim; ++ja)
            for (std::size_t ib = 0; ib < b.dim; ++ib)
                for (std::size_t jb = 0; jb < b.dim; ++jb)
                    c.at(ia * b.dim + ib, ja * b.dim + jb) = a.at(ia, ja) * b.at(ib, jb);
    return c;
}

inline std::vector<Complex> naive_matvec(const DenseMatrix& m, const std::vector<Complex>& v) {
    std::vector<Complex> out(m.dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Leibniz expansion; fine up to dim 8.
inline Complex leibniz_determinant(const DenseMatrix& m) {
    std::vector<std::size_t> p(m.dim);
    std::iota(p.begin(), p.end(), 0);
    Complex det{0.0, 0.0};
    do {
        Complex term{static_cast<double>(permutation_sign(p)), 0.0};
        for (std::size_t col = 0; col < m.dim; ++col) term *= m.at(p[col], col);
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

inline MonomialUnitary random_monomial(std::size_t dim, Rng& rng) {
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = dim; i > 1; --i)  // Fisher-Yates
        std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Complex> phases(dim);
    for (auto& p : phases) p = std::polar(1.0, 6.283185307179586 * rng.uniform());
    return MonomialUnitary(std::move(perm), std::move(phases));
}

}  // namespace oracles

#endif
