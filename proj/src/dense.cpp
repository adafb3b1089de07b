#include "switchsim/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "switchsim/rng.hpp"

namespace switchsim {

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Complex{1.0, 0.0};
    return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dense multiply: dimension mismatch");
    DenseMatrix out(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < a.dim; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

DenseMatrix tensor(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            const Complex aij = a.at(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.dim; ++k)
                for (std::size_t l = 0; l < b.dim; ++l)
                    out.at(i * b.dim + k, j * b.dim + l) = aij * b.at(k, l);
        }
    return out;
}

DenseMatrix adjoint(const DenseMatrix& m) {
    DenseMatrix out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) out.at(j, i) = std::conj(m.at(i, j));
    return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("dense add: dimension mismatch");
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
    return out;
}

DenseMatrix scale(Complex c, const DenseMatrix& m) {
    DenseMatrix out = m;
    for (auto& e : out.entries) e *= c;
    return out;
}

double hs_norm_sq(const DenseMatrix& m) {
    double total = 0.0;
    for (const auto& e : m.entries) total += std::norm(e);
    return total;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    return worst;
}

bool is_unitary(const DenseMatrix& m, double tolerance) {
    const DenseMatrix product = multiply(adjoint(m), m);
    return max_abs_diff(product, DenseMatrix::identity(m.dim)) <= tolerance;
}

DenseMatrix to_dense(const MonomialUnitary& u) {
    DenseMatrix out(u.dim);
    for (std::size_t c = 0; c < u.dim; ++c) out.at(u.perm[c], c) = u.phases[c];
    return out;
}

DenseMatrix unitary_exponential(const DenseMatrix& hermitian, double epsilon) {
    // A = i*epsilon*H, scaled so the Taylor series converges fast,
    // then squared back: exp(A) = exp(A/2^s)^(2^s).
    DenseMatrix a = scale(Complex{0.0, epsilon}, hermitian);
    double scale_norm = 0.0;
    for (const auto& e : a.entries) scale_norm += std::abs(e);
    int squarings = 0;
    while (scale_norm > 0.5 && squarings < 60) {
        a = scale(Complex{0.5, 0.0}, a);
        scale_norm *= 0.5;
        ++squarings;
    }
    DenseMatrix result = DenseMatrix::identity(a.dim);
    DenseMatrix term = DenseMatrix::identity(a.dim);
    for (int k = 1; k <= 24; ++k) {
        term = scale(Complex{1.0 / k, 0.0}, multiply(term, a));
        result = add(result, term);
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

DenseMatrix random_hermitian_unit_norm(std::size_t dim, Rng& rng) {
    DenseMatrix g(dim);
    for (auto& e : g.entries) e = rng.complex_normal();
    DenseMatrix h = scale(Complex{0.5, 0.0}, add(g, adjoint(g)));

    // spectral norm by power iteration on H (Hermitian, so |lambda_max| works)
    std::vector<Complex> v(dim);
    for (auto& x : v) x = rng.complex_normal();
    double norm_estimate = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Complex> w(dim, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) w[i] += h.at(i, j) * v[j];
        double nw = 0.0;
        for (const auto& x : w) nw += std::norm(x);
        nw = std::sqrt(nw);
        if (nw == 0.0) break;
        norm_estimate = nw;
        for (std::size_t i = 0; i < dim; ++i) v[i] = w[i] / nw;
    }
    if (norm_estimate == 0.0) return h;
    return scale(Complex{1.0 / norm_estimate, 0.0}, h);
}

}  // namespace switchsim
