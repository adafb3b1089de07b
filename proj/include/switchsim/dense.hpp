#ifndef SWITCHSIM_DENSE_HPP
#define SWITCHSIM_DENSE_HPP

#include <cstddef>
#include <vector>

#include "switchsim/monomial.hpp"
#include "switchsim/tolerances.hpp"

namespace switchsim {

/// Row-major square complex matrix. Fallback representation for
/// perturbed or externally supplied operators that are not monomial.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;  // row-major, dim*dim

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim_in)
        : dim(dim_in), entries(dim_in * dim_in, Complex{0.0, 0.0}) {}

    Complex& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }

    static DenseMatrix identity(std::size_t dim);
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix tensor(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& m);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(Complex c, const DenseMatrix& m);

/// Squared Hilbert-Schmidt (Frobenius) norm: sum of |entry|^2.
double hs_norm_sq(const DenseMatrix& m);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

bool is_unitary(const DenseMatrix& m, double tolerance = tol::unitarity);

DenseMatrix to_dense(const MonomialUnitary& u);

/// exp(i*epsilon*H) for Hermitian H, via scaled Taylor summation.
DenseMatrix unitary_exponential(const DenseMatrix& hermitian, double epsilon);

/// Random Hermitian matrix with unit spectral norm (power-iteration
/// estimate), from the given stream. Deterministic per stream state.
class Rng;
DenseMatrix random_hermitian_unit_norm(std::size_t dim, Rng& rng);

}  // namespace switchsim

#endif
