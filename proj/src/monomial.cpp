#include "switchsim/monomial.hpp"

#include <cmath>
#include <stdexcept>

#include "switchsim/errors.hpp"

namespace switchsim {

MonomialUnitary::MonomialUnitary(std::vector<std::size_t> perm_in, std::vector<Complex> phases_in)
    : dim(perm_in.size()), perm(std::move(perm_in)), phases(std::move(phases_in)) {
    if (perm.size() != phases.size())
        throw std::invalid_argument("monomial: perm and phases must have equal length");
    if (!is_valid())
        throw std::invalid_argument("monomial: perm must be a bijection with unit-modulus phases");
}

MonomialUnitary MonomialUnitary::identity(std::size_t dim) {
    MonomialUnitary u;
    u.dim = dim;
    u.perm.resize(dim);
    u.phases.assign(dim, Complex{1.0, 0.0});
    for (std::size_t c = 0; c < dim; ++c) u.perm[c] = c;
    return u;
}

bool MonomialUnitary::is_valid(double phase_tol) const {
    if (perm.size() != dim || phases.size() != dim) return false;
    std::vector<bool> seen(dim, false);
    for (std::size_t c = 0; c < dim; ++c) {
        if (perm[c] >= dim || seen[perm[c]]) return false;
        seen[perm[c]] = true;
        if (std::abs(std::abs(phases[c]) - 1.0) > phase_tol) return false;
    }
    return true;
}

MonomialUnitary generalized_pauli(Pauli kind, std::size_t dim, long long power, Complex omega) {
    if (dim == 0) throw std::invalid_argument("generalized_pauli: dim must be positive");
    if (std::abs(std::pow(omega, static_cast<double>(dim)) - Complex{1.0, 0.0}) > tol::unitarity)
        throw std::invalid_argument("generalized_pauli: omega^dim must equal 1");

    const auto n = static_cast<long long>(dim);
    const double theta = std::arg(omega);
    MonomialUnitary u = MonomialUnitary::identity(dim);
    if (kind == Pauli::X) {
        const std::size_t shift = static_cast<std::size_t>(((power % n) + n) % n);
        for (std::size_t c = 0; c < dim; ++c) u.perm[c] = (c + shift) % dim;
    } else {
        for (std::size_t c = 0; c < dim; ++c) {
            // exponent reduced mod dim; valid because omega^dim = 1
            const long long e = ((power % n) * static_cast<long long>(c)) % n;
            u.phases[c] = std::polar(1.0, theta * static_cast<double>(e));
        }
    }
    return u;
}

MonomialUnitary multiply(const MonomialUnitary& a, const MonomialUnitary& b) {
    if (a.dim != b.dim) throw std::invalid_argument("monomial multiply: dimension mismatch");
    MonomialUnitary out;
    out.dim = a.dim;
    out.perm.resize(a.dim);
    out.phases.resize(a.dim);
    for (std::size_t c = 0; c < a.dim; ++c) {
        out.perm[c] = a.perm[b.perm[c]];
        out.phases[c] = a.phases[b.perm[c]] * b.phases[c];
    }
    return out;
}

MonomialUnitary tensor(const std::vector<MonomialUnitary>& factors, std::size_t max_entries) {
    if (factors.empty()) return MonomialUnitary::identity(1);
    std::size_t total = 1;
    for (const auto& f : factors) {
        if (f.dim == 0) throw std::invalid_argument("tensor: zero-dimensional factor");
        if (total > max_entries / f.dim)
            throw BudgetError("tensor: flat size would exceed the configured budget");
        total *= f.dim;
    }
    MonomialUnitary out;
    out.dim = total;
    out.perm.resize(total);
    out.phases.resize(total);
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t rest = c, row = 0;
        Complex phase{1.0, 0.0};
        // peel indices from the fastest-varying (last) factor upward
        std::size_t stride = 1;
        std::size_t row_acc = 0;
        for (std::size_t i = factors.size(); i-- > 0;) {
            const auto& f = factors[i];
            const std::size_t ci = rest % f.dim;
            rest /= f.dim;
            row_acc += f.perm[ci] * stride;
            phase *= f.phases[ci];
            stride *= f.dim;
        }
        row = row_acc;
        out.perm[c] = row;
        out.phases[c] = phase;
    }
    return out;
}

MonomialUnitary adjoint(const MonomialUnitary& u) {
    MonomialUnitary out;
    out.dim = u.dim;
    out.perm.resize(u.dim);
    out.phases.resize(u.dim);
    for (std::size_t c = 0; c < u.dim; ++c) {
        out.perm[u.perm[c]] = c;
        out.phases[u.perm[c]] = std::conj(u.phases[c]);
    }
    return out;
}

MonomialUnitary pow(const MonomialUnitary& u, std::uint64_t exponent) {
    MonomialUnitary result = MonomialUnitary::identity(u.dim);
    MonomialUnitary base = u;
    while (exponent > 0) {
        if (exponent & 1) result = multiply(base, result);
        base = multiply(base, base);
        exponent >>= 1;
    }
    return result;
}

Complex determinant(const MonomialUnitary& u) {
    std::vector<bool> seen(u.dim, false);
    int sign = 1;
    for (std::size_t start = 0; start < u.dim; ++start) {
        if (seen[start]) continue;
        std::size_t len = 0, c = start;
        while (!seen[c]) {
            seen[c] = true;
            c = u.perm[c];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    Complex det{static_cast<double>(sign), 0.0};
    for (const auto& p : u.phases) det *= p;
    return det;
}

double max_abs_diff(const MonomialUnitary& a, const MonomialUnitary& b) {
    if (a.dim != b.dim) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t c = 0; c < a.dim; ++c) {
        if (a.perm[c] == b.perm[c]) {
            worst = std::max(worst, std::abs(a.phases[c] - b.phases[c]));
        } else {
            worst = std::max({worst, std::abs(a.phases[c]), std::abs(b.phases[c])});
        }
    }
    return worst;
}

std::optional<Complex> uniform_ratio(const MonomialUnitary& a, const MonomialUnitary& b,
                                     double tolerance) {
    if (a.dim != b.dim || a.dim == 0) return std::nullopt;
    for (std::size_t c = 0; c < a.dim; ++c)
        if (a.perm[c] != b.perm[c]) return std::nullopt;
    const Complex ratio = a.phases[0] / b.phases[0];
    for (std::size_t c = 1; c < a.dim; ++c)
        if (std::abs(a.phases[c] - ratio * b.phases[c]) > tolerance) return std::nullopt;
    return ratio;
}

double TensorMonomial::dim_product() const {
    double product = 1.0;
    for (const auto& f : factors) product *= static_cast<double>(f.dim);
    return product;
}

TensorMonomial multiply(const TensorMonomial& a, const TensorMonomial& b) {
    if (a.factors.size() != b.factors.size())
        throw std::invalid_argument("tensor monomial multiply: factor count mismatch");
    TensorMonomial out;
    out.factors.reserve(a.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        out.factors.push_back(multiply(a.factors[i], b.factors[i]));
    return out;
}

std::optional<Complex> uniform_ratio(const TensorMonomial& a, const TensorMonomial& b,
                                     double tolerance) {
    if (a.factors.size() != b.factors.size()) return std::nullopt;
    Complex ratio{1.0, 0.0};
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const auto r = uniform_ratio(a.factors[i], b.factors[i], tolerance);
        if (!r) return std::nullopt;
        ratio *= *r;
    }
    return ratio;
}

}  // namespace switchsim
