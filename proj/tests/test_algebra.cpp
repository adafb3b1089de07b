#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "switchsim/dense.hpp"
#include "switchsim/errors.hpp"
#include "switchsim/monomial.hpp"
#include "switchsim/rng.hpp"
#include "switchsim/state.hpp"

using namespace switchsim;

namespace {

Complex root_of_unity(std::size_t dim, long long power = 1) {
    return std::polar(1.0, 2.0 * 3.14159265358979323846 * static_cast<double>(power) /
                               static_cast<double>(dim));
}

}  // namespace

TEST_CASE("monomial identity and validity") {
    const MonomialUnitary id = MonomialUnitary::identity(4);
    CHECK(id.is_valid());
    CHECK(max_abs_diff(to_dense(id), DenseMatrix::identity(4)) == 0.0);

    CHECK_THROWS_AS(MonomialUnitary({0, 0}, {Complex{1, 0}, Complex{1, 0}}),
                    std::invalid_argument);  // not a bijection
    CHECK_THROWS_AS(MonomialUnitary({0, 1}, {Complex{2, 0}, Complex{1, 0}}),
                    std::invalid_argument);  // phase off the unit circle
    CHECK_THROWS_AS(MonomialUnitary({0, 1}, {Complex{1, 0}}), std::invalid_argument);
}

TEST_CASE("generalized Pauli entries") {
    const std::size_t d = 5;
    const Complex w = root_of_unity(d);
    const DenseMatrix x = to_dense(generalized_pauli(Pauli::X, d, 1, w));
    const DenseMatrix z = to_dense(generalized_pauli(Pauli::Z, d, 1, w));
    for (std::size_t j = 0; j < d; ++j) {
        CHECK(std::abs(x.at((j + 1) % d, j) - Complex{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(z.at(j, j) - std::pow(w, static_cast<double>(j))) < 1e-12);
    }

    // order d, and negative powers are inverses
    const MonomialUnitary xd = generalized_pauli(Pauli::X, d, static_cast<long long>(d), w);
    CHECK(max_abs_diff(xd, MonomialUnitary::identity(d)) < 1e-12);
    const MonomialUnitary zm = generalized_pauli(Pauli::Z, d, -3, w);
    CHECK(max_abs_diff(multiply(zm, generalized_pauli(Pauli::Z, d, 3, w)),
                       MonomialUnitary::identity(d)) < 1e-12);

    CHECK_THROWS_AS(generalized_pauli(Pauli::X, d, 1, Complex{0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("shift and clock commute up to a root of unity") {
    // Z X = w X Z, checked densely
    for (std::size_t d : {2, 3, 6}) {
        const Complex w = root_of_unity(d);
        const DenseMatrix x = to_dense(generalized_pauli(Pauli::X, d, 1, w));
        const DenseMatrix z = to_dense(generalized_pauli(Pauli::Z, d, 1, w));
        const DenseMatrix zx = oracles::naive_multiply(z, x);
        const DenseMatrix xz = oracles::naive_multiply(x, z);
        CHECK(max_abs_diff(zx, scale(w, xz)) < 1e-12);
    }
}

TEST_CASE("monomial product matches the dense product") {
    Rng rng(101);
    for (std::size_t d : {2, 3, 4, 6}) {
        for (int rep = 0; rep < 10; ++rep) {
            const MonomialUnitary a = oracles::random_monomial(d, rng);
            const MonomialUnitary b = oracles::random_monomial(d, rng);
            const DenseMatrix expected = oracles::naive_multiply(to_dense(a), to_dense(b));
            CHECK(max_abs_diff(to_dense(multiply(a, b)), expected) < 1e-13);
        }
    }
}

TEST_CASE("monomial tensor matches the dense Kronecker product") {
    Rng rng(202);
    for (int rep = 0; rep < 8; ++rep) {
        const MonomialUnitary a = oracles::random_monomial(3, rng);
        const MonomialUnitary b = oracles::random_monomial(4, rng);
        const MonomialUnitary c = oracles::random_monomial(2, rng);
        const DenseMatrix expected =
            oracles::naive_tensor(oracles::naive_tensor(to_dense(a), to_dense(b)), to_dense(c));
        CHECK(max_abs_diff(to_dense(tensor({a, b, c})), expected) < 1e-13);
    }
    // factor 0 is the slowest index: tensor({X2, I3}) shifts blocks of 3
    const Complex w2 = root_of_unity(2);
    const DenseMatrix big =
        to_dense(tensor({generalized_pauli(Pauli::X, 2, 1, w2), MonomialUnitary::identity(3)}));
    CHECK(std::abs(big.at(3, 0) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(big.at(0, 3) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("tensor respects the flat-size budget") {
    Rng rng(7);
    const MonomialUnitary a = oracles::random_monomial(3, rng);
    const MonomialUnitary b = oracles::random_monomial(3, rng);
    CHECK_THROWS_AS(tensor({a, b}, 8), BudgetError);
    CHECK_NOTHROW(tensor({a, b}, 9));
}

TEST_CASE("adjoint inverts and pow repeats") {
    Rng rng(303);
    const MonomialUnitary u = oracles::random_monomial(6, rng);
    CHECK(max_abs_diff(multiply(adjoint(u), u), MonomialUnitary::identity(6)) < 1e-12);
    CHECK(max_abs_diff(multiply(u, adjoint(u)), MonomialUnitary::identity(6)) < 1e-12);

    MonomialUnitary acc = MonomialUnitary::identity(6);
    for (std::uint64_t k = 0; k <= 5; ++k) {
        CHECK(max_abs_diff(pow(u, k), acc) < 1e-12);
        acc = multiply(u, acc);
    }
}

TEST_CASE("determinant matches the Leibniz expansion") {
    Rng rng(404);
    for (std::size_t d : {2, 3, 5, 7}) {
        for (int rep = 0; rep < 4; ++rep) {
            const MonomialUnitary u = oracles::random_monomial(d, rng);
            CHECK(std::abs(determinant(u) - oracles::leibniz_determinant(to_dense(u))) < 1e-11);
        }
    }
}

TEST_CASE("uniform_ratio recovers a scalar multiple and nothing else") {
    Rng rng(505);
    const MonomialUnitary u = oracles::random_monomial(5, rng);
    const Complex c = std::polar(1.0, 1.234);
    MonomialUnitary scaled = u;
    for (auto& p : scaled.phases) p *= c;

    const auto ratio = uniform_ratio(scaled, u);
    REQUIRE(ratio.has_value());
    CHECK(std::abs(*ratio - c) < 1e-12);

    // different permutation support
    MonomialUnitary other = oracles::random_monomial(5, rng);
    while (other.perm == u.perm) other = oracles::random_monomial(5, rng);
    CHECK_FALSE(uniform_ratio(other, u).has_value());

    // one phase off: no single scalar works
    MonomialUnitary dented = scaled;
    dented.phases[2] *= std::polar(1.0, 0.5);
    CHECK_FALSE(uniform_ratio(dented, u).has_value());
}

TEST_CASE("tensor-structured monomials multiply factor-wise") {
    Rng rng(606);
    const TensorMonomial a{{oracles::random_monomial(3, rng), oracles::random_monomial(4, rng)}};
    const TensorMonomial b{{oracles::random_monomial(3, rng), oracles::random_monomial(4, rng)}};
    CHECK(a.dim_product() == doctest::Approx(12.0));

    const TensorMonomial ab = multiply(a, b);
    const DenseMatrix flat_ab = to_dense(tensor(ab.factors));
    const DenseMatrix expected = oracles::naive_multiply(to_dense(tensor(a.factors)),
                                                         to_dense(tensor(b.factors)));
    CHECK(max_abs_diff(flat_ab, expected) < 1e-13);

    // global ratio is the product of the per-factor ratios
    TensorMonomial scaled = a;
    for (auto& p : scaled.factors[0].phases) p *= Complex{0.0, 1.0};
    for (auto& p : scaled.factors[1].phases) p *= Complex{-1.0, 0.0};
    const auto ratio = uniform_ratio(scaled, a);
    REQUIRE(ratio.has_value());
    CHECK(std::abs(*ratio - Complex{0.0, -1.0}) < 1e-12);

    TensorMonomial mismatched = a;
    mismatched.factors[1].phases[0] *= Complex{0.0, 1.0};
    CHECK_FALSE(uniform_ratio(mismatched, a).has_value());
}

TEST_CASE("dense helpers") {
    DenseMatrix a(2);
    a.at(0, 0) = Complex{1.0, 0.0};
    a.at(0, 1) = Complex{0.0, 2.0};
    a.at(1, 0) = Complex{3.0, 0.0};
    a.at(1, 1) = Complex{0.0, -1.0};

    const DenseMatrix doubled = add(a, a);
    CHECK(max_abs_diff(doubled, scale(Complex{2.0, 0.0}, a)) == 0.0);
    CHECK(hs_norm_sq(a) == doctest::Approx(1.0 + 4.0 + 9.0 + 1.0));

    const DenseMatrix adj = adjoint(a);
    CHECK(adj.at(0, 1) == Complex{3.0, 0.0});
    CHECK(adj.at(1, 0) == Complex{0.0, -2.0});

    Rng rng(808);
    const DenseMatrix u = to_dense(oracles::random_monomial(4, rng));
    CHECK(is_unitary(u));
    CHECK_FALSE(is_unitary(scale(Complex{1.1, 0.0}, u)));
}

TEST_CASE("unitary_exponential is unitary and first-order accurate") {
    Rng rng(909);
    const DenseMatrix h = random_hermitian_unit_norm(6, rng);
    CHECK(max_abs_diff(h, adjoint(h)) < 1e-12);

    const DenseMatrix u = unitary_exponential(h, 0.37);
    CHECK(is_unitary(u));
    CHECK(max_abs_diff(unitary_exponential(h, 0.0), DenseMatrix::identity(6)) == 0.0);

    // exp(i*eps*H) = I + i*eps*H + O(eps^2), |H| = 1
    const double eps = 1e-3;
    const DenseMatrix first_order =
        add(DenseMatrix::identity(6), scale(Complex{0.0, eps}, h));
    CHECK(max_abs_diff(unitary_exponential(h, eps), first_order) < 1e-5);
}

TEST_CASE("random Hermitian generator is deterministic per stream") {
    Rng a = Rng::stream(42, 3);
    Rng b = Rng::stream(42, 3);
    const DenseMatrix ha = random_hermitian_unit_norm(5, a);
    const DenseMatrix hb = random_hermitian_unit_norm(5, b);
    CHECK(max_abs_diff(ha, hb) == 0.0);

    Rng c = Rng::stream(42, 4);
    const DenseMatrix hc = random_hermitian_unit_norm(5, c);
    CHECK(max_abs_diff(ha, hc) > 1e-3);

    // spectral norm ~ 1: power iteration from a fixed start
    std::vector<Complex> v(5, Complex{1.0, 0.3});
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        v = oracles::naive_matvec(ha, v);
        lambda = 0.0;
        for (const auto& x : v) lambda += std::norm(x);
        lambda = std::sqrt(lambda);
        for (auto& x : v) x /= lambda;
    }
    CHECK(lambda == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("state strides and flat indices") {
    const std::vector<std::size_t> dims{2, 3, 4};
    StateVector state(dims);
    CHECK(state.total() == 24);
    CHECK(state.register_count() == 3);
    CHECK(state.stride(0) == 12);
    CHECK(state.stride(1) == 4);
    CHECK(state.stride(2) == 1);
    CHECK(flat_index(dims, {1, 2, 3}) == 12 + 8 + 3);
    CHECK(flat_index(dims, {0, 0, 0}) == 0);
}

TEST_CASE("register apply matches the full-space dense operator") {
    Rng rng(111);
    StateVector state(std::vector<std::size_t>{3, 4, 2});
    for (auto& amp : state.amps) amp = rng.complex_normal();

    const MonomialUnitary u = oracles::random_monomial(4, rng);
    // I (x) U (x) I built explicitly
    const DenseMatrix full = oracles::naive_tensor(
        oracles::naive_tensor(DenseMatrix::identity(3), to_dense(u)), DenseMatrix::identity(2));
    const std::vector<Complex> expected = oracles::naive_matvec(full, state.amps);

    StateVector via_monomial = state;
    apply(u, via_monomial, 1);
    StateVector via_dense = state;
    apply(to_dense(u), via_dense, 1);

    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(via_monomial.amps[i] - expected[i]) < 1e-12);
        CHECK(std::abs(via_dense.amps[i] - expected[i]) < 1e-12);
    }
}

TEST_CASE("apply preserves the norm") {
    Rng rng(112);
    StateVector state(std::vector<std::size_t>{6, 6});
    for (auto& amp : state.amps) amp = rng.complex_normal();
    const double before = state.norm_sq();
    apply(oracles::random_monomial(6, rng), state, 0);
    apply(to_dense(oracles::random_monomial(6, rng)), state, 1);
    CHECK(state.norm_sq() == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("controlled_apply touches only the matching branch") {
    const Complex w = root_of_unity(2);
    StateVector state(std::vector<std::size_t>{2, 2});
    state.amps = {Complex{0.5, 0}, Complex{0.5, 0}, Complex{0.5, 0}, Complex{0.5, 0}};
    controlled_apply(Unitary{generalized_pauli(Pauli::X, 2, 1, w)}, state, 0, 1, 1);
    CHECK(state.amps[0] == Complex{0.5, 0});  // control = 0 untouched
    CHECK(state.amps[1] == Complex{0.5, 0});
    CHECK(state.amps[2] == Complex{0.5, 0});  // control = 1: swapped (symmetric input)

    StateVector basis(std::vector<std::size_t>{2, 2});
    basis.amps[2] = Complex{1.0, 0.0};  // |1, 0>
    controlled_apply(Unitary{generalized_pauli(Pauli::X, 2, 1, w)}, basis, 0, 1, 1);
    CHECK(std::abs(basis.amps[3] - Complex{1.0, 0.0}) < 1e-15);  // -> |1, 1>
}

TEST_CASE("controlled_swap_registers exchanges whole registers") {
    StateVector state(std::vector<std::size_t>{2, 3, 3});
    state.amps[flat_index(state.dims, {0, 1, 2})] = Complex{0.25, 0.0};
    state.amps[flat_index(state.dims, {1, 1, 2})] = Complex{0.75, 0.0};
    controlled_swap_registers(state, 0, 1, 1, 2);
    CHECK(state.amps[flat_index(state.dims, {0, 1, 2})] == Complex{0.25, 0.0});
    CHECK(state.amps[flat_index(state.dims, {1, 2, 1})] == Complex{0.75, 0.0});
    CHECK(state.amps[flat_index(state.dims, {1, 1, 2})] == Complex{0.0, 0.0});
}

TEST_CASE("unitary variant helpers") {
    Rng rng(113);
    const MonomialUnitary m = oracles::random_monomial(4, rng);
    const Unitary as_monomial{m};
    const Unitary as_dense{to_dense(m)};
    CHECK(unitary_dim(as_monomial) == 4);
    CHECK(unitary_dim(as_dense) == 4);
    CHECK(unitary_max_abs_diff(as_monomial, as_dense) < 1e-15);
    CHECK(max_abs_diff(unitary_to_dense(as_monomial), unitary_to_dense(as_dense)) == 0.0);

    const Unitary prod = unitary_multiply(as_monomial, as_dense);
    CHECK(max_abs_diff(unitary_to_dense(prod),
                       oracles::naive_multiply(to_dense(m), to_dense(m))) < 1e-12);
}

TEST_CASE("seeded random streams are reproducible and role-separated") {
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 16; ++i) CHECK(a.bits() == b.bits());

    Rng s1 = Rng::stream(99, 1);
    Rng s2 = Rng::stream(99, 2);
    CHECK(s1.bits() != s2.bits());

    Rng u(5);
    for (int i = 0; i < 100; ++i) {
        const double x = u.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    Rng g(6);
    for (int i = 0; i < 10; ++i) CHECK(std::isfinite(g.normal()));
    Rng below(7);
    for (int i = 0; i < 100; ++i) CHECK(below.below(13) < 13);
}
