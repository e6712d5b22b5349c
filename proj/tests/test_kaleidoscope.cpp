#include "kscope/kaleidoscope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace kscope;

// frozen: e^{1/2}/(2 sqrt(cosh 1)) and e^{1/2}/(2 sqrt(sinh 1))
constexpr double kN0_n2_x1 = 0.6636253001422875;
constexpr double kN1_n2_x1 = 0.7604333115894074;

TEST_CASE("qft_matrix: pinned small orders") {
    const OperatorMatrix q1 = qft_matrix(1);
    CHECK(q1.at(0, 0) == cx{1.0, 0.0});

    // Hadamard at n = 2
    const OperatorMatrix q2 = qft_matrix(2);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(q2.at(0, 0).real() == doctest::Approx(h).epsilon(1e-15));
    CHECK(q2.at(1, 1).real() == doctest::Approx(-h).epsilon(1e-15));
    CHECK(std::abs(q2.at(0, 1) - q2.at(0, 0)) == 0.0);
    CHECK(std::abs(q2.at(1, 0) - q2.at(0, 0)) == 0.0);

    // rows carry conj(q^2)^(jk) at n = 3
    const OperatorMatrix q3 = qft_matrix(3);
    const RootOfUnity root(3);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(q3.at(j, k) -
                           std::conj(root.q_pow2(static_cast<long long>(j) * k)) / std::sqrt(3.0)) <
                  1e-15);
}

TEST_CASE("qft_matrix is unitary for every supported order") {
    for (int n = 1; n <= 12; ++n) {
        const OperatorMatrix q = qft_matrix(n);
        CHECK(max_abs_diff(q * q.adjoint(), OperatorMatrix::identity(n)) < 1e-13);
        CHECK(max_abs_diff(q.adjoint() * q, OperatorMatrix::identity(n)) < 1e-13);
    }
}

TEST_CASE("build_state_qft: kitten limit lands on number states") {
    const FockVector kitten = build_state_qft(2, 0.0, 1, 12);
    CHECK(kitten[1] == cx{1.0, 0.0});
    CHECK(kitten.norm() == 1.0);
}

TEST_CASE("route equivalence: superposition vs generating series") {
    for (cx alpha : {cx{1.0, 0.0}, cx{1.0, 0.5}, cx{2.0, 0.0}})
        for (int n : {2, 3, 4, 6}) {
            const int dim = truncation_dim(std::abs(alpha), n, 1e-12) + n;
            for (int s = 0; s < n; ++s) {
                const FockVector via_qft = build_state_qft(n, alpha, s, dim);
                const FockVector via_series =
                    canonical_phase(build_state_direct(n, alpha, s, dim), s);
                double gap = 0.0;
                for (int m = 0; m < dim; ++m)
                    gap = std::max(gap, std::abs(via_qft[m] - via_series[m]));
                CHECK(gap < 1e-10);
            }
        }
}

TEST_CASE("qft states live on the s (mod n) Fock lattice") {
    const FockVector state = build_state_qft(4, cx{1.0, 0.5}, 2, 32);
    for (int m = 0; m < 32; ++m)
        if ((m - 2) % 4 != 0) CHECK(std::abs(state[m]) < 1e-12);
    CHECK(std::abs(state[2]) > 0.1);  // support actually sits on 2, 6, 10, ...
}

TEST_CASE("build_state_direct: cat amplitudes follow the cosh series") {
    const double alpha = 1.3;
    const int dim = truncation_dim(alpha, 2, 1e-12);
    const FockVector even = build_state_direct(2, alpha, 0, dim);
    // amp[2k]/amp[0] = alpha^2k / sqrt((2k)!)
    for (int k = 1; k <= 3; ++k) {
        const double want = std::pow(alpha, 2 * k) / std::sqrt(std::tgamma(2.0 * k + 1.0));
        CHECK(std::abs(even[2 * k] / even[0] - want) < 1e-12 * want);
    }
    for (int m = 1; m < dim; m += 2) CHECK(even[m] == cx{0.0, 0.0});
}

TEST_CASE("build_state_direct: kitten limit and raw-series norm identity") {
    const FockVector kitten = build_state_direct(3, 0.0, 2, 12);
    CHECK(kitten[2] == cx{1.0, 0.0});

    // sum_k |alpha|^{2(nk+s)}/(nk+s)! = f_s(|alpha|^2): the raw series norm
    // squared, reconstructed from the state, matches the oracle
    const cx alpha{0.9, 0.4};
    const double x = std::norm(alpha);
    const int n = 3, s = 1;
    const int dim = truncation_dim(std::abs(alpha), n, 1e-12);
    const FockVector state = build_state_direct(n, alpha, s, dim);
    CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-13));
    const double fs = oracles::mod_exp_real(n, s, x);
    // rebuild the unnormalized series amplitude on the base level
    const double raw0 = std::pow(std::abs(alpha), s) / std::sqrt(std::tgamma(s + 1.0));
    CHECK(std::abs(state[s]) == doctest::Approx(raw0 / std::sqrt(fs)).epsilon(1e-12));
}

TEST_CASE("normalization_constant: pinned cat values and QFT cross-check") {
    CHECK(normalization_constant(2, 0, 1.0) == doctest::Approx(kN0_n2_x1).epsilon(1e-15));
    CHECK(normalization_constant(2, 1, 1.0) == doctest::Approx(kN1_n2_x1).epsilon(1e-15));

    // N_s * || sum_j conj(q^{2sj}) |q^{2j} alpha> || = 1
    const int n = 3;
    const cx alpha{1.0, 0.0};
    const int dim = truncation_dim(1.0, n, 1e-12);
    const RootOfUnity root(n);
    for (int s = 0; s < n; ++s) {
        FockVector sum(dim);
        for (int j = 0; j < n; ++j) {
            const FockVector coh = coherent_state(root.q_pow2(j) * alpha, dim);
            const cx weight = std::conj(root.q_pow2(static_cast<long long>(s) * j));
            for (int m = 0; m < dim; ++m) sum[m] += weight * coh[m];
        }
        CHECK(normalization_constant(n, s, 1.0) * sum.norm() == doctest::Approx(1.0).epsilon(1e-10));
    }

    CHECK_THROWS_AS((void)normalization_constant(2, 1, 0.0), std::domain_error);
    CHECK(normalization_constant(2, 0, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("gram matrix: orthonormal within tolerance") {
    CHECK(max_abs_diff(gram_matrix(make_basis(3, 1.0)), OperatorMatrix::identity(3)) < 1e-9);

    const OperatorMatrix g2 = gram_matrix(make_basis(2, 2.0));
    CHECK(std::abs(g2.at(0, 1)) < 1e-9);
    CHECK(std::abs(g2.at(1, 0)) < 1e-9);

    // kitten basis is exactly the number basis
    CHECK(max_abs_diff(gram_matrix(make_basis(4, 0.0)), OperatorMatrix::identity(4)) == 0.0);
}

TEST_CASE("parity operator: cat eigenvalues and order n") {
    const KaleidoscopeBasis cat = make_basis(2, 1.0);
    CHECK((apply_parity(2, cat.states[0]) - cat.states[0]).norm() < 1e-12);
    CHECK((apply_parity(2, cat.states[1]) + cat.states[1]).norm() < 1e-12);

    // q^{2nN} = I
    const FockVector probe = coherent_state(cx{0.7, 0.2}, 24);
    FockVector cycled = probe;
    for (int j = 0; j < 5; ++j) cycled = apply_parity(5, cycled);
    CHECK((cycled - probe).norm() < 1e-13);
}

TEST_CASE("parity eigenvalue q^{2s} on every basis state") {
    for (int n : {3, 5, 8}) {
        const KaleidoscopeBasis basis = make_basis(n, cx{1.2, 0.4});
        const RootOfUnity root(n);
        for (int s = 0; s < n; ++s) {
            const FockVector rotated = apply_parity(n, basis.states[s]);
            CHECK((rotated - (root.q_pow2(s) * basis.states[s])).norm() < 1e-10);
        }
    }
}

TEST_CASE("power eigenstate residuals") {
    CHECK(check_power_eigenstate(make_basis(2, 1.0), 0) < 1e-8);
    CHECK(check_power_eigenstate(make_basis(3, 1.5), 2) < 1e-7);
    CHECK(check_power_eigenstate(make_basis(3, 0.0), 1) == 0.0);
}

TEST_CASE("flip relation: a|s> = alpha N_s/N_{s-1} |s-1>") {
    for (int n : {2, 3, 5}) {
        const cx alpha{1.1, -0.6};
        const KaleidoscopeBasis basis = make_basis(n, alpha);
        for (int s = 0; s < n; ++s) {
            const int prev = (s - 1 + n) % n;
            const cx coeff = alpha * basis.norms[s] / basis.norms[prev];
            const FockVector lhs = apply_annihilation(basis.states[s]);
            CHECK((lhs - (coeff * basis.states[prev])).norm() < 1e-8);
        }
    }
}

TEST_CASE("qudit superpositions keep norm and the a^n eigenvalue") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int n : {2, 4}) {
        const cx alpha{1.0, 1.0};
        const KaleidoscopeBasis basis = make_basis(n, alpha);
        std::vector<cx> coeff(n);
        double total = 0.0;
        for (auto& c : coeff) {
            c = cx{dist(rng), dist(rng)};
            total += std::norm(c);
        }
        for (auto& c : coeff) c /= std::sqrt(total);

        FockVector qudit(basis.dim);
        for (int s = 0; s < n; ++s) qudit = qudit + (coeff[s] * basis.states[s]);
        CHECK(std::abs(qudit.norm() - 1.0) < 1e-9);

        FockVector lowered = qudit;
        for (int j = 0; j < n; ++j) lowered = apply_annihilation(lowered);
        cx alpha_n{1.0, 0.0};
        for (int j = 0; j < n; ++j) alpha_n *= alpha;
        CHECK((lowered - (alpha_n * qudit)).norm() < 1e-7);
    }
}

TEST_CASE("make_basis: metadata, norms, degenerate arguments") {
    const KaleidoscopeBasis basis = make_basis(3, 0.0);
    CHECK(basis.dim == 12 + 3);  // 4n floor plus the safety block
    CHECK(basis.norms[0] == doctest::Approx(1.0 / 3.0));
    CHECK(std::isinf(basis.norms[1]));
    CHECK(std::isinf(basis.norms[2]));

    CHECK_THROWS_AS((void)build_state_direct(3, 1.0, 3, 24), std::domain_error);
    CHECK_THROWS_AS((void)build_state_direct(3, 1.0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)canonical_phase(FockVector(4), 7), std::invalid_argument);
}

TEST_CASE("canonical_phase pins the base amplitude to the positive real axis") {
    FockVector v(6);
    v[2] = cx{0.0, -0.5};
    v[4] = cx{0.3, 0.1};
    const FockVector fixed = canonical_phase(v, 2);
    CHECK(fixed[2].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(fixed[2].imag()) < 1e-16);
    CHECK(std::abs(std::abs(fixed[4]) - std::abs(v[4])) < 1e-16);

    // zero pivot leaves the vector untouched
    const FockVector same = canonical_phase(v, 0);
    CHECK(std::abs(same[2] - v[2]) == 0.0);
}
