#include "kscope/modexp.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using kscope::cx;
using kscope::mod_exp_closed;
using kscope::mod_exp_series;
using kscope::mod_exp_superposition;
using kscope::ModExpFamily;
using kscope::RootOfUnity;

// frozen against the long double factorial oracle
constexpr double kCosh1 = 1.5430806348152437;       // f(2,0,1)
constexpr double kModExp_4_2_1 = 0.5013891644735520;  // (cosh 1 - cos 1)/2
constexpr double kModExp_3_0_1 = 1.1680583133759185;  // (e + 2 e^-1/2 cos(sqrt3/2))/3
constexpr double kModExp_4_3_2 = 1.3587814905106685;  // (sinh 2 - sin 2)/2
constexpr double kExp2_5 = 12.182493960703473;

TEST_CASE("mod_exp_series: pinned values and limits") {
    CHECK(mod_exp_series(3, 0, 0.0) == cx{1.0, 0.0});
    CHECK(mod_exp_series(3, 1, 0.0) == cx{0.0, 0.0});
    CHECK(mod_exp_series(2, 0, 1.0).real() == doctest::Approx(kCosh1).epsilon(1e-15));
    CHECK(mod_exp_series(4, 2, 1.0).real() == doctest::Approx(kModExp_4_2_1).epsilon(1e-15));
    CHECK(mod_exp_series(4, 3, 2.0).real() == doctest::Approx(kModExp_4_3_2).epsilon(1e-15));
    CHECK(mod_exp_series(1, 0, 2.5).real() == doctest::Approx(kExp2_5).epsilon(1e-15));
}

TEST_CASE("mod_exp_series: domain and overflow errors") {
    CHECK_THROWS_AS((void)mod_exp_series(0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)mod_exp_series(3, 3, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)mod_exp_series(3, -1, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)mod_exp_series(2, 0, 701.0), std::overflow_error);
    CHECK_NOTHROW((void)mod_exp_series(2, 0, 699.0));
}

TEST_CASE("mod_exp_series agrees with the factorial oracle") {
    for (int n : {1, 2, 3, 5, 8, 12})
        for (int s = 0; s < n; s += (n > 4 ? 3 : 1))
            for (double x : {0.1, 1.0, 5.0, 17.0, 30.0}) {
                const double got = mod_exp_series(n, s, x).real();
                const double want = oracles::mod_exp_real(n, s, x);
                CHECK(got == doctest::Approx(want).epsilon(1e-13));
            }
}

TEST_CASE("mod_exp_series handles complex arguments") {
    const cx x{2.0, 1.5};
    for (int n : {2, 3, 5})
        for (int s = 0; s < n; ++s) {
            const cx got = mod_exp_series(n, s, x);
            const auto want = oracles::mod_exp(n, s, std::complex<long double>{2.0L, 1.5L});
            CHECK(std::abs(got - cx{static_cast<double>(want.real()),
                                    static_cast<double>(want.imag())}) < 1e-13 * std::abs(got));
        }
}

TEST_CASE("mod_exp_superposition: hyperbolic reduction and pinned values") {
    // n = 2, s = 1 collapses to sinh for any argument
    for (double x : {0.25, 1.0, 4.0, 20.0})
        CHECK(mod_exp_superposition(2, 1, x).real() == doctest::Approx(std::sinh(x)).epsilon(1e-13));
    CHECK(mod_exp_superposition(1, 0, 2.5).real() == doctest::Approx(kExp2_5).epsilon(1e-14));
    CHECK(mod_exp_superposition(4, 2, 1.0).real() == doctest::Approx(kModExp_4_2_1).epsilon(1e-13));
}

TEST_CASE("mod_exp_closed: pinned values and unsupported orders") {
    CHECK(mod_exp_closed(2, 0, 0.0) == 1.0);
    CHECK(mod_exp_closed(3, 0, 1.0) == doctest::Approx(kModExp_3_0_1).epsilon(1e-15));
    CHECK(mod_exp_closed(4, 3, 2.0) == doctest::Approx(kModExp_4_3_2).epsilon(1e-15));
    CHECK_THROWS_AS((void)mod_exp_closed(5, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)mod_exp_closed(1, 0, 1.0), std::domain_error);
}

TEST_CASE("route equivalence against the dominant family scale") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xdist(0.0, 30.0);
    for (int n : {2, 3, 4, 6, 12})
        for (int trial = 0; trial < 24; ++trial) {
            const double x = xdist(rng);
            double scale = 0.0;
            for (int s = 0; s < n; ++s)
                scale = std::max(scale, std::abs(mod_exp_series(n, s, x)));
            for (int s = 0; s < n; ++s) {
                const cx a = mod_exp_series(n, s, x);
                CHECK(std::abs(a - mod_exp_superposition(n, s, x)) < 1e-10 * scale);
                if (n <= 4) CHECK(std::abs(a - mod_exp_closed(n, s, x)) < 1e-10 * scale);
            }
        }
}

TEST_CASE("partition of unity: sum of the family recovers exp") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xdist(-20.0, 20.0);
    for (int n = 1; n <= 12; ++n)
        for (int trial = 0; trial < 16; ++trial) {
            const double x = xdist(rng);
            cx total{0.0, 0.0};
            for (int s = 0; s < n; ++s) total += mod_exp_series(n, s, x);
            CHECK(std::abs(total - std::exp(cx{x, 0.0})) < 1e-12 * std::exp(std::abs(x)));
        }
}

TEST_CASE("positivity of every family member for x > 0") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> xdist(1e-8, 30.0);
    for (int n : {1, 2, 5, 9})
        for (int trial = 0; trial < 32; ++trial) {
            const double x = xdist(rng);
            for (int s = 0; s < n; ++s) CHECK(mod_exp_series(n, s, x).real() > 0.0);
        }
}

TEST_CASE("derivative cycling: ODE re-index residual and finite differences") {
    CHECK(kscope::ode_residual(3, 2, 1.0) == 0.0);
    CHECK(kscope::ode_residual(1, 0, 0.7) == 0.0);
    CHECK(kscope::ode_residual(2, 1, 0.5) == 0.0);

    // f_1' = f_0 at x = 1 for n = 3, checked against a central difference
    CHECK(kscope::derivative_fd_residual(3, 2, 1.0, 1e-5) < 1e-8);
    // n = 2, s = 1: |cosh(0.5) - FD[sinh](0.5)|
    CHECK(kscope::derivative_fd_residual(2, 1, 0.5, 1e-5) < 1e-8);
    CHECK(kscope::derivative_fd_residual(1, 0, 2.0, 1e-5) < 1e-8);
    CHECK_THROWS_AS((void)kscope::derivative_fd_residual(2, 0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("initial values f_s^(j)(0) = delta_js through the cycling rule") {
    for (int n : {1, 2, 3, 7})
        for (int s = 0; s < n; ++s)
            for (int j = 0; j < n; ++j) {
                const double value = mod_exp_series(n, (s - j + n) % n, 0.0).real();
                CHECK(value == (j == s ? 1.0 : 0.0));
            }
}

TEST_CASE("RootOfUnity: defining relations") {
    for (int n = 1; n <= 12; ++n) {
        const RootOfUnity root(n);
        cx qpow{1.0, 0.0};
        for (int j = 0; j < 2 * n; ++j) qpow *= root.q;
        CHECK(std::abs(qpow - cx{1.0, 0.0}) < 4.0 * std::numeric_limits<double>::epsilon() * 2 * n);
        CHECK(std::abs(root.w * root.q * root.q - cx{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(root.q_pow2(n)) == doctest::Approx(1.0));
        CHECK(root.q_pow2(n) == cx{1.0, 0.0});
    }
    CHECK_THROWS_AS(RootOfUnity(0), std::domain_error);
}

TEST_CASE("root-of-unity power sums collapse to n * delta") {
    for (int n = 1; n <= 12; ++n) {
        const RootOfUnity root(n);
        for (int m = 0; m < 3 * n; ++m) {
            const double expected = (m % n == 0) ? static_cast<double>(n) : 0.0;
            CHECK(std::abs(root.power_sum(m) - expected) < 1e-12);
        }
    }
}

TEST_CASE("ModExpFamily: precision knob and partition residual") {
    const ModExpFamily coarse(3, 1e-6);
    const ModExpFamily fine(3);
    const double want = oracles::mod_exp_real(3, 1, 2.0);
    CHECK(std::abs(coarse.series(1, 2.0).real() - want) < 1e-5);
    CHECK(std::abs(fine.series(1, 2.0).real() - want) < 1e-14);
    CHECK(fine.partition_residual(3.0) < 1e-12 * std::exp(3.0));
    CHECK_THROWS_AS(ModExpFamily(0), std::domain_error);
    CHECK_THROWS_AS(ModExpFamily(3, 0.0), std::domain_error);
}
