#include <doctest.h>

#include <cmath>

#include "core/series.hpp"
#include "oracles.hpp"

using tdet::Complex;
using tdet::Series;

namespace {
const Complex kOne(1.0, 0.0);
const Complex kI(0.0, 1.0);
} // namespace

TEST_CASE("series construction and invariants") {
    SUBCASE("order below 3 is rejected") {
        CHECK_THROWS_AS(Series(2), tdet::InvalidInput);
        CHECK_THROWS_AS(Series::from_coeffs({kOne, kOne}), tdet::InvalidInput);
    }
    SUBCASE("length is order + 1 and operations preserve it") {
        Series f(7);
        CHECK(f.order() == 7);
        CHECK(f.coeffs().size() == 8);
        CHECK((f + f).order() == 7);
        CHECK((f * f).order() == 7);
    }
    SUBCASE("operands of different orders are rejected") {
        CHECK_THROWS_AS(Series(5) + Series(6), tdet::InvalidInput);
        CHECK_THROWS_AS(Series(5) * Series(6), tdet::InvalidInput);
    }
    SUBCASE("factories") {
        const Series z = Series::identity(4);
        CHECK(z[0] == Complex(0.0, 0.0));
        CHECK(z[1] == kOne);
        CHECK(z[2] == Complex(0.0, 0.0));
        const Series c = Series::constant(4, Complex(2.5, -1.0));
        CHECK(c[0] == Complex(2.5, -1.0));
        CHECK(c[3] == Complex(0.0, 0.0));
    }
}

TEST_CASE("ring operations") {
    const Series one_plus = Series(8, {kOne, kOne});
    const Series one_minus = Series(8, {kOne, -kOne});

    SUBCASE("(1+z)(1-z) telescopes to 1 - z^2") {
        const Series prod = one_plus * one_minus;
        CHECK(prod[0] == kOne);
        CHECK(prod[1] == Complex(0.0, 0.0));
        CHECK(prod[2] == -kOne);
        for (int k = 3; k <= 8; ++k) CHECK(prod[k] == Complex(0.0, 0.0));
    }
    SUBCASE("1/(1-z) is the geometric series") {
        const Series geo = Series::constant(8, kOne) / one_minus;
        for (int k = 0; k <= 8; ++k) CHECK(std::abs(geo[k] - kOne) < 1e-14);
    }
    SUBCASE("f + (-f) = 0") {
        std::mt19937_64 rng(11);
        const Series f = oracle::random_series(8, rng, false);
        const Series zero = f + (-f);
        for (int k = 0; k <= 8; ++k) CHECK(zero[k] == Complex(0.0, 0.0));
    }
    SUBCASE("div undoes mul to 1e-12") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 50; ++trial) {
            const Series f = oracle::random_series(10, rng, false);
            Series g = oracle::random_series(10, rng, false);
            g[0] = Complex(1.0, 0.0) + 0.5 * g[0]; // keep the constant term away from 0
            CHECK(oracle::max_coeff_diff((f * g) / g, f) < 1e-12);
        }
    }
    SUBCASE("division by zero constant term is rejected") {
        CHECK_THROWS_AS(one_plus / Series::identity(8), tdet::InvalidInput);
    }
    SUBCASE("scalar multiple") {
        const Series s = Complex(2.0, 0.0) * one_plus;
        CHECK(s[0] == Complex(2.0, 0.0));
        CHECK(s[1] == Complex(2.0, 0.0));
    }
}

TEST_CASE("exp, log and pow") {
    SUBCASE("exp(log(1 + z + 3z^2)) round-trips to 1e-12") {
        const Series f = Series(8, {kOne, kOne, Complex(3.0, 0.0)});
        CHECK(oracle::max_coeff_diff(exp(log(f)), f) < 1e-12);
    }
    SUBCASE("exp(sum 2 z^k / k) = 1/(1-z)^2 with coefficients 1,2,3,...") {
        Series f(10);
        for (int k = 1; k <= 10; ++k) f[k] = Complex(2.0 / k, 0.0);
        const Series g = exp(f);
        for (int k = 0; k <= 10; ++k) CHECK(std::abs(g[k] - Complex(k + 1.0, 0.0)) < 1e-12);
    }
    SUBCASE("pow(f, 1) is the identity on (1+z)/(1-z)") {
        const Series f = Series(8, {kOne, kOne}) / Series(8, {kOne, -kOne});
        CHECK(oracle::max_coeff_diff(pow(f, 1.0), f) < 1e-14);
    }
    SUBCASE("pow(1 + z, 1/2) matches the binomial series") {
        const Series h = pow(Series(10, {kOne, kOne}), 0.5);
        double binom = 1.0; // (1/2 choose k), built by the ratio recurrence
        for (int k = 0; k <= 10; ++k) {
            CHECK(std::abs(h[k] - Complex(binom, 0.0)) < 1e-14);
            binom *= (0.5 - k) / (k + 1.0);
        }
    }
    SUBCASE("log and pow insist on constant term 1") {
        const Series f = Series(5, {Complex(2.0, 0.0), kOne});
        CHECK_THROWS_AS(log(f), tdet::InvalidInput);
        CHECK_THROWS_AS(pow(f, 0.5), tdet::InvalidInput);
    }
    SUBCASE("exp . add = mul . exp on zero-constant series") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            Series f = oracle::random_series(10, rng, false);
            Series g = oracle::random_series(10, rng, false);
            f[0] = g[0] = Complex(0.0, 0.0);
            CHECK(oracle::max_coeff_diff(exp(f + g), exp(f) * exp(g)) < 1e-10);
        }
    }
}

TEST_CASE("composition") {
    const Series geo = Series::constant(8, kOne) / Series(8, {kOne, -kOne});

    SUBCASE("compose(f, z) = f") {
        CHECK(oracle::max_coeff_diff(compose(geo, Series::identity(8)), geo) < 1e-14);
    }
    SUBCASE("compose(1/(1-z), z^2) is geometric in z^2") {
        Series z2(8);
        z2[2] = kOne;
        const Series g = compose(geo, z2);
        for (int k = 0; k <= 8; ++k) {
            CHECK(std::abs(g[k] - (k % 2 == 0 ? kOne : Complex(0.0, 0.0))) < 1e-14);
        }
    }
    SUBCASE("compose(f, 0) collapses to the constant f[0]") {
        const Series g = compose(geo, Series(8));
        CHECK(g[0] == kOne);
        for (int k = 1; k <= 8; ++k) CHECK(g[k] == Complex(0.0, 0.0));
    }
    SUBCASE("inner series must vanish at 0") {
        CHECK_THROWS_AS(compose(geo, Series::constant(8, Complex(0.25, 0.0))),
                        tdet::InvalidInput);
    }
}

TEST_CASE("derivative and logarithmic integral") {
    SUBCASE("derivative of z^3") {
        Series f(5);
        f[3] = kOne;
        const Series d = derivative(f);
        CHECK(d[2] == Complex(3.0, 0.0));
        CHECK(d[5] == Complex(0.0, 0.0));
    }
    SUBCASE("halfplane integrand integrates to -2 log(1-z)") {
        Series f = Series::constant(8, kOne);
        for (int k = 1; k <= 8; ++k) f[k] = Complex(2.0, 0.0);
        const Series r = integrate_logderiv(f);
        CHECK(r[0] == Complex(0.0, 0.0));
        for (int k = 1; k <= 8; ++k) CHECK(std::abs(r[k] - Complex(2.0 / k, 0.0)) < 1e-15);
    }
    SUBCASE("rotated argument: f(it) integrates to -2 log(1 - i z)") {
        Series f = Series::constant(8, kOne);
        Complex ik = kI; // i^k walks the quarter turns
        for (int k = 1; k <= 8; ++k, ik *= kI) f[k] = 2.0 * ik;
        const Series r = integrate_logderiv(f);
        ik = kI;
        for (int k = 1; k <= 8; ++k, ik *= kI) {
            CHECK(std::abs(r[k] - 2.0 * ik / static_cast<double>(k)) < 1e-15);
        }
    }
    SUBCASE("constant 1 integrates to zero") {
        const Series r = integrate_logderiv(Series::constant(6, kOne));
        for (int k = 0; k <= 6; ++k) CHECK(r[k] == Complex(0.0, 0.0));
    }
    SUBCASE("non-unit constant term is rejected") {
        CHECK_THROWS_AS(integrate_logderiv(Series::identity(6)), tdet::InvalidInput);
    }
    SUBCASE("z * d/dz undoes the integral to 1e-13") {
        std::mt19937_64 rng(14);
        for (int trial = 0; trial < 50; ++trial) {
            const Series f = oracle::random_series(12, rng, true);
            const Series back =
                Series::identity(12) * derivative(integrate_logderiv(f)) +
                Series::constant(12, kOne);
            CHECK(oracle::max_coeff_diff(back, f) < 1e-13);
        }
    }
}

TEST_CASE("argument scaling, truncation, evaluation") {
    SUBCASE("scale_argument multiplies coefficient k by c^k") {
        const Series f = Series(6, {kOne, Complex(2.0, 0.0), Complex(0.0, 3.0)});
        const Series g = scale_argument(f, kI);
        CHECK(std::abs(g[0] - kOne) < 1e-15);
        CHECK(std::abs(g[1] - Complex(0.0, 2.0)) < 1e-15);
        CHECK(std::abs(g[2] - Complex(0.0, -3.0)) < 1e-15); // 3i * i^2 = -3i
    }
    SUBCASE("truncated keeps a prefix and refuses to extend") {
        std::mt19937_64 rng(15);
        const Series f = oracle::random_series(9, rng, false);
        const Series t = truncated(f, 4);
        CHECK(t.order() == 4);
        for (int k = 0; k <= 4; ++k) CHECK(t[k] == f[k]);
        CHECK_THROWS_AS(truncated(f, 12), tdet::InvalidInput);
    }
    SUBCASE("Horner evaluation equals the naive power sum") {
        std::mt19937_64 rng(16);
        const Series f = oracle::random_series(12, rng, false);
        const Complex z(0.31, -0.42);
        Complex naive(0.0, 0.0);
        Complex zk(1.0, 0.0);
        for (int k = 0; k <= 12; ++k, zk *= z) naive += f[k] * zk;
        CHECK(std::abs(f.eval(z) - naive) < 1e-13);
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const Series f = oracle::random_series(10, rng, false);
        const Series g = oracle::random_series(10, rng, false);
        const Series h = oracle::random_series(10, rng, false);
        CHECK(oracle::max_coeff_diff(f * g, g * f) < 1e-12);
        CHECK(oracle::max_coeff_diff((f * g) * h, f * (g * h)) < 1e-12);
        CHECK(oracle::max_coeff_diff(f * (g + h), f * g + f * h) < 1e-12);
    }
}
