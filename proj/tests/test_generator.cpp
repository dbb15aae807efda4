#include <doctest.h>

#include <cmath>

#include "core/generator.hpp"
#include "oracles.hpp"

using tdet::Complex;
using tdet::Phi;
using tdet::Series;

namespace {
const Complex kOne(1.0, 0.0);

Series identity_germ(int order) {
    Series u(order);
    u[1] = kOne;
    return u;
}
} // namespace

TEST_CASE("built-in generators expose the advertised derivative data") {
    const Phi half = Phi::halfplane();
    CHECK(half.d1() == 2.0);
    CHECK(half.d2() == 4.0);

    const Phi alpha = Phi::order_alpha(0.25);
    CHECK(alpha.d1() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(alpha.d2() == doctest::Approx(3.0).epsilon(1e-15));

    const Phi beta = Phi::strong_beta(0.5);
    CHECK(beta.d1() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(beta.d2() == doctest::Approx(1.0).epsilon(1e-15));

    SUBCASE("d1, d2 match 1! c1 and 2! c2 of the series to 1e-13") {
        for (const Phi* p : {&half, &alpha, &beta}) {
            const Series s = p->series(8);
            CHECK(std::abs(s[1] - Complex(p->d1(), 0.0)) < 1e-13);
            CHECK(std::abs(2.0 * s[2] - Complex(p->d2(), 0.0)) < 1e-13);
            CHECK(std::abs(s[0] - kOne) < 1e-15);
        }
    }
}

TEST_CASE("generator series") {
    SUBCASE("halfplane at order 3 is 1 + 2z + 2z^2 + 2z^3") {
        const Series s = Phi::halfplane().series(3);
        CHECK(s[0] == kOne);
        for (int k = 1; k <= 3; ++k) CHECK(s[k] == Complex(2.0, 0.0));
    }
    SUBCASE("alpha = 0 and beta = 1 degenerate to the halfplane") {
        const Series h = Phi::halfplane().series(10);
        CHECK(oracle::max_coeff_diff(Phi::order_alpha(0.0).series(10), h) < 1e-14);
        CHECK(oracle::max_coeff_diff(Phi::strong_beta(1.0).series(10), h) < 1e-12);
    }
    SUBCASE("strong_beta series equals exp(beta log((1+z)/(1-z)))") {
        const Series base =
            Series(12, {kOne, kOne}) / Series(12, {kOne, -kOne});
        for (double b : {0.25, 0.5, 0.9}) {
            const Series via_log = exp(Complex(b, 0.0) * log(base));
            CHECK(oracle::max_coeff_diff(Phi::strong_beta(b).series(12), via_log) < 1e-12);
        }
    }
    SUBCASE("order_alpha coefficients are constant 2(1 - alpha)") {
        const Series s = Phi::order_alpha(0.3).series(6);
        for (int k = 1; k <= 6; ++k) CHECK(std::abs(s[k] - Complex(1.4, 0.0)) < 1e-14);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Phi::order_alpha(-0.1), tdet::InvalidInput);
    CHECK_THROWS_AS(Phi::order_alpha(1.0), tdet::InvalidInput);
    CHECK_THROWS_AS(Phi::strong_beta(0.0), tdet::InvalidInput);
    CHECK_THROWS_AS(Phi::strong_beta(1.2), tdet::InvalidInput);
}

TEST_CASE("custom generators cross-validate the derivative data") {
    const Series half = Phi::halfplane().series(10);

    SUBCASE("consistent data is accepted") {
        const Phi p = Phi::custom(half, 2.0, 4.0);
        CHECK(p.kind() == tdet::PhiKind::Custom);
        CHECK(p.d1() == 2.0);
        CHECK(p.describe() == "custom");
    }
    SUBCASE("claimed d1 or d2 off the series is rejected") {
        CHECK_THROWS_AS(Phi::custom(half, 2.001, 4.0), tdet::InvalidInput);
        CHECK_THROWS_AS(Phi::custom(half, 2.0, 4.001), tdet::InvalidInput);
    }
    SUBCASE("constant term must be 1 and d1 positive") {
        Series off = half;
        off[0] = Complex(1.1, 0.0);
        CHECK_THROWS_AS(Phi::custom(off, 2.0, 4.0), tdet::InvalidInput);

        Series neg = half;
        neg[1] = Complex(-2.0, 0.0);
        CHECK_THROWS_AS(Phi::custom(neg, -2.0, 4.0), tdet::InvalidInput);
    }
    SUBCASE("custom series cannot be stretched past its stored order") {
        const Phi p = Phi::custom(half, 2.0, 4.0);
        CHECK(p.max_order() == 10);
        CHECK_NOTHROW(p.series(8));
        CHECK_THROWS_AS(p.series(11), tdet::InvalidInput);
    }
}

TEST_CASE("inverse germ") {
    SUBCASE("halfplane inverse is (q-1)/2 - (q-1)^2/4 + (q-1)^3/8 - ...") {
        const Series psi = Phi::halfplane().inverse_series(8);
        CHECK(psi[0] == Complex(0.0, 0.0));
        double expect = 0.5;
        for (int k = 1; k <= 8; ++k, expect *= -0.5) {
            CHECK(std::abs(psi[k] - Complex(expect, 0.0)) < 1e-13);
        }
    }
    SUBCASE("phi composed with its inverse germ is the identity germ to 1e-10") {
        for (const Phi& p :
             {Phi::halfplane(), Phi::order_alpha(0.3), Phi::strong_beta(0.5)}) {
            const int n = 10;
            Series shifted = p.series(n); // phi - 1, a series with zero constant term
            shifted[0] = Complex(0.0, 0.0);
            const Series round = compose(shifted, p.inverse_series(n));
            CHECK(oracle::max_coeff_diff(round, identity_germ(n)) < 1e-10);
        }
    }
    SUBCASE("pointwise inverse sends 1 to 0 and inverts phi on the disk") {
        for (const Phi& p : {Phi::halfplane(), Phi::order_alpha(0.3), Phi::strong_beta(0.5),
                             Phi::custom(Phi::halfplane().series(48), 2.0, 4.0)}) {
            CHECK(std::abs(p.inverse(kOne)) < 1e-12);
        }
        for (const Phi& p : {Phi::halfplane(), Phi::order_alpha(0.3), Phi::strong_beta(0.5)}) {
            const Series s = p.series(64);
            for (double t : {-0.4, -0.1, 0.2, 0.5}) {
                const Complex z(t, 0.3 * t);
                const Complex q = s.eval(z); // well inside the convergence radius
                CHECK(std::abs(p.inverse(q) - z) < 1e-9);
            }
        }
    }
}

TEST_CASE("compose_with agrees with generic series composition") {
    std::mt19937_64 rng(21);
    Series w(16);
    for (int k = 1; k <= 16; ++k) w[k] = 0.4 * oracle::random_disk(rng);

    for (const Phi& p : {Phi::halfplane(), Phi::order_alpha(0.35), Phi::strong_beta(0.6),
                         Phi::custom(Phi::strong_beta(0.6).series(16), 1.2, 1.44)}) {
        const Series direct = p.compose_with(w);
        const Series generic = compose(p.series(16), w);
        CHECK(oracle::max_coeff_diff(direct, generic) < 1e-11);
    }
}

TEST_CASE("theorem side conditions") {
    SUBCASE("halfplane satisfies both") {
        CHECK(Phi::halfplane().condition_thm1());
        CHECK(Phi::halfplane().condition_thm2());
    }
    SUBCASE("custom with d1 = 1, d2 = -2 fails the 2x2 condition") {
        // Build a series matching the claimed data: 1 + z - z^2 + ...
        Series s(6);
        s[0] = kOne;
        s[1] = kOne;
        s[2] = Complex(-1.0, 0.0);
        const Phi p = Phi::custom(s, 1.0, -2.0);
        CHECK_FALSE(p.condition_thm1());
    }
    SUBCASE("order_alpha always satisfies the 2x2 condition") {
        for (int k = 0; k < 100; ++k) {
            CHECK(Phi::order_alpha(k / 100.0).condition_thm1());
        }
    }
    SUBCASE("the 3x3 condition flips at alpha = 2/3") {
        CHECK(Phi::order_alpha(2.0 / 3.0).condition_thm2());       // boundary included
        CHECK(Phi::order_alpha(2.0 / 3.0 - 1e-9).condition_thm2());
        CHECK_FALSE(Phi::order_alpha(2.0 / 3.0 + 1e-9).condition_thm2());
        CHECK_FALSE(Phi::order_alpha(0.8).condition_thm2());
    }
    SUBCASE("the 3x3 condition flips at beta = 1/3") {
        CHECK(Phi::strong_beta(1.0 / 3.0).condition_thm2());       // boundary included
        CHECK(Phi::strong_beta(1.0 / 3.0 + 1e-9).condition_thm2());
        CHECK_FALSE(Phi::strong_beta(1.0 / 3.0 - 1e-9).condition_thm2());
        CHECK_FALSE(Phi::strong_beta(0.25).condition_thm2());
    }
    SUBCASE("strong_beta 3x3 condition equals beta >= 1/3 on a 100-point grid") {
        for (int k = 1; k <= 100; ++k) {
            const double b = k / 100.0;
            CHECK(Phi::strong_beta(b).condition_thm2() == (b >= 1.0 / 3.0));
        }
    }
    SUBCASE("strong_beta 2x2 condition also flips at beta = 1/3") {
        // |4 b^2 + 8 b^2| >= 4 b reduces to 3 b >= 1.
        CHECK(Phi::strong_beta(1.0 / 3.0).condition_thm1());
        CHECK_FALSE(Phi::strong_beta(1.0 / 3.0 - 1e-9).condition_thm1());
    }
    SUBCASE("3x3 condition implies d2 + 2 d1^2 > 2 d1") {
        for (int k = 0; k <= 100; ++k) {
            const Phi a = Phi::order_alpha(k / 151.0);
            if (a.condition_thm2()) CHECK(a.d2() + 2.0 * a.d1() * a.d1() > 2.0 * a.d1());
            const Phi b = Phi::strong_beta((k + 1) / 101.0);
            if (b.condition_thm2()) CHECK(b.d2() + 2.0 * b.d1() * b.d1() > 2.0 * b.d1());
        }
    }
}

TEST_CASE("descriptors") {
    CHECK(Phi::halfplane().describe() == "halfplane");
    CHECK(Phi::order_alpha(0.25).describe() == "alpha=0.25");
    CHECK(Phi::strong_beta(0.6).describe() == "beta=0.6");
}
