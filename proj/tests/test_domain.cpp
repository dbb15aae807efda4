#include <doctest.h>

#include <cmath>

#include "core/domain.hpp"
#include "core/rng.hpp"
#include "oracles.hpp"

using tdet::Complex;
using tdet::CVec;
using tdet::Domain;

namespace {

CVec random_point(int n, std::mt19937_64& rng, double scale = 1.0) {
    CVec z(static_cast<size_t>(n));
    for (Complex& c : z) {
        c = scale * Complex(tdet::uniform(rng, -1.0, 1.0), tdet::uniform(rng, -1.0, 1.0));
    }
    return z;
}

} // namespace

TEST_CASE("gauge function") {
    SUBCASE("pinned values") {
        CHECK(Domain(2, 2.0).rho(CVec{Complex(0.3, 0.0), Complex(0.4, 0.0)}) ==
              doctest::Approx(0.5).epsilon(1e-15));
        CHECK(Domain(2, 4.0).rho(CVec{Complex(0.5, 0.0), Complex(0.0, 0.0)}) ==
              doctest::Approx(0.5).epsilon(1e-15));
        CHECK(Domain(3, 2.5).rho(CVec{Complex(), Complex(), Complex()}) == 0.0);
    }
    SUBCASE("exponent and dimension validation") {
        CHECK_THROWS_AS(Domain(0, 2.0), tdet::InvalidInput);
        CHECK_THROWS_AS(Domain(2, 1.0), tdet::InvalidInput);
        CHECK_THROWS_AS(Domain(2, 0.5), tdet::InvalidInput);
    }
    SUBCASE("absolute homogeneity rho(t z) = |t| rho(z) to 1e-13") {
        std::mt19937_64 rng(51);
        for (double p : {2.0, 3.0, 1.5}) {
            const Domain d(3, p);
            for (int trial = 0; trial < 200; ++trial) {
                const CVec z = random_point(3, rng);
                const Complex t(tdet::uniform(rng, -2.0, 2.0), tdet::uniform(rng, -2.0, 2.0));
                CVec tz = z;
                for (Complex& c : tz) c *= t;
                CHECK(std::abs(d.rho(tz) - std::abs(t) * d.rho(z)) < 1e-13);
            }
        }
    }
    SUBCASE("normalized points land on the unit sphere to 1e-13") {
        std::mt19937_64 rng(52);
        const Domain d(2, 1.5);
        for (int trial = 0; trial < 200; ++trial) {
            CVec z = random_point(2, rng);
            const double r = d.rho(z);
            for (Complex& c : z) c /= r;
            CHECK(std::abs(d.rho(z) - 1.0) < 1e-13);
        }
    }
}

TEST_CASE("holomorphic gradient") {
    SUBCASE("Euclidean case is conj(z) / (2 ||z||)") {
        const Domain d(2, 2.0);
        const CVec z{Complex(0.3, 0.0), Complex(0.4, 0.0)};
        const CVec g = d.grad_rho(z);
        CHECK(std::abs(g[0] - Complex(0.3, 0.0)) < 1e-15);
        CHECK(std::abs(g[1] - Complex(0.4, 0.0)) < 1e-15);
    }
    SUBCASE("p = 4 at a single-coordinate point") {
        const Domain d(2, 4.0);
        const CVec z{Complex(0.5, 0.0), Complex(0.0, 0.0)};
        const CVec g = d.grad_rho(z);
        CHECK(std::abs(g[0] - Complex(0.5, 0.0)) < 1e-15);
        CHECK(std::abs(g[1]) == 0.0);
        // Euler identity at this point: 2 grad . z = rho.
        CHECK(std::abs(2.0 * (g[0] * z[0] + g[1] * z[1]) - Complex(0.5, 0.0)) < 1e-15);
    }
    SUBCASE("rotation equivariance picks up the conjugate phase") {
        const Domain d(2, 2.0);
        const CVec z{Complex(0.3, 0.0), Complex(0.4, 0.0)};
        const double theta = 0.9;
        CVec rz = z;
        for (Complex& c : rz) c *= std::polar(1.0, theta);
        const CVec g = d.grad_rho(z);
        const CVec rg = d.grad_rho(rz);
        for (size_t j = 0; j < 2; ++j) {
            CHECK(std::abs(rg[j] - std::polar(1.0, -theta) * g[j]) < 1e-14);
        }
    }
    SUBCASE("the origin is rejected") {
        CHECK_THROWS_AS(Domain(2, 2.0).grad_rho(CVec{Complex(), Complex()}),
                        tdet::InvalidInput);
    }
    SUBCASE("matches central finite differences at 1e-5") {
        std::mt19937_64 rng(53);
        for (int n : {2, 3}) {
            for (double p : {2.0, 3.0, 1.5}) {
                const Domain d(n, p);
                double worst = 0.0;
                for (int trial = 0; trial < 100; ++trial) {
                    const CVec z = random_point(n, rng, 0.8);
                    const CVec g = d.grad_rho(z);
                    const CVec fd = oracle::fd_grad_rho(d, z);
                    double norm = 0.0;
                    double diff = 0.0;
                    for (int j = 0; j < n; ++j) {
                        norm = std::max(norm, std::abs(g[static_cast<size_t>(j)]));
                        diff = std::max(diff, std::abs(g[static_cast<size_t>(j)] -
                                                       fd[static_cast<size_t>(j)]));
                    }
                    worst = std::max(worst, diff / norm);
                }
                CHECK(worst < 1e-5);
            }
        }
    }
}

TEST_CASE("structural identity residuals") {
    SUBCASE("random sweeps stay below 1e-10") {
        std::mt19937_64 rng(54);
        for (auto [n, p] : {std::pair{2, 2.0}, {3, 3.0}, {2, 1.5}}) {
            const Domain d(n, p);
            for (int trial = 0; trial < 300; ++trial) {
                CHECK(d.lemma1_check(random_point(n, rng)));
            }
        }
    }
    SUBCASE("vanishing coordinates exercise the gradient convention") {
        for (double p : {2.0, 4.0, 1.5}) {
            const Domain d(2, p);
            CHECK(d.lemma1_check(CVec{Complex(0.5, -0.2), Complex(0.0, 0.0)}));
        }
    }
    SUBCASE("residual report is tiny on a typical point") {
        const Domain d(3, 3.0);
        const auto r =
            d.lemma1_residuals(CVec{Complex(0.2, 0.1), Complex(-0.4, 0.3), Complex(0.0, 0.6)});
        CHECK(r.euler < 1e-13);
        CHECK(r.boundary < 1e-13);
        CHECK(r.scaling < 1e-13);
        CHECK(r.rotation < 1e-13);
    }
    SUBCASE("the origin is rejected") {
        CHECK_THROWS_AS(Domain(2, 2.0).lemma1_residuals(CVec{Complex(), Complex()}),
                        tdet::InvalidInput);
    }
}
