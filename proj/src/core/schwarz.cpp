#include "schwarz.hpp"

#include <cmath>
#include <numbers>

#include "rng.hpp"

namespace tdet {

Series schwarz_series(const SchwarzSpec& s, int order) {
    for (Complex a : s.zeros) {
        if (!(std::abs(a) < 1.0)) {
            throw InvalidInput("Blaschke zeros must lie strictly inside the unit disk");
        }
    }
    Series w = std::polar(1.0, s.theta) * Series::identity(order);
    for (Complex a : s.zeros) {
        const Series num(order, {-a, Complex(1.0, 0.0)});
        const Series den(order, {Complex(1.0, 0.0), -std::conj(a)});
        w = w * (num / den);
    }
    return w;
}

ClassMember member_from_schwarz(const Phi& phi, const SchwarzSpec& s, int order) {
    const Series w = schwarz_series(s, order);
    const Series g = exp(integrate_logderiv(phi.compose_with(w)));
    return ClassMember{g, CoeffPair{g[1], g[2]}, s};
}

SchwarzSpec random_schwarz(std::uint64_t seed, int max_zeros) {
    if (max_zeros < 0) {
        throw InvalidInput("max_zeros must be nonnegative");
    }
    std::mt19937_64 rng(seed);
    SchwarzSpec s;
    s.theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const int count = static_cast<int>(rng() % static_cast<std::uint64_t>(max_zeros + 1));
    s.zeros.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double r = 0.95 * std::sqrt(uniform01(rng));
        const double angle = uniform(rng, 0.0, 2.0 * std::numbers::pi);
        s.zeros.push_back(std::polar(r, angle));
    }
    return s;
}

} // namespace tdet
