#include "bounds.hpp"

#include <cmath>

namespace tdet {

Complex det_t22(const CoeffPair& c) { return c.b2 * c.b2 - c.b3 * c.b3; }

Complex det_t31(const CoeffPair& c) {
    const Complex b2sq = c.b2 * c.b2;
    return 2.0 * b2sq * c.b3 - 2.0 * b2sq - c.b3 * c.b3 + 1.0;
}

double bound_t22_formula(const Phi& phi) {
    const double d1 = phi.d1();
    const double d2 = phi.d2();
    const double inner = d2 / (2.0 * d1) + d1;
    return d1 * d1 + (d1 * d1 / 4.0) * inner * inner;
}

double bound_t31_formula(const Phi& phi) {
    const double d1 = phi.d1();
    const double d2 = phi.d2();
    const double half_ratio = d2 / (2.0 * d1);
    return 1.0 + 2.0 * d1 * d1 +
           (d1 * d1 / 4.0) * (3.0 * d1 - half_ratio) * (half_ratio + d1);
}

double bound_t22(const Phi& phi) {
    if (!phi.condition_thm1()) {
        throw ConditionNotMet("2x2 bound needs |d2 + 2 d1^2| >= 2 d1 > 0; " + phi.describe() +
                              " fails it");
    }
    return bound_t22_formula(phi);
}

double bound_t31(const Phi& phi) {
    if (!phi.condition_thm2()) {
        throw ConditionNotMet("3x3 bound needs 2 d1 - 2 d1^2 <= d2 <= 6 d1^2 - 2 d1; " +
                              phi.describe() + " fails it");
    }
    return bound_t31_formula(phi);
}

double bound_b2(const Phi& phi) { return phi.d1(); }

double fs_bound(const Phi& phi, Complex lambda) {
    const double d1 = phi.d1();
    const double d2 = phi.d2();
    const double inner = std::abs(d2 / (2.0 * d1) + (1.0 - 2.0 * lambda) * d1);
    return (d1 / 2.0) * std::max(1.0, inner);
}

BoundReport bound_report(const Phi& phi) {
    return BoundReport{bound_t22_formula(phi), bound_t31_formula(phi), phi.condition_thm1(),
                       phi.condition_thm2()};
}

} // namespace tdet
