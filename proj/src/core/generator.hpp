#pragma once

#include <optional>
#include <string>

#include "series.hpp"

namespace tdet {

enum class PhiKind { Halfplane, OrderAlpha, StrongBeta, Custom };

// Convex-region generator: a biholomorphism of the unit disk onto a region
// containing 1, normalized by phi(0) = 1, phi'(0) > 0 and phi''(0) real.
// The derivative data d1 = phi'(0), d2 = phi''(0) feeds every closed-form
// bound; the Taylor series feeds the subordination machinery.
class Phi {
public:
    static Phi halfplane();                 // (1 + z) / (1 - z)
    static Phi order_alpha(double alpha);   // (1 + (1 - 2 alpha) z) / (1 - z), 0 <= alpha < 1
    static Phi strong_beta(double beta);    // ((1 + z) / (1 - z))^beta, 0 < beta <= 1
    // Caller-supplied series with claimed derivative data; the constructor
    // cross-validates d1 against 1! c_1 and d2 against 2! c_2 (<= 1e-10) and
    // checks d1 > 0, c_0 = 1.  Injectivity on the disk stays the caller's
    // obligation; it cannot be certified from finitely many coefficients.
    static Phi custom(Series series, double d1, double d2);

    PhiKind kind() const { return kind_; }
    double d1() const { return d1_; }
    double d2() const { return d2_; }
    double param() const { return param_; } // alpha or beta, 0 otherwise

    // Largest series order constructible (INT_MAX for built-ins, the stored
    // order for Custom).
    int max_order() const;

    Series series(int order) const;

    // Formal inverse germ psi at q = 1, as a series in u = q - 1 with
    // psi(0) = 0, satisfying phi(psi(u)) = 1 + u through the given order.
    Series inverse_series(int order) const;

    // Pointwise inverse.  Closed form for the built-in kinds; for Custom the
    // truncated inverse germ is evaluated at u = q - 1, which is only
    // trustworthy near q = 1 (the membership test is sound-but-incomplete).
    Complex inverse(Complex q) const;

    // phi(w(z)) as a series, for w with w(0) = 0.  Uses rational/power
    // closed forms for the built-in kinds, generic composition for Custom.
    Series compose_with(const Series& w) const;

    // |d2 + 2 d1^2| >= 2 d1 (with d1 > 0); hypothesis of the 2x2 bound.
    bool condition_thm1() const;
    // 2 d1 - 2 d1^2 <= d2 <= 6 d1^2 - 2 d1; hypothesis of the 3x3 bound.
    bool condition_thm2() const;

    std::string describe() const; // "halfplane", "alpha=0.25", "beta=0.6", "custom"

private:
    Phi(PhiKind kind, double param, double d1, double d2);

    PhiKind kind_;
    double param_;
    double d1_;
    double d2_;
    std::optional<Series> custom_series_;
};

} // namespace tdet
