#include "generator.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace tdet {

namespace {

// Slack for the non-strict condition inequalities: the admissible parameter
// ranges close with equality at their endpoints (alpha = 2/3, beta = 1/3),
// and those endpoints are not exactly representable, so a bit-exact
// comparison would misclassify the boundary by one rounding error.
constexpr double kBoundaryTol = 1e-12;

std::string format_param(const char* name, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s=%.12g", name, value);
    return buf;
}

} // namespace

Phi::Phi(PhiKind kind, double param, double d1, double d2)
    : kind_(kind), param_(param), d1_(d1), d2_(d2) {}

Phi Phi::halfplane() { return Phi(PhiKind::Halfplane, 0.0, 2.0, 4.0); }

Phi Phi::order_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw InvalidInput("order_alpha requires 0 <= alpha < 1");
    }
    return Phi(PhiKind::OrderAlpha, alpha, 2.0 * (1.0 - alpha), 4.0 * (1.0 - alpha));
}

Phi Phi::strong_beta(double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw InvalidInput("strong_beta requires 0 < beta <= 1");
    }
    return Phi(PhiKind::StrongBeta, beta, 2.0 * beta, 4.0 * beta * beta);
}

Phi Phi::custom(Series series, double d1, double d2) {
    if (std::abs(series[0] - Complex(1.0, 0.0)) > 1e-12) {
        throw InvalidInput("custom generator series must have constant term 1");
    }
    if (!(d1 > 0.0)) {
        throw InvalidInput("custom generator requires d1 > 0");
    }
    if (std::abs(series[1] - Complex(d1, 0.0)) > 1e-10 ||
        std::abs(2.0 * series[2] - Complex(d2, 0.0)) > 1e-10) {
        throw InvalidInput("custom generator derivative data disagrees with its series");
    }
    Phi phi(PhiKind::Custom, 0.0, d1, d2);
    phi.custom_series_ = std::move(series);
    return phi;
}

int Phi::max_order() const {
    return kind_ == PhiKind::Custom ? custom_series_->order() : std::numeric_limits<int>::max();
}

Series Phi::series(int order) const {
    switch (kind_) {
    case PhiKind::Halfplane:
    case PhiKind::OrderAlpha: {
        // (1 + (1 - 2 alpha) z) / (1 - z) = 1 + sum_{k>=1} 2 (1 - alpha) z^k,
        // with alpha = 0 for the half-plane.
        Series s(order);
        s[0] = Complex(1.0, 0.0);
        for (int k = 1; k <= order; ++k) s[k] = Complex(d1_, 0.0);
        return s;
    }
    case PhiKind::StrongBeta: {
        Series num(order, {Complex(1.0, 0.0), Complex(1.0, 0.0)});
        Series den(order, {Complex(1.0, 0.0), Complex(-1.0, 0.0)});
        return pow(num / den, param_);
    }
    case PhiKind::Custom:
        if (order > custom_series_->order()) {
            throw InvalidInput("custom generator series is shorter than the requested order");
        }
        return truncated(*custom_series_, order);
    }
    throw InvalidInput("unknown generator kind");
}

// Solve phi(psi(u)) = 1 + u order by order.  With F = phi - 1 and psi known
// through degree m-1, the degree-m coefficient of F(psi) is linear in e_m
// with factor c_1, so each step reads off e_m from one composition.
Series Phi::inverse_series(int order) const {
    const Series f = series(order);
    Series F = f;
    F[0] = Complex(0.0, 0.0);
    Series psi(order);
    psi[1] = Complex(1.0, 0.0) / f[1];
    for (int m = 2; m <= order; ++m) {
        const Series err = compose(F, psi);
        psi[m] = -err[m] / f[1];
    }
    return psi;
}

Complex Phi::inverse(Complex q) const {
    switch (kind_) {
    case PhiKind::Halfplane:
        return (q - 1.0) / (q + 1.0);
    case PhiKind::OrderAlpha:
        // q (1 - z) = 1 + (1 - 2 alpha) z  =>  z = (q - 1) / (q + 1 - 2 alpha)
        return (q - 1.0) / (q + 1.0 - 2.0 * param_);
    case PhiKind::StrongBeta: {
        // principal branch of q^{1/beta}, then the half-plane inverse
        const Complex s = std::exp(std::log(q) / param_);
        return (s - 1.0) / (s + 1.0);
    }
    case PhiKind::Custom: {
        const Series psi = inverse_series(custom_series_->order());
        return psi.eval(q - 1.0);
    }
    }
    throw InvalidInput("unknown generator kind");
}

Series Phi::compose_with(const Series& w) const {
    if (w[0] != Complex(0.0, 0.0)) {
        throw InvalidInput("compose_with requires an inner series with zero constant term");
    }
    const int n = w.order();
    switch (kind_) {
    case PhiKind::Halfplane:
    case PhiKind::OrderAlpha: {
        const double shift = kind_ == PhiKind::Halfplane ? 1.0 : 1.0 - 2.0 * param_;
        const Series one = Series::constant(n, Complex(1.0, 0.0));
        return (one + Complex(shift, 0.0) * w) / (one - w);
    }
    case PhiKind::StrongBeta: {
        const Series one = Series::constant(n, Complex(1.0, 0.0));
        return pow((one + w) / (one - w), param_);
    }
    case PhiKind::Custom:
        return compose(series(n), w);
    }
    throw InvalidInput("unknown generator kind");
}

bool Phi::condition_thm1() const {
    const double lhs = std::abs(d2_ + 2.0 * d1_ * d1_);
    const double rhs = 2.0 * d1_;
    const double tol = kBoundaryTol * std::max({1.0, lhs, rhs});
    return d1_ > 0.0 && lhs >= rhs - tol;
}

bool Phi::condition_thm2() const {
    const double lo = 2.0 * d1_ - 2.0 * d1_ * d1_;
    const double hi = 6.0 * d1_ * d1_ - 2.0 * d1_;
    const double tol = kBoundaryTol * std::max({1.0, std::abs(lo), std::abs(hi), std::abs(d2_)});
    return d2_ >= lo - tol && d2_ <= hi + tol;
}

std::string Phi::describe() const {
    switch (kind_) {
    case PhiKind::Halfplane:
        return "halfplane";
    case PhiKind::OrderAlpha:
        return format_param("alpha", param_);
    case PhiKind::StrongBeta:
        return format_param("beta", param_);
    case PhiKind::Custom:
        return "custom";
    }
    return "unknown";
}

} // namespace tdet
