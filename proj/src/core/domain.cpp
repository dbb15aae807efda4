#include "domain.hpp"

#include <algorithm>
#include <cmath>

namespace tdet {

namespace {

Complex pair(std::span<const Complex> grad, std::span<const Complex> z) {
    Complex acc(0.0, 0.0);
    for (size_t j = 0; j < grad.size(); ++j) acc += grad[j] * z[j];
    return acc;
}

double norm2(std::span<const Complex> v) {
    double acc = 0.0;
    for (Complex c : v) acc += std::norm(c);
    return std::sqrt(acc);
}

} // namespace

Domain::Domain(int n, double p) : n_(n), p_(p) {
    if (n < 1) {
        throw InvalidInput("domain dimension must be at least 1");
    }
    if (!(p > 1.0)) {
        throw InvalidInput("p-ball requires p > 1 (the gradient degenerates at p = 1)");
    }
}

void Domain::check_point(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != n_) {
        throw InvalidInput("point dimension does not match the domain");
    }
}

double Domain::rho(std::span<const Complex> z) const {
    check_point(z);
    double acc = 0.0;
    for (Complex c : z) acc += std::pow(std::abs(c), p_);
    return std::pow(acc, 1.0 / p_);
}

CVec Domain::grad_rho(std::span<const Complex> z) const {
    check_point(z);
    const double r = rho(z);
    if (r == 0.0) {
        throw InvalidInput("grad_rho is undefined at the origin");
    }
    const double scale = 0.5 * std::pow(r, 1.0 - p_);
    CVec grad(static_cast<size_t>(n_));
    for (size_t j = 0; j < grad.size(); ++j) {
        const double m = std::abs(z[j]);
        // |z_j|^{p-2} conj(z_j) has modulus m^{p-1} -> 0 as z_j -> 0 (p > 1),
        // so the component is continued by 0 there.
        grad[j] = m == 0.0 ? Complex(0.0, 0.0) : scale * std::pow(m, p_ - 2.0) * std::conj(z[j]);
    }
    return grad;
}

Domain::Lemma1Residuals Domain::lemma1_residuals(std::span<const Complex> z) const {
    const double r = rho(z);
    const CVec grad = grad_rho(z);
    const double gnorm = norm2(grad);

    Lemma1Residuals res{};
    res.euler = std::abs(2.0 * pair(grad, z) - r) / r;

    CVec z0(z.begin(), z.end());
    for (Complex& c : z0) c /= r;
    res.boundary = std::abs(2.0 * pair(grad_rho(z0), z0) - 1.0);

    double worst_scaling = 0.0;
    for (double lambda : {0.5, 2.0}) {
        CVec zs(z.begin(), z.end());
        for (Complex& c : zs) c *= lambda;
        const CVec gs = grad_rho(zs);
        double diff = 0.0;
        for (size_t j = 0; j < gs.size(); ++j) diff += std::norm(gs[j] - grad[j]);
        worst_scaling = std::max(worst_scaling, std::sqrt(diff) / gnorm);
    }
    res.scaling = worst_scaling;

    const Complex phase = std::polar(1.0, 1.0);
    CVec zr(z.begin(), z.end());
    for (Complex& c : zr) c *= phase;
    const CVec gr = grad_rho(zr);
    double diff = 0.0;
    for (size_t j = 0; j < gr.size(); ++j) diff += std::norm(gr[j] - grad[j] / phase);
    res.rotation = std::sqrt(diff) / gnorm;

    return res;
}

bool Domain::lemma1_check(std::span<const Complex> z, double tol) const {
    const Lemma1Residuals r = lemma1_residuals(z);
    return r.euler <= tol && r.boundary <= tol && r.scaling <= tol && r.rotation <= tol;
}

} // namespace tdet
