#pragma once

#include <span>
#include <vector>

#include "series.hpp"

namespace tdet {

using CVec = std::vector<Complex>;

// Bounded starlike circular domain { z in C^n : rho(z) < 1 } cut out by the
// p-norm Minkowski functional rho(z) = (sum_j |z_j|^p)^{1/p}, p > 1.  p = 2
// is the Euclidean ball.  Note sup{ |z_1| : rho(z) = 1 } = 1 for every p.
class Domain {
public:
    Domain(int n, double p);

    int dim() const { return n_; }
    double p() const { return p_; }

    double rho(std::span<const Complex> z) const;

    // Holomorphic gradient (d rho / d z_1, ..., d rho / d z_n) at z != 0:
    //   d rho / d z_j = (1/2) rho^{1-p} |z_j|^{p-2} conj(z_j),
    // with the continuous-limit convention 0 at z_j = 0.
    CVec grad_rho(std::span<const Complex> z) const;

    // Residuals of the structural identities the gradient must satisfy
    // (all relative, so a pass threshold applies uniformly):
    struct Lemma1Residuals {
        double euler;    // 2 (d rho / d z)(z) . z = rho(z)
        double boundary; // 2 (d rho / d z)(z0) . z0 = 1 at z0 = z / rho(z)
        double scaling;  // gradient unchanged under z -> lambda z, lambda > 0
        double rotation; // gradient gains e^{-i theta} under z -> e^{i theta} z
    };
    Lemma1Residuals lemma1_residuals(std::span<const Complex> z) const;
    bool lemma1_check(std::span<const Complex> z, double tol = 1e-10) const;

private:
    void check_point(std::span<const Complex> z) const;

    int n_;
    double p_;
};

} // namespace tdet
