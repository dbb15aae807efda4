#pragma once

#include <cstdint>
#include <random>

#include "domain.hpp"
#include "schwarz.hpp"

namespace tdet {

// Holomorphic mapping G(z) = z g(z) on a p-ball, with scalar factor g
// depending on z through the first coordinate only: g(z) = profile(z_1).
// Slicing along a direction z0 on the rho-unit sphere therefore gives the
// one-variable map zeta -> zeta g(zeta z0) whose factor is profile(u1 zeta),
// u1 = first coordinate of z0 -- every theorem under test is direction-wise,
// and this family realizes all of them (the extremal configuration included).
class Mapping {
public:
    static constexpr int kDefaultOrder = 24;

    static Mapping identity(Domain d, int order = kDefaultOrder);
    static Mapping from_member(Domain d, const Phi& phi, const SchwarzSpec& s,
                               int order = kDefaultOrder, int eval_order = kEvalOrder);
    // The bound-attaining configuration: g(z) = exp(int_0^{z_1} (phi(i t) - 1)/t dt).
    static Mapping extremal(const Phi& phi, Domain d, int order = kDefaultOrder,
                            int eval_order = kEvalOrder);

    const Domain& domain() const { return domain_; }
    int order() const { return profile_.order(); }

    // Factor series of the slice through a rho-unit direction, at the
    // coefficient-extraction order.
    Series slice_factor(std::span<const Complex> unit_dir) const;

    // D^k G(0)(z0^k) / k! for k = 0..k_max at z0 = z / rho(z), recovered by
    // discrete Fourier inversion of zeta -> G(zeta z0) on a circle.  The
    // default sample count (alias-free for the slice polynomial, at least
    // 8 k_max) and radius 0.5 are part of the contract; the overrides exist
    // so tests can demonstrate extraction stability.
    std::vector<CVec> frechet_coeffs(std::span<const Complex> z, int k_max, int samples = 0,
                                     double radius = 0.5) const;

    // b_k = 2 (d rho / d z)(z) . D^k G(0)(z^k) / (k! rho(z)^k) for k = 2, 3.
    CoeffPair directional_b(std::span<const Complex> z) const;

    // J_G(z)^{-1} G(z) = z g(z) / (g(z) + J_g(z) z), evaluated in closed
    // form; throws SingularJacobian if the denominator collapses.
    CVec transfer_form(std::span<const Complex> z) const;

    // Pointwise G(z) (truncated-profile polynomial); the finite-difference
    // Jacobian oracle in the tests drives this.
    CVec eval(std::span<const Complex> z) const;

    struct MembershipReport {
        bool ok;                // |target^{-1}(q)| < 1 at every sample
        double max_abs_inverse; // worst modulus seen
        int n_checked;
    };
    // Samples q = rho(z) / (2 (d rho / d z)(z) . transfer_form(z)) over
    // directions (first one deterministically e_1) and radii in (0, 0.95],
    // and tests q against the target generator's range.  Sound but
    // incomplete: a finite sample can only ever refute membership.
    MembershipReport membership_check(const Phi& target, int n_dirs, int n_radii,
                                      std::uint64_t seed = 0) const;

private:
    // Pointwise paths (transfer form, membership) evaluate the profile near
    // the sphere where a length-24 truncation is far too short; they use a
    // longer profile whose tail at radius 0.95 is below double roundoff.
    static constexpr int kEvalOrder = 512;

    Mapping(Domain d, Series profile, Series eval_profile);

    Domain domain_;
    Series profile_;            // coefficient-extraction order
    Series eval_profile_;       // pointwise-evaluation order
    Series eval_profile_deriv_;
};

// rho-unit direction with coordinates drawn as complex standard normals and
// then normalized; deterministic given the caller's engine state.
CVec random_direction(const Domain& d, std::mt19937_64& rng);

} // namespace tdet
