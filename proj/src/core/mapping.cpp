#include "mapping.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rng.hpp"

namespace tdet {

namespace {

Complex pair(std::span<const Complex> grad, std::span<const Complex> v) {
    Complex acc(0.0, 0.0);
    for (size_t j = 0; j < grad.size(); ++j) acc += grad[j] * v[j];
    return acc;
}

// g(z) = profile(z_1) of the indicated factory, at the requested order.
Series member_profile(const Phi& phi, const SchwarzSpec& s, int order) {
    return member_from_schwarz(phi, s, order).g;
}

Series extremal_profile(const Phi& phi, int order) {
    return exp(integrate_logderiv(scale_argument(phi.series(order), Complex(0.0, 1.0))));
}

int clamp_eval_order(const Phi& phi, int order, int eval_order) {
    return std::max(order, std::min(eval_order, phi.max_order()));
}

} // namespace

Mapping::Mapping(Domain d, Series profile, Series eval_profile)
    : domain_(std::move(d)),
      profile_(std::move(profile)),
      eval_profile_(std::move(eval_profile)),
      eval_profile_deriv_(derivative(eval_profile_)) {}

Mapping Mapping::identity(Domain d, int order) {
    const Series one = Series::constant(order, Complex(1.0, 0.0));
    return Mapping(std::move(d), one, one);
}

Mapping Mapping::from_member(Domain d, const Phi& phi, const SchwarzSpec& s, int order,
                             int eval_order) {
    eval_order = clamp_eval_order(phi, order, eval_order);
    return Mapping(std::move(d), member_profile(phi, s, order),
                   member_profile(phi, s, eval_order));
}

Mapping Mapping::extremal(const Phi& phi, Domain d, int order, int eval_order) {
    eval_order = clamp_eval_order(phi, order, eval_order);
    return Mapping(std::move(d), extremal_profile(phi, order),
                   extremal_profile(phi, eval_order));
}

Series Mapping::slice_factor(std::span<const Complex> unit_dir) const {
    if (static_cast<int>(unit_dir.size()) != domain_.dim()) {
        throw InvalidInput("direction dimension does not match the domain");
    }
    return scale_argument(profile_, unit_dir[0]);
}

std::vector<CVec> Mapping::frechet_coeffs(std::span<const Complex> z, int k_max, int samples,
                                          double radius) const {
    if (k_max < 1) {
        throw InvalidInput("frechet_coeffs needs k_max >= 1");
    }
    // Default sample count: at least 8 per requested degree, and always
    // enough that the inverse DFT of the degree-(order+1) slice polynomial
    // is alias-free.  Extraction is then exact up to roundoff, so doubling
    // the sample count or moving the radius cannot shift the result.
    if (samples == 0) samples = std::max(8 * k_max, order() + 2);
    if (samples <= k_max) {
        throw InvalidInput("frechet_coeffs needs more samples than k_max");
    }
    if (!(radius > 0.0 && radius < 1.0)) {
        throw InvalidInput("frechet_coeffs needs an extraction radius in (0, 1)");
    }

    const double r = domain_.rho(z);
    CVec z0(z.begin(), z.end());
    for (Complex& c : z0) c /= r;
    const Series s = slice_factor(z0);

    // G(zeta z0) = (zeta s(zeta)) z0: sample the scalar on the circle, then
    // one inverse DFT per requested degree.
    std::vector<Complex> values(static_cast<size_t>(samples));
    std::vector<Complex> roots(static_cast<size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / samples;
        roots[static_cast<size_t>(j)] = std::polar(1.0, angle);
        const Complex zeta = std::polar(radius, angle);
        values[static_cast<size_t>(j)] = zeta * s.eval(zeta);
    }

    std::vector<CVec> out(static_cast<size_t>(k_max) + 1,
                          CVec(static_cast<size_t>(domain_.dim())));
    for (int k = 0; k <= k_max; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < samples; ++j) {
            acc += values[static_cast<size_t>(j)] *
                   std::conj(roots[static_cast<size_t>((j * k) % samples)]);
        }
        acc /= static_cast<double>(samples) * std::pow(radius, k);
        for (size_t m = 0; m < out[static_cast<size_t>(k)].size(); ++m) {
            out[static_cast<size_t>(k)][m] = acc * z0[m];
        }
    }
    return out;
}

CoeffPair Mapping::directional_b(std::span<const Complex> z) const {
    const std::vector<CVec> v = frechet_coeffs(z, 3);
    const CVec grad = domain_.grad_rho(z);
    // D^k G(0)(z^k)/k! = rho^k D^k G(0)(z0^k)/k! by homogeneity, and the
    // gradient is scaling-invariant, so the rho^k factors cancel exactly.
    return CoeffPair{2.0 * pair(grad, v[2]), 2.0 * pair(grad, v[3])};
}

CVec Mapping::eval(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != domain_.dim()) {
        throw InvalidInput("point dimension does not match the domain");
    }
    const Complex g = eval_profile_.eval(z[0]);
    CVec out(z.begin(), z.end());
    for (Complex& c : out) c *= g;
    return out;
}

CVec Mapping::transfer_form(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != domain_.dim()) {
        throw InvalidInput("point dimension does not match the domain");
    }
    if (!(domain_.rho(z) < 1.0)) {
        throw InvalidInput("transfer_form is only defined inside the domain");
    }
    const Complex g = eval_profile_.eval(z[0]);
    const Complex jg_z = eval_profile_deriv_.eval(z[0]) * z[0]; // J_g(z) z
    const Complex den = g + jg_z;
    if (std::abs(den) <= 1e-13 * (std::abs(g) + std::abs(jg_z))) {
        throw SingularJacobian("g(z) + J_g(z) z vanished; the Jacobian is singular here");
    }
    CVec out(z.begin(), z.end());
    for (Complex& c : out) c *= g / den;
    return out;
}

Mapping::MembershipReport Mapping::membership_check(const Phi& target, int n_dirs, int n_radii,
                                                    std::uint64_t seed) const {
    if (n_dirs < 1 || n_radii < 1) {
        throw InvalidInput("membership_check needs at least one direction and one radius");
    }
    std::mt19937_64 rng(seed);
    MembershipReport report{true, 0.0, 0};
    for (int d = 0; d < n_dirs; ++d) {
        CVec z0(static_cast<size_t>(domain_.dim()), Complex(0.0, 0.0));
        if (d == 0) {
            z0[0] = Complex(1.0, 0.0); // stress direction: the slice sees |z_1| up to 0.95
        } else {
            z0 = random_direction(domain_, rng);
        }
        for (int t = 1; t <= n_radii; ++t) {
            const double radius = 0.95 * t / n_radii;
            CVec z = z0;
            for (Complex& c : z) c *= radius;
            const Complex q =
                domain_.rho(z) / (2.0 * pair(domain_.grad_rho(z), transfer_form(z)));
            const double m = std::abs(target.inverse(q));
            report.max_abs_inverse = std::max(report.max_abs_inverse, m);
            if (!(m < 1.0)) report.ok = false;
            ++report.n_checked;
        }
    }
    return report;
}

CVec random_direction(const Domain& d, std::mt19937_64& rng) {
    CVec v(static_cast<size_t>(d.dim()));
    for (Complex& c : v) {
        // Box-Muller from raw engine bits, for cross-platform determinism.
        const double u1 = std::max(uniform01(rng), 1e-300);
        const double u2 = uniform01(rng);
        const double mag = std::sqrt(-2.0 * std::log(u1));
        c = Complex(mag * std::cos(2.0 * std::numbers::pi * u2),
                    mag * std::sin(2.0 * std::numbers::pi * u2));
    }
    const double r = d.rho(v);
    for (Complex& c : v) c /= r;
    return v;
}

} // namespace tdet
