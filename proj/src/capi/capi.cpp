#include "tdet/tdet.h"

#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "../core/bounds.hpp"
#include "../core/domain.hpp"
#include "../core/mapping.hpp"
#include "../core/rng.hpp"
#include "../core/search.hpp"

struct tdet_phi {
    tdet::Phi impl;
};

namespace {

thread_local std::string g_last_error;

tdet_status fail(tdet_status code, const char* message) {
    g_last_error = message;
    return code;
}

// Uniform exception -> status mapping for every entry point.
template <typename Fn>
tdet_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return TDET_OK;
    } catch (const tdet::ConditionNotMet& e) {
        return fail(TDET_ERR_CONDITION_NOT_MET, e.what());
    } catch (const tdet::SingularJacobian& e) {
        return fail(TDET_ERR_SINGULAR_JACOBIAN, e.what());
    } catch (const tdet::BoundViolation& e) {
        return fail(TDET_ERR_BOUND_VIOLATION, e.what());
    } catch (const tdet::InvalidInput& e) {
        return fail(TDET_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TDET_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TDET_ERR_INTERNAL, "unknown error");
    }
}

tdet_complex to_c(tdet::Complex z) { return tdet_complex{z.real(), z.imag()}; }
tdet::Complex from_c(tdet_complex z) { return tdet::Complex(z.re, z.im); }

tdet_status check_handle(const tdet_phi* phi) {
    if (phi == nullptr) return fail(TDET_ERR_INVALID_ARGUMENT, "null generator handle");
    return TDET_OK;
}

tdet_status check_out(const void* out) {
    if (out == nullptr) return fail(TDET_ERR_INVALID_ARGUMENT, "null output pointer");
    return TDET_OK;
}

int effective_order(int order) { return order <= 0 ? tdet::Mapping::kDefaultOrder : order; }

tdet::Functional from_c(tdet_functional f) {
    switch (f) {
    case TDET_FUNCTIONAL_T22:
        return tdet::Functional::T22;
    case TDET_FUNCTIONAL_T31:
        return tdet::Functional::T31;
    }
    throw tdet::InvalidInput("unknown functional code");
}

void to_c(const tdet::SearchResult& r, tdet_search_result* out) {
    if (static_cast<int>(r.best_params.zeros.size()) > TDET_MAX_ZEROS) {
        throw tdet::InvalidInput("search result holds more zeros than the C layer carries");
    }
    tdet_search_result c{};
    c.best_value = r.best_value;
    c.bound = r.bound;
    c.bound_valid = r.bound_valid ? 1 : 0;
    c.gap = r.gap;
    c.n_samples = r.n_samples;
    c.seed = r.seed;
    c.best_params.theta = r.best_params.theta;
    c.best_params.n_zeros = static_cast<int>(r.best_params.zeros.size());
    for (int k = 0; k < c.best_params.n_zeros; ++k) {
        c.best_params.zeros[k] = to_c(r.best_params.zeros[static_cast<size_t>(k)]);
    }
    *out = c;
}

tdet::SchwarzSpec from_c(const tdet_schwarz_params& p) {
    if (p.n_zeros < 0 || p.n_zeros > TDET_MAX_ZEROS) {
        throw tdet::InvalidInput("n_zeros out of range");
    }
    tdet::SchwarzSpec s;
    s.theta = p.theta;
    for (int k = 0; k < p.n_zeros; ++k) s.zeros.push_back(from_c(p.zeros[k]));
    return s;
}

std::vector<tdet::Complex> point_from_c(int n, const tdet_complex* z) {
    if (n < 1) throw tdet::InvalidInput("dimension must be at least 1");
    if (z == nullptr) throw tdet::InvalidInput("null point");
    std::vector<tdet::Complex> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = from_c(z[j]);
    return v;
}

} // namespace

extern "C" {

const char* tdet_status_name(tdet_status status) {
    switch (status) {
    case TDET_OK:
        return "ok";
    case TDET_ERR_INVALID_ARGUMENT:
        return "invalid_argument";
    case TDET_ERR_CONDITION_NOT_MET:
        return "condition_not_met";
    case TDET_ERR_SINGULAR_JACOBIAN:
        return "singular_jacobian";
    case TDET_ERR_BOUND_VIOLATION:
        return "bound_violation";
    case TDET_ERR_INTERNAL:
        return "internal";
    }
    return "unknown";
}

const char* tdet_last_error(void) { return g_last_error.c_str(); }

tdet_status tdet_phi_halfplane(tdet_phi** out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = new tdet_phi{tdet::Phi::halfplane()}; });
}

tdet_status tdet_phi_order_alpha(double alpha, tdet_phi** out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = new tdet_phi{tdet::Phi::order_alpha(alpha)}; });
}

tdet_status tdet_phi_strong_beta(double beta, tdet_phi** out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = new tdet_phi{tdet::Phi::strong_beta(beta)}; });
}

tdet_status tdet_phi_custom(const tdet_complex* coeffs, int n_coeffs, double d1, double d2,
                            tdet_phi** out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        if (coeffs == nullptr || n_coeffs < 4) {
            throw tdet::InvalidInput("custom generator needs at least 4 coefficients");
        }
        std::vector<tdet::Complex> c(static_cast<size_t>(n_coeffs));
        for (int k = 0; k < n_coeffs; ++k) c[static_cast<size_t>(k)] = from_c(coeffs[k]);
        *out = new tdet_phi{tdet::Phi::custom(tdet::Series::from_coeffs(std::move(c)), d1, d2)};
    });
}

void tdet_phi_free(tdet_phi* phi) { delete phi; }

tdet_status tdet_phi_d1(const tdet_phi* phi, double* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = phi->impl.d1(); });
}

tdet_status tdet_phi_d2(const tdet_phi* phi, double* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = phi->impl.d2(); });
}

tdet_status tdet_phi_condition_thm1(const tdet_phi* phi, int* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = phi->impl.condition_thm1() ? 1 : 0; });
}

tdet_status tdet_phi_condition_thm2(const tdet_phi* phi, int* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = phi->impl.condition_thm2() ? 1 : 0; });
}

tdet_status tdet_det_t22(tdet_complex b2, tdet_complex b3, tdet_complex* out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = to_c(tdet::det_t22({from_c(b2), from_c(b3)})); });
}

tdet_status tdet_det_t31(tdet_complex b2, tdet_complex b3, tdet_complex* out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = to_c(tdet::det_t31({from_c(b2), from_c(b3)})); });
}

tdet_status tdet_bound_t22(const tdet_phi* phi, int force, double* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        *out = force ? tdet::bound_t22_formula(phi->impl) : tdet::bound_t22(phi->impl);
    });
}

tdet_status tdet_bound_t31(const tdet_phi* phi, int force, double* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        *out = force ? tdet::bound_t31_formula(phi->impl) : tdet::bound_t31(phi->impl);
    });
}

tdet_status tdet_bound_b2(const tdet_phi* phi, double* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = tdet::bound_b2(phi->impl); });
}

tdet_status tdet_fs_bound(const tdet_phi* phi, tdet_complex lambda, double* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = tdet::fs_bound(phi->impl, from_c(lambda)); });
}

tdet_status tdet_rho(int n, double p, const tdet_complex* z, double* out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] { *out = tdet::Domain(n, p).rho(point_from_c(n, z)); });
}

tdet_status tdet_grad_rho(int n, double p, const tdet_complex* z, tdet_complex* out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        const tdet::CVec grad = tdet::Domain(n, p).grad_rho(point_from_c(n, z));
        for (int j = 0; j < n; ++j) out[j] = to_c(grad[static_cast<size_t>(j)]);
    });
}

tdet_status tdet_domain_check(int n, double p, int n_points, uint64_t seed,
                              tdet_lemma1_report* out) {
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        if (n_points < 1) throw tdet::InvalidInput("n_points must be positive");
        const tdet::Domain domain(n, p);
        std::mt19937_64 rng(seed);
        tdet_lemma1_report report{};
        for (int i = 0; i < n_points; ++i) {
            tdet::CVec z = tdet::random_direction(domain, rng);
            const double radius = tdet::uniform(rng, 0.1, 0.9);
            for (tdet::Complex& c : z) c *= radius;
            const tdet::Domain::Lemma1Residuals r = domain.lemma1_residuals(z);
            report.max_euler = std::max(report.max_euler, r.euler);
            report.max_boundary = std::max(report.max_boundary, r.boundary);
            report.max_scaling = std::max(report.max_scaling, r.scaling);
            report.max_rotation = std::max(report.max_rotation, r.rotation);
        }
        report.n_points = n_points;
        *out = report;
    });
}

tdet_status tdet_verify_extremal(const tdet_phi* phi, int n, double p, int order,
                                 tdet_extremal_report* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        const tdet::Mapping map =
            tdet::Mapping::extremal(phi->impl, tdet::Domain(n, p), effective_order(order));
        tdet::CVec z(static_cast<size_t>(n), tdet::Complex(0.0, 0.0));
        z[0] = tdet::Complex(0.5, 0.0); // any point on the e_1 ray works
        const tdet::CoeffPair b = map.directional_b(z);
        const tdet::BoundReport bounds = tdet::bound_report(phi->impl);
        tdet_extremal_report report{};
        report.b2 = to_c(b.b2);
        report.b3 = to_c(b.b3);
        report.det22 = std::abs(tdet::det_t22(b));
        report.det31 = std::abs(tdet::det_t31(b));
        report.bound22 = bounds.b22;
        report.bound31 = bounds.b31;
        report.thm1_ok = bounds.thm1_ok ? 1 : 0;
        report.thm2_ok = bounds.thm2_ok ? 1 : 0;
        *out = report;
    });
}

tdet_status tdet_slice_check(const tdet_phi* phi, int n, double p, int n_pairs, int max_zeros,
                             uint64_t seed, int order, tdet_slice_report* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        if (n_pairs < 1) throw tdet::InvalidInput("n_pairs must be positive");
        const tdet::Domain domain(n, p);
        const int ord = effective_order(order);
        std::mt19937_64 rng(seed);
        tdet_slice_report report{};
        for (int i = 0; i < n_pairs; ++i) {
            const tdet::SchwarzSpec spec =
                tdet::random_schwarz(tdet::mix_seed(seed, static_cast<uint64_t>(i)), max_zeros);
            const tdet::Mapping map = tdet::Mapping::from_member(domain, phi->impl, spec, ord, ord);
            const tdet::CVec dir = tdet::random_direction(domain, rng);
            const double radius = tdet::uniform(rng, 0.1, 0.9);
            tdet::CVec z = dir;
            for (tdet::Complex& c : z) c *= radius;

            const tdet::CoeffPair via_nd = map.directional_b(z);
            const tdet::Series slice = map.slice_factor(dir);
            const double coeff_residual = std::max(std::abs(via_nd.b2 - slice[1]),
                                                   std::abs(via_nd.b3 - slice[2]));
            report.max_coeff_residual = std::max(report.max_coeff_residual, coeff_residual);

            if (p == 2.0) {
                // Conjugate-pairing form of the directional coefficients on
                // the Euclidean ball: <D^k G(0)(z^k)/k!, z> / |z|^{k+1}.
                const std::vector<tdet::CVec> v = map.frechet_coeffs(z, 3,
                                                                     std::max(24, ord + 2));
                const double rho = domain.rho(z);
                double pairing_residual = 0.0;
                const tdet::CoeffPair scaled{via_nd.b2, via_nd.b3};
                for (int k = 2; k <= 3; ++k) {
                    tdet::Complex dk(0.0, 0.0);
                    for (int j = 0; j < n; ++j) {
                        dk += v[static_cast<size_t>(k)][static_cast<size_t>(j)] *
                              std::pow(rho, k) *
                              std::conj(z[static_cast<size_t>(j)]);
                    }
                    dk /= std::pow(rho, k + 1);
                    const tdet::Complex bk = k == 2 ? scaled.b2 : scaled.b3;
                    pairing_residual = std::max(pairing_residual, std::abs(dk - bk));
                }
                report.max_pairing_residual =
                    std::max(report.max_pairing_residual, pairing_residual);
            }
        }
        report.n_pairs = n_pairs;
        *out = report;
    });
}

tdet_status tdet_search_rotation(const tdet_phi* phi, tdet_functional functional, int n_theta,
                                 int order, int force, tdet_search_result* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        tdet::SearchConfig cfg;
        cfg.order = effective_order(order);
        cfg.enforce_bound = force == 0;
        to_c(tdet::rotation_sweep(phi->impl, from_c(functional), n_theta, cfg), out);
    });
}

tdet_status tdet_search_random(const tdet_phi* phi, tdet_functional functional,
                               int64_t n_samples, int max_zeros, uint64_t seed, int order,
                               int force, tdet_search_result* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        tdet::SearchConfig cfg;
        cfg.order = effective_order(order);
        cfg.enforce_bound = force == 0;
        to_c(tdet::random_search(phi->impl, from_c(functional), n_samples, max_zeros, seed, cfg),
             out);
    });
}

tdet_status tdet_search_refine(const tdet_phi* phi, tdet_functional functional,
                               const tdet_schwarz_params* start, int iters, int order, int force,
                               tdet_search_result* out) {
    if (tdet_status s = check_handle(phi)) return s;
    if (tdet_status s = check_out(out)) return s;
    return guarded([&] {
        if (start == nullptr) throw tdet::InvalidInput("null start parameters");
        tdet::SearchConfig cfg;
        cfg.order = effective_order(order);
        cfg.enforce_bound = force == 0;
        to_c(tdet::local_refine(phi->impl, from_c(functional), from_c(*start), iters, cfg), out);
    });
}

} // extern "C"
