#include "search.hpp"

#include <cmath>
#include <numbers>

#include "mapping.hpp"
#include "rng.hpp"

namespace tdet {

namespace {

constexpr double kViolationTol = 1e-9;

double functional_value(Functional f, const CoeffPair& c, Complex fs_lambda) {
    switch (f) {
    case Functional::T22:
        return std::abs(det_t22(c));
    case Functional::T31:
        return std::abs(det_t31(c));
    case Functional::FS:
        return std::abs(c.b3 - fs_lambda * c.b2 * c.b2);
    }
    throw InvalidInput("unknown functional");
}

// Bound claimed by the matching theorem, plus whether its hypothesis holds.
std::pair<double, bool> claimed_bound(const Phi& phi, Functional f, Complex fs_lambda) {
    switch (f) {
    case Functional::T22:
        return {bound_t22_formula(phi), phi.condition_thm1()};
    case Functional::T31:
        return {bound_t31_formula(phi), phi.condition_thm2()};
    case Functional::FS:
        return {fs_bound(phi, fs_lambda), true};
    }
    throw InvalidInput("unknown functional");
}

// Re-derive the coefficients through the n-dimensional extraction pipeline
// (slice on the Euclidean ball, Fourier inversion, gradient pairing) and
// insist they match the direct series route.  A drift here means the two
// halves of the codebase have diverged, which must fail the run, not skew it.
void cross_check(const Phi& phi, const SchwarzSpec& s, const CoeffPair& direct) {
    // a2, a3 do not depend on the truncation order, so the fixed default
    // keeps this cheap no matter what order the search runs at.
    const int order = Mapping::kDefaultOrder;
    const Mapping map = Mapping::from_member(Domain(2, 2.0), phi, s, order, order);
    const CVec e1{Complex(1.0, 0.0), Complex(0.0, 0.0)};
    const CoeffPair via_nd = map.directional_b(e1);
    if (std::abs(via_nd.b2 - direct.b2) > 1e-8 || std::abs(via_nd.b3 - direct.b3) > 1e-8) {
        throw BoundViolation("n-dimensional extraction disagrees with the series route");
    }
}

struct Evaluator {
    const Phi& phi;
    Functional f;
    SearchConfig cfg;
    std::int64_t count = 0;

    double operator()(const SchwarzSpec& s) {
        const ClassMember m = member_from_schwarz(phi, s, cfg.order);
        ++count;
        if (cfg.cross_check_stride > 0 && count % cfg.cross_check_stride == 0) {
            cross_check(phi, s, m.coeffs);
        }
        return functional_value(f, m.coeffs, cfg.fs_lambda);
    }
};

SearchResult make_result(const Phi& phi, Functional f, const SearchConfig& cfg) {
    SearchResult r;
    r.functional = f;
    r.phi = phi.describe();
    const auto [bound, valid] = claimed_bound(phi, f, cfg.fs_lambda);
    r.bound = bound;
    r.bound_valid = valid;
    return r;
}

void finalize(SearchResult& r, const SearchConfig& cfg) {
    r.gap = r.bound - r.best_value;
    if (cfg.enforce_bound && r.bound_valid && r.best_value > r.bound + kViolationTol) {
        throw BoundViolation("sampled value " + std::to_string(r.best_value) +
                             " exceeds the claimed bound " + std::to_string(r.bound) +
                             " for " + r.phi);
    }
}

} // namespace

double evaluate_functional(const Phi& phi, Functional f, const SchwarzSpec& s,
                           const SearchConfig& cfg) {
    const ClassMember m = member_from_schwarz(phi, s, cfg.order);
    return functional_value(f, m.coeffs, cfg.fs_lambda);
}

SearchResult rotation_sweep(const Phi& phi, Functional f, int n_theta, const SearchConfig& cfg) {
    if (n_theta < 8) {
        throw InvalidInput("rotation_sweep needs a grid of at least 8 angles");
    }
    SearchResult r = make_result(phi, f, cfg);
    Evaluator eval{phi, f, cfg};
    for (int k = 0; k < n_theta; ++k) {
        SchwarzSpec s;
        s.theta = 2.0 * std::numbers::pi * k / n_theta;
        const double value = eval(s);
        if (value > r.best_value || k == 0) {
            r.best_value = value;
            r.best_params = s;
        }
    }
    r.n_samples = n_theta;
    finalize(r, cfg);
    return r;
}

SearchResult random_search(const Phi& phi, Functional f, std::int64_t n_samples, int max_zeros,
                           std::uint64_t seed, const SearchConfig& cfg) {
    if (n_samples < 1) {
        throw InvalidInput("random_search needs at least one sample");
    }
    SearchResult r = make_result(phi, f, cfg);
    r.seed = seed;
    Evaluator eval{phi, f, cfg};
    for (std::int64_t i = 0; i < n_samples; ++i) {
        const SchwarzSpec s = random_schwarz(mix_seed(seed, static_cast<std::uint64_t>(i)),
                                             max_zeros);
        const double value = eval(s);
        if (value > r.best_value || i == 0) {
            r.best_value = value;
            r.best_params = s;
        }
    }
    r.n_samples = n_samples;
    finalize(r, cfg);
    return r;
}

SearchResult local_refine(const Phi& phi, Functional f, const SchwarzSpec& start, int iters,
                          const SearchConfig& cfg) {
    if (iters < 1) {
        throw InvalidInput("local_refine needs at least one iteration");
    }
    SearchResult r = make_result(phi, f, cfg);
    Evaluator eval{phi, f, cfg};

    // Flatten to (theta, Re a_1, Im a_1, ...); candidates that push a zero
    // onto or past the unit circle are simply rejected.
    std::vector<double> x{start.theta};
    for (Complex a : start.zeros) {
        x.push_back(a.real());
        x.push_back(a.imag());
    }
    const auto unflatten = [](const std::vector<double>& v) {
        SchwarzSpec s;
        s.theta = v[0];
        for (size_t k = 1; k + 1 < v.size(); k += 2) {
            s.zeros.emplace_back(v[k], v[k + 1]);
        }
        return s;
    };
    const auto admissible = [](const SchwarzSpec& s) {
        for (Complex a : s.zeros) {
            if (!(std::abs(a) < 1.0)) return false;
        }
        return true;
    };

    SchwarzSpec best = start;
    double best_value = eval(start);
    double step = 0.1;
    for (int it = 0; it < iters && step >= 1e-8; ++it) {
        bool improved = false;
        for (size_t i = 0; i < x.size(); ++i) {
            for (double delta : {step, -step}) {
                std::vector<double> cand = x;
                cand[i] += delta;
                const SchwarzSpec s = unflatten(cand);
                if (!admissible(s)) continue;
                const double value = eval(s);
                if (value > best_value) {
                    best_value = value;
                    best = s;
                    x = cand;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }

    r.best_params = best;
    r.best_value = best_value;
    r.n_samples = eval.count;
    finalize(r, cfg);
    return r;
}

} // namespace tdet
