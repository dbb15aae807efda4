#pragma once

#include <cstdint>
#include <string>

#include "schwarz.hpp"

namespace tdet {

// Functional being maximized over the one-variable class:
//   T22: |det [[b2, b3], [b3, b2]]|
//   T31: |det [[1, b2, b3], [b2, 1, b2], [b3, b2, 1]]|
//   FS:  |a3 - lambda a2^2|
enum class Functional { T22, T31, FS };

struct SearchConfig {
    int order = 24;
    Complex fs_lambda = Complex(0.0, 0.0); // only read for Functional::FS
    // When false (the CLI's --force), skip the non-violation assertion that
    // otherwise turns any sample beyond bound + 1e-9 into a hard error.
    bool enforce_bound = true;
    // Route every k-th evaluation through the n-dimensional coefficient
    // extractor and require agreement; 0 disables the cross-check.
    int cross_check_stride = 100;
};

struct SearchResult {
    Functional functional = Functional::T22;
    std::string phi;             // generator descriptor
    SchwarzSpec best_params;
    double best_value = 0.0;
    double bound = 0.0;          // closed-form value (meaningful iff bound_valid)
    bool bound_valid = false;    // the matching condition flag of phi
    double gap = 0.0;            // bound - best_value
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

// |functional| of the member built from the given Schwarz parameters.
double evaluate_functional(const Phi& phi, Functional f, const SchwarzSpec& s,
                           const SearchConfig& cfg = {});

// Pure rotations w(z) = e^{i theta} z on a uniform theta grid over [0, 2 pi);
// ties broken toward the first index, so runs are reproducible exactly.
SearchResult rotation_sweep(const Phi& phi, Functional f, int n_theta,
                            const SearchConfig& cfg = {});

// Independent draws via random_schwarz with per-sample seeds derived from
// (seed, index); batch order therefore cannot affect the reduction.
SearchResult random_search(const Phi& phi, Functional f, std::int64_t n_samples, int max_zeros,
                           std::uint64_t seed, const SearchConfig& cfg = {});

// Derivative-free coordinate pattern search over (theta, Re a_k, Im a_k),
// initial step 0.1, step halved whenever a full pass yields no strict
// improvement, floor 1e-8.  best_value is monotone along the run.
SearchResult local_refine(const Phi& phi, Functional f, const SchwarzSpec& start, int iters,
                          const SearchConfig& cfg = {});

} // namespace tdet
